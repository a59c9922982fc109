#pragma once

#include "so5/rational.hpp"

#include <map>
#include <vector>

namespace so5 {

/**
 * Exact accumulator for sums  sum_j  w_j * zeta^{a_j}  with zeta a fixed
 * primitive p^M-th root of unity and rational weights.  Used to verify
 * character-sum identities exactly: after reduction against the vanishing
 * relations of the p^M-th cyclotomic polynomial, equality with a rational
 * is a finite check.
 */
class CycloSum {
public:
    CycloSum(long long p, int M) : p_(p), M_(M) {
        pm_ = 1;
        for (int i = 0; i < M; ++i) pm_ *= p;
        coef_.assign(static_cast<size_t>(pm_), Rat(0));
    }

    // Add w * e^{2 pi i num/den}; den must divide p^M.
    void add(long long num, long long den, const Rat& w) {
        if (den <= 0 || pm_ % den != 0) throw std::invalid_argument("CycloSum: bad denominator");
        long long a = ((num % den) + den) % den * (pm_ / den);
        coef_[static_cast<size_t>(a)] += w;
    }

    // Canonical coefficients after reduction: zeta^{t + (p-1) p^{M-1}} =
    // -sum_{i=0}^{p-2} zeta^{t + i p^{M-1}} for t in [0, p^{M-1}).
    std::vector<Rat> reduced() const {
        std::vector<Rat> c = coef_;
        if (M_ == 0) return c;
        long long blk = pm_ / p_;
        for (long long t = 0; t < blk; ++t) {
            Rat top = c[static_cast<size_t>(t + (p_ - 1) * blk)];
            if (top == 0) continue;
            c[static_cast<size_t>(t + (p_ - 1) * blk)] = 0;
            for (long long i = 0; i + 1 < p_; ++i) c[static_cast<size_t>(t + i * blk)] -= top;
        }
        return c;
    }

    bool equals_rational(const Rat& r) const {
        auto c = reduced();
        if (c.empty()) return r == 0;
        if (c[0] != r) return false;
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }

private:
    long long p_, pm_;
    int M_;
    std::vector<Rat> coef_;
};

} // namespace so5
