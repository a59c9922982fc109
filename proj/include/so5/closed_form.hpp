#pragma once

#include "so5/qsqrt.hpp"

#include <complex>
#include <map>
#include <ostream>
#include <vector>

namespace so5 {

/**
 * Laurent polynomial in X = q^zeta with coefficients in Q(sqrt q).
 *
 * Exact ring arithmetic; zero coefficients are never stored.  Values with
 * denominators in X are handled by the callers via explicit numerator /
 * denominator pairs and cross-multiplied comparisons.
 */
class ClosedForm {
public:
    ClosedForm() : q_(0) {}
    explicit ClosedForm(long long q) : q_(q) {}

    static ClosedForm zero(long long q) { return ClosedForm(q); }
    static ClosedForm one(long long q) { return monomial(q, 0, QSqrt::one(q)); }
    static ClosedForm monomial(long long q, int e, QSqrt c) {
        ClosedForm f(q);
        f.set(e, std::move(c));
        return f;
    }
    static ClosedForm constant(long long q, QSqrt c) { return monomial(q, 0, std::move(c)); }

    long long q() const { return q_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<int, QSqrt>& coeffs() const { return c_; }

    QSqrt coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? QSqrt::zero(q_) : it->second;
    }
    void set(int e, QSqrt c) {
        if (c.is_zero())
            c_.erase(e);
        else
            c_[e] = std::move(c);
    }
    void add_to(int e, const QSqrt& c) { set(e, coeff(e) + c); }

    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    ClosedForm operator-() const {
        ClosedForm r(q_);
        for (auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    ClosedForm operator+(const ClosedForm& o) const {
        ClosedForm r = *this;
        r.q_ = q_ ? q_ : o.q_;
        for (auto& [e, c] : o.c_) r.add_to(e, c);
        return r;
    }
    ClosedForm operator-(const ClosedForm& o) const { return *this + (-o); }
    ClosedForm operator*(const ClosedForm& o) const {
        ClosedForm r(q_ ? q_ : o.q_);
        for (auto& [e1, c1] : c_)
            for (auto& [e2, c2] : o.c_) r.add_to(e1 + e2, c1 * c2);
        return r;
    }
    ClosedForm operator*(const QSqrt& s) const {
        ClosedForm r(q_);
        for (auto& [e, c] : c_) r.set(e, c * s);
        return r;
    }
    ClosedForm operator*(const Rat& s) const { return *this * QSqrt(q_, s); }

    bool operator==(const ClosedForm& o) const { return c_ == o.c_; }
    bool operator!=(const ClosedForm& o) const { return !(*this == o); }

    // X -> X^{-1}
    ClosedForm subst_inv() const {
        ClosedForm r(q_);
        for (auto& [e, c] : c_) r.set(-e, c);
        return r;
    }

    ClosedForm pow(unsigned n) const {
        ClosedForm r = one(q_);
        ClosedForm b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    // Exact division; throws if the remainder is nonzero.
    ClosedForm divide_exact(const ClosedForm& d) const;

    std::complex<double> eval(std::complex<double> X) const {
        std::complex<double> s = 0;
        for (auto& [e, c] : c_) s += c.eval() * std::pow(X, e);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const ClosedForm& f);

private:
    long long q_;
    std::map<int, QSqrt> c_;
};

// Sum_{k=first}^{last} ratio^k for a monomial ratio c*X^e, exact.
ClosedForm geom_sum(int first, int last, const ClosedForm& ratio);

/**
 * Closed form of the two-term recursion A*T_{r+1} + B*T_r + C*T_{r-1} = 0
 * with initial data T_0, T_1: returns T_r = c1*l1^r + c2*l2^r where l1, l2
 * are the roots of A*l^2 + B*l + C.  Supports the two root shapes that
 * occur here: a pair u*X, u*X^{-1} (spherical recursion) and a pair of
 * rational constants (volume recursion).  Throws if the roots are not of
 * either shape or coincide.
 */
ClosedForm solve_recursion(const ClosedForm& A, const ClosedForm& B, const ClosedForm& C,
                           const ClosedForm& T0, const ClosedForm& T1, int r);

// (X^{n} - X^{-n}) / (X - X^{-1}) = X^{n-1} + X^{n-3} + ... + X^{1-n}, n >= 0.
ClosedForm balanced_quotient(long long q, int n);

} // namespace so5
