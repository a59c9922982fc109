#pragma once

#include "so5/rational.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>

namespace so5 {

using u128 = unsigned __int128;

struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/**
 * The base field F = Q_p with uniformizer pi = p and residue size q = p.
 * N is the working precision in base-p digits of the unit part; it is
 * clamped so that p^(2N) fits in 128 bits, which keeps multiplication of
 * unit parts exact.
 */
struct Field {
    long long p;
    int N;

    Field(long long p_, int N_ = 24) : p(p_), N(std::min(N_, max_digits(p_))) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("Field: p must be an odd prime");
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    static int max_digits(long long p) {
        int n = 0;
        u128 x = 1;
        const u128 lim = (u128(1) << 126);
        while (x <= lim / (u128(p) * u128(p))) {
            x *= u128(p) * u128(p);
            ++n;
        }
        return n;
    }

    u128 pow(int k) const {
        u128 r = 1;
        for (int i = 0; i < k; ++i) r *= u128(p);
        return r;
    }
};

/**
 * Fixed-precision model of an element of Q_p.
 *
 * States:
 *   - exact zero;
 *   - regular: x = p^v * u with u a unit known modulo p^prec (prec >= 1);
 *   - apparent zero: every known digit cancelled, only |x| <= q^(-floor)
 *     is known.  Asking such a value for its valuation or digits throws
 *     PrecisionExhausted; order-of-magnitude tests that the floor already
 *     decides still succeed.
 */
class Padic {
public:
    Padic() : p_(0), v_(0), unit_(0), prec_(0), exact_zero_(true) {}

    static Padic zero(const Field& F) { return Padic(F.p); }

    static Padic from_int(const Field& F, long long n) { return from_rat(F, Int(n), Int(1)); }
    static Padic from_rat(const Field& F, long long num, long long den) {
        return from_rat(F, Int(num), Int(den));
    }
    static Padic from_rat(const Field& F, Int num, Int den);
    static Padic from_rat(const Field& F, const Rat& r) {
        return from_rat(F, boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
    }
    // p^v * u with u a plain integer unit.
    static Padic from_unit_pow(const Field& F, long long unit, long v);

    long long p() const { return p_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool is_zero() const { return exact_zero_ || prec_ == 0; }
    bool is_apparent_zero() const { return !exact_zero_ && prec_ == 0; }
    int precision() const { return prec_; }

    long valuation() const {
        if (exact_zero_) throw std::domain_error("Padic: valuation of exact zero");
        if (prec_ == 0) throw PrecisionExhausted("Padic: valuation below known precision");
        return v_;
    }
    // |x| = q^{-v}; exponent of |x|.
    long abs_exponent() const { return -valuation(); }

    // Decide |x| <= q^e; throws PrecisionExhausted only if undecidable.
    bool bounded_by(long e) const {
        if (exact_zero_) return true;
        if (prec_ > 0) return -v_ <= e;
        if (-v_ <= e) return true; // floor already below the bound
        throw PrecisionExhausted("Padic: bound test below known precision");
    }

    // Unit part modulo p^k (k <= prec); first digit is nonzero.
    u128 unit_mod(int k) const {
        if (is_zero()) throw std::domain_error("Padic: unit part of zero");
        if (k > prec_) throw PrecisionExhausted("Padic: unit digits beyond precision");
        u128 m = 1;
        for (int i = 0; i < k; ++i) m *= u128(p_);
        return unit_ % m;
    }
    int digit(int i) const { // i-th base-p digit of the unit part
        if (is_zero()) return 0;
        if (i >= prec_) throw PrecisionExhausted("Padic: digit beyond precision");
        u128 u = unit_;
        for (int k = 0; k < i; ++k) u /= u128(p_);
        return static_cast<int>(u % u128(p_));
    }

    // Fractional part of x as an exact rational (num, p^k) with k = max(0, -v):
    // the principal part sum_{i<0} d_i p^i mod 1.  Needs digits up to p^0.
    std::pair<long long, long long> principal_part() const;

    Padic operator-() const;
    Padic operator+(const Padic& o) const { return add(o, false); }
    Padic operator-(const Padic& o) const { return add(o, true); }
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic inverse() const;

    bool same_value(const Padic& o) const { return (*this - o).is_zero(); }

    // Reconstruct a small rational from the known digits (round-trip decode).
    Rat reconstruct_rational() const;

    Rat abs_rational() const {
        if (is_zero()) return Rat(0);
        return qpow(p_, -v_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Padic& x);

private:
    explicit Padic(long long p) : p_(p), v_(0), unit_(0), prec_(0), exact_zero_(true) {}
    Padic(long long p, long v, u128 unit, int prec, bool exact_zero)
        : p_(p), v_(v), unit_(unit), prec_(prec), exact_zero_(exact_zero) {}

    static Padic apparent_zero(long long p, long floor) { return Padic(p, floor, 0, 0, false); }

    Padic add(const Padic& o, bool negate) const;
    void check(const Padic& o) const {
        if (p_ && o.p_ && p_ != o.p_) throw std::invalid_argument("Padic: mixed primes");
    }

    long long p_;
    long v_;      // valuation (regular) or known floor (apparent zero)
    u128 unit_;   // unit part mod p^prec, first digit nonzero
    int prec_;    // number of known digits (0 for zero states)
    bool exact_zero_;
};

// v_p of a nonzero cpp_int.
long padic_valuation(Int n, long long p);

} // namespace so5
