#include "so5/padic.hpp"

namespace so5 {

long padic_valuation(Int n, long long p) {
    if (n == 0) throw std::domain_error("padic_valuation of 0");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

namespace {

u128 mulmod(u128 a, u128 b, u128 m) {
    // a, b < m <= p^N with p^(2N) < 2^127, so the product does not wrap.
    return (a * b) % m;
}

// Inverse of a unit modulo p^k by Hensel doubling from the inverse mod p.
u128 unit_inverse(u128 a, long long p, int k, const Field& F) {
    u128 inv = 1;
    long long a0 = static_cast<long long>(a % u128(p));
    long long x = 1;
    { // inverse mod p by Fermat (p prime, small)
        long long e = p - 2, b = a0 % p, r = 1;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        x = r;
    }
    inv = u128(x);
    int have = 1;
    while (have < k) {
        have = std::min(2 * have, k);
        u128 m = F.pow(have);
        u128 t = (u128(2) % m + m - mulmod(a % m, inv, m)) % m;
        inv = mulmod(inv, t, m); // inv *= (2 - a*inv)
    }
    return inv % F.pow(k);
}

} // namespace

Padic Padic::from_rat(const Field& F, Int num, Int den) {
    if (den == 0) throw DivisionByZero("Padic: rational with zero denominator");
    if (num == 0) return zero(F);
    bool neg = false;
    if (num < 0) {
        num = -num;
        neg = !neg;
    }
    if (den < 0) {
        den = -den;
        neg = !neg;
    }
    long vn = padic_valuation(num, F.p), vd = padic_valuation(den, F.p);
    num /= ipow(Int(F.p), static_cast<unsigned>(vn));
    den /= ipow(Int(F.p), static_cast<unsigned>(vd));
    Int M = ipow(Int(F.p), static_cast<unsigned>(F.N));
    Int u = (num % M) * 1;
    u128 un = u.convert_to<u128>();
    u128 ud = (den % M).convert_to<u128>();
    u128 m = F.pow(F.N);
    u128 unit = mulmod(un % m, unit_inverse(ud % m, F.p, F.N, F), m);
    if (neg) unit = (m - unit) % m;
    return Padic(F.p, vn - vd, unit, F.N, false);
}

Padic Padic::from_unit_pow(const Field& F, long long unit, long v) {
    if (unit % F.p == 0) throw std::invalid_argument("Padic::from_unit_pow: not a unit");
    Padic x = from_int(F, unit);
    x.v_ += v;
    return x;
}

std::pair<long long, long long> Padic::principal_part() const {
    if (is_exact_zero()) return {0, 1};
    if (is_apparent_zero()) {
        if (v_ >= 0) return {0, 1}; // floor inside R: fractional part known to vanish
        throw PrecisionExhausted("Padic: principal part below known precision");
    }
    if (v_ >= 0) return {0, 1};
    int k = static_cast<int>(-v_);
    if (k > prec_) throw PrecisionExhausted("Padic: principal part needs more digits");
    u128 den = 1;
    for (int i = 0; i < k; ++i) den *= u128(p_);
    u128 num = unit_ % den;
    return {static_cast<long long>(num), static_cast<long long>(den)};
}

Padic Padic::operator-() const {
    if (is_zero()) return *this;
    u128 m = 1;
    for (int i = 0; i < prec_; ++i) m *= u128(p_);
    return Padic(p_, v_, (m - unit_) % m, prec_, false);
}

Padic Padic::add(const Padic& o, bool negate) const {
    check(o);
    if (exact_zero_) return negate ? -o : o;
    if (o.exact_zero_) return *this;
    Field F(p_ ? p_ : o.p_, std::max(prec_, o.prec_));

    long abs_a = v_ + prec_;   // value known modulo p^abs
    long abs_b = o.v_ + o.prec_;
    long abs_res = std::min(abs_a, abs_b);
    long v = std::min(v_, o.v_); // for zero states prec==0 so v_ is the floor

    int K = static_cast<int>(abs_res - v);
    if (K <= 0) return apparent_zero(p_, abs_res);
    u128 m = F.pow(K);
    u128 s = 0;
    if (prec_ > 0) {
        long sh = v_ - v;
        if (sh < K) s += mulmod(unit_ % F.pow(static_cast<int>(K - sh)), F.pow(static_cast<int>(sh)), m);
    }
    if (o.prec_ > 0) {
        long sh = o.v_ - v;
        if (sh < K) {
            u128 t = mulmod(o.unit_ % F.pow(static_cast<int>(K - sh)), F.pow(static_cast<int>(sh)), m);
            s = negate ? (s + m - t) % m : (s + t) % m;
        }
    }
    s %= m;
    if (s == 0) return apparent_zero(p_, abs_res);
    int t = 0;
    while (s % u128(p_) == 0) {
        s /= u128(p_);
        ++t;
    }
    return Padic(p_, v + t, s, K - t, false);
}

Padic Padic::operator*(const Padic& o) const {
    check(o);
    if (exact_zero_ || o.exact_zero_) return Padic(p_ ? p_ : o.p_);
    if (prec_ == 0 || o.prec_ == 0) {
        // |x*y| <= q^{-(floor_a + floor_b)} is all that survives.
        long fa = prec_ == 0 ? v_ : v_;
        long fb = o.prec_ == 0 ? o.v_ : o.v_;
        return apparent_zero(p_, fa + fb);
    }
    Field F(p_, 1);
    int k = std::min(prec_, o.prec_);
    u128 m = F.pow(k);
    return Padic(p_, v_ + o.v_, mulmod(unit_ % m, o.unit_ % m, m), k, false);
}

Padic Padic::inverse() const {
    if (is_exact_zero()) throw DivisionByZero("Padic: inverse of zero");
    if (prec_ == 0) throw PrecisionExhausted("Padic: inverse of apparent zero");
    Field F(p_, prec_);
    return Padic(p_, -v_, unit_inverse(unit_, p_, prec_, F), prec_, false);
}

Padic Padic::operator/(const Padic& o) const { return *this * o.inverse(); }

Rat Padic::reconstruct_rational() const {
    if (is_zero()) return Rat(0);
    Field F(p_, prec_);
    Int M = ipow(Int(p_), static_cast<unsigned>(prec_));
    Int x = Int(static_cast<unsigned long long>(unit_ >> 64)) * ipow(Int(2), 64) +
            Int(static_cast<unsigned long long>(unit_));
    // Standard rational reconstruction: Euclid on (M, x) until the remainder
    // drops below sqrt(M/2); numerator r, denominator t with |r t| < M/2.
    Int half = M / 2;
    Int bound = boost::multiprecision::sqrt(half);
    Int r0 = M, r1 = x, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int qq = r0 / r1;
        Int r2 = r0 - qq * r1;
        Int t2 = t0 - qq * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) throw std::domain_error("Padic: rational reconstruction failed");
    Rat val(r1, t1);
    return val * qpow(p_, v_);
}

std::ostream& operator<<(std::ostream& os, const Padic& x) {
    if (x.is_exact_zero()) return os << "0";
    if (x.is_apparent_zero()) return os << "O(p^" << x.v_ << ")";
    os << "p^" << x.v_ << "*(";
    u128 u = x.unit_;
    for (int i = 0; i < std::min(x.prec_, 6); ++i) {
        if (i) os << ",";
        os << static_cast<int>(u % u128(x.p_));
        u /= u128(x.p_);
    }
    if (x.prec_ > 6) os << ",..";
    return os << ")";
}

} // namespace so5
