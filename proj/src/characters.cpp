#include "so5/characters.hpp"

namespace so5 {

bool is_square_mod_p(long long u, long long p) {
    u %= p;
    if (u < 0) u += p;
    if (u == 0) throw std::domain_error("is_square_mod_p: zero");
    long long e = (p - 1) / 2, b = u, r = 1;
    while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r == 1;
}

long long smallest_nonresidue(long long p) {
    for (long long u = 2; u < p; ++u)
        if (!is_square_mod_p(u, p)) return u;
    throw std::logic_error("smallest_nonresidue: none found");
}

bool is_square(const Padic& x) {
    if (x.is_zero()) throw std::domain_error("is_square(0)");
    if (x.valuation() % 2 != 0) return false;
    return is_square_mod_p(static_cast<long long>(x.unit_mod(1)), x.p());
}

int hilbert_symbol(const Padic& theta, const Padic& alpha) {
    if (theta.is_zero() || alpha.is_zero()) throw std::domain_error("hilbert_symbol: zero argument");
    if (theta.valuation() != 0) throw std::invalid_argument("hilbert_symbol: theta must be a unit");
    if (is_square(theta)) return +1; // split case, (theta, alpha) = 1
    return alpha.valuation() % 2 == 0 ? +1 : -1;
}

namespace {

long long pow_mod(long long b, long long e, long long m) {
    long long r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

// Smallest primitive root mod p^2; such a g generates (Z/p^m)^x for all m.
long long primitive_root(long long p) {
    long long p2 = p * p;
    long long order = p * (p - 1);
    std::vector<long long> primes;
    long long t = order;
    for (long long d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            primes.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) primes.push_back(t);
    for (long long g = 2; g < p2; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (long long d : primes)
            if (pow_mod(g, order / d, p2) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: not found");
}

} // namespace

CharacterSpec::CharacterSpec(const Field& F, int conductor, long long unit_index, PiValue value_at_pi)
    : p_(F.p), m_(conductor), j_(unit_index), t_(std::move(value_at_pi)) {
    if (m_ < 0) throw std::invalid_argument("CharacterSpec: conductor < 0");
    pm_ = 1;
    for (int i = 0; i < m_; ++i) pm_ *= p_;
    if (m_ == 0) {
        if (j_ != 0) throw std::invalid_argument("CharacterSpec: unramified needs trivial unit character");
        g_ = 1;
        ord_ = 1;
        return;
    }
    ord_ = (p_ - 1) * (pm_ / p_);
    j_ = ((j_ % ord_) + ord_) % ord_;
    // Conductor exactly m: nontrivial on 1 + pi^{m-1} R.
    bool ok = (m_ == 1) ? (j_ % ord_ != 0) : (j_ % p_ != 0);
    if (!ok) throw std::invalid_argument("CharacterSpec: unit index has smaller conductor");
    g_ = primitive_root(p_) % pm_;
    dlog_.assign(static_cast<size_t>(pm_), -1);
    long long x = 1;
    for (long long k = 0; k < ord_; ++k) {
        dlog_[static_cast<size_t>(x)] = static_cast<int>(k);
        x = (x * g_) % pm_;
    }
}

cplx CharacterSpec::unit_value(long long u) const {
    if (m_ == 0) return 1.0;
    u %= pm_;
    if (u < 0) u += pm_;
    int k = dlog_[static_cast<size_t>(u)];
    if (k < 0) throw std::domain_error("CharacterSpec: not a unit mod p^m");
    return unit_phase((j_ * k) % ord_, ord_);
}

cplx CharacterSpec::eval(const Padic& x) const {
    if (x.is_zero()) throw std::domain_error("CharacterSpec: chi(0)");
    cplx t = pi_value();
    long v = x.valuation();
    cplx tv = std::pow(t, static_cast<double>(v));
    if (m_ == 0) return tv;
    return tv * unit_value(static_cast<long long>(x.unit_mod(m_)));
}

cplx CharacterSpec::eval_at(const Padic& x, cplx X0) const {
    if (x.is_zero()) throw std::domain_error("CharacterSpec: chi(0)");
    long v = x.valuation();
    cplx base = symbolic() ? cplx(1.0) / X0 : pi_value();
    cplx tv = std::pow(base, static_cast<double>(v));
    if (m_ == 0) return tv;
    return tv * unit_value(static_cast<long long>(x.unit_mod(m_)));
}

CharacterSpec CharacterSpec::conjugate() const {
    PiValue t = t_;
    if (!symbolic()) t = std::conj(std::get<cplx>(t_));
    Field F(p_, 2);
    return CharacterSpec(F, m_, m_ == 0 ? 0 : (ord_ - j_) % ord_, t);
}

} // namespace so5
