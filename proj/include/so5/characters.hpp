#pragma once

#include "so5/padic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <variant>
#include <vector>

namespace so5 {

using cplx = std::complex<double>;

inline cplx unit_phase(long long num, long long den) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

/**
 * The fixed additive character psi with conductor R: psi(x) = e^{2 pi i t}
 * where t is the principal part of x (the fractional-part character).
 * Trivial on R, nontrivial on pi^{-1} R.
 */
struct AdditivePsi {
    cplx operator()(const Padic& x) const {
        auto [num, den] = x.principal_part();
        return unit_phase(num, den);
    }
    cplx conj(const Padic& x) const { return std::conj((*this)(x)); }
};

// Smallest quadratic non-residue mod p (the non-split theta).
long long smallest_nonresidue(long long p);

bool is_square_mod_p(long long u, long long p);

// true iff x is a square in F: v(x) even and unit part a residue mod p.
bool is_square(const Padic& x);

/**
 * Hilbert symbol (theta, alpha) for the two theta shapes the computation
 * uses: theta = 1 (split) gives +1; theta a non-square unit gives
 * (-1)^{v(alpha)}.  Other theta (odd valuation) are rejected.
 */
int hilbert_symbol(const Padic& theta, const Padic& alpha);

/**
 * A multiplicative character chi of F^x: conductor m, a character of
 * (R/pi^m R)^x selected by unit_index against a fixed generator, and the
 * value at pi (symbolic X or a concrete unit-modulus number).
 *
 * Symbolic convention (Prop 3.1): X = chi(pi)^{-1}, so chi contributes
 * X^{-v(x)} times the unit-character value.
 */
class CharacterSpec {
public:
    struct SymbolicX {};
    using PiValue = std::variant<SymbolicX, cplx>;

    CharacterSpec(const Field& F, int conductor, long long unit_index, PiValue value_at_pi);

    static CharacterSpec unramified_symbolic(const Field& F) {
        return CharacterSpec(F, 0, 0, SymbolicX{});
    }
    static CharacterSpec unramified_at(const Field& F, cplx chi_pi) {
        return CharacterSpec(F, 0, 0, chi_pi);
    }

    int conductor() const { return m_; }
    long long unit_index() const { return j_; }
    bool ramified() const { return m_ >= 1; }
    bool symbolic() const { return std::holds_alternative<SymbolicX>(t_); }
    long long order() const { return ord_; }
    long long p() const { return p_; }

    // chi(pi) when concrete.
    cplx pi_value() const { return std::get<cplx>(t_); }

    // Value of the unit-group character at a unit u (as integer mod p^m).
    cplx unit_value(long long u_mod_pm) const;

    // chi(x) for concrete value_at_pi.
    cplx eval(const Padic& x) const;

    // chi(x) with symbolic pi-value evaluated at a concrete X0 = chi(pi)^{-1}.
    cplx eval_at(const Padic& x, cplx X0) const;

    // Exponent k such that chi(x) = X^k * unit_value for symbolic specs.
    long symbolic_exponent(const Padic& x) const { return -x.valuation(); }

    CharacterSpec conjugate() const;

private:
    long long p_;
    int m_;
    long long j_;
    PiValue t_;
    long long g_;       // fixed generator of (R/pi^m R)^x (primitive root)
    long long ord_;     // (p-1) p^{m-1} for m >= 1, else 1
    long long pm_;      // p^m
    std::vector<int> dlog_; // discrete log table mod p^m (m >= 1)
};

} // namespace so5
