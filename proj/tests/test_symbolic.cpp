#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "so5/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace so5;
using cplx = std::complex<double>;

namespace {
constexpr long long q = 3;

cplx random_unit_X(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (;;) {
        double t = 2 * std::numbers::pi * u(rng);
        cplx X = {std::cos(t), std::sin(t)};
        if (std::abs(X * X - cplx(1.0)) > 0.1) return X;
    }
}
} // namespace

TEST_CASE("QSqrt ring axioms and norm") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> d(-20, 20);
    for (int i = 0; i < 500; ++i) {
        QSqrt x(q, Rat(d(rng), 1 + std::abs(d(rng))), Rat(d(rng), 1 + std::abs(d(rng))));
        QSqrt y(q, Rat(d(rng)), Rat(d(rng)));
        QSqrt z(q, Rat(d(rng)), Rat(d(rng)));
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * x.conj() == QSqrt(q, x.norm()));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("ClosedForm arithmetic is exact and eval commutes with ops") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> e(-4, 4);
    std::uniform_int_distribution<long long> d(-9, 9);
    for (int rep = 0; rep < 20; ++rep) {
        ClosedForm a(q), b(q);
        for (int i = 0; i < 5; ++i) {
            a.add_to(e(rng), QSqrt(q, Rat(d(rng)), Rat(d(rng), 2)));
            b.add_to(e(rng), QSqrt(q, Rat(d(rng), 3), Rat(d(rng))));
        }
        cplx X = random_unit_X(rng);
        CHECK(std::abs((a + b).eval(X) - (a.eval(X) + b.eval(X))) < 1e-12);
        CHECK(std::abs((a * b).eval(X) - a.eval(X) * b.eval(X)) < 1e-12);
        CHECK(std::abs((a - b).eval(X) - (a.eval(X) - b.eval(X))) < 1e-12);
        if (!b.is_zero()) {
            ClosedForm p = a * b;
            CHECK(p.divide_exact(b) == a);
        }
    }
}

TEST_CASE("no stored zero coefficients") {
    ClosedForm a = ClosedForm::monomial(q, 2, QSqrt::one(q));
    ClosedForm b = a - a;
    CHECK(b.is_zero());
    CHECK(b.coeffs().empty());
}

TEST_CASE("geom_sum examples") {
    // sum_{k=0}^{0} X^k = 1
    ClosedForm X = ClosedForm::monomial(q, 1, QSqrt::one(q));
    CHECK(geom_sum(0, 0, X) == ClosedForm::one(q));

    // sum_{k=-1}^{0} (qX)^k = 1 + (qX)^{-1}
    ClosedForm qX = ClosedForm::monomial(q, 1, QSqrt(q, q));
    ClosedForm s = geom_sum(-1, 0, qX);
    ClosedForm expect = ClosedForm::one(q) + ClosedForm::monomial(q, -1, QSqrt(q, Rat(1, q)));
    CHECK(s == expect);

    // (B1.6): sum_{k=-r}^{r-l} (q^3 X)^k = ((q^3X)^{r-l+1} - (q^3X)^{-r}) / (q^3X - 1)
    ClosedForm q3X = ClosedForm::monomial(q, 1, QSqrt(q, q * q * q));
    for (int r = 0; r <= 3; ++r)
        for (int l = -2; l <= 2 * r; ++l) {
            if (r - l < -r) continue;
            ClosedForm lhs = geom_sum(-r, r - l, q3X);
            ClosedForm num = q3X.pow(static_cast<unsigned>(r - l + 1));
            // (q^3X)^{-r} as an exact monomial
            ClosedForm numneg = ClosedForm::monomial(q, -r, QSqrt(q, qpow(q, -3 * r)));
            ClosedForm den = q3X - ClosedForm::one(q);
            CHECK(lhs * den == num - numneg);
        }
}

TEST_CASE("solve_recursion: spherical shape") {
    // q^3 T_{r+1} - q^{3/2}(X + X^{-1}) T_r + T_{r-1} = 0
    ClosedForm A = ClosedForm::constant(q, QSqrt(q, qpow(q, 3)));
    ClosedForm B(q);
    B.add_to(1, -QSqrt::half_power(q, 3));
    B.add_to(-1, -QSqrt::half_power(q, 3));
    ClosedForm C = ClosedForm::one(q);
    ClosedForm T0 = ClosedForm::one(q);
    // any polynomial initial value; use T1 = (q^{3/2}(X+X^{-1}) - q - 1)/(q^3-q)
    ClosedForm T1(q);
    T1.add_to(1, QSqrt::half_power(q, 3) / QSqrt(q, Rat(q * q * q - q)));
    T1.add_to(-1, QSqrt::half_power(q, 3) / QSqrt(q, Rat(q * q * q - q)));
    T1.add_to(0, QSqrt(q, Rat(-q - 1, q * q * q - q)));

    CHECK(solve_recursion(A, B, C, T0, T1, 0) == T0);
    CHECK(solve_recursion(A, B, C, T0, T1, 1) == T1);

    // closed form matches direct iteration, coefficient-exact, r <= 8
    ClosedForm prev = T0, cur = T1;
    for (int r = 2; r <= 8; ++r) {
        ClosedForm next = (-(B * cur) - C * prev) * QSqrt(q, Rat(1, q * q * q));
        CHECK(solve_recursion(A, B, C, T0, T1, r) == next);
        prev = cur;
        cur = next;
    }
}

TEST_CASE("solve_recursion: constant-root shape (volume recursion)") {
    // L_{r+1} = (1+q^3) L_r - q^3 L_{r-1}; roots q^3 and 1
    ClosedForm A = ClosedForm::one(q);
    ClosedForm B = ClosedForm::constant(q, QSqrt(q, Rat(-(1 + q * q * q))));
    ClosedForm C = ClosedForm::constant(q, QSqrt(q, Rat(q * q * q)));
    ClosedForm L1 = ClosedForm::constant(q, QSqrt(q, Rat(q * q * q - q)));
    ClosedForm L2 = L1 * Rat(q * q * q);
    // seeded at (L1, L2): solve with T0 := L1, T1 := L2 gives L_{r+1}
    ClosedForm prev = L1, cur = L2;
    for (int r = 2; r <= 6; ++r) {
        ClosedForm next = (-(B * cur) - C * prev);
        CHECK(solve_recursion(A, B, C, L1, L2, r) == next);
        prev = cur;
        cur = next;
    }
}

TEST_CASE("degenerate numeric roots are the caller's problem, symbolic is fine") {
    ClosedForm A = ClosedForm::constant(q, QSqrt(q, qpow(q, 3)));
    ClosedForm B(q);
    B.add_to(1, -QSqrt::half_power(q, 3));
    B.add_to(-1, -QSqrt::half_power(q, 3));
    ClosedForm C = ClosedForm::one(q);
    ClosedForm T = solve_recursion(A, B, C, ClosedForm::one(q), ClosedForm::one(q), 3);
    // symbolic result evaluates fine away from X^2 = 1
    std::mt19937_64 rng(2);
    cplx X = random_unit_X(rng);
    CHECK(std::isfinite(T.eval(X).real()));
}

TEST_CASE("balanced quotient expands (X^n - X^-n)/(X - X^-1)") {
    for (int n = 0; n <= 6; ++n) {
        ClosedForm s = balanced_quotient(q, n);
        ClosedForm XmXi(q);
        XmXi.add_to(1, QSqrt::one(q));
        XmXi.add_to(-1, -QSqrt::one(q));
        ClosedForm lhs(q);
        if (n > 0) {
            lhs.add_to(n, QSqrt::one(q));
            lhs.add_to(-n, -QSqrt::one(q));
        }
        CHECK(s * XmXi == lhs);
    }
}
