#include "so5/closed_form.hpp"

#include <optional>

namespace so5 {

ClosedForm ClosedForm::divide_exact(const ClosedForm& d) const {
    if (d.is_zero()) throw std::domain_error("ClosedForm: division by zero");
    if (is_zero()) return zero(q_);
    ClosedForm rem = *this;
    ClosedForm quot(q_);
    int dlead = d.max_exp();
    QSqrt dc = d.coeff(dlead);
    while (!rem.is_zero()) {
        int rlead = rem.max_exp();
        int e = rlead - dlead;
        QSqrt c = rem.coeff(rlead) / dc;
        quot.add_to(e, c);
        rem = rem - d * monomial(q_, e, c);
        if (!rem.is_zero() && rem.max_exp() >= rlead)
            throw std::logic_error("ClosedForm::divide_exact: no progress");
        // Degree of a Laurent remainder is unbounded below; stop when the
        // spread can no longer contain a multiple of d.
        if (!rem.is_zero() && rem.max_exp() - dlead < min_exp() - d.min_exp() - 1)
            throw std::domain_error("ClosedForm::divide_exact: nonzero remainder");
    }
    return quot;
}

std::ostream& operator<<(std::ostream& os, const ClosedForm& f) {
    if (f.c_.empty()) return os << "0";
    bool first = true;
    for (auto it = f.c_.rbegin(); it != f.c_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second << ")";
        if (it->first != 0) os << "*X^" << it->first;
        first = false;
    }
    return os;
}

ClosedForm geom_sum(int first, int last, const ClosedForm& ratio) {
    if (first > last) throw std::invalid_argument("geom_sum: first > last");
    if (ratio.coeffs().size() != 1) throw std::invalid_argument("geom_sum: ratio must be a monomial");
    long long q = ratio.q();
    int e = ratio.coeffs().begin()->first;
    QSqrt c = ratio.coeffs().begin()->second;
    ClosedForm s(q);
    // c^k X^{e k}, term by term; exponents of either sign.
    for (int k = first; k <= last; ++k) {
        QSqrt ck = QSqrt::one(q);
        int n = k >= 0 ? k : -k;
        for (int i = 0; i < n; ++i) ck = (k >= 0) ? ck * c : ck / c;
        s.add_to(e * k, ck);
    }
    return s;
}

namespace {

std::optional<QSqrt> rat_sqrt(long long q, const Rat& v) {
    // Exact square root of a rational inside Q(sqrt q): either sqrt(v) is
    // rational or v = q * (rational square).
    if (v < 0) return std::nullopt;
    auto int_sqrt = [](const Int& n) -> std::optional<Int> {
        if (n < 0) return std::nullopt;
        Int r = boost::multiprecision::sqrt(n);
        if (r * r == n) return r;
        return std::nullopt;
    };
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    auto ns = int_sqrt(num), ds = int_sqrt(den);
    if (ns && ds) return QSqrt(q, Rat(*ns, *ds));
    Rat w = v / q;
    num = boost::multiprecision::numerator(w);
    den = boost::multiprecision::denominator(w);
    ns = int_sqrt(num), ds = int_sqrt(den);
    if (ns && ds) return QSqrt(q, 0, Rat(*ns, *ds));
    return std::nullopt;
}

ClosedForm power_of_root(long long q, const QSqrt& u, int e, int r) {
    // (u X^e)^r, r >= 0
    QSqrt c = QSqrt::one(q);
    for (int i = 0; i < r; ++i) c = c * u;
    return ClosedForm::monomial(q, e * r, c);
}

} // namespace

ClosedForm solve_recursion(const ClosedForm& A, const ClosedForm& B, const ClosedForm& C,
                           const ClosedForm& T0, const ClosedForm& T1, int r) {
    if (r < 0) throw std::invalid_argument("solve_recursion: r < 0");
    if (r == 0) return T0;
    if (r == 1) return T1;
    long long q = A.q();
    if (A.coeffs().size() != 1 || A.min_exp() != 0)
        throw std::invalid_argument("solve_recursion: leading coefficient must be a constant");
    QSqrt a = A.coeff(0);

    // Locate the roots l1 = u1 X^{e1}, l2 = u2 X^{e2}.
    QSqrt u1, u2;
    int e1, e2;
    if (B.coeffs().size() == 2) {
        auto it = B.coeffs().begin();
        e1 = it->first;
        QSqrt b1 = it->second;
        ++it;
        e2 = it->first;
        QSqrt b2 = it->second;
        // l1 + l2 = -B/A with distinct exponents forces l_i = -(B_i/A) X^{e_i}.
        u1 = -(b1 / a);
        u2 = -(b2 / a);
    } else if (B.coeffs().size() <= 1 && B.min_exp() == 0 && C.coeffs().size() <= 1 && C.min_exp() == 0) {
        // Constant roots: solve a l^2 + b l + c = 0 over Q(sqrt q).
        QSqrt b = B.coeff(0), c = C.coeff(0);
        QSqrt disc = b * b - QSqrt(q, 4) * a * c;
        if (!disc.is_rational()) throw std::domain_error("solve_recursion: irrational discriminant shape");
        auto s = rat_sqrt(q, disc.a());
        if (!s) throw std::domain_error("solve_recursion: discriminant is not a square in Q(sqrt q)");
        QSqrt two_a = QSqrt(q, 2) * a;
        u1 = (-b + *s) / two_a;
        u2 = (-b - *s) / two_a;
        e1 = e2 = 0;
    } else {
        throw std::domain_error("solve_recursion: unsupported coefficient shape");
    }

    // Verify both roots against the characteristic equation.
    for (auto& [u, e] : {std::pair<QSqrt, int>{u1, e1}, {u2, e2}}) {
        ClosedForm l = ClosedForm::monomial(q, e, u);
        ClosedForm res = A * l * l + B * l + C;
        if (!res.is_zero()) throw std::logic_error("solve_recursion: root verification failed");
    }
    ClosedForm l1 = ClosedForm::monomial(q, e1, u1);
    ClosedForm l2 = ClosedForm::monomial(q, e2, u2);
    ClosedForm dl = l1 - l2;
    if (dl.is_zero()) throw std::domain_error("solve_recursion: degenerate roots");

    // T_r = [ (T1 - l2 T0) l1^r - (T1 - l1 T0) l2^r ] / (l1 - l2)
    ClosedForm num =
        (T1 - l2 * T0) * power_of_root(q, u1, e1, r) - (T1 - l1 * T0) * power_of_root(q, u2, e2, r);
    return num.divide_exact(dl);
}

ClosedForm balanced_quotient(long long q, int n) {
    ClosedForm s(q);
    for (int e = n - 1; e >= 1 - n; e -= 2) s.set(e, QSqrt::one(q));
    return s;
}

} // namespace so5
