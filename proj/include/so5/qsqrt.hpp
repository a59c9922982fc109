#pragma once

#include "so5/rational.hpp"

#include <cmath>
#include <ostream>

namespace so5 {

/**
 * Element of Q(sqrt q) for a fixed integer q: a + b*sqrt(q).
 *
 * q is carried per value and must agree between operands.  For q a prime
 * (the only case used here) sqrt(q) is irrational, so a + b*sqrt(q) = 0
 * iff a = b = 0 and the norm a^2 - q*b^2 vanishes only at 0; division is
 * therefore exact.
 */
class QSqrt {
public:
    QSqrt() : a_(0), b_(0), q_(0) {}
    QSqrt(long long q, Rat a, Rat b = Rat(0)) : a_(std::move(a)), b_(std::move(b)), q_(q) {}

    static QSqrt zero(long long q) { return QSqrt(q, 0, 0); }
    static QSqrt one(long long q) { return QSqrt(q, 1, 0); }

    // q^(e/2) for integer e (possibly odd or negative).
    static QSqrt half_power(long long q, long e) {
        if (e % 2 == 0) return QSqrt(q, qpow(q, e / 2), 0);
        long f = (e - 1) / 2; // e = 2f + 1, q^(e/2) = q^f * sqrt(q)
        return QSqrt(q, 0, qpow(q, f));
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long long q() const { return q_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QSqrt operator-() const { return QSqrt(q_, -a_, -b_); }

    QSqrt operator+(const QSqrt& o) const {
        check(o);
        return QSqrt(qq(o), a_ + o.a_, b_ + o.b_);
    }
    QSqrt operator-(const QSqrt& o) const {
        check(o);
        return QSqrt(qq(o), a_ - o.a_, b_ - o.b_);
    }
    QSqrt operator*(const QSqrt& o) const {
        check(o);
        return QSqrt(qq(o), a_ * o.a_ + Rat(qq(o)) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QSqrt conj() const { return QSqrt(q_, a_, -b_); }
    Rat norm() const { return a_ * a_ - Rat(q_) * b_ * b_; }

    QSqrt operator/(const QSqrt& o) const {
        check(o);
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("QSqrt: division by zero");
        QSqrt t = *this * o.conj();
        return QSqrt(qq(o), t.a_ / n, t.b_ / n);
    }

    bool operator==(const QSqrt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt& o) const { return !(*this == o); }

    double eval() const { return to_double(a_) + to_double(b_) * std::sqrt(static_cast<double>(q_)); }

    friend std::ostream& operator<<(std::ostream& os, const QSqrt& v) {
        os << v.a_.str();
        if (v.b_ != 0) os << (v.b_ > 0 ? "+" : "") << v.b_.str() << "*sqrt(" << v.q_ << ")";
        return os;
    }

private:
    // Default-constructed values (q = 0) act as a neutral zero.
    long long qq(const QSqrt& o) const { return q_ ? q_ : o.q_; }
    void check(const QSqrt& o) const {
        if (q_ && o.q_ && q_ != o.q_) throw std::invalid_argument("QSqrt: mixed base q");
    }

    Rat a_, b_;
    long long q_;
};

} // namespace so5
