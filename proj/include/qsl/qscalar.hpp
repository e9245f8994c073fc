#ifndef QSL_QSCALAR_HPP
#define QSL_QSCALAR_HPP

#include <string>
#include <vector>

#include "qsl/rational.hpp"

namespace qsl {

// Integer Laurent polynomial in the formal parameter q.
// Value: sum_i c[i] * q^(lo+i).  Zero is the empty coefficient vector;
// otherwise c.front() != 0 and c.back() != 0.
class LaurentZ {
public:
    LaurentZ() = default;
    static LaurentZ one() { return monomial(1, 0); }
    static LaurentZ monomial(Int a, long e);
    static LaurentZ from_coeffs(long lo, std::vector<Int> coeffs);

    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(long e) const;
    const Int& leading() const { return c_.back(); }

    LaurentZ operator-() const;
    friend LaurentZ operator+(const LaurentZ& a, const LaurentZ& b);
    friend LaurentZ operator-(const LaurentZ& a, const LaurentZ& b);
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);

    LaurentZ shifted(long k) const;  // multiply by q^k
    LaurentZ reversed() const;       // q -> q^{-1}
    LaurentZ q_negated() const;      // q -> -q
    Int content() const;             // gcd of coefficients, nonnegative
    LaurentZ divided_by_int(const Int& d) const;
    Rat eval(const Rat& q) const;

    bool operator==(const LaurentZ&) const = default;
    std::string str(const std::string& var = "q") const;

private:
    long lo_ = 0;
    std::vector<Int> c_;
    void trim();
};

// gcd of the polynomial parts in Z[q]: primitive, positive leading coefficient.
// The q-power factors (lo) of the inputs are ignored.
LaurentZ poly_gcd(const LaurentZ& a, const LaurentZ& b);

// Exact division a / b in Laurent polynomials; throws if not exact.
LaurentZ poly_divexact(const LaurentZ& a, const LaurentZ& b);

// An element of the rational-function field Q(q), stored as a reduced
// fraction of integer Laurent polynomials.  Canonical form: the denominator
// is an ordinary polynomial with a nonzero constant term and positive leading
// coefficient, numerator and denominator share no polynomial factor and no
// integer content.  Equality is therefore structural.
class QScalar {
public:
    QScalar() : num_(), den_(LaurentZ::one()) {}
    QScalar(long v) : QScalar(Rat(v)) {}
    QScalar(const Int& v);
    QScalar(const Rat& v);
    QScalar(LaurentZ num, LaurentZ den);
    static QScalar q_power(long e) { return QScalar(LaurentZ::monomial(1, e), LaurentZ::one()); }
    static QScalar q() { return q_power(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == QScalar(1); }
    const LaurentZ& num() const { return num_; }
    const LaurentZ& den() const { return den_; }

    QScalar operator-() const;
    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar inverse() const;
    QScalar pow(long e) const;
    QScalar invert_q() const;  // q -> q^{-1}
    QScalar negate_q() const;  // q -> -q
    Rat eval(const Rat& q_val) const;

    bool operator==(const QScalar&) const = default;
    bool operator<(const QScalar& o) const;  // arbitrary total order, for containers

    std::string str() const;

private:
    LaurentZ num_;
    LaurentZ den_;
    void normalize();
};

}  // namespace qsl

#endif
