#include "qsl/qscalar.hpp"

#include <algorithm>
#include <sstream>

namespace qsl {

void LaurentZ::trim() {
    size_t a = 0, b = c_.size();
    while (a < b && c_[a] == 0) ++a;
    while (b > a && c_[b - 1] == 0) --b;
    if (a == b) {
        c_.clear();
        lo_ = 0;
        return;
    }
    lo_ += static_cast<long>(a);
    c_ = std::vector<Int>(c_.begin() + a, c_.begin() + b);
}

LaurentZ LaurentZ::monomial(Int a, long e) {
    LaurentZ r;
    if (a != 0) {
        r.lo_ = e;
        r.c_.push_back(std::move(a));
    }
    return r;
}

LaurentZ LaurentZ::from_coeffs(long lo, std::vector<Int> coeffs) {
    LaurentZ r;
    r.lo_ = lo;
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

Int LaurentZ::coeff(long e) const {
    if (is_zero() || e < lo_ || e > hi()) return Int(0);
    return c_[static_cast<size_t>(e - lo_)];
}

LaurentZ LaurentZ::operator-() const {
    LaurentZ r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentZ operator+(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo_, b.lo_);
    long hi = std::max(a.hi(), b.hi());
    std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < a.c_.size(); ++i) c[a.lo_ - lo + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[b.lo_ - lo + i] += b.c_[i];
    return LaurentZ::from_coeffs(lo, std::move(c));
}

LaurentZ operator-(const LaurentZ& a, const LaurentZ& b) { return a + (-b); }

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero() || b.is_zero()) return LaurentZ();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LaurentZ::from_coeffs(a.lo_ + b.lo_, std::move(c));
}

LaurentZ LaurentZ::shifted(long k) const {
    if (is_zero()) return *this;
    LaurentZ r = *this;
    r.lo_ += k;
    return r;
}

LaurentZ LaurentZ::reversed() const {
    if (is_zero()) return *this;
    LaurentZ r;
    r.lo_ = -hi();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

LaurentZ LaurentZ::q_negated() const {
    LaurentZ r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i)
        if ((r.lo_ + static_cast<long>(i)) % 2 != 0) r.c_[i] = -r.c_[i];
    return r;
}

Int LaurentZ::content() const {
    Int g(0);
    for (const auto& x : c_) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

LaurentZ LaurentZ::divided_by_int(const Int& d) const {
    LaurentZ r = *this;
    for (auto& x : r.c_) {
        Int quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        if (rem != 0) throw std::domain_error("inexact integer division of polynomial");
        x = quo;
    }
    return r;
}

Rat LaurentZ::eval(const Rat& q) const {
    if (is_zero()) return Rat(0);
    if (q == 0 && lo_ < 0) throw std::domain_error("negative q-power at q = 0");
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rat(*it);
    return acc * rat_pow(q, lo_);
}

std::string LaurentZ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = hi(); e >= lo_; --e) {
        Int a = coeff(e);
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Dense polynomial helpers on raw coefficient vectors (constant term first).
using Poly = std::vector<Int>;

size_t pdeg(const Poly& p) { return p.size() - 1; }

void ptrim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pprimitive(Poly p) {
    Int g(0);
    for (const auto& x : p) g = gcd(g, x);
    if (g > 1)
        for (auto& x : p) x /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& x : p) x = -x;
    return p;
}

// Pseudo-remainder of a by b (b nonzero), up to integer content.
Poly pprem(Poly a, const Poly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        Int lead = a.back();
        size_t shift = a.size() - b.size();
        for (auto& x : a) x *= b.back();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        ptrim(a);
    }
    return a;
}

}  // namespace

LaurentZ poly_gcd(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero()) return b.is_zero() ? LaurentZ() : LaurentZ::from_coeffs(0, pprimitive(b.coeffs()));
    if (b.is_zero()) return LaurentZ::from_coeffs(0, pprimitive(a.coeffs()));
    Poly f = pprimitive(a.coeffs()), g = pprimitive(b.coeffs());
    if (pdeg(f) < pdeg(g)) std::swap(f, g);
    while (!g.empty()) {
        Poly r = pprimitive(pprem(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    return LaurentZ::from_coeffs(0, std::move(f));
}

LaurentZ poly_divexact(const LaurentZ& a, const LaurentZ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return LaurentZ();
    Poly r = a.coeffs();
    const Poly& d = b.coeffs();
    if (r.size() < d.size()) throw std::domain_error("inexact polynomial division");
    Poly quo(r.size() - d.size() + 1);
    for (size_t k = quo.size(); k-- > 0;) {
        Int top = r[k + d.size() - 1];
        if (top == 0) continue;
        Int c, rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        if (rem != 0) throw std::domain_error("inexact polynomial division");
        quo[k] = c;
        for (size_t i = 0; i < d.size(); ++i) r[k + i] -= c * d[i];
    }
    for (const auto& x : r)
        if (x != 0) throw std::domain_error("inexact polynomial division");
    return LaurentZ::from_coeffs(a.lo() - b.lo(), std::move(quo));
}

QScalar::QScalar(const Int& v) : num_(LaurentZ::monomial(v, 0)), den_(LaurentZ::one()) {}

QScalar::QScalar(const Rat& v)
    : num_(LaurentZ::monomial(v.get_num(), 0)), den_(LaurentZ::monomial(v.get_den(), 0)) {
    normalize();
}

QScalar::QScalar(LaurentZ num, LaurentZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(q)");
    normalize();
}

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentZ::one();
        return;
    }
    // move all q-power factors into the numerator
    num_ = num_.shifted(-den_.lo());
    den_ = den_.shifted(-den_.lo());
    LaurentZ g = poly_gcd(num_, den_);
    if (g.coeffs().size() > 1) {
        long keep = num_.lo();
        num_ = poly_divexact(LaurentZ::from_coeffs(0, num_.coeffs()), g).shifted(keep);
        den_ = poly_divexact(den_, g);
    }
    Int cg = gcd(num_.content(), den_.content());
    if (cg > 1) {
        num_ = num_.divided_by_int(cg);
        den_ = den_.divided_by_int(cg);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QScalar(a.num_ + b.num_, a.den_);
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
    if (a.is_zero() || b.is_zero()) return QScalar();
    return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

QScalar QScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(q)");
    return QScalar(den_, num_);
}

QScalar QScalar::pow(long e) const {
    if (e == 0) return QScalar(1);
    QScalar b = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    QScalar acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

QScalar QScalar::invert_q() const { return QScalar(num_.reversed(), den_.reversed()); }

QScalar QScalar::negate_q() const { return QScalar(num_.q_negated(), den_.q_negated()); }

Rat QScalar::eval(const Rat& q_val) const {
    Rat d = den_.eval(q_val);
    if (d == 0) throw std::domain_error("denominator vanishes at q = " + to_string(q_val));
    return num_.eval(q_val) / d;
}

bool QScalar::operator<(const QScalar& o) const {
    auto key = [](const LaurentZ& p) { return std::make_pair(p.lo(), p.coeffs()); };
    if (num_ != o.num_) {
        auto a = key(num_), b = key(o.num_);
        if (a.first != b.first) return a.first < b.first;
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        for (size_t i = 0; i < a.second.size(); ++i)
            if (a.second[i] != b.second[i]) return a.second[i] < b.second[i];
    }
    auto a = key(den_), b = key(o.den_);
    if (a.first != b.first) return a.first < b.first;
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    for (size_t i = 0; i < a.second.size(); ++i)
        if (a.second[i] != b.second[i]) return a.second[i] < b.second[i];
    return false;
}

std::string QScalar::str() const {
    if (is_zero()) return "0";
    if (den_ == LaurentZ::one()) return num_.str();
    std::string n = num_.str();
    if (num_.coeffs().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.coeffs().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace qsl
