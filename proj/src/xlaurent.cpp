#include "qsl/xlaurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsl {

XLaurent::XLaurent(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("need at least one variable");
}

XLaurent XLaurent::one(int nvars) {
    XLaurent f(nvars);
    f.terms_.emplace(std::vector<long>(nvars, 0), Int(1));
    return f;
}

XLaurent XLaurent::x(int nvars, int i, long power) {
    if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
    XLaurent f(nvars);
    std::vector<long> e(nvars, 0);
    e[i - 1] = power;
    f.terms_.emplace(std::move(e), Int(1));
    return f;
}

XLaurent XLaurent::monomial(int nvars, std::vector<long> exps, Int coef) {
    if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent arity mismatch");
    XLaurent f(nvars);
    if (coef != 0) f.terms_.emplace(std::move(exps), std::move(coef));
    return f;
}

Int XLaurent::coefficient(const std::vector<long>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

void XLaurent::add_term(const std::vector<long>& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

XLaurent XLaurent::operator+(const XLaurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    XLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XLaurent XLaurent::operator-(const XLaurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    XLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

XLaurent XLaurent::operator*(const XLaurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    XLaurent r(nvars_);
    std::vector<long> e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

XLaurent XLaurent::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    XLaurent acc = one(nvars_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

XLaurent XLaurent::divided_by_monomial(const std::vector<long>& exps) const {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    XLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<long> ne(nvars_);
        for (int i = 0; i < nvars_; ++i) ne[i] = e[i] - exps[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

XLaurent XLaurent::permuted(const WeylElement& w) const {
    if (static_cast<int>(w.perm().size()) != nvars_)
        throw std::invalid_argument("permutation size mismatch");
    XLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<long> ne(nvars_);
        for (int i = 0; i < nvars_; ++i) ne[w.perm()[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

bool XLaurent::degree_zero() const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0L) != 0) return false;
    return true;
}

bool XLaurent::symmetric() const {
    for (int i = 1; i < nvars_; ++i)
        if (permuted(WeylElement::simple_reflection(nvars_, i)) != *this) return false;
    return true;
}

QScalar XLaurent::eval_q_powers(const std::vector<long>& r) const {
    if (static_cast<int>(r.size()) != nvars_) throw std::invalid_argument("value arity mismatch");
    QScalar s(0);
    for (const auto& [e, c] : terms_) {
        long deg = 0;
        for (int i = 0; i < nvars_; ++i) deg += e[i] * r[i];
        s = s + QScalar(c) * QScalar::q_power(deg);
    }
    return s;
}

std::string XLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        bool has_var = false;
        std::ostringstream mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (has_var) mono << "*";
            mono << "x" << (i + 1);
            if (e[i] != 1) mono << "^" << e[i];
            has_var = true;
        }
        if (!has_var) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << mono.str();
        }
        first = false;
    }
    return os.str();
}

XLaurent elementary_symmetric(int n, int i) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    int nv = n + 1;
    if (i < 0 || i > nv) throw std::out_of_range("elementary symmetric index out of range");
    // dynamic programming over prefixes: e_i(x_1..x_k) = e_i(..x_{k-1}) + x_k e_{i-1}(..x_{k-1})
    std::vector<XLaurent> e(i + 1, XLaurent::zero(nv));
    e[0] = XLaurent::one(nv);
    for (int k = 1; k <= nv; ++k)
        for (int j = std::min<int>(i, k); j >= 1; --j)
            e[j] = e[j] + XLaurent::x(nv, k) * e[j - 1];
    return e[i];
}

}  // namespace qsl
