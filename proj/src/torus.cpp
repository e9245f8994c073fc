#include "qsl/torus.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsl {

bool KMonomial::trivial() const {
    for (long e : exps_)
        if (e != 0) return false;
    return true;
}

KMonomial KMonomial::operator*(const KMonomial& o) const {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("rank mismatch");
    std::vector<long> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
    return KMonomial(std::move(e));
}

KMonomial KMonomial::inverse() const {
    std::vector<long> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
    return KMonomial(std::move(e));
}

LatticeVector KMonomial::weight() const { return LatticeVector::from_alpha_int(rank(), exps_); }

KMonomial KMonomial::from_weight(const LatticeVector& v) {
    auto a = v.alpha_coords_int();
    std::vector<long> e(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i].fits_slong_p()) throw std::overflow_error("monomial exponent too large");
        e[i] = a[i].get_si();
    }
    return KMonomial(std::move(e));
}

std::string KMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        os << "K" << (i + 1);
        if (exps_[i] != 1) os << "^" << exps_[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

TorusElement::TorusElement(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
}

TorusElement TorusElement::one(int rank) {
    TorusElement t(rank);
    t.terms_.emplace(KMonomial(std::vector<long>(rank, 0)), QScalar(1));
    return t;
}

TorusElement TorusElement::k(int rank, int i, long power) {
    if (i < 1 || i > rank) throw std::out_of_range("generator index out of range");
    TorusElement t(rank);
    std::vector<long> e(rank, 0);
    e[i - 1] = power;
    if (power != 0)
        t.terms_.emplace(KMonomial(std::move(e)), QScalar(1));
    else
        t.terms_.emplace(KMonomial(std::vector<long>(rank, 0)), QScalar(1));
    return t;
}

TorusElement TorusElement::monomial(KMonomial m, QScalar c) {
    TorusElement t(m.rank());
    if (!c.is_zero()) t.terms_.emplace(std::move(m), std::move(c));
    return t;
}

QScalar TorusElement::coefficient(const KMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar(0) : it->second;
}

void TorusElement::add_term(const KMonomial& m, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
    TorusElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator-() const {
    TorusElement r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
    TorusElement r(rank_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

TorusElement TorusElement::operator*(const QScalar& c) const {
    TorusElement r(rank_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

bool TorusElement::is_even() const {
    // (lambda, alpha_j) for lambda = sum c_i alpha_i is the j-th entry of the
    // Cartan matrix applied to c; lambda lies in 2*(weight lattice) iff all
    // entries are even.
    for (const auto& [m, c] : terms_) {
        const auto& e = m.exps();
        for (int j = 0; j < rank_; ++j) {
            long pair = 2 * e[j];
            if (j > 0) pair -= e[j - 1];
            if (j + 1 < rank_) pair -= e[j + 1];
            if (pair % 2 != 0) return false;
        }
    }
    return true;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        std::string cs = c.str();
        if (m.trivial()) {
            os << cs;
        } else if (cs == "1") {
            os << m.str();
        } else {
            os << "(" << cs << ")*" << m.str();
        }
        first = false;
    }
    return os.str();
}

Specialization::Specialization(Rat v) : q_val(std::move(v)) {
    if (q_val == 0 || q_val == 1 || q_val == -1)
        throw std::invalid_argument("q must avoid the rational roots of unity {0, 1, -1}");
}

TorusElement weyl_act_torus(const WeylElement& w, const TorusElement& t) {
    TorusElement r(t.rank());
    for (const auto& [m, c] : t.terms())
        r.terms_.emplace(KMonomial::from_weight(weyl_act(w, m.weight())), c);
    return r;
}

TorusElement gamma_twist(const LatticeVector& nu, const TorusElement& t) {
    if (nu.rank() != t.rank()) throw std::invalid_argument("rank mismatch");
    TorusElement r(t.rank());
    for (const auto& [m, c] : t.terms()) {
        Rat pairing = inner_product(nu, m.weight());
        if (pairing.get_den() != 1)
            throw std::domain_error("twist pairing is not an integer: " + to_string(pairing));
        if (!pairing.get_num().fits_slong_p()) throw std::overflow_error("twist exponent too large");
        r.terms_.emplace(m, c * QScalar::q_power(pairing.get_num().get_si()));
    }
    return r;
}

QScalar evaluate_at_weight(const TorusElement& t, const std::vector<long>& m) {
    if (static_cast<int>(m.size()) != t.rank()) throw std::invalid_argument("rank mismatch");
    QScalar s(0);
    for (const auto& [mono, c] : t.terms()) {
        long e = 0;
        for (int i = 0; i < t.rank(); ++i) e += mono.exps()[i] * m[i];
        s = s + c * QScalar::q_power(e);
    }
    return s;
}

Rat specialize(const QScalar& s, const Specialization& spec) { return s.eval(spec.q_val); }

TorusElement substitute_inverse_shifted(const TorusElement& t) {
    TorusElement r(t.rank());
    for (const auto& [m, c] : t.terms()) {
        long total = std::accumulate(m.exps().begin(), m.exps().end(), 0L);
        r.add_term(m.inverse(), c * QScalar::q_power(-2 * total));
    }
    return r;
}

TorusElement collapse_diagonal(const TorusElement& t) {
    TorusElement r(1);
    for (const auto& [m, c] : t.terms()) {
        long total = std::accumulate(m.exps().begin(), m.exps().end(), 0L);
        r.add_term(KMonomial({total}), c);
    }
    return r;
}

TorusElement reverse_indices(const TorusElement& t) {
    TorusElement r(t.rank());
    for (const auto& [m, c] : t.terms()) {
        std::vector<long> e(m.exps().rbegin(), m.exps().rend());
        r.terms_.emplace(KMonomial(std::move(e)), c);
    }
    return r;
}

}  // namespace qsl
