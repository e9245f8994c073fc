#ifndef QSL_TORUS_HPP
#define QSL_TORUS_HPP

#include <map>
#include <string>
#include <vector>

#include "qsl/qscalar.hpp"
#include "qsl/rootdata.hpp"

namespace qsl {

// Monomial K_1^{c_1}...K_n^{c_n}; identified with the root-lattice weight
// sum c_i * alpha_i.
class KMonomial {
public:
    KMonomial() = default;
    explicit KMonomial(std::vector<long> exps) : exps_(std::move(exps)) {}

    int rank() const { return static_cast<int>(exps_.size()); }
    const std::vector<long>& exps() const { return exps_; }
    bool trivial() const;

    KMonomial operator*(const KMonomial& o) const;
    KMonomial inverse() const;
    LatticeVector weight() const;
    static KMonomial from_weight(const LatticeVector& v);

    bool operator==(const KMonomial&) const = default;
    auto operator<=>(const KMonomial&) const = default;

    std::string str() const;

private:
    std::vector<long> exps_;
};

// Element of the Laurent polynomial algebra in K_1,...,K_n with QScalar
// coefficients.  Sparse, sorted, no zero terms stored.
class TorusElement {
public:
    explicit TorusElement(int rank);

    static TorusElement zero(int rank) { return TorusElement(rank); }
    static TorusElement one(int rank);
    static TorusElement k(int rank, int i, long power = 1);  // K_i^power, 1-based i
    static TorusElement monomial(KMonomial m, QScalar c);

    int rank() const { return rank_; }
    const std::map<KMonomial, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QScalar coefficient(const KMonomial& m) const;

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator-() const;
    TorusElement operator*(const TorusElement& o) const;
    TorusElement operator*(const QScalar& c) const;

    bool operator==(const TorusElement&) const = default;

    // True iff every monomial's weight lies in Z-span(Phi) ∩ 2*(weight lattice),
    // i.e. all Cartan pairings are even.
    bool is_even() const;

    std::string str() const;

private:
    int rank_ = 0;
    std::map<KMonomial, QScalar> terms_;

    void add_term(const KMonomial& m, const QScalar& c);
    friend TorusElement weyl_act_torus(const WeylElement&, const TorusElement&);
    friend TorusElement reverse_indices(const TorusElement&);
    friend TorusElement gamma_twist(const LatticeVector&, const TorusElement&);
    friend TorusElement substitute_inverse_shifted(const TorusElement&);
    friend TorusElement collapse_diagonal(const TorusElement&);
};

// Exact rational value for q; rejects the rational roots of unity.
struct Specialization {
    Rat q_val;
    explicit Specialization(Rat v);
};

// K_{w(lambda)} on each monomial; an algebra automorphism.
TorusElement weyl_act_torus(const WeylElement& w, const TorusElement& t);

// K_mu -> q^{(nu,mu)} K_mu; requires every pairing to be an integer.
TorusElement gamma_twist(const LatticeVector& nu, const TorusElement& t);

// Ring homomorphism K_i -> q^{m_i}.
QScalar evaluate_at_weight(const TorusElement& t, const std::vector<long>& m);

// Exact value of s at q = spec.q_val.
Rat specialize(const QScalar& s, const Specialization& spec);

// Algebra automorphism K_i -> q^{-2} K_i^{-1} (so qK_i -> (qK_i)^{-1}); involutive.
TorusElement substitute_inverse_shifted(const TorusElement& t);

// Substitutes K_i -> K for all i; returns a rank-1 element.
TorusElement collapse_diagonal(const TorusElement& t);

// The diagram flip K_i -> K_{n+1-i}; an involutive algebra automorphism.
TorusElement reverse_indices(const TorusElement& t);

}  // namespace qsl

#endif
