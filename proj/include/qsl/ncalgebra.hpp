#ifndef QSL_NCALGEBRA_HPP
#define QSL_NCALGEBRA_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsl/qscalar.hpp"
#include "qsl/torus.hpp"

namespace qsl {

// Rank-1 noncommutative engine: words in E, F, K, K^{-1} subject to
//   EF - FE = (K - K^{-1})/(q - q^{-1}),  KE = q^2 EK,  KF = q^{-2} FK,
// rewritten into the normal form F^a K^b E^c (a, c >= 0, b in Z).

enum class Gen : unsigned char { E, F, K, Kinv };

using NCWord = std::vector<Gen>;

// #E - #F: the grading degree in units of the simple root.
long word_degree(const NCWord& w);

// Well-founded measure that every rewrite strictly decreases: the number of
// pairs i < j with (w_i, w_j) of shape (E, F), (E, K-type), (K-type, F), or
// mixed (K, K^{-1}) in either order.  Bounds the length of any rewrite chain.
long rewrite_bound(const NCWord& w);

class NCElement {
  public:
    NCElement() = default;
    static NCElement scalar(const QScalar& c);
    static NCElement generator(Gen g);
    static NCElement word(NCWord w, const QScalar& c = QScalar(1));

    const std::map<NCWord, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<long> degree_set() const;

    NCElement operator+(const NCElement& o) const;
    NCElement operator-(const NCElement& o) const;
    NCElement operator*(const NCElement& o) const;  // free concatenation, no rewriting
    NCElement operator*(const QScalar& c) const;
    NCElement operator-() const;
    bool operator==(const NCElement&) const = default;

    std::string str() const;

  private:
    std::map<NCWord, QScalar> terms_;  // zero coefficients never stored

    void add_term(NCWord w, const QScalar& c);
    friend NCElement normalize(const NCElement&, int, long*);
};

// strategy 0: rewrite at the leftmost applicable position; 1: rightmost.
// Both reach the same normal form; exercising both is the confluence check.
// If chain_out is given it receives the longest single-word rewrite chain.
NCElement normalize(const NCElement& e, int strategy = 0, long* chain_out = nullptr);

NCElement multiply(const NCElement& a, const NCElement& b);  // concatenate, then normalize
NCElement commutator(const NCElement& a, const NCElement& b);  // ab - ba, normalized

// Projection of a degree-0 element onto its pure K-part (the words with
// a = c = 0 in normal form), as a rank-1 torus element.  An algebra
// homomorphism on the degree-0 component.  Throws if some term has
// nonzero degree.
TorusElement pi_projection(const NCElement& e);

// C = FE + (qK + q^{-1}K^{-1})/(q - q^{-1})^2, central.
NCElement casimir();

// True iff the element normalizes to a single term c K^b with c != 0.
bool is_unit(const NCElement& e);

// True iff e commutes with E, F, K and K^{-1}.
bool is_central(const NCElement& e);

// Parses terms like "2*F^2*K^-1*E + (1/(q-q^-1))*K".  Precedence: ^ before
// unary - before * and / before + and -.  Exponents are integer literals;
// a negative exponent or a division requires the base (divisor) to be a
// unit.  Throws std::invalid_argument on malformed input.
NCElement parse_nc(const std::string& text);

// Square matrices over QScalar, used as the relation oracle at general rank.
class RepMatrix {
  public:
    explicit RepMatrix(int size) : size_(size), a_(size_t(size) * size) {}
    static RepMatrix identity(int size);
    static RepMatrix unit(int size, int r, int c);  // matrix unit e_{rc}, 0-based

    int size() const { return size_; }
    QScalar& at(int r, int c) { return a_[size_t(r) * size_ + c]; }
    const QScalar& at(int r, int c) const { return a_[size_t(r) * size_ + c]; }

    RepMatrix operator+(const RepMatrix& o) const;
    RepMatrix operator-(const RepMatrix& o) const;
    RepMatrix operator*(const RepMatrix& o) const;
    RepMatrix operator*(const QScalar& c) const;
    bool operator==(const RepMatrix&) const = default;
    bool is_diagonal() const;

  private:
    int size_;
    std::vector<QScalar> a_;  // row-major
};

// Natural (vector) representation on n+1 coordinates: E_i, F_i are the
// matrix units at (i, i+1) and (i+1, i); K_i is diagonal with q at slot i,
// q^{-1} at slot i+1.  Generator index i is 1-based, stored at position i-1.
struct NaturalRep {
    int n = 0;
    std::vector<RepMatrix> E, F, K, Kinv;
};

NaturalRep natural_rep(int n);

// Verifies every defining relation family on the natural representation:
// torus commutativity and inverses, the K-conjugation weights, the EF
// commutator, distant commutation, and both Serre relations.
bool check_relations(int n);

}  // namespace qsl

#endif
