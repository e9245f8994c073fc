#ifndef QSL_XLAURENT_HPP
#define QSL_XLAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "qsl/qscalar.hpp"
#include "qsl/rootdata.hpp"

namespace qsl {

// Integer Laurent polynomial in commuting variables x_1,...,x_nvars.
class XLaurent {
public:
    explicit XLaurent(int nvars);

    static XLaurent zero(int nvars) { return XLaurent(nvars); }
    static XLaurent one(int nvars);
    static XLaurent x(int nvars, int i, long power = 1);  // 1-based i
    static XLaurent monomial(int nvars, std::vector<long> exps, Int coef);

    int nvars() const { return nvars_; }
    const std::map<std::vector<long>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Int coefficient(const std::vector<long>& exps) const;

    XLaurent operator+(const XLaurent& o) const;
    XLaurent operator-(const XLaurent& o) const;
    XLaurent operator*(const XLaurent& o) const;
    XLaurent pow(long e) const;  // e >= 0

    // Exact division by a single monomial (an exponent shift).
    XLaurent divided_by_monomial(const std::vector<long>& exps) const;

    // Variable permutation x_i -> x_{w(i)}.
    XLaurent permuted(const WeylElement& w) const;

    bool degree_zero() const;  // every monomial's exponents sum to 0
    bool symmetric() const;    // fixed by all adjacent transpositions

    // Substitute x_i = q^{r_i}.
    QScalar eval_q_powers(const std::vector<long>& r) const;

    bool operator==(const XLaurent&) const = default;
    std::string str() const;

private:
    int nvars_ = 0;
    std::map<std::vector<long>, Int> terms_;
    void add_term(const std::vector<long>& e, const Int& c);
};

// The i-th elementary symmetric polynomial in n+1 variables (s_0 = 1).
XLaurent elementary_symmetric(int n, int i);

}  // namespace qsl

#endif
