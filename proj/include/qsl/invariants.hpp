#ifndef QSL_INVARIANTS_HPP
#define QSL_INVARIANTS_HPP

#include <vector>

#include "qsl/torus.hpp"
#include "qsl/xlaurent.hpp"

namespace qsl {

// The twisted fundamental invariant sigma_m at rank n.
struct InvariantElement {
    int n = 0;
    int m = 0;
    TorusElement body = TorusElement(1);

    bool operator==(const InvariantElement&) const = default;
};

// s_1^m * s_{n-m+1} / s_{n+1}: symmetric, degree-zero.
XLaurent fundamental_invariant_x(int n, int m);

// Rewrites a degree-zero x-Laurent through y_j = x_j/x_{j+1} and substitutes
// y_j = (q K_j)^2.  Exponent conversion: b_j = a_1 + ... + a_j.
TorusElement x_to_torus(const XLaurent& f);

// sigma_m = the K-side form of fundamental_invariant_x(n, m).
InvariantElement to_sigma(int n, int m);

// True iff the untwisted body is fixed by every simple reflection.
bool check_w_invariance(const InvariantElement& inv);

// True iff the body is fixed by qK_i -> (qK_{n+1-i})^{-1}, the shifted
// inversion composed with the diagram flip.  On the diagonal this is the
// one-variable symmetry u -> u^{-1} for u = qK.
bool check_self_reciprocity(const InvariantElement& inv);

// Formal partial derivative with respect to K_j (1-based).
TorusElement d_dk(const TorusElement& t, int j);

// Exact value at q = q_val, K_i = ks[i-1] (all nonzero).
Rat eval_torus_rational(const TorusElement& t, const Rat& q_val, const std::vector<Rat>& ks);

// Jacobian determinant of fs with respect to K_1..K_n at a rational point.
Rat jacobian_det_at(const std::vector<TorusElement>& fs, const Rat& q_val,
                    const std::vector<Rat>& k_vals);

enum class Independence { independent, inconclusive };

struct IndependenceReport {
    Independence result = Independence::inconclusive;
    int attempts = 0;
};

// Certifies algebraic independence of {sigma_1,...,sigma_{n-1},sigma_{n+1}}
// by a nonzero Jacobian determinant at a random rational point.  A zero
// determinant is retried with a fresh point; exhausting the attempt budget
// yields `inconclusive` (which is weaker than "dependent").
IndependenceReport check_algebraic_independence(int n, unsigned long seed = 1,
                                                int max_attempts = 3);

// Collapse the body to one variable u = qK and rewrite the resulting
// self-reciprocal Laurent polynomial as a polynomial in v = u + u^{-1}.
// Returns coefficients in ascending v-degree.  Requires self-reciprocity.
std::vector<QScalar> collapse_and_express(const InvariantElement& inv);

}  // namespace qsl

#endif
