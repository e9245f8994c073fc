#ifndef QSL_CHARSPEC_HPP
#define QSL_CHARSPEC_HPP

#include <optional>
#include <vector>

#include "qsl/invariants.hpp"
#include "qsl/torus.hpp"

namespace qsl {

// lambda = sum m_i lambda_i with nonnegative integer coordinates.
struct DominantWeight {
    std::vector<long> m;

    explicit DominantWeight(std::vector<long> mm);
    int rank() const { return static_cast<int>(m.size()); }
    bool operator==(const DominantWeight&) const = default;
};

// Scalar by which sigma_m acts on the simple module of highest weight lambda:
// the evaluation K_i -> q^{m_i}.
QScalar central_character(const InvariantElement& inv, const DominantWeight& lambda);

struct CharacterTable {
    std::vector<int> m_indices;
    std::vector<DominantWeight> weights;       // lexicographic
    std::vector<std::vector<QScalar>> values;  // values[w][k] for weights[w], m_indices[k]
};

// All weights with coordinates in [0, B], lexicographic row order.
CharacterTable character_table(int n, const std::vector<int>& m_indices, long B);

struct SeparationWitness {
    DominantWeight weight;
    int m_index = 0;
    Rat q_value, p_value;
    Rat lhs, rhs;  // specialized central characters; lhs != rhs
};

struct DistinguishResult {
    std::optional<SeparationWitness> witness;  // empty: indistinguishable up to B
    long max_coord = 0;
};

// Scans dominant weights with coordinates at most B (by growing max-coordinate
// shell, then lexicographically, then by index order) for a weight whose
// central-character values specialized at q_val and p_val genuinely separate
// the two parameters.  An isomorphism may relabel weights by the diagram flip
// (m_1,...,m_n) -> (m_n,...,m_1), so each weight is compared jointly with its
// flip: a witness is reported only when the unordered pair of values at q_val
// differs from the pair at p_val, and the reported weight is one whose own
// values differ.  If p_val is one of q_val, -q_val, 1/q_val, -1/q_val the
// spectra agree identically and the scan reports indistinguishable.
DistinguishResult distinguish(int n, const Rat& q_val, const Rat& p_val, long B,
                              const std::vector<int>& m_indices);

// The rational solutions p of p^2 + p^{-2} = q^2 + q^{-2}: exactly
// {q, -q, 1/q, -1/q}, found by solving the quadratic in p^2 exactly.
std::vector<Rat> forcing_solutions(const Rat& q_val);

// Membership test, decided by the exact equation itself.
bool is_forced(const Rat& p_val, const Rat& q_val);

// The two-variable identity (p^2 + p^{-2} - q^2 - q^{-2}) * p^2 q^2
// = (p-q)(p+q)(pq-1)(pq+1), verified by exact polynomial arithmetic.
bool forcing_identity_holds();

}  // namespace qsl

#endif
