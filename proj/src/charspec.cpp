#include "qsl/charspec.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsl/xlaurent.hpp"

namespace qsl {

DominantWeight::DominantWeight(std::vector<long> mm) : m(std::move(mm)) {
    if (m.empty()) throw std::invalid_argument("weight needs at least one coordinate");
    for (long v : m)
        if (v < 0) throw std::invalid_argument("dominant weight coordinates must be nonnegative");
}

QScalar central_character(const InvariantElement& inv, const DominantWeight& lambda) {
    if (lambda.rank() != inv.n) throw std::invalid_argument("rank mismatch");
    return evaluate_at_weight(inv.body, lambda.m);
}

namespace {

std::vector<std::vector<long>> weights_in_box(int n, long B) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(n, 0);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == B) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace

CharacterTable character_table(int n, const std::vector<int>& m_indices, long B) {
    if (B < 0) throw std::invalid_argument("weight bound must be nonnegative");
    CharacterTable t;
    t.m_indices = m_indices;
    std::vector<InvariantElement> invs;
    for (int m : m_indices) invs.push_back(to_sigma(n, m));
    for (auto& w : weights_in_box(n, B)) {
        DominantWeight lam(w);
        std::vector<QScalar> row;
        for (const auto& inv : invs) row.push_back(central_character(inv, lam));
        t.weights.push_back(std::move(lam));
        t.values.push_back(std::move(row));
    }
    return t;
}

DistinguishResult distinguish(int n, const Rat& q_val, const Rat& p_val, long B,
                              const std::vector<int>& m_indices) {
    if (n % 2 != 0) throw std::invalid_argument("distinguishing requires even rank");
    if (B < 0) throw std::invalid_argument("weight bound must be nonnegative");
    if (m_indices.empty()) throw std::invalid_argument("need at least one invariant index");
    Specialization sq(q_val), sp(p_val);

    std::vector<InvariantElement> invs;
    for (int m : m_indices) invs.push_back(to_sigma(n, m));

    // An algebra isomorphism can relabel the simple modules by the diagram
    // flip (m_1,...,m_n) -> (m_n,...,m_1) — the only dominance-preserving
    // ambiguity left by the torus identification — so a weight is compared
    // jointly with its flip: the unordered value pairs must match.  For
    // flip-symmetric weights (in particular lambda = 0) this is plain
    // equality of the specialized characters.
    // grow by shells: all weights with max coordinate exactly s, lexicographic
    for (long s = 0; s <= B; ++s) {
        for (auto& w : weights_in_box(n, s)) {
            if (s > 0 && *std::max_element(w.begin(), w.end()) != s) continue;
            DominantWeight lam(w);
            DominantWeight rev(std::vector<long>(w.rbegin(), w.rend()));
            for (size_t k = 0; k < invs.size(); ++k) {
                QScalar chi = central_character(invs[k], lam);
                QScalar chi_rev = central_character(invs[k], rev);
                Rat aq = specialize(chi, sq), ap = specialize(chi, sp);
                Rat bq = specialize(chi_rev, sq), bp = specialize(chi_rev, sp);
                if (std::minmax(aq, bq) == std::minmax(ap, bp)) continue;
                if (aq != ap) {
                    SeparationWitness wit{lam, m_indices[k], q_val, p_val, aq, ap};
                    return {std::move(wit), B};
                }
                SeparationWitness wit{rev, m_indices[k], q_val, p_val, bq, bp};
                return {std::move(wit), B};
            }
        }
    }
    return {std::nullopt, B};
}

std::vector<Rat> forcing_solutions(const Rat& q_val) {
    if (q_val == 0 || q_val == 1 || q_val == -1)
        throw std::invalid_argument("q must avoid {0, 1, -1}");
    // p^2 + p^{-2} = c with c = q^2 + q^{-2}: the quadratic t^2 - c t + 1 = 0
    // in t = p^2 has discriminant c^2 - 4 = (q^2 - q^{-2})^2.
    Rat c = q_val * q_val + Rat(1) / (q_val * q_val);
    Rat disc = c * c - 4;
    auto sqrt_disc = exact_sqrt(disc);
    if (!sqrt_disc) throw std::logic_error("discriminant (q^2-q^{-2})^2 must be a square");
    std::vector<Rat> out;
    for (int sign : {+1, -1}) {
        Rat t = (c + Rat(sign) * *sqrt_disc) / 2;
        auto r = exact_sqrt(t);
        if (!r) continue;  // t is q^2 or q^{-2}, both rational squares
        if (*r != 0) {
            out.push_back(*r);
            out.push_back(-*r);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_forced(const Rat& p_val, const Rat& q_val) {
    if (p_val == 0 || p_val == 1 || p_val == -1 || q_val == 0 || q_val == 1 || q_val == -1)
        throw std::invalid_argument("parameters must avoid {0, 1, -1}");
    Rat lhs = p_val * p_val + Rat(1) / (p_val * p_val);
    Rat rhs = q_val * q_val + Rat(1) / (q_val * q_val);
    return lhs == rhs;
}

bool forcing_identity_holds() {
    // two commuting variables: index 1 = p, index 2 = q
    auto P = XLaurent::x(2, 1), Q = XLaurent::x(2, 2);
    auto one = XLaurent::one(2);
    // (p^2 + p^{-2} - q^2 - q^{-2}) cleared by p^2 q^2
    auto lhs = (P.pow(2) + XLaurent::x(2, 1, -2) - Q.pow(2) - XLaurent::x(2, 2, -2)) *
               P.pow(2) * Q.pow(2);
    auto rhs = (P - Q) * (P + Q) * (P * Q - one) * (P * Q + one);
    return lhs == rhs;
}

}  // namespace qsl
