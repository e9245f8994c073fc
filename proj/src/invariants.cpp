#include "qsl/invariants.hpp"

#include <random>
#include <stdexcept>

namespace qsl {

XLaurent fundamental_invariant_x(int n, int m) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (m < 1 || m > n + 1) throw std::out_of_range("invariant index out of range");
    XLaurent f = elementary_symmetric(n, 1).pow(m) * elementary_symmetric(n, n - m + 1);
    return f.divided_by_monomial(std::vector<long>(n + 1, 1));
}

TorusElement x_to_torus(const XLaurent& f) {
    if (!f.degree_zero())
        throw std::invalid_argument("conversion requires a degree-zero Laurent polynomial");
    int n = f.nvars() - 1;
    if (n < 1) throw std::invalid_argument("need at least two variables");
    TorusElement t(n);
    for (const auto& [a, c] : f.terms()) {
        // x^a = prod_j y_j^{b_j} with b_j the partial sums; y_j = (q K_j)^2.
        std::vector<long> kexp(n);
        long run = 0, qexp = 0;
        for (int j = 0; j < n; ++j) {
            run += a[j];
            kexp[j] = 2 * run;
            qexp += 2 * run;
        }
        t = t + TorusElement::monomial(KMonomial(std::move(kexp)),
                                       QScalar(c) * QScalar::q_power(qexp));
    }
    return t;
}

InvariantElement to_sigma(int n, int m) {
    return InvariantElement{n, m, x_to_torus(fundamental_invariant_x(n, m))};
}

bool check_w_invariance(const InvariantElement& inv) {
    RootSystem sys(inv.n);
    TorusElement untwisted = gamma_twist(rho(sys).scaled(Rat(-1)), inv.body);
    for (int i = 1; i <= inv.n; ++i) {
        auto s = WeylElement::simple_reflection(inv.n + 1, i);
        if (weyl_act_torus(s, untwisted) != untwisted) return false;
    }
    return true;
}

bool check_self_reciprocity(const InvariantElement& inv) {
    // The symmetry couples the shifted inversion qK_i -> (qK_i)^{-1} with the
    // diagram flip i -> n+1-i: in the x-variables the composite is the plain
    // reversal permutation, which fixes every symmetric function.  Inversion
    // alone does not fix sigma_m for m > 1; on the diagonal K_1 = ... = K_n
    // the flip disappears, leaving the one-variable symmetry u -> u^{-1}.
    return reverse_indices(substitute_inverse_shifted(inv.body)) == inv.body;
}

TorusElement d_dk(const TorusElement& t, int j) {
    if (j < 1 || j > t.rank()) throw std::out_of_range("derivative index out of range");
    TorusElement r(t.rank());
    for (const auto& [m, c] : t.terms()) {
        long e = m.exps()[j - 1];
        if (e == 0) continue;
        std::vector<long> ne = m.exps();
        ne[j - 1] = e - 1;
        r = r + TorusElement::monomial(KMonomial(std::move(ne)), c * QScalar(e));
    }
    return r;
}

Rat eval_torus_rational(const TorusElement& t, const Rat& q_val, const std::vector<Rat>& ks) {
    if (static_cast<int>(ks.size()) != t.rank()) throw std::invalid_argument("rank mismatch");
    for (const auto& k : ks)
        if (k == 0) throw std::invalid_argument("K value must be nonzero");
    Rat s(0);
    for (const auto& [m, c] : t.terms()) {
        Rat term = c.eval(q_val);
        for (int i = 0; i < t.rank(); ++i) term *= rat_pow(ks[i], m.exps()[i]);
        s += term;
    }
    return s;
}

namespace {

Rat det_rational(std::vector<std::vector<Rat>> a) {
    int n = static_cast<int>(a.size());
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

Rat jacobian_det_at(const std::vector<TorusElement>& fs, const Rat& q_val,
                    const std::vector<Rat>& k_vals) {
    int n = static_cast<int>(fs.size());
    if (static_cast<int>(k_vals.size()) != n)
        throw std::invalid_argument("need as many K values as functions");
    std::vector<std::vector<Rat>> jac(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        if (fs[i].rank() != n) throw std::invalid_argument("rank mismatch");
        for (int j = 0; j < n; ++j)
            jac[i][j] = eval_torus_rational(d_dk(fs[i], j + 1), q_val, k_vals);
    }
    return det_rational(std::move(jac));
}

IndependenceReport check_algebraic_independence(int n, unsigned long seed, int max_attempts) {
    if (n < 2) throw std::invalid_argument("need rank at least 2");
    std::vector<TorusElement> fs;
    for (int m = 1; m < n; ++m) fs.push_back(to_sigma(n, m).body);
    fs.push_back(to_sigma(n, n + 1).body);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(2, 19), den(1, 7);
    auto draw = [&](bool avoid_unity) {
        Rat v(num(rng), den(rng));
        v.canonicalize();
        if (rng() & 1) v = -v;
        while (avoid_unity && (v == 1 || v == -1)) v += 1;
        return v;
    };

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Rat q_val = draw(true);
        std::vector<Rat> ks(n);
        for (auto& k : ks) k = draw(false);
        if (jacobian_det_at(fs, q_val, ks) != 0)
            return {Independence::independent, attempt};
    }
    return {Independence::inconclusive, max_attempts};
}

std::vector<QScalar> collapse_and_express(const InvariantElement& inv) {
    if (!check_self_reciprocity(inv))
        throw std::invalid_argument("element is not self-reciprocal");
    TorusElement c = collapse_diagonal(inv.body);

    // u-coefficients: K^j = q^{-j} u^j for u = qK.
    std::map<long, QScalar> ucoeff;
    long dmax = 0;
    for (const auto& [m, co] : c.terms()) {
        long j = m.exps()[0];
        ucoeff[j] = co * QScalar::q_power(-j);
        dmax = std::max(dmax, std::abs(j));
    }
    auto get = [&](long j) {
        auto it = ucoeff.find(j);
        return it == ucoeff.end() ? QScalar(0) : it->second;
    };
    for (const auto& [j, co] : ucoeff)
        if (get(-j) != co) throw std::logic_error("collapsed element lost self-reciprocity");

    // f = d_0 + sum_{d>=1} d_d * P_d(v) with P_d(v) = u^d + u^{-d};
    // P_0 = 2, P_1 = v, P_d = v P_{d-1} - P_{d-2}.
    std::vector<QScalar> out(dmax + 1, QScalar(0));
    std::vector<Int> pprev{2}, pcur{0, 1};  // P_0, P_1 as v-coefficient lists
    out[0] = get(0);
    for (long d = 1; d <= dmax; ++d) {
        // loop invariant: pcur holds the v-coefficients of P_d
        QScalar dd = get(d);
        if (!dd.is_zero())
            for (size_t i = 0; i < pcur.size(); ++i)
                if (pcur[i] != 0) out[i] += dd * QScalar(pcur[i]);
        // advance: P_{d+1} = v*P_d - P_{d-1}
        std::vector<Int> pnext(pcur.size() + 1, Int(0));
        for (size_t i = 0; i < pcur.size(); ++i) pnext[i + 1] = pcur[i];
        for (size_t i = 0; i < pprev.size(); ++i) pnext[i] -= pprev[i];
        pprev = std::move(pcur);
        pcur = std::move(pnext);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace qsl
