#include "qsl/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsl {

RootSystem::RootSystem(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    cartan_.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        cartan_[i][i] = 2;
        if (i + 1 < rank) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    }
}

LatticeVector LatticeVector::from_epsilon(std::vector<Rat> coords) {
    if (coords.size() < 2) throw std::invalid_argument("need at least 2 epsilon coordinates");
    Rat mean = std::accumulate(coords.begin(), coords.end(), Rat(0));
    mean /= Rat(static_cast<long>(coords.size()));
    for (auto& c : coords) c -= mean;
    LatticeVector v;
    v.coords_ = std::move(coords);
    return v;
}

LatticeVector LatticeVector::from_alpha(int rank, const std::vector<Rat>& alpha) {
    if (static_cast<int>(alpha.size()) != rank)
        throw std::invalid_argument("alpha coordinate count != rank");
    std::vector<Rat> eps(rank + 1, Rat(0));
    for (int i = 0; i < rank; ++i) {
        eps[i] += alpha[i];
        eps[i + 1] -= alpha[i];
    }
    LatticeVector v;
    v.coords_ = std::move(eps);  // already sum-zero
    return v;
}

LatticeVector LatticeVector::from_alpha_int(int rank, const std::vector<long>& alpha) {
    std::vector<Rat> a;
    a.reserve(alpha.size());
    for (long k : alpha) a.emplace_back(k);
    return from_alpha(rank, a);
}

bool LatticeVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

std::vector<Rat> LatticeVector::alpha_coords() const {
    std::vector<Rat> a(rank());
    Rat acc(0);
    for (int i = 0; i < rank(); ++i) {
        acc += coords_[i];
        a[i] = acc;
    }
    return a;
}

bool LatticeVector::in_root_lattice() const {
    auto a = alpha_coords();
    return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c.get_den() == 1; });
}

std::vector<Int> LatticeVector::alpha_coords_int() const {
    if (!in_root_lattice()) throw std::domain_error("vector not in the root lattice");
    auto a = alpha_coords();
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].get_num();
    return r;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    if (coords_.size() != o.coords_.size()) throw std::invalid_argument("rank mismatch");
    LatticeVector r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const { return *this + (-o); }

LatticeVector LatticeVector::operator-() const {
    LatticeVector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

LatticeVector LatticeVector::scaled(const Rat& c) const {
    LatticeVector r = *this;
    for (auto& x : r.coords_) x *= c;
    return r;
}

std::string LatticeVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].get_str();
    }
    os << ")";
    return os.str();
}

LatticeVector simple_root(const RootSystem& sys, int i) {
    if (i < 1 || i > sys.rank()) throw std::out_of_range("simple root index out of range");
    std::vector<Rat> eps(sys.rank() + 1, Rat(0));
    eps[i - 1] = 1;
    eps[i] = -1;
    return LatticeVector::from_epsilon(std::move(eps));
}

LatticeVector fundamental_weight(const RootSystem& sys, int i) {
    if (i < 1 || i > sys.rank()) throw std::out_of_range("fundamental weight index out of range");
    // e_1 + ... + e_i, projected to the sum-zero representative; this is the
    // unique solution of (w, alpha_j) = delta_ij in the sum-zero span.
    std::vector<Rat> eps(sys.rank() + 1, Rat(0));
    for (int j = 0; j < i; ++j) eps[j] = 1;
    return LatticeVector::from_epsilon(std::move(eps));
}

LatticeVector rho(const RootSystem& sys) {
    int n = sys.rank();
    std::vector<Rat> eps(n + 1);
    for (int i = 1; i <= n + 1; ++i) eps[i - 1] = Rat(n + 2 - 2 * i) / 2;
    return LatticeVector::from_epsilon(std::move(eps));
}

Rat inner_product(const LatticeVector& u, const LatticeVector& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
    Rat s(0);
    for (int i = 0; i <= u.rank(); ++i) s += u.coords()[i] * v.coords()[i];
    return s;
}

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
}

WeylElement WeylElement::identity(int npoints) {
    std::vector<int> p(npoints);
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_reflection(int npoints, int i) {
    if (i < 1 || i >= npoints) throw std::out_of_range("simple reflection index out of range");
    WeylElement w = identity(npoints);
    std::swap(w.perm_[i - 1], w.perm_[i]);
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (npoints() != o.npoints()) throw std::invalid_argument("rank mismatch");
    std::vector<int> p(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[o.perm_[i]];
    return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> p(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<int>(i);
    return WeylElement(std::move(p));
}

LatticeVector weyl_act(const WeylElement& w, const LatticeVector& v) {
    if (w.npoints() != v.rank() + 1) throw std::invalid_argument("rank mismatch");
    std::vector<Rat> eps(v.coords().size());
    for (size_t i = 0; i < eps.size(); ++i) eps[w.perm()[i]] = v.coords()[i];
    return LatticeVector::from_epsilon(std::move(eps));
}

namespace {

// Column-style Hermite normal form.  Columns of m are the generators; returns
// the lower-triangular basis columns with positive pivots, entries to the left
// of each pivot reduced into [0, pivot).  Throws if the column span has rank
// less than the row count.
std::vector<std::vector<Int>> hermite_columns(std::vector<std::vector<Int>> cols, int nrows) {
    int r = 0;
    int m = static_cast<int>(cols.size());
    for (int row = 0; row < nrows && r < m; ++row) {
        // gcd-reduce entries of this row across columns r..m-1 down to one
        while (true) {
            int best = -1;
            int nonzero = 0;
            for (int j = r; j < m; ++j) {
                if (cols[j][row] != 0) {
                    ++nonzero;
                    if (best < 0 || abs(cols[j][row]) < abs(cols[best][row])) best = j;
                }
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                std::swap(cols[r], cols[best]);
                break;
            }
            for (int j = r; j < m; ++j) {
                if (j == best || cols[j][row] == 0) continue;
                Int t = cols[j][row] / cols[best][row];  // truncated
                if (t != 0)
                    for (int k = 0; k < nrows; ++k) cols[j][k] -= t * cols[best][k];
            }
        }
        if (cols[r][row] == 0) continue;  // rank-deficient row
        if (cols[r][row] < 0)
            for (int k = 0; k < nrows; ++k) cols[r][k] = -cols[r][k];
        for (int j = 0; j < r; ++j) {
            Int t;
            mpz_fdiv_q(t.get_mpz_t(), cols[j][row].get_mpz_t(), cols[r][row].get_mpz_t());
            if (t != 0)
                for (int k = 0; k < nrows; ++k) cols[j][k] -= t * cols[r][k];
        }
        ++r;
    }
    if (r < nrows) throw std::invalid_argument("basis vectors are linearly dependent");
    cols.resize(nrows);
    return cols;
}

}  // namespace

LatticeBasis::LatticeBasis(int rank, std::vector<LatticeVector> vectors)
    : rank_(rank), vectors_(std::move(vectors)) {
    if (static_cast<int>(vectors_.size()) != rank_)
        throw std::invalid_argument("basis must have exactly rank vectors");
    std::vector<std::vector<Int>> cols;
    for (const auto& v : vectors_) {
        if (v.rank() != rank_) throw std::invalid_argument("rank mismatch in basis vector");
        cols.push_back(v.alpha_coords_int());
    }
    hnf_ = hermite_columns(std::move(cols), rank_);  // also validates independence
}

LatticeBasis LatticeBasis::hermite_form() const {
    std::vector<LatticeVector> vs;
    for (const auto& col : hnf_) {
        std::vector<long> a(col.size());
        for (size_t i = 0; i < col.size(); ++i) {
            if (!col[i].fits_slong_p()) throw std::overflow_error("basis entry too large");
            a[i] = col[i].get_si();
        }
        vs.push_back(LatticeVector::from_alpha_int(rank_, a));
    }
    return LatticeBasis(rank_, std::move(vs));
}

bool LatticeBasis::contains(const LatticeVector& v) const {
    if (v.rank() != rank_) throw std::invalid_argument("rank mismatch");
    if (!v.in_root_lattice()) return false;
    std::vector<Int> k = v.alpha_coords_int();
    // forward solve against the lower-triangular Hermite columns
    std::vector<Int> c(rank_);
    for (int row = 0; row < rank_; ++row) {
        Int acc = k[row];
        for (int j = 0; j < row; ++j) acc -= c[j] * hnf_[j][row];
        Int quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), hnf_[row][row].get_mpz_t());
        if (rem != 0) return false;
        c[row] = quo;
    }
    return true;
}

bool lattice_equal(const LatticeBasis& b1, const LatticeBasis& b2) {
    if (b1.rank() != b2.rank()) throw std::invalid_argument("rank mismatch");
    for (const auto& v : b2.vectors())
        if (!b1.contains(v)) return false;
    for (const auto& v : b1.vectors())
        if (!b2.contains(v)) return false;
    return true;
}

LatticeBasis intersect_2lambda(const RootSystem& sys) {
    int n = sys.rank();
    // Membership: alpha-coordinates k with A k = 0 (mod 2), since the Cartan
    // matrix converts root coordinates to weight coordinates.
    std::vector<std::vector<int>> a2(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a2[i][j] = ((sys.cartan()[i][j] % 2) + 2) % 2;

    // kernel of a2 over GF(2), canonical basis indexed by free columns
    std::vector<int> pivot_of_row;  // column index of each pivot row
    std::vector<bool> is_pivot(n, false);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (a2[i][col]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a2[sel], a2[row]);
        for (int i = 0; i < n; ++i)
            if (i != row && a2[i][col])
                for (int j = 0; j < n; ++j) a2[i][j] ^= a2[row][j];
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
        ++row;
    }

    std::vector<std::vector<Int>> gens;
    for (int j = 0; j < n; ++j) {  // 2 e_j
        std::vector<Int> g(n, Int(0));
        g[j] = 2;
        gens.push_back(std::move(g));
    }
    for (int col = 0; col < n; ++col) {  // lifted kernel vectors
        if (is_pivot[col]) continue;
        std::vector<Int> g(n, Int(0));
        g[col] = 1;
        for (size_t r = 0; r < pivot_of_row.size(); ++r)
            if (a2[r][col]) g[pivot_of_row[r]] = 1;
        gens.push_back(std::move(g));
    }

    std::vector<std::vector<Int>> cols = hermite_columns(std::move(gens), n);
    std::vector<LatticeVector> vs;
    for (const auto& col : cols) {
        std::vector<long> a(col.size());
        for (size_t i = 0; i < col.size(); ++i) a[i] = col[i].get_si();
        vs.push_back(LatticeVector::from_alpha_int(n, a));
    }
    return LatticeBasis(n, std::move(vs));
}

}  // namespace qsl
