#ifndef QSL_ROOTDATA_HPP
#define QSL_ROOTDATA_HPP

#include <string>
#include <vector>

#include "qsl/rational.hpp"

namespace qsl {

// Type-A_n root system: rank n, tridiagonal Cartan matrix.
class RootSystem {
public:
    explicit RootSystem(int rank);
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

private:
    int rank_;
    std::vector<std::vector<int>> cartan_;
};

// Element of the rational span of e_1..e_{n+1}, stored as the unique sum-zero
// representative.  Simple roots, fundamental weights and the half-sum of
// positive roots all live here.
class LatticeVector {
public:
    LatticeVector() = default;
    // Projects to the sum-zero representative by subtracting the mean.
    static LatticeVector from_epsilon(std::vector<Rat> coords);
    static LatticeVector from_alpha(int rank, const std::vector<Rat>& alpha);
    static LatticeVector from_alpha_int(int rank, const std::vector<long>& alpha);

    int rank() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;

    // Coordinates in the simple-root basis (partial sums of epsilon coords);
    // rational in general, integral exactly on the root lattice.
    std::vector<Rat> alpha_coords() const;
    bool in_root_lattice() const;
    std::vector<Int> alpha_coords_int() const;  // throws unless in_root_lattice

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;
    LatticeVector scaled(const Rat& c) const;
    bool operator==(const LatticeVector&) const = default;

    std::string str() const;

private:
    std::vector<Rat> coords_;
};

LatticeVector simple_root(const RootSystem& sys, int i);         // 1-based
LatticeVector fundamental_weight(const RootSystem& sys, int i);  // 1-based
LatticeVector rho(const RootSystem& sys);
Rat inner_product(const LatticeVector& u, const LatticeVector& v);

// Permutation of {1..n+1} acting on the epsilon coordinates.
class WeylElement {
public:
    explicit WeylElement(std::vector<int> perm);  // perm[i] = image of i, 0-based
    static WeylElement identity(int npoints);
    static WeylElement simple_reflection(int npoints, int i);  // s_i, 1-based

    int npoints() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    WeylElement operator*(const WeylElement& o) const;  // (w1*w2)(x) = w1(w2(x))
    WeylElement inverse() const;
    bool operator==(const WeylElement&) const = default;

private:
    std::vector<int> perm_;
};

LatticeVector weyl_act(const WeylElement& w, const LatticeVector& v);

// A list of rationally independent vectors with integer alpha-coordinates,
// generating a finite-index sublattice of the root lattice.
class LatticeBasis {
public:
    LatticeBasis(int rank, std::vector<LatticeVector> vectors);
    int rank() const { return rank_; }
    const std::vector<LatticeVector>& vectors() const { return vectors_; }

    // Canonical form: columns lower-triangular with positive pivots, entries
    // left of each pivot reduced into [0, pivot).
    LatticeBasis hermite_form() const;
    bool contains(const LatticeVector& v) const;

private:
    int rank_;
    std::vector<LatticeVector> vectors_;
    std::vector<std::vector<Int>> hnf_;  // columns of the Hermite form
};

bool lattice_equal(const LatticeBasis& b1, const LatticeBasis& b2);

// Basis of the sublattice of the root lattice whose weight-basis coordinates
// are all even, computed from the mod-2 kernel of the Cartan matrix and
// reduced to Hermite form.
LatticeBasis intersect_2lambda(const RootSystem& sys);

}  // namespace qsl

#endif
