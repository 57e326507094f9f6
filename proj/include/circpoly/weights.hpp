#pragma once

#include <vector>

#include "circpoly/numeric.hpp"

namespace circpoly {

// Exponent pair (a, b) for the monomial z^a zbar^b. All indices 0-based.
struct LatticePoint {
    std::vector<Int> a;
    std::vector<Int> b;

    LatticePoint() = default;
    LatticePoint(std::vector<Int> av, std::vector<Int> bv) : a(std::move(av)), b(std::move(bv)) {}

    static LatticePoint zero(int k) {
        return {std::vector<Int>(k, 0), std::vector<Int>(k, 0)};
    }
    static LatticePoint unit_z(int k, int i) {
        LatticePoint p = zero(k);
        p.a[i] = 1;
        return p;
    }
    static LatticePoint unit_zbar(int k, int i) {
        LatticePoint p = zero(k);
        p.b[i] = 1;
        return p;
    }

    int k() const { return static_cast<int>(a.size()); }
    bool nonneg() const;
    Int total_degree() const;

    LatticePoint operator+(const LatticePoint& o) const;
    LatticePoint operator-(const LatticePoint& o) const;
    bool operator==(const LatticePoint& o) const { return a == o.a && b == o.b; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const;

    std::string str() const;
};

// Coordinates in the lattice basis (eta_0..eta_{k-2}, ell_0..ell_{k-1}).
struct BasisCoords {
    std::vector<Int> eta;
    std::vector<Int> ell;

    bool operator==(const BasisCoords& o) const { return eta == o.eta && ell == o.ell; }
    bool operator!=(const BasisCoords& o) const { return !(*this == o); }
};

class WeightSystem {
public:
    explicit WeightSystem(std::vector<Int> weights);

    int k() const { return static_cast<int>(n_.size()); }
    const std::vector<Int>& weights() const { return n_; }
    const std::vector<Int>& cofactor_gcds() const { return d_; }
    const Int& n(int i) const { return n_[i]; }
    const Int& d(int i) const { return d_[i]; }
    // d_i if i != j, 1 if i == j
    Int d_pair(int i, int j) const { return i == j ? Int(1) : d_[i]; }
    bool minimal() const { return minimal_; }
    Int cofactor_product() const;

    // l = {i : d_i = 1} as a bitmask
    unsigned squarefree_mask() const;

    bool in_lattice(const LatticePoint& x) const;
    bool in_semigroup(const LatticePoint& x) const;

    bool operator==(const WeightSystem& o) const { return n_ == o.n_; }

private:
    std::vector<Int> n_;
    std::vector<Int> d_;
    bool minimal_ = false;
};

WeightSystem build_weight_system(const std::vector<Int>& n);

void require_minimal(const WeightSystem& ws);

LatticePoint basis_ell(const WeightSystem& ws, int i);
LatticePoint basis_eta(const WeightSystem& ws, int i);
// l_0..l_{k-1} then eta_0..eta_{k-2}
std::vector<LatticePoint> basis_elements(const WeightSystem& ws);

BasisCoords to_basis_coords(const WeightSystem& ws, const LatticePoint& x);
LatticePoint from_basis_coords(const WeightSystem& ws, const BasisCoords& c);

std::vector<Int> iota(const WeightSystem& ws, const std::vector<Int>& r);
std::vector<Int> iota_inverse(const WeightSystem& ws, const std::vector<Int>& t);

WeightSystem extend_weights(const WeightSystem& ws, int m);

}  // namespace circpoly
