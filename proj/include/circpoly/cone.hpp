#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circpoly/weights.hpp"

namespace circpoly {

// Face F_{h x v} of the cone spanned by the generators, stored as bitmasks
// over {0..k-1}. Canonical form: h and v both empty (zero face) or both
// nonempty.
struct Face {
    unsigned h = 0;
    unsigned v = 0;

    static Face zero() { return {}; }
    static Face of(unsigned h, unsigned v) {
        if (h == 0 || v == 0) return {};
        return {h, v};
    }

    bool is_zero() const { return h == 0; }
    int dim() const { return is_zero() ? 0 : __builtin_popcount(h) + __builtin_popcount(v) - 1; }

    bool operator==(const Face& o) const { return h == o.h && v == o.v; }
    bool operator!=(const Face& o) const { return !(*this == o); }
};

// Element of the dual lattice, stored in the same (eta, ell) coordinates.
struct DualVector {
    BasisCoords coords;
};

using IndexPair = std::pair<int, int>;

LatticePoint generator(const WeightSystem& ws, int i, int j);
// row-major (i,j) order: v_00, v_01, ..., v_{k-1,k-1}
std::vector<LatticePoint> generators(const WeightSystem& ws);

LatticePoint conjugate(const LatticePoint& x);

// All points of S_n with every exponent <= bound that are not a sum of two
// nonzero S_n points; equals the generator set for minimal ws and a large
// enough bound, a subset when the bound is too small. Non-minimal ws allowed.
std::vector<LatticePoint> hilbert_basis_oracle(const WeightSystem& ws, long bound);

std::vector<Face> enumerate_faces(const WeightSystem& ws);
Int face_count(int k, int dim);

Face smallest_face(const WeightSystem& ws, const std::vector<IndexPair>& idx);
bool is_face(const WeightSystem& ws, const std::vector<IndexPair>& rays);

// <v_ij, y> under the dual pairing, by bilinear extension of the table
// <v_ij, l_m> = +d_m if i<=m<=j, -d_m if j<m<i, else 0 and
// <v_ij, eta_m> = -1 if i<=m<j, +1 if j<=m<i, else 0.
Int pairing(const WeightSystem& ws, int i, int j, const BasisCoords& y);

DualVector dual_x(const WeightSystem& ws, int m);
DualVector dual_y(const WeightSystem& ws, int m);
// x_0..x_{k-1} then y_0..y_{k-1}; each nonnegative on all v_ij
std::vector<DualVector> dual_rays(const WeightSystem& ws);

// Vanishes exactly on the rays of f, strictly positive on all others.
DualVector supporting_functional(const WeightSystem& ws, const Face& f);

struct FaceGraph {
    int k = 0;
    std::vector<IndexPair> nodes;
    std::vector<std::pair<IndexPair, IndexPair>> edges;
};

FaceGraph face_graph(const WeightSystem& ws);

}  // namespace circpoly
