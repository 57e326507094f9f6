#pragma once

#include <complex>
#include <string>
#include <vector>

#include "circpoly/cone.hpp"
#include "circpoly/intmat.hpp"
#include "circpoly/numeric.hpp"
#include "circpoly/weights.hpp"

namespace circpoly {

Complex cpow(Complex base, unsigned long e);

// k^2 generator labels: subdiagonal (1,0),(2,1),... then diagonal, then the
// rest in row-major order, so the first 2k-1 columns of the map are an
// identity block
std::vector<IndexPair> canonical_labels(int k);

struct FkMap {
    WeightSystem ws;
    std::vector<IndexPair> labels;
    std::vector<BasisCoords> images;
    IntMat matrix;  // rows eta_0..eta_{k-2}, ell_0..ell_{k-1}
};

FkMap fk_matrix(const WeightSystem& ws);

// columns are a Z-basis of ker(fk_matrix), rows indexed by canonical_labels
IntMat fk_kernel(const WeightSystem& ws);

struct HomPoint {
    int k = 0;
    std::vector<Complex> values;

    HomPoint() = default;
    explicit HomPoint(int kk) : k(kk), values(static_cast<size_t>(kk) * kk) {}
    Complex& at(int i, int j) { return values[static_cast<size_t>(i) * k + j]; }
    const Complex& at(int i, int j) const { return values[static_cast<size_t>(i) * k + j]; }
};

struct HomPointQ {
    int k = 0;
    std::vector<GaussianRational> values;

    HomPointQ() = default;
    explicit HomPointQ(int kk) : k(kk), values(static_cast<size_t>(kk) * kk) {}
    GaussianRational& at(int i, int j) { return values[static_cast<size_t>(i) * k + j]; }
    const GaussianRational& at(int i, int j) const {
        return values[static_cast<size_t>(i) * k + j];
    }
};

HomPoint to_floating(const HomPointQ& p);

struct HomCheck {
    bool ok = true;
    std::string reason;  // empty when ok

    explicit operator bool() const { return ok; }
};

HomPoint hilbert_eval(const WeightSystem& ws, const std::vector<Complex>& z);
HomPointQ hilbert_eval_exact(const WeightSystem& ws, const std::vector<GaussianRational>& z);

// checks, in order: conjugate symmetry, nonnegative diagonal, the modulus
// relation |p(i,j)|^2 = p(i,i)^{d_i} p(j,j)^{d_j}, and the kernel binomials
HomCheck check_hom_conditions(const WeightSystem& ws, const HomPoint& p, double tol);
HomCheck check_hom_conditions_exact(const WeightSystem& ws, const HomPointQ& p);

std::vector<Complex> reconstruct_orbit(const WeightSystem& ws, const HomPoint& p,
                                       double tol = 1e-9);

bool same_orbit(const WeightSystem& ws, const std::vector<Complex>& z,
                const std::vector<Complex>& w, double tol);

// drop the coordinates the weight extension added
BasisCoords project_pi(const WeightSystem& extended, int original_k, const LatticePoint& x);

}  // namespace circpoly
