#pragma once

#include <map>
#include <string>
#include <vector>

#include "circpoly/poisson.hpp"
#include "circpoly/weights.hpp"

namespace circpoly {

// Polynomial in the k^2 matrix variables X_ij with Gaussian rational
// coefficients. Exponent vectors are row-major: entry i*k + j is the
// exponent of X_ij (0-based). Conjugation transposes variable indices.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(int k) : k_(k) {}

    static XPoly constant(int k, const GaussianRational& c);
    static XPoly variable(int k, int i, int j);
    static XPoly monomial(int k, const std::vector<long>& e, const GaussianRational& c);

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<long>, GaussianRational>& terms() const { return terms_; }

    XPoly operator-() const;
    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly& operator+=(const XPoly& o);
    bool operator==(const XPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    XPoly scaled(const GaussianRational& c) const;
    // derivative with respect to X_ij
    XPoly dvar(int i, int j) const;
    XPoly conj() const;

    void add_term(const std::vector<long>& e, const GaussianRational& c);

    // canonical text form; variables print as X_i_j with 1-based indices
    std::string str() const;

private:
    int k_ = 0;
    std::map<std::vector<long>, GaussianRational> terms_;
};

XPoly pow(const XPoly& p, unsigned long e);

enum class LiftKind { linear, quadratic, mixed };

// Bracket family upstairs in C[X_ij]. linear: constant-coefficient values
// -2i(eps_pt X_sq - eps_sq X_pt), requires eps supported on the unit block.
// quadratic: log-canonical values -2i(eps_pt d_p^q d_t^s - eps_sq d_q^p d_s^t)
// X_pq X_st. mixed: branches between the two on membership of the index pair
// in h, requires h inside the unit set and eps zero across the h boundary.
struct LiftSpec {
    LiftKind kind = LiftKind::linear;
    RatMat eps;
    unsigned h = 0;

    static LiftSpec linear(const WeightSystem& ws, const RatMat& eps);
    static LiftSpec quadratic(const WeightSystem& ws, const RatMat& eps);
    static LiftSpec mixed(const WeightSystem& ws, const RatMat& eps, unsigned h);
};

// witness pair ((p,q),(s,t)) of generator indices, 0-based; first failure in
// lexicographic order
struct PairResult {
    bool ok = true;
    int p = -1;
    int q = -1;
    int s = -1;
    int t = -1;
};

// witness triple ((p,q),(s,t),(u,v))
struct TripleResult {
    bool ok = true;
    int p = -1;
    int q = -1;
    int s = -1;
    int t = -1;
    int u = -1;
    int v = -1;
};

// bracket value on the generator pair (X_pq, X_st)
XPoly lift_bracket_generator(const WeightSystem& ws, const LiftSpec& lspec, int p, int q,
                             int s, int t);

XPoly lift_bracket(const WeightSystem& ws, const LiftSpec& lspec, const XPoly& f,
                   const XPoly& g);

// substitutes X_ij -> z_i^{d_i^j} zbar_j^{d_j^i}; ring homomorphism onto the
// invariant ring, requires a minimal system
Poly fk_pushforward(const WeightSystem& ws, const XPoly& f);

// checks pushforward({X_pq,X_st}) = {pushforward(X_pq), pushforward(X_st)}
// on every generator pair. The specs must be a matched pair: linear vs face
// spec on the full unit set, quadratic vs the delta = 0 spec, mixed(h) vs
// face spec on the same h. Exact relatedness can fail at pairs chained
// through an index with cofactor gcd > 1 (the branch that produces X_sq
// pushes to z_s zbar_q while the downstream bracket produces the d_s-th
// power); the witness reports the first such pair.
PairResult check_fk_related(const WeightSystem& ws, const LiftSpec& lspec,
                            const BracketSpec& spec);

// jacobiator on all generator triplets; for the linear kind also verifies
// the pushforward separates the k^2 generators (injectivity on linear
// polynomials)
TripleResult check_jacobi_lift(const WeightSystem& ws, const LiftSpec& lspec);

// conj({X_pq, X_st}) = {X_qp, X_ts} on all generator pairs; holds exactly
// when eps is symmetric
PairResult reality_check(const WeightSystem& ws, const LiftSpec& lspec);

// circular identity sum_cyc {{a,b}_A, c}_B + sum_cyc {{a,b}_B, c}_A = 0 on
// all generator triplets; A must be linear, B quadratic, with eps supports
// disjoint in both rows and columns
TripleResult intertwine_check(const WeightSystem& ws, const LiftSpec& lspecA,
                              const LiftSpec& lspecB);

// (z_1,...,z_k) -> (z_1,...,z_k, z_1^{d_1},...,z_k^{d_k})
std::vector<Complex> embed_extended(const WeightSystem& ws, const std::vector<Complex>& z);

}  // namespace circpoly
