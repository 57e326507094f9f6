#pragma once

#include <map>
#include <string>
#include <vector>

#include "circpoly/intmat.hpp"
#include "circpoly/numeric.hpp"
#include "circpoly/weights.hpp"

namespace circpoly {

struct Exponent {
    std::vector<long> a, b;

    Exponent() = default;
    explicit Exponent(int k) : a(k, 0), b(k, 0) {}
    int k() const { return static_cast<int>(a.size()); }
    bool operator==(const Exponent& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Exponent& o) const { return !(*this == o); }
    bool operator<(const Exponent& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// sparse polynomial in z_1..z_k, zb_1..zb_k with Gaussian-rational coefficients
class Poly {
  public:
    Poly() = default;
    explicit Poly(int k) : k_(k) {}

    static Poly constant(int k, const GaussianRational& c);
    static Poly variable_z(int k, int i);
    static Poly variable_zbar(int k, int i);
    static Poly monomial(int k, const Exponent& e, const GaussianRational& c);

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, GaussianRational>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    bool operator==(const Poly& o) const { return k_ == o.k_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const GaussianRational& c) const;
    Poly dz(int i) const;
    Poly dzbar(int i) const;
    Poly conj() const;
    long total_degree() const;
    GaussianRational eval(const std::vector<Rat>& aval, const std::vector<Rat>& bval) const;
    std::string str() const;

    void add_term(const Exponent& e, const GaussianRational& c);

  private:
    int k_ = 0;
    std::map<Exponent, GaussianRational> terms_;
};

Poly pow(const Poly& p, unsigned long e);
bool is_invariant(const WeightSystem& ws, const Poly& p);

enum class BracketKind { standard, epsilon, epsilon_delta, face };

// the bracket on generators is {z_i, zb_j} = -2i eps_ij z_i^(1+delta_ij*d_i^j)
// zb_j^(1+delta_ij*d_j^i), where d_i^j = d_i off the diagonal and 1 on it
struct BracketSpec {
    BracketKind kind = BracketKind::standard;
    RatMat eps;
    IntMat delta;
    unsigned h = 0;  // face kind only, bit i set when index i belongs to the face

    static BracketSpec standard(const WeightSystem& ws);
    static BracketSpec epsilon(const WeightSystem& ws, const RatMat& eps);
    static BracketSpec epsilon_delta(const WeightSystem& ws, const RatMat& eps,
                                     const IntMat& delta);
    static BracketSpec face(const WeightSystem& ws, const RatMat& eps, unsigned h);
};

Poly bracket_generator(const WeightSystem& ws, const BracketSpec& spec, int i, int j);
Poly bracket(const WeightSystem& ws, const BracketSpec& spec, const Poly& f, const Poly& g);
Poly jacobiator(const WeightSystem& ws, const BracketSpec& spec, const Poly& f, const Poly& g,
                const Poly& h);

struct CompatResult {
    bool ok = true;
    std::string reason;  // empty when ok
    int p = -1, q = -1, r = -1;

    explicit operator bool() const { return ok; }
};

CompatResult jacobi_compat_check(const WeightSystem& ws, const RatMat& eps, const IntMat& delta);

bool invariance_check(const WeightSystem& ws, const BracketSpec& spec, const Poly& f,
                      const Poly& g);

// coefficient polynomials live in variables x (the a-slot) and y (the b-slot)
struct RealBivector {
    int k = 0;
    std::vector<std::vector<Poly>> xx;  // dx_i ^ dx_j, entries valid for i < j
    std::vector<std::vector<Poly>> yy;  // dy_i ^ dy_j, entries valid for i < j
    std::vector<std::vector<Poly>> xy;  // dx_i ^ dy_j, all pairs
};

RealBivector to_real_bivector(const WeightSystem& ws, const BracketSpec& spec);

int constant_rank(const RatMat& eps);
int pointwise_rank(const WeightSystem& ws, const BracketSpec& spec,
                   const std::vector<Complex>& z);

}  // namespace circpoly
