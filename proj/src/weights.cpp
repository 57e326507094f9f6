#include "circpoly/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace circpoly {

bool LatticePoint::nonneg() const {
    for (const Int& v : a)
        if (v < 0) return false;
    for (const Int& v : b)
        if (v < 0) return false;
    return true;
}

Int LatticePoint::total_degree() const {
    Int s = 0;
    for (const Int& v : a) s += v;
    for (const Int& v : b) s += v;
    return s;
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
    LatticePoint out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    for (size_t i = 0; i < b.size(); ++i) out.b[i] += o.b[i];
    return out;
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
    LatticePoint out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    for (size_t i = 0; i < b.size(); ++i) out.b[i] -= o.b[i];
    return out;
}

bool LatticePoint::operator<(const LatticePoint& o) const {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], o.a[i]);
        if (c != 0) return c < 0;
    }
    for (size_t i = 0; i < b.size(); ++i) {
        int c = cmp(b[i], o.b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string LatticePoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].get_str();
    os << ";";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i].get_str();
    os << ")";
    return os.str();
}

WeightSystem::WeightSystem(std::vector<Int> weights) : n_(std::move(weights)) {
    const int k = static_cast<int>(n_.size());
    if (k < 2) throw std::invalid_argument("need at least 2 weights");
    for (const Int& w : n_)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    Int g = 0;
    for (const Int& w : n_) g = gcd(g, w);
    if (g != 1) throw std::invalid_argument("weights not relatively prime");
    d_.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        Int di = 0;
        for (int j = 0; j < k; ++j)
            if (j != i) di = gcd(di, n_[j]);
        d_[i] = di;
    }
    minimal_ = true;
    for (int i = 0; i < k; ++i) {
        Int prod = 1;
        for (int j = 0; j < k; ++j)
            if (j != i) prod *= d_[j];
        if (prod != n_[i]) {
            minimal_ = false;
            break;
        }
    }
}

Int WeightSystem::cofactor_product() const {
    Int p = 1;
    for (const Int& di : d_) p *= di;
    return p;
}

unsigned WeightSystem::squarefree_mask() const {
    unsigned m = 0;
    for (int i = 0; i < k(); ++i)
        if (d_[i] == 1) m |= 1u << i;
    return m;
}

bool WeightSystem::in_lattice(const LatticePoint& x) const {
    if (x.k() != k()) return false;
    Int s = 0;
    for (int i = 0; i < k(); ++i) s += n_[i] * (x.a[i] - x.b[i]);
    return s == 0;
}

bool WeightSystem::in_semigroup(const LatticePoint& x) const {
    return x.nonneg() && in_lattice(x);
}

WeightSystem build_weight_system(const std::vector<Int>& n) {
    return WeightSystem(n);
}

void require_minimal(const WeightSystem& ws) {
    if (!ws.minimal()) throw std::invalid_argument("weight system is not minimal");
}

LatticePoint basis_ell(const WeightSystem& ws, int i) {
    LatticePoint p = LatticePoint::zero(ws.k());
    p.a[i] = 1;
    p.b[i] = 1;
    return p;
}

LatticePoint basis_eta(const WeightSystem& ws, int i) {
    LatticePoint p = LatticePoint::zero(ws.k());
    p.a[i + 1] = ws.d(i + 1);
    p.b[i] = ws.d(i);
    return p;
}

std::vector<LatticePoint> basis_elements(const WeightSystem& ws) {
    require_minimal(ws);
    std::vector<LatticePoint> out;
    out.reserve(2 * ws.k() - 1);
    for (int i = 0; i < ws.k(); ++i) out.push_back(basis_ell(ws, i));
    for (int i = 0; i + 1 < ws.k(); ++i) out.push_back(basis_eta(ws, i));
    return out;
}

BasisCoords to_basis_coords(const WeightSystem& ws, const LatticePoint& x) {
    require_minimal(ws);
    const int k = ws.k();
    if (x.k() != k) throw std::invalid_argument("dimension mismatch");
    if (!ws.in_lattice(x)) throw std::invalid_argument("point not in the lattice");
    BasisCoords c;
    c.eta.assign(k - 1, 0);
    c.ell.assign(k, 0);
    c.ell[0] = x.a[0];
    for (int i = 0; i + 1 < k; ++i) {
        Int num = x.b[i] - c.ell[i];
        if (num % ws.d(i) != 0) throw std::invalid_argument("point not in the lattice");
        c.eta[i] = num / ws.d(i);
        c.ell[i + 1] = x.a[i + 1] - ws.d(i + 1) * c.eta[i];
    }
    if (x.b[k - 1] != c.ell[k - 1]) throw std::invalid_argument("point not in the lattice");
    return c;
}

LatticePoint from_basis_coords(const WeightSystem& ws, const BasisCoords& c) {
    const int k = ws.k();
    LatticePoint p = LatticePoint::zero(k);
    for (int i = 0; i < k; ++i) {
        p.a[i] += c.ell[i];
        p.b[i] += c.ell[i];
    }
    for (int i = 0; i + 1 < k; ++i) {
        p.a[i + 1] += c.eta[i] * ws.d(i + 1);
        p.b[i] += c.eta[i] * ws.d(i);
    }
    return p;
}

std::vector<Int> iota(const WeightSystem& ws, const std::vector<Int>& r) {
    const int k = ws.k();
    if (static_cast<int>(r.size()) != k) throw std::invalid_argument("dimension mismatch");
    Int s = 0;
    for (int i = 0; i < k; ++i) s += r[i] * ws.n(i);
    if (s != 0) throw std::invalid_argument("vector not orthogonal to the weights");
    Int D = ws.cofactor_product();
    std::vector<Int> t(k);
    for (int i = 0; i < k; ++i) {
        Int num = ws.n(i) * r[i];
        if (num % D != 0) throw std::invalid_argument("iota image not integral (weights not minimal)");
        t[i] = num / D;
    }
    return t;
}

std::vector<Int> iota_inverse(const WeightSystem& ws, const std::vector<Int>& t) {
    require_minimal(ws);
    const int k = ws.k();
    if (static_cast<int>(t.size()) != k) throw std::invalid_argument("dimension mismatch");
    Int s = 0;
    for (const Int& v : t) s += v;
    if (s != 0) throw std::invalid_argument("vector not in the zero-sum hyperplane");
    std::vector<Int> r(k);
    for (int i = 0; i < k; ++i) r[i] = ws.d(i) * t[i];
    return r;
}

WeightSystem extend_weights(const WeightSystem& ws, int m) {
    require_minimal(ws);
    if (m < 1) throw std::invalid_argument("extension count must be positive");
    std::vector<Int> n = ws.weights();
    Int D = ws.cofactor_product();
    for (int i = 0; i < m; ++i) n.push_back(D);
    return WeightSystem(std::move(n));
}

}  // namespace circpoly
