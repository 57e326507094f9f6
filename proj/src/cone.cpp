#include "circpoly/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace circpoly {

static void require_index(const WeightSystem& ws, int i) {
    if (i < 0 || i >= ws.k()) throw std::out_of_range("generator index out of range");
}

LatticePoint generator(const WeightSystem& ws, int i, int j) {
    require_minimal(ws);
    require_index(ws, i);
    require_index(ws, j);
    LatticePoint p = LatticePoint::zero(ws.k());
    if (i == j) {
        p.a[i] = 1;
        p.b[i] = 1;
    } else {
        p.a[i] = ws.d(i);
        p.b[j] = ws.d(j);
    }
    return p;
}

std::vector<LatticePoint> generators(const WeightSystem& ws) {
    require_minimal(ws);
    std::vector<LatticePoint> out;
    out.reserve(ws.k() * ws.k());
    for (int i = 0; i < ws.k(); ++i)
        for (int j = 0; j < ws.k(); ++j) out.push_back(generator(ws, i, j));
    return out;
}

LatticePoint conjugate(const LatticePoint& x) {
    return {x.b, x.a};
}

std::vector<LatticePoint> hilbert_basis_oracle(const WeightSystem& ws, long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const int k = ws.k();

    std::map<Int, std::vector<std::vector<Int>>> by_weight;
    std::vector<long> a(k, 0);
    while (true) {
        Int w = 0;
        std::vector<Int> av(k);
        for (int i = 0; i < k; ++i) {
            av[i] = a[i];
            w += ws.n(i) * av[i];
        }
        by_weight[w].push_back(std::move(av));
        int pos = k - 1;
        while (pos >= 0 && a[pos] == bound) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }

    std::vector<LatticePoint> pts;
    for (const auto& [w, group] : by_weight)
        for (const auto& av : group)
            for (const auto& bv : group) {
                LatticePoint p(av, bv);
                if (p.total_degree() > 0) pts.push_back(std::move(p));
            }
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& x, const LatticePoint& y) {
        int c = cmp(x.total_degree(), y.total_degree());
        if (c != 0) return c < 0;
        return x < y;
    });

    auto dominates = [&](const LatticePoint& low, const LatticePoint& high) {
        for (int i = 0; i < k; ++i)
            if (low.a[i] > high.a[i]) return false;
        for (int i = 0; i < k; ++i)
            if (low.b[i] > high.b[i]) return false;
        return true;
    };

    std::vector<LatticePoint> irr;
    for (const auto& p : pts) {
        bool reducible = false;
        for (const auto& q : irr)
            if (q.total_degree() < p.total_degree() && dominates(q, p)) {
                reducible = true;
                break;
            }
        if (!reducible) irr.push_back(p);
    }
    std::sort(irr.begin(), irr.end());
    return irr;
}

std::vector<Face> enumerate_faces(const WeightSystem& ws) {
    require_minimal(ws);
    const int k = ws.k();
    if (k > 10) throw std::invalid_argument("face enumeration limited to k <= 10");
    std::vector<Face> out;
    out.push_back(Face::zero());
    const unsigned full = (1u << k) - 1;
    for (unsigned h = 1; h <= full; ++h)
        for (unsigned v = 1; v <= full; ++v) out.push_back(Face{h, v});
    return out;
}

Int face_count(int k, int dim) {
    if (k < 2) throw std::invalid_argument("need k >= 2");
    if (dim < 0 || dim > 2 * k - 1) throw std::out_of_range("dimension out of range");
    if (dim == 0) return 1;
    Int total = 0;
    for (int p = 1; p <= k; ++p) {
        int q = dim + 1 - p;
        if (q < 1 || q > k) continue;
        Int bp, bq;
        mpz_bin_uiui(bp.get_mpz_t(), k, p);
        mpz_bin_uiui(bq.get_mpz_t(), k, q);
        total += bp * bq;
    }
    return total;
}

Face smallest_face(const WeightSystem& ws, const std::vector<IndexPair>& idx) {
    if (idx.empty()) throw std::invalid_argument("need at least one index pair");
    unsigned h = 0, v = 0;
    for (auto [i, j] : idx) {
        require_index(ws, i);
        require_index(ws, j);
        h |= 1u << i;
        v |= 1u << j;
    }
    return Face::of(h, v);
}

bool is_face(const WeightSystem& ws, const std::vector<IndexPair>& rays) {
    require_minimal(ws);
    if (rays.empty()) return true;
    Face f = smallest_face(ws, rays);
    std::set<IndexPair> have(rays.begin(), rays.end());
    for (int i = 0; i < ws.k(); ++i)
        for (int j = 0; j < ws.k(); ++j) {
            bool in_product = (f.h >> i & 1) && (f.v >> j & 1);
            if (in_product != have.count({i, j})) return false;
        }
    return true;
}

Int pairing(const WeightSystem& ws, int i, int j, const BasisCoords& y) {
    require_minimal(ws);
    require_index(ws, i);
    require_index(ws, j);
    const int k = ws.k();
    if (static_cast<int>(y.ell.size()) != k || static_cast<int>(y.eta.size()) != k - 1)
        throw std::invalid_argument("coordinate dimension mismatch");
    Int s = 0;
    for (int m = 0; m < k; ++m) {
        if (i <= m && m <= j)
            s += ws.d(m) * y.ell[m];
        else if (j < m && m < i)
            s -= ws.d(m) * y.ell[m];
    }
    for (int m = 0; m + 1 < k; ++m) {
        if (i <= m && m < j)
            s -= y.eta[m];
        else if (j <= m && m < i)
            s += y.eta[m];
    }
    return s;
}

static BasisCoords zero_coords(int k) {
    BasisCoords c;
    c.eta.assign(k - 1, 0);
    c.ell.assign(k, 0);
    return c;
}

DualVector dual_x(const WeightSystem& ws, int m) {
    require_minimal(ws);
    require_index(ws, m);
    BasisCoords c = zero_coords(ws.k());
    c.ell[m] = 1;
    if (m > 0) c.eta[m - 1] = ws.d(m);
    return {c};
}

DualVector dual_y(const WeightSystem& ws, int m) {
    require_minimal(ws);
    require_index(ws, m);
    BasisCoords c = zero_coords(ws.k());
    c.ell[m] = 1;
    if (m + 1 < ws.k()) c.eta[m] = ws.d(m);
    return {c};
}

std::vector<DualVector> dual_rays(const WeightSystem& ws) {
    std::vector<DualVector> out;
    out.reserve(2 * ws.k());
    for (int m = 0; m < ws.k(); ++m) out.push_back(dual_x(ws, m));
    for (int m = 0; m < ws.k(); ++m) out.push_back(dual_y(ws, m));
    return out;
}

DualVector supporting_functional(const WeightSystem& ws, const Face& f) {
    require_minimal(ws);
    const int k = ws.k();
    BasisCoords s = zero_coords(k);
    auto add = [&](const BasisCoords& c) {
        for (int i = 0; i + 1 < k; ++i) s.eta[i] += c.eta[i];
        for (int i = 0; i < k; ++i) s.ell[i] += c.ell[i];
    };
    for (int m = 0; m < k; ++m) {
        if (!(f.h >> m & 1)) add(dual_x(ws, m).coords);
        if (!(f.v >> m & 1)) add(dual_y(ws, m).coords);
    }
    return {s};
}

FaceGraph face_graph(const WeightSystem& ws) {
    require_minimal(ws);
    const int k = ws.k();
    FaceGraph g;
    g.k = k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.nodes.push_back({i, j});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int j2 = j + 1; j2 < k; ++j2) g.edges.push_back({{i, j}, {i, j2}});
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            for (int i2 = i + 1; i2 < k; ++i2) g.edges.push_back({{i, j}, {i2, j}});
    return g;
}

}  // namespace circpoly
