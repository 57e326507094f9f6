#include "circpoly/lift.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "circpoly/hilbert.hpp"

namespace circpoly {

namespace {

void require_same_k(const XPoly& f, const XPoly& g) {
    if (f.k() != g.k()) throw std::invalid_argument("polynomial dimensions differ");
}

void require_var_index(int k, int i, int j) {
    if (i < 0 || i >= k || j < 0 || j >= k) throw std::invalid_argument("variable index out of range");
}

void require_eps_shape(const RatMat& eps, int k) {
    if (static_cast<int>(eps.size()) != k) throw std::invalid_argument("eps has wrong shape");
    for (const auto& row : eps)
        if (static_cast<int>(row.size()) != k) throw std::invalid_argument("eps has wrong shape");
}

bool in_set(unsigned h, int i) { return (h >> i) & 1u; }

void validate_spec(const WeightSystem& ws, const LiftSpec& lspec) {
    const int k = ws.k();
    require_eps_shape(lspec.eps, k);
    switch (lspec.kind) {
        case LiftKind::linear:
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (lspec.eps[i][j] != 0 && (ws.d(i) != 1 || ws.d(j) != 1))
                        throw std::invalid_argument("linear lift eps must vanish off the unit block");
            break;
        case LiftKind::quadratic:
            break;
        case LiftKind::mixed: {
            const unsigned units = ws.squarefree_mask();
            if (lspec.h & ~units) throw std::invalid_argument("h must be a subset of the unit set");
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (lspec.eps[i][j] != 0 && in_set(lspec.h, i) != in_set(lspec.h, j))
                        throw std::invalid_argument("mixed lift eps must vanish across the h boundary");
            break;
        }
    }
}

std::vector<long> product_exponent(int k, int p, int q, int s, int t) {
    std::vector<long> e(static_cast<size_t>(k) * k, 0);
    e[static_cast<size_t>(p) * k + q] += 1;
    e[static_cast<size_t>(s) * k + t] += 1;
    return e;
}

std::vector<long> variable_exponent(int k, int i, int j) {
    std::vector<long> e(static_cast<size_t>(k) * k, 0);
    e[static_cast<size_t>(i) * k + j] = 1;
    return e;
}

// indices with a positive exponent in some term
std::vector<size_t> support(const XPoly& f) {
    const size_t n = static_cast<size_t>(f.k()) * f.k();
    std::vector<bool> seen(n, false);
    for (const auto& [e, c] : f.terms())
        for (size_t u = 0; u < n; ++u)
            if (e[u] > 0) seen[u] = true;
    std::vector<size_t> out;
    for (size_t u = 0; u < n; ++u)
        if (seen[u]) out.push_back(u);
    return out;
}

bool all_zero(const IntMat& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace

XPoly XPoly::constant(int k, const GaussianRational& c) {
    XPoly p(k);
    p.add_term(std::vector<long>(static_cast<size_t>(k) * k, 0), c);
    return p;
}

XPoly XPoly::variable(int k, int i, int j) {
    require_var_index(k, i, j);
    XPoly p(k);
    p.add_term(variable_exponent(k, i, j), GaussianRational(Rat(1)));
    return p;
}

XPoly XPoly::monomial(int k, const std::vector<long>& e, const GaussianRational& c) {
    XPoly p(k);
    p.add_term(e, c);
    return p;
}

XPoly XPoly::operator-() const { return scaled(GaussianRational(Rat(-1))); }

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r = *this;
    r += o;
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator*(const XPoly& o) const {
    require_same_k(*this, o);
    XPoly r(k_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<long> e = ea;
            for (size_t u = 0; u < e.size(); ++u) e[u] += eb[u];
            r.add_term(e, ca * cb);
        }
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    require_same_k(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPoly XPoly::scaled(const GaussianRational& c) const {
    XPoly r(k_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

XPoly XPoly::dvar(int i, int j) const {
    require_var_index(k_, i, j);
    const size_t idx = static_cast<size_t>(i) * k_ + j;
    XPoly r(k_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        std::vector<long> de = e;
        de[idx] -= 1;
        r.add_term(de, c * GaussianRational(Rat(e[idx])));
    }
    return r;
}

XPoly XPoly::conj() const {
    XPoly r(k_);
    for (const auto& [e, c] : terms_) {
        std::vector<long> te(e.size(), 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                te[static_cast<size_t>(i) * k_ + j] = e[static_cast<size_t>(j) * k_ + i];
        r.add_term(te, c.conj());
    }
    return r;
}

void XPoly::add_term(const std::vector<long>& e, const GaussianRational& c) {
    if (static_cast<int>(e.size()) != k_ * k_) throw std::invalid_argument("exponent has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) {
                const long m = e[static_cast<size_t>(i) * k_ + j];
                if (m > 0) out << " * X_" << (i + 1) << "_" << (j + 1) << "^" << m;
            }
    }
    return out.str();
}

XPoly pow(const XPoly& p, unsigned long e) {
    XPoly r = XPoly::constant(p.k(), GaussianRational(Rat(1)));
    XPoly b = p;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

LiftSpec LiftSpec::linear(const WeightSystem& ws, const RatMat& eps) {
    LiftSpec s{LiftKind::linear, eps, 0};
    validate_spec(ws, s);
    return s;
}

LiftSpec LiftSpec::quadratic(const WeightSystem& ws, const RatMat& eps) {
    LiftSpec s{LiftKind::quadratic, eps, 0};
    validate_spec(ws, s);
    return s;
}

LiftSpec LiftSpec::mixed(const WeightSystem& ws, const RatMat& eps, unsigned h) {
    LiftSpec s{LiftKind::mixed, eps, h};
    validate_spec(ws, s);
    return s;
}

XPoly lift_bracket_generator(const WeightSystem& ws, const LiftSpec& lspec, int p, int q,
                             int s, int t) {
    const int k = ws.k();
    require_var_index(k, p, q);
    require_var_index(k, s, t);
    const GaussianRational m2i = GaussianRational::minus_two_i();
    XPoly out(k);
    const Rat& ept = lspec.eps[p][t];
    const Rat& esq = lspec.eps[s][q];
    switch (lspec.kind) {
        case LiftKind::linear:
            if (ept != 0) out.add_term(variable_exponent(k, s, q), m2i * GaussianRational(ept));
            if (esq != 0) out.add_term(variable_exponent(k, p, t), m2i * GaussianRational(Rat(-esq)));
            break;
        case LiftKind::quadratic: {
            const Rat c = Rat(ept * Rat(Int(ws.d_pair(p, q) * ws.d_pair(t, s)))) -
                          Rat(esq * Rat(Int(ws.d_pair(q, p) * ws.d_pair(s, t))));
            if (c != 0) out.add_term(product_exponent(k, p, q, s, t), m2i * GaussianRational(c));
            break;
        }
        case LiftKind::mixed:
            if (ept != 0) {
                const GaussianRational c =
                    m2i * GaussianRational(Rat(ept * Rat(Int(ws.d_pair(p, q) * ws.d_pair(t, s)))));
                if (in_set(lspec.h, p) && in_set(lspec.h, t))
                    out.add_term(variable_exponent(k, s, q), c);
                else
                    out.add_term(product_exponent(k, p, q, s, t), c);
            }
            if (esq != 0) {
                const GaussianRational c =
                    m2i *
                    GaussianRational(Rat(-Rat(esq * Rat(Int(ws.d_pair(q, p) * ws.d_pair(s, t))))));
                if (in_set(lspec.h, s) && in_set(lspec.h, q))
                    out.add_term(variable_exponent(k, p, t), c);
                else
                    out.add_term(product_exponent(k, p, q, s, t), c);
            }
            break;
    }
    return out;
}

XPoly lift_bracket(const WeightSystem& ws, const LiftSpec& lspec, const XPoly& f,
                   const XPoly& g) {
    validate_spec(ws, lspec);
    require_same_k(f, g);
    if (f.k() != ws.k()) throw std::invalid_argument("polynomial dimension does not match the weight system");
    const int k = ws.k();
    const auto sf = support(f);
    const auto sg = support(g);
    std::map<size_t, XPoly> df, dg;
    for (size_t u : sf) df.emplace(u, f.dvar(static_cast<int>(u) / k, static_cast<int>(u) % k));
    for (size_t v : sg) dg.emplace(v, g.dvar(static_cast<int>(v) / k, static_cast<int>(v) % k));
    XPoly out(k);
    for (size_t u : sf)
        for (size_t v : sg) {
            XPoly gen = lift_bracket_generator(ws, lspec, static_cast<int>(u) / k,
                                               static_cast<int>(u) % k, static_cast<int>(v) / k,
                                               static_cast<int>(v) % k);
            if (gen.is_zero()) continue;
            out += gen * df.at(u) * dg.at(v);
        }
    return out;
}

Poly fk_pushforward(const WeightSystem& ws, const XPoly& f) {
    require_minimal(ws);
    const int k = ws.k();
    if (f.k() != k) throw std::invalid_argument("polynomial dimension does not match the weight system");
    Poly out(k);
    for (const auto& [e, c] : f.terms()) {
        Exponent ez(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const long m = e[static_cast<size_t>(i) * k + j];
                if (m == 0) continue;
                ez.a[i] += m * Int(ws.d_pair(i, j)).get_si();
                ez.b[j] += m * Int(ws.d_pair(j, i)).get_si();
            }
        out.add_term(ez, c);
    }
    return out;
}

PairResult check_fk_related(const WeightSystem& ws, const LiftSpec& lspec,
                            const BracketSpec& spec) {
    validate_spec(ws, lspec);
    require_minimal(ws);
    bool matched = false;
    switch (lspec.kind) {
        case LiftKind::linear:
            matched = spec.kind == BracketKind::face && spec.h == ws.squarefree_mask() &&
                      spec.eps == lspec.eps;
            break;
        case LiftKind::quadratic:
            matched = spec.kind == BracketKind::epsilon_delta && all_zero(spec.delta) &&
                      spec.eps == lspec.eps;
            break;
        case LiftKind::mixed:
            matched = spec.kind == BracketKind::face && spec.h == lspec.h && spec.eps == lspec.eps;
            break;
    }
    if (!matched) throw std::invalid_argument("lift spec and bracket spec are not a matched pair");
    const int k = ws.k();
    std::vector<Poly> pushed;
    pushed.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) pushed.push_back(fk_pushforward(ws, XPoly::variable(k, i, j)));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t) {
                    const Poly lhs = fk_pushforward(ws, lift_bracket_generator(ws, lspec, p, q, s, t));
                    const Poly rhs = bracket(ws, spec, pushed[static_cast<size_t>(p) * k + q],
                                             pushed[static_cast<size_t>(s) * k + t]);
                    if (lhs != rhs) return {false, p, q, s, t};
                }
    return {};
}

TripleResult check_jacobi_lift(const WeightSystem& ws, const LiftSpec& lspec) {
    validate_spec(ws, lspec);
    const int k = ws.k();
    if (lspec.kind == LiftKind::linear) {
        std::set<Exponent> images;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const Poly m = fk_pushforward(ws, XPoly::variable(k, i, j));
                if (!images.insert(m.terms().begin()->first).second) return {false, i, j, i, j, -1, -1};
            }
    }
    std::vector<XPoly> vars;
    vars.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) vars.push_back(XPoly::variable(k, i, j));
    const size_t n = vars.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                XPoly jac = lift_bracket(ws, lspec, lift_bracket(ws, lspec, vars[a], vars[b]), vars[c]);
                jac += lift_bracket(ws, lspec, lift_bracket(ws, lspec, vars[b], vars[c]), vars[a]);
                jac += lift_bracket(ws, lspec, lift_bracket(ws, lspec, vars[c], vars[a]), vars[b]);
                if (!jac.is_zero())
                    return {false, static_cast<int>(a) / k, static_cast<int>(a) % k,
                            static_cast<int>(b) / k, static_cast<int>(b) % k,
                            static_cast<int>(c) / k, static_cast<int>(c) % k};
            }
    return {};
}

PairResult reality_check(const WeightSystem& ws, const LiftSpec& lspec) {
    validate_spec(ws, lspec);
    const int k = ws.k();
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t) {
                    const XPoly lhs = lift_bracket_generator(ws, lspec, p, q, s, t).conj();
                    const XPoly rhs = lift_bracket_generator(ws, lspec, q, p, t, s);
                    if (lhs != rhs) return {false, p, q, s, t};
                }
    return {};
}

TripleResult intertwine_check(const WeightSystem& ws, const LiftSpec& lspecA,
                              const LiftSpec& lspecB) {
    if (lspecA.kind != LiftKind::linear || lspecB.kind != LiftKind::quadratic)
        throw std::invalid_argument("intertwine check expects a linear spec and a quadratic spec");
    validate_spec(ws, lspecA);
    validate_spec(ws, lspecB);
    const int k = ws.k();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (lspecA.eps[i][j] == 0) continue;
            for (int m = 0; m < k; ++m)
                if (lspecB.eps[i][m] != 0 || lspecB.eps[m][j] != 0)
                    throw std::invalid_argument("eps supports must be disjoint in rows and columns");
        }
    std::vector<XPoly> vars;
    vars.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) vars.push_back(XPoly::variable(k, i, j));
    const size_t n = vars.size();
    auto br = [&](const LiftSpec& ls, const XPoly& f, const XPoly& g) {
        return lift_bracket(ws, ls, f, g);
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                XPoly sum = br(lspecB, br(lspecA, vars[a], vars[b]), vars[c]);
                sum += br(lspecB, br(lspecA, vars[b], vars[c]), vars[a]);
                sum += br(lspecB, br(lspecA, vars[c], vars[a]), vars[b]);
                sum += br(lspecA, br(lspecB, vars[a], vars[b]), vars[c]);
                sum += br(lspecA, br(lspecB, vars[b], vars[c]), vars[a]);
                sum += br(lspecA, br(lspecB, vars[c], vars[a]), vars[b]);
                if (!sum.is_zero())
                    return {false, static_cast<int>(a) / k, static_cast<int>(a) % k,
                            static_cast<int>(b) / k, static_cast<int>(b) % k,
                            static_cast<int>(c) / k, static_cast<int>(c) % k};
            }
    return {};
}

std::vector<Complex> embed_extended(const WeightSystem& ws, const std::vector<Complex>& z) {
    require_minimal(ws);
    const int k = ws.k();
    if (static_cast<int>(z.size()) != k) throw std::invalid_argument("point has wrong dimension");
    std::vector<Complex> out = z;
    out.reserve(2 * static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) out.push_back(cpow(z[i], ws.d(i).get_ui()));
    return out;
}

}  // namespace circpoly
