#include "circpoly/poisson.hpp"

#include <sstream>
#include <stdexcept>

namespace circpoly {

namespace {

void require_same_k(const Poly& f, const Poly& g) {
    if (f.k() != g.k()) throw std::invalid_argument("polynomial dimensions differ");
}

void require_square(const RatMat& m, int k, const char* what) {
    if (static_cast<int>(m.size()) != k) throw std::invalid_argument(std::string(what) + " has wrong shape");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument(std::string(what) + " has wrong shape");
}

void require_square(const IntMat& m, int k, const char* what) {
    if (static_cast<int>(m.size()) != k) throw std::invalid_argument(std::string(what) + " has wrong shape");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument(std::string(what) + " has wrong shape");
}

long to_long_exp(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("exponent too large");
    return v.get_si();
}

// smallest allowed delta entry: -1 when the two cofactor gcds agree, else 0
Int delta_lower_bound(const WeightSystem& ws, int i, int j) {
    return ws.d(i) == ws.d(j) ? Int(-1) : Int(0);
}

void check_delta_bounds(const WeightSystem& ws, const IntMat& delta) {
    const int k = ws.k();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (delta[i][j] < delta_lower_bound(ws, i, j))
                throw std::invalid_argument("delta entry below its lower bound");
}

bool symmetric(const RatMat& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

bool symmetric(const IntMat& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

RatMat identity_rat(int k) {
    RatMat m(k, std::vector<Rat>(k, 0));
    for (int i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

IntMat zero_int(int k) { return IntMat(k, std::vector<Int>(k, 0)); }

// substitute z_m = x_m + i y_m, zb_m = x_m - i y_m; the result reuses the
// a-slot for x exponents and the b-slot for y exponents
Poly to_xy(const Poly& p) {
    const int k = p.k();
    Poly out(k);
    for (const auto& [e, c] : p.terms()) {
        Poly prod = Poly::constant(k, c);
        for (int m = 0; m < k; ++m) {
            if (e.a[m] > 0) {
                Poly zm = Poly::variable_z(k, m) +
                          Poly::variable_zbar(k, m).scaled(GaussianRational::i());
                prod = prod * pow(zm, static_cast<unsigned long>(e.a[m]));
            }
            if (e.b[m] > 0) {
                Poly zbm = Poly::variable_z(k, m) -
                           Poly::variable_zbar(k, m).scaled(GaussianRational::i());
                prod = prod * pow(zbm, static_cast<unsigned long>(e.b[m]));
            }
        }
        out += prod;
    }
    return out;
}

Poly require_real(Poly p) {
    for (const auto& [e, c] : p.terms())
        if (c.im != 0) throw std::logic_error("bivector coefficient has an imaginary part");
    return p;
}

}  // namespace

Poly Poly::constant(int k, const GaussianRational& c) {
    Poly p(k);
    p.add_term(Exponent(k), c);
    return p;
}

Poly Poly::variable_z(int k, int i) {
    Exponent e(k);
    e.a[i] = 1;
    return monomial(k, e, GaussianRational(Rat(1)));
}

Poly Poly::variable_zbar(int k, int i) {
    Exponent e(k);
    e.b[i] = 1;
    return monomial(k, e, GaussianRational(Rat(1)));
}

Poly Poly::monomial(int k, const Exponent& e, const GaussianRational& c) {
    Poly p(k);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponent& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (e.k() != k_) throw std::invalid_argument("exponent dimension mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_k(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return scaled(GaussianRational(Rat(-1))); }

Poly Poly::operator*(const Poly& o) const {
    require_same_k(*this, o);
    Poly r(k_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(k_);
            for (int m = 0; m < k_; ++m) {
                e.a[m] = e1.a[m] + e2.a[m];
                e.b[m] = e1.b[m] + e2.b[m];
            }
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly r(k_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly Poly::dz(int i) const {
    Poly r(k_);
    for (const auto& [e, c] : terms_) {
        if (e.a[i] == 0) continue;
        Exponent d = e;
        d.a[i] -= 1;
        r.add_term(d, c * GaussianRational(Rat(e.a[i])));
    }
    return r;
}

Poly Poly::dzbar(int i) const {
    Poly r(k_);
    for (const auto& [e, c] : terms_) {
        if (e.b[i] == 0) continue;
        Exponent d = e;
        d.b[i] -= 1;
        r.add_term(d, c * GaussianRational(Rat(e.b[i])));
    }
    return r;
}

Poly Poly::conj() const {
    Poly r(k_);
    for (const auto& [e, c] : terms_) {
        Exponent s;
        s.a = e.b;
        s.b = e.a;
        r.add_term(s, c.conj());
    }
    return r;
}

long Poly::total_degree() const {
    long deg = 0;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int m = 0; m < k_; ++m) d += e.a[m] + e.b[m];
        deg = std::max(deg, d);
    }
    return deg;
}

GaussianRational Poly::eval(const std::vector<Rat>& aval, const std::vector<Rat>& bval) const {
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        Rat coeff(1);
        for (int m = 0; m < k_; ++m) {
            if (e.a[m] > 0) coeff *= pow(aval[m], static_cast<unsigned long>(e.a[m]));
            if (e.b[m] > 0) coeff *= pow(bval[m], static_cast<unsigned long>(e.b[m]));
        }
        sum += c * GaussianRational(coeff);
    }
    return sum;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        for (int m = 0; m < k_; ++m)
            if (e.a[m] > 0) out << " * z" << (m + 1) << "^" << e.a[m];
        for (int m = 0; m < k_; ++m)
            if (e.b[m] > 0) out << " * zb" << (m + 1) << "^" << e.b[m];
    }
    return out.str();
}

Poly pow(const Poly& p, unsigned long e) {
    Poly r = Poly::constant(p.k(), GaussianRational(Rat(1)));
    Poly b = p;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool is_invariant(const WeightSystem& ws, const Poly& p) {
    if (p.k() != ws.k()) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : p.terms()) {
        Int sum = 0;
        for (int m = 0; m < ws.k(); ++m) sum += ws.n(m) * (Int(e.a[m]) - Int(e.b[m]));
        if (sum != 0) return false;
    }
    return true;
}

BracketSpec BracketSpec::standard(const WeightSystem& ws) {
    const int k = ws.k();
    BracketSpec s;
    s.kind = BracketKind::standard;
    s.eps = identity_rat(k);
    s.delta = zero_int(k);
    for (int i = 0; i < k; ++i) s.delta[i][i] = -1;
    return s;
}

BracketSpec BracketSpec::epsilon(const WeightSystem& ws, const RatMat& eps) {
    const int k = ws.k();
    require_square(eps, k, "eps");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (ws.d(i) != ws.d(j) && eps[i][j] != 0)
                throw std::invalid_argument("eps must vanish where cofactor gcds differ");
    BracketSpec s;
    s.kind = BracketKind::epsilon;
    s.eps = eps;
    s.delta = zero_int(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (ws.d(i) == ws.d(j)) s.delta[i][j] = -1;
    return s;
}

BracketSpec BracketSpec::epsilon_delta(const WeightSystem& ws, const RatMat& eps,
                                       const IntMat& delta) {
    const int k = ws.k();
    require_square(eps, k, "eps");
    require_square(delta, k, "delta");
    check_delta_bounds(ws, delta);
    BracketSpec s;
    s.kind = BracketKind::epsilon_delta;
    s.eps = eps;
    s.delta = delta;
    return s;
}

BracketSpec BracketSpec::face(const WeightSystem& ws, const RatMat& eps, unsigned h) {
    const int k = ws.k();
    require_square(eps, k, "eps");
    if (h & ~((1u << k) - 1)) throw std::invalid_argument("face indices out of range");
    if (h & ~ws.squarefree_mask())
        throw std::invalid_argument("face must consist of indices with unit cofactor gcd");
    if (!symmetric(eps)) throw std::invalid_argument("face spec requires symmetric eps");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bool hi = (h >> i) & 1, hj = (h >> j) & 1;
            if (hi != hj && eps[i][j] != 0)
                throw std::invalid_argument("eps must vanish across the face boundary");
        }
    BracketSpec s;
    s.kind = BracketKind::face;
    s.eps = eps;
    s.h = h;
    s.delta = zero_int(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (((h >> i) & 1) && ((h >> j) & 1)) s.delta[i][j] = -1;
    return s;
}

Poly bracket_generator(const WeightSystem& ws, const BracketSpec& spec, int i, int j) {
    const int k = ws.k();
    if (i < 0 || i >= k || j < 0 || j >= k) throw std::out_of_range("generator index");
    if (spec.eps[i][j] == 0) return Poly(k);
    const Int di = i == j ? Int(1) : ws.d(i);
    const Int dj = i == j ? Int(1) : ws.d(j);
    const long ea = to_long_exp(1 + spec.delta[i][j] * di);
    const long eb = to_long_exp(1 + spec.delta[i][j] * dj);
    if (ea < 0 || eb < 0) throw std::invalid_argument("delta entry below its lower bound");
    Exponent e(k);
    e.a[i] += ea;
    e.b[j] += eb;
    return Poly::monomial(k, e, GaussianRational::minus_two_i() * GaussianRational(spec.eps[i][j]));
}

Poly bracket(const WeightSystem& ws, const BracketSpec& spec, const Poly& f, const Poly& g) {
    const int k = ws.k();
    if (f.k() != k || g.k() != k) throw std::invalid_argument("polynomial dimension mismatch");
    std::vector<Poly> fz(k), gz(k), fzb(k), gzb(k);
    std::vector<bool> have_row(k, false), have_col(k, false);
    Poly out(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (spec.eps[i][j] == 0) continue;
            if (!have_row[i]) {
                fz[i] = f.dz(i);
                gz[i] = g.dz(i);
                have_row[i] = true;
            }
            if (!have_col[j]) {
                fzb[j] = f.dzbar(j);
                gzb[j] = g.dzbar(j);
                have_col[j] = true;
            }
            if (fz[i].is_zero() && fzb[j].is_zero()) continue;
            Poly mixed = fz[i] * gzb[j] - fzb[j] * gz[i];
            if (mixed.is_zero()) continue;
            out += bracket_generator(ws, spec, i, j) * mixed;
        }
    return out;
}

Poly jacobiator(const WeightSystem& ws, const BracketSpec& spec, const Poly& f, const Poly& g,
                const Poly& h) {
    return bracket(ws, spec, bracket(ws, spec, f, g), h) +
           bracket(ws, spec, bracket(ws, spec, g, h), f) +
           bracket(ws, spec, bracket(ws, spec, h, f), g);
}

CompatResult jacobi_compat_check(const WeightSystem& ws, const RatMat& eps, const IntMat& delta) {
    const int k = ws.k();
    require_square(eps, k, "eps");
    require_square(delta, k, "delta");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (eps[i][j] != eps[j][i]) return {false, "eps_not_symmetric", i, j, -1};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (delta[i][j] != delta[j][i]) return {false, "delta_not_symmetric", i, j, -1};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (delta[i][j] < delta_lower_bound(ws, i, j)) return {false, "delta_bound", i, j, -1};
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            for (int r = 0; r < k; ++r) {
                Int drp = r == p ? Int(1) : ws.d(r);
                Int drq = r == q ? Int(1) : ws.d(r);
                Rat lhs = eps[p][r] * eps[q][r] * Rat(delta[p][r] * drp - delta[q][r] * drq);
                if (lhs != 0) return {false, "triplet", p, q, r};
            }
    return {};
}

bool invariance_check(const WeightSystem& ws, const BracketSpec& spec, const Poly& f,
                      const Poly& g) {
    if (!is_invariant(ws, f) || !is_invariant(ws, g))
        throw std::invalid_argument("inputs must be invariant polynomials");
    return is_invariant(ws, bracket(ws, spec, f, g));
}

RealBivector to_real_bivector(const WeightSystem& ws, const BracketSpec& spec) {
    const int k = ws.k();
    if (!symmetric(spec.eps)) throw std::invalid_argument("real form requires symmetric eps");
    if (!symmetric(spec.delta)) throw std::invalid_argument("real form requires symmetric delta");
    RealBivector bv;
    bv.k = k;
    bv.xx.assign(k, std::vector<Poly>(k, Poly(k)));
    bv.yy.assign(k, std::vector<Poly>(k, Poly(k)));
    bv.xy.assign(k, std::vector<Poly>(k, Poly(k)));
    const GaussianRational quarter(Rat(1, 4));
    const GaussianRational i_quarter(Rat(0), Rat(1, 4));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Poly c = bracket_generator(ws, spec, i, j);
            Poly cbar = c.conj();
            if (i < j) {
                Poly re_half = require_real(to_xy((c + cbar).scaled(quarter)));
                bv.xx[i][j] = re_half;
                bv.yy[i][j] = re_half;
            }
            bv.xy[i][j] = require_real(to_xy((c - cbar).scaled(i_quarter)));
        }
    return bv;
}

int constant_rank(const RatMat& eps) { return 2 * rank(eps); }

int pointwise_rank(const WeightSystem& ws, const BracketSpec& spec,
                   const std::vector<Complex>& z) {
    const int k = ws.k();
    if (static_cast<int>(z.size()) != k) throw std::invalid_argument("z has wrong length");
    RealBivector bv = to_real_bivector(ws, spec);
    std::vector<Rat> xs(k), ys(k);
    for (int m = 0; m < k; ++m) {
        xs[m] = rat_from_double(z[m].real());
        ys[m] = rat_from_double(z[m].imag());
    }
    RatMat mat(2 * k, std::vector<Rat>(2 * k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Rat a = bv.xx[i][j].eval(xs, ys).re;
            mat[i][j] = a;
            mat[j][i] = -a;
            mat[k + i][k + j] = a;
            mat[k + j][k + i] = -a;
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat b = bv.xy[i][j].eval(xs, ys).re;
            mat[i][k + j] += b;
            mat[k + j][i] -= b;
        }
    return rank(mat);
}

}  // namespace circpoly
