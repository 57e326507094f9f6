#include "circpoly/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circpoly {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

unsigned long to_ulong_exp(const Int& d) {
    if (!d.fits_ulong_p()) throw std::overflow_error("exponent too large");
    return d.get_ui();
}

bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool near(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double rpow(double base, unsigned long e) {
    double r = 1.0, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace

Complex cpow(Complex base, unsigned long e) {
    Complex r(1.0, 0.0), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::vector<IndexPair> canonical_labels(int k) {
    std::vector<IndexPair> labels;
    labels.reserve(static_cast<size_t>(k) * k);
    for (int i = 1; i < k; ++i) labels.emplace_back(i, i - 1);
    for (int i = 0; i < k; ++i) labels.emplace_back(i, i);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && j != i - 1) labels.emplace_back(i, j);
    return labels;
}

FkMap fk_matrix(const WeightSystem& ws) {
    const int k = ws.k();
    FkMap fk{ws, canonical_labels(k), {}, {}};
    fk.images.reserve(fk.labels.size());
    for (const auto& [i, j] : fk.labels)
        fk.images.push_back(to_basis_coords(ws, generator(ws, i, j)));

    const size_t cols = fk.labels.size();
    fk.matrix.assign(2 * k - 1, std::vector<Int>(cols, 0));
    for (size_t c = 0; c < cols; ++c) {
        for (int m = 0; m < k - 1; ++m) fk.matrix[m][c] = fk.images[c].eta[m];
        for (int m = 0; m < k; ++m) fk.matrix[k - 1 + m][c] = fk.images[c].ell[m];
    }
    if (rank(fk.matrix) != 2 * k - 1) throw std::logic_error("fk matrix rank deficient");
    return fk;
}

IntMat fk_kernel(const WeightSystem& ws) {
    const auto fk = fk_matrix(ws);
    const int k = ws.k();
    const size_t n = fk.labels.size();
    IntMat kernel(n);
    for (size_t t = static_cast<size_t>(2 * k - 1); t < n; ++t) {
        std::vector<Int> col(n, 0);
        const auto& c = fk.images[t];
        for (int m = 0; m < k - 1; ++m) col[m] += c.eta[m];
        for (int m = 0; m < k; ++m) col[k - 1 + m] += c.ell[m];
        col[t] -= 1;
        for (size_t r = 0; r < fk.matrix.size(); ++r) {
            Int dot = 0;
            for (size_t cidx = 0; cidx < n; ++cidx) dot += fk.matrix[r][cidx] * col[cidx];
            if (dot != 0) throw std::logic_error("kernel column not annihilated");
        }
        for (size_t r = 0; r < n; ++r) kernel[r].push_back(col[r]);
    }
    return kernel;
}

HomPoint to_floating(const HomPointQ& p) {
    HomPoint out(p.k);
    for (size_t i = 0; i < p.values.size(); ++i) out.values[i] = p.values[i].to_complex();
    return out;
}

HomPoint hilbert_eval(const WeightSystem& ws, const std::vector<Complex>& z) {
    require_minimal(ws);
    const int k = ws.k();
    if (static_cast<int>(z.size()) != k) throw std::invalid_argument("z has wrong length");
    HomPoint p(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                p.at(i, i) = Complex(std::norm(z[i]), 0.0);
            else
                p.at(i, j) = cpow(z[i], to_ulong_exp(ws.d(i))) *
                             cpow(std::conj(z[j]), to_ulong_exp(ws.d(j)));
        }
    return p;
}

HomPointQ hilbert_eval_exact(const WeightSystem& ws, const std::vector<GaussianRational>& z) {
    require_minimal(ws);
    const int k = ws.k();
    if (static_cast<int>(z.size()) != k) throw std::invalid_argument("z has wrong length");
    HomPointQ p(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                p.at(i, i) = GaussianRational(z[i].norm());
            else
                p.at(i, j) = pow(z[i], to_ulong_exp(ws.d(i))) *
                             pow(z[j].conj(), to_ulong_exp(ws.d(j)));
        }
    return p;
}

HomCheck check_hom_conditions(const WeightSystem& ws, const HomPoint& p, double tol) {
    const int k = ws.k();
    if (p.k != k) return {false, "wrong size"};
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (!near(p.at(j, i), std::conj(p.at(i, j)), tol))
                return {false, "conjugate_symmetry"};
    for (int i = 0; i < k; ++i)
        if (p.at(i, i).real() < -tol) return {false, "diagonal_nonneg"};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            double lhs = std::norm(p.at(i, j));
            double rhs = rpow(std::max(p.at(i, i).real(), 0.0), to_ulong_exp(ws.d(i))) *
                         rpow(std::max(p.at(j, j).real(), 0.0), to_ulong_exp(ws.d(j)));
            if (!near(lhs, rhs, tol)) return {false, "modulus_relation"};
        }
    const auto labels = canonical_labels(k);
    const auto kernel = fk_kernel(ws);
    for (size_t c = 0; c < kernel[0].size(); ++c) {
        Complex pos(1.0, 0.0), neg(1.0, 0.0);
        bool zero_involved = false;
        for (size_t r = 0; r < labels.size(); ++r) {
            const Int& e = kernel[r][c];
            if (e == 0) continue;
            Complex v = p.at(labels[r].first, labels[r].second);
            if (std::abs(v) <= tol) {
                zero_involved = true;
                break;
            }
            if (e > 0)
                pos *= cpow(v, to_ulong_exp(e));
            else
                neg *= cpow(v, to_ulong_exp(-e));
        }
        if (!zero_involved && !near(pos, neg, tol)) return {false, "kernel_binomial"};
    }
    return {};
}

HomCheck check_hom_conditions_exact(const WeightSystem& ws, const HomPointQ& p) {
    const int k = ws.k();
    if (p.k != k) return {false, "wrong size"};
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (p.at(j, i) != p.at(i, j).conj()) return {false, "conjugate_symmetry"};
    for (int i = 0; i < k; ++i)
        if (p.at(i, i).re < 0) return {false, "diagonal_nonneg"};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            Rat lhs = p.at(i, j).norm();
            Rat rhs = pow(p.at(i, i).re, to_ulong_exp(ws.d(i))) *
                      pow(p.at(j, j).re, to_ulong_exp(ws.d(j)));
            if (lhs != rhs) return {false, "modulus_relation"};
        }
    const auto labels = canonical_labels(k);
    const auto kernel = fk_kernel(ws);
    for (size_t c = 0; c < kernel[0].size(); ++c) {
        GaussianRational pos(Rat(1)), neg(Rat(1));
        bool zero_involved = false;
        for (size_t r = 0; r < labels.size(); ++r) {
            const Int& e = kernel[r][c];
            if (e == 0) continue;
            const GaussianRational& v = p.at(labels[r].first, labels[r].second);
            if (v.is_zero()) {
                zero_involved = true;
                break;
            }
            if (e > 0)
                pos = pos * pow(v, to_ulong_exp(e));
            else
                neg = neg * pow(v, to_ulong_exp(-e));
        }
        if (!zero_involved && pos != neg) return {false, "kernel_binomial"};
    }
    return {};
}

std::vector<Complex> reconstruct_orbit(const WeightSystem& ws, const HomPoint& p, double tol) {
    auto chk = check_hom_conditions(ws, p, tol);
    if (!chk) throw std::invalid_argument("hom conditions violated: " + chk.reason);
    const int k = ws.k();
    std::vector<Complex> w(k, Complex(0.0, 0.0));
    int istar = -1;
    for (int i = 0; i < k; ++i)
        if (p.at(i, i).real() > tol) {
            istar = i;
            break;
        }
    if (istar < 0) return w;
    const double wstar = std::sqrt(p.at(istar, istar).real());
    w[istar] = Complex(wstar, 0.0);
    for (int i = 0; i < k; ++i) {
        if (i == istar || p.at(i, i).real() <= tol) continue;
        unsigned long di = to_ulong_exp(ws.d(i));
        Complex target = p.at(i, istar) / rpow(wstar, to_ulong_exp(ws.d(istar)));
        w[i] = std::polar(std::pow(std::abs(target), 1.0 / static_cast<double>(di)),
                          std::arg(target) / static_cast<double>(di));
    }
    return w;
}

bool same_orbit(const WeightSystem& ws, const std::vector<Complex>& z,
                const std::vector<Complex>& w, double tol) {
    require_minimal(ws);
    const int k = ws.k();
    if (static_cast<int>(z.size()) != k || static_cast<int>(w.size()) != k)
        throw std::invalid_argument("vectors have wrong length");
    std::vector<int> nonzero;
    for (int i = 0; i < k; ++i) {
        bool zz = std::abs(z[i]) <= tol, wz = std::abs(w[i]) <= tol;
        if (zz != wz) return false;
        if (!zz) nonzero.push_back(i);
    }
    if (nonzero.empty()) return true;

    const int i0 = nonzero.front();
    const Complex c = cpow(z[i0] / w[i0], to_ulong_exp(ws.d(i0)));
    const double theta = std::arg(c);

    Int q = 0, mod = 1;
    for (int i : nonzero) {
        const Int& d = ws.d(i);
        double ratio_arg = std::arg(z[i] / w[i]);
        long qll = std::lround((d.get_d() * ratio_arg - theta) / kTwoPi);
        Int qi(qll);
        qi = ((qi % d) + d) % d;
        // merge q mod `mod` with qi mod d; the moduli are coprime
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), d.get_mpz_t()) == 0) {
            if (d != 1) throw std::logic_error("cofactor gcds not coprime");
            continue;
        }
        Int diff = ((qi - q) % d + d) % d;
        q += mod * ((diff * inv) % d);
        mod *= d;
    }

    const double big_d = ws.cofactor_product().get_d();
    const double phi = (theta + kTwoPi * q.get_d()) / big_d;
    for (int i = 0; i < k; ++i) {
        double angle = std::fmod(phi * ws.n(i).get_d(), kTwoPi);
        Complex t_pow = std::polar(1.0, angle);
        if (std::abs(t_pow * w[i] - z[i]) > tol * std::max(1.0, std::abs(z[i]))) return false;
    }
    return true;
}

BasisCoords project_pi(const WeightSystem& extended, int original_k, const LatticePoint& x) {
    const int K = extended.k();
    if (original_k < 2 || original_k > K)
        throw std::invalid_argument("original dimension out of range");
    BasisCoords c = to_basis_coords(extended, x);
    BasisCoords out;
    out.eta.assign(c.eta.begin(), c.eta.begin() + (original_k - 1));
    out.ell.assign(c.ell.begin(), c.ell.begin() + original_k);
    return out;
}

}  // namespace circpoly
