#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace circpoly {

using Int = mpz_class;
using Rat = mpq_class;
using Complex = std::complex<double>;

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rat r) : re(std::move(r)), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }
    static GaussianRational minus_two_i() { return {Rat(0), Rat(-2)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rat n = o.norm();
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    // "(re,im)" with each part as "p" or "p/q"
    std::string str() const;
};

GaussianRational pow(const GaussianRational& base, unsigned long e);
Rat pow(const Rat& base, unsigned long e);

std::string rat_str(const Rat& q);

// Accepts "p", "p/q", and finite decimals like "-1.25"; throws std::invalid_argument otherwise.
Rat parse_rational(const std::string& s);

// Exact conversion; every double is a dyadic rational.
Rat rat_from_double(double x);
GaussianRational gaussian_from_complex(const std::complex<double>& z);

Int floor_div(const Int& a, const Int& b);

}  // namespace circpoly
