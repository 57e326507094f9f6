#include "circpoly/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace circpoly {

std::string GaussianRational::str() const {
    return "(" + rat_str(re) + "," + rat_str(im) + ")";
}

GaussianRational pow(const GaussianRational& base, unsigned long e) {
    GaussianRational out(Rat(1));
    GaussianRational b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

Rat pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (head.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal: " + s);
    Int num(head + tail, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
    Rat q(num, den);
    q.canonicalize();
    return neg ? Rat(-q) : q;
}

Rat rat_from_double(double x) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

GaussianRational gaussian_from_complex(const std::complex<double>& z) {
    return {rat_from_double(z.real()), rat_from_double(z.imag())};
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace circpoly
