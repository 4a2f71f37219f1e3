#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qd {

// Exact rational scalar. Doubles convert exactly (every finite double is a
// dyadic rational), so symbolic coefficient algebra never rounds.
using Rational = mpq_class;

inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Complex number with exact rational parts. This is the coefficient scalar of
// the symbolic layer: conjugation, negation and ring operations are exact, so
// the Lagrange adjoint is an exact involution.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r) : re(r) {}
    RationalComplex(long r, long i) : re(r), im(i) {}

    static RationalComplex i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    RationalComplex conj() const { return {re, -im}; }

    RationalComplex inverse() const {
        const Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("RationalComplex: division by zero");
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    RationalComplex& operator+=(const RationalComplex& o) { return *this = *this + o; }
    RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }
};

std::string to_string(const RationalComplex& z);

}  // namespace qd
