#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qdomain/rational.hpp"

namespace qd {

// Univariate polynomial with exact rational-complex coefficients, indexed by
// degree. Trailing zeros are trimmed on construction, so equality is exact
// coefficient comparison.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RationalComplex constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<RationalComplex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(RationalComplex(1L)); }
    // c * x^k
    static Polynomial monomial(RationalComplex c, std::size_t k) {
        if (c.is_zero()) return Polynomial();
        std::vector<RationalComplex> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<RationalComplex>& coefficients() const { return coeffs_; }
    RationalComplex coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : RationalComplex();
    }

    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_real() const {
        for (const auto& c : coeffs_)
            if (!c.is_real()) return false;
        return true;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<RationalComplex> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = RationalComplex(Rational(static_cast<long>(k))) * coeffs_[k];
        return Polynomial(std::move(d));
    }

    Polynomial derivative(std::size_t n) const {
        Polynomial p = *this;
        for (std::size_t k = 0; k < n; ++k) p = p.derivative();
        return p;
    }

    Polynomial antiderivative() const {
        if (coeffs_.empty()) return Polynomial();
        std::vector<RationalComplex> a(coeffs_.size() + 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            RationalComplex inv(Rational(1, static_cast<long>(k + 1)));
            a[k + 1] = inv * coeffs_[k];
        }
        return Polynomial(std::move(a));
    }

    Polynomial conj() const {
        std::vector<RationalComplex> c(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k].conj();
        return Polynomial(std::move(c));
    }

    std::complex<double> eval(double x) const {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].to_complex();
        return acc;
    }

    RationalComplex eval_exact(const Rational& x) const {
        RationalComplex acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = RationalComplex(x) * acc + coeffs_[k];
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<RationalComplex> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) + b.coefficient(k);
        return Polynomial(std::move(s));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<RationalComplex> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) - b.coefficient(k);
        return Polynomial(std::move(s));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<RationalComplex> s(a.coeffs_.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = -a.coeffs_[k];
        return Polynomial(std::move(s));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<RationalComplex> p(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k) p[j + k] += a.coeffs_[j] * b.coeffs_[k];
        return Polynomial(std::move(p));
    }
    friend Polynomial operator*(const RationalComplex& c, const Polynomial& a) {
        std::vector<RationalComplex> p(a.coeffs_.size());
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = c * a.coeffs_[k];
        return Polynomial(std::move(p));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

    std::string to_string() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<RationalComplex> coeffs_;
};

}  // namespace qd
