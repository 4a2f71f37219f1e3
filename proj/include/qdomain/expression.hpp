#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdomain/polynomial.hpp"

namespace qd {

inline constexpr int kMaxExpressionOrder = 4;

// Differential expression  L = sum_k c_k(x) d^k/dx^k  with polynomial
// coefficients, order <= 4. Physical constants are kept alongside so the
// standard builders stay dimensionally faithful; they are folded into the
// coefficients exactly (doubles are dyadic rationals).
class DifferentialExpression {
  public:
    DifferentialExpression() : coeffs_(1) {}

    DifferentialExpression(std::vector<Polynomial> coeffs, double hbar = 1.0, double mass = 1.0)
        : coeffs_(std::move(coeffs)), hbar_(hbar), mass_(mass) {
        if (coeffs_.empty()) coeffs_.resize(1);
        if (coeffs_.size() > kMaxExpressionOrder + 1)
            throw std::invalid_argument("differential expression order exceeds 4");
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (hbar_ <= 0 || mass_ <= 0) throw std::invalid_argument("hbar and mass must be positive");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }
    double hbar() const { return hbar_; }
    double mass() const { return mass_; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    // Exact action on a polynomial argument.
    Polynomial apply_to_polynomial(const Polynomial& p) const {
        Polynomial out;
        Polynomial dp = p;
        for (int k = 0; k <= order(); ++k) {
            out += coeffs_[static_cast<std::size_t>(k)] * dp;
            dp = dp.derivative();
        }
        return out;
    }

    friend bool operator==(const DifferentialExpression& a, const DifferentialExpression& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DifferentialExpression& a, const DifferentialExpression& b) {
        return !(a == b);
    }

    std::string to_string() const;

  private:
    std::vector<Polynomial> coeffs_;  // coeffs_[k] multiplies d^k/dx^k
    double hbar_ = 1.0;
    double mass_ = 1.0;
};

// Standard operator builders. hbar enters as an exact rational factor.
namespace ops {

// (hbar/i) d/dx
DifferentialExpression momentum(double hbar = 1.0);
// multiplication by x
DifferentialExpression position();
// multiplication by an arbitrary real polynomial
DifferentialExpression multiplication(Polynomial p);
// -(hbar^2/2m) d^2/dx^2
DifferentialExpression kinetic(double hbar = 1.0, double mass = 1.0);
// (hbar^4/4m^2) d^4/dx^4, the square of the kinetic expression
DifferentialExpression kinetic_squared(double hbar = 1.0, double mass = 1.0);
// P x^n + x^n P = (hbar/i)(2 x^n d/dx + n x^{n-1})
DifferentialExpression symmetric_pq_power(int n, double hbar = 1.0);

}  // namespace ops

}  // namespace qd
