#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qdomain/expression.hpp"

namespace qd {

// Closed-form test function: a value callable plus as many derivative
// callables as the construction affords, with declared singular points.
class AnalyticFunction {
  public:
    using Callable = std::function<std::complex<double>(double)>;

    AnalyticFunction() = default;
    AnalyticFunction(std::string label, std::vector<Callable> derivs,
                     std::vector<double> singular = {})
        : label_(std::move(label)), derivs_(std::move(derivs)), singular_(std::move(singular)) {}

    const std::string& label() const { return label_; }
    int max_derivative() const { return static_cast<int>(derivs_.size()) - 1; }
    const std::vector<double>& singular_points() const { return singular_; }

    bool is_singular_at(double x, double tol = 1e-12) const {
        for (double s : singular_)
            if (std::abs(x - s) <= tol) return true;
        return false;
    }

    std::complex<double> value(double x) const { return derivs_.at(0)(x); }
    std::complex<double> derivative(int k, double x) const {
        return derivs_.at(static_cast<std::size_t>(k))(x);
    }

    static AnalyticFunction from_polynomial(const Polynomial& p, std::string label = "polynomial");
    // c * p(x) * exp(-(x-center)^2 / (2 sigma^2)), derivatives to any order
    static AnalyticFunction gaussian(double center, double sigma, std::complex<double> amplitude,
                                     int max_deriv = 4);
    static AnalyticFunction poly_times_gaussian(const Polynomial& p, double center, double sigma,
                                                int max_deriv = 4);
    // amplitude * exp(i q x) * exp(-(x-center)^2/(2 sigma^2))
    static AnalyticFunction modulated_gaussian(double q, double center, double sigma,
                                               std::complex<double> amplitude, int max_deriv = 4);
    // amplitude * exp(c x)
    static AnalyticFunction exponential(std::complex<double> rate, std::complex<double> amplitude,
                                        int max_deriv = 4);
    // circle eigenmode exp(i m phi) / sqrt(2 pi)
    static AnalyticFunction circle_mode(int m);
    // amplitude * sin(k x + phase), real-valued
    static AnalyticFunction sinusoid(double amplitude, double k, double phase,
                                     int max_deriv = 4);
    // amplitude * |x|^{-3/2} exp(s/(4 h x^2)) with s = +-1; value 0 at x = 0 when decaying
    static AnalyticFunction inverse_square_exponential(int sign_in_exponent, double hbar,
                                                       std::complex<double> amplitude);

    // sum of scaled functions (termwise derivatives)
    static AnalyticFunction superposition(std::vector<std::pair<std::complex<double>, AnalyticFunction>> terms,
                                          std::string label);

  private:
    std::string label_;
    std::vector<Callable> derivs_;
    std::vector<double> singular_;
};

// (L f)(x) = sum_k c_k(x) f^{(k)}(x); requires f to carry derivatives up to
// the expression order. Throws on declared singular points.
std::complex<double> apply_exact(const DifferentialExpression& expr, const AnalyticFunction& f,
                                 double x);

// L f as a new analytic function carrying max_derivative(f) - order(L)
// derivatives (Leibniz on the polynomial coefficients).
AnalyticFunction apply_expression(const DifferentialExpression& expr, const AnalyticFunction& f,
                                  std::string label = {});

}  // namespace qd
