#include "qdomain/analytic_function.hpp"

#include <cmath>
#include <stdexcept>

namespace qd {

using Cplx = std::complex<double>;

AnalyticFunction AnalyticFunction::from_polynomial(const Polynomial& p, std::string label) {
    std::vector<Callable> derivs;
    Polynomial d = p;
    for (int k = 0; k <= 8; ++k) {
        derivs.push_back([d](double x) { return d.eval(x); });
        d = d.derivative();
    }
    return AnalyticFunction(std::move(label), std::move(derivs));
}

AnalyticFunction AnalyticFunction::poly_times_gaussian(const Polynomial& p, double center,
                                                       double sigma, int max_deriv) {
    // d/dx [q(x) G] = (q' - q (x-c)/sigma^2) G: the polynomial factor obeys a
    // simple recursion, so all derivatives stay in closed form.
    const Rational s2 = rational_from_double(sigma) * rational_from_double(sigma);
    const Rational c = rational_from_double(center);
    const Polynomial shift(
        std::vector<RationalComplex>{RationalComplex(-c), RationalComplex(Rational(1))});  // (x - c)
    std::vector<Polynomial> factors{p};
    for (int k = 1; k <= max_deriv; ++k) {
        const Polynomial& prev = factors.back();
        factors.push_back(prev.derivative() - RationalComplex(Rational(1) / s2) * (shift * prev));
    }
    std::vector<Callable> derivs;
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (auto& q : factors) {
        Polynomial qq = q;
        derivs.push_back([qq, center, inv2s2](double x) {
            const double u = x - center;
            return qq.eval(x) * std::exp(-u * u * inv2s2);
        });
    }
    return AnalyticFunction("poly*gaussian", std::move(derivs));
}

AnalyticFunction AnalyticFunction::gaussian(double center, double sigma, Cplx amplitude,
                                            int max_deriv) {
    AnalyticFunction g = poly_times_gaussian(Polynomial::one(), center, sigma, max_deriv);
    std::vector<Callable> derivs;
    for (int k = 0; k <= g.max_derivative(); ++k) {
        auto base = g.derivs_[static_cast<std::size_t>(k)];
        derivs.push_back([base, amplitude](double x) { return amplitude * base(x); });
    }
    return AnalyticFunction("gaussian", std::move(derivs));
}

AnalyticFunction AnalyticFunction::modulated_gaussian(double q, double center, double sigma,
                                                      Cplx amplitude, int max_deriv) {
    // factor recursion: d/dx [p(x) e^{iqx} G] = (p' + (iq - (x-c)/s^2) p) e^{iqx} G
    const Rational s2 = rational_from_double(sigma) * rational_from_double(sigma);
    const Rational c = rational_from_double(center);
    const RationalComplex iq(Rational(0), rational_from_double(q));
    const Polynomial shift(
        std::vector<RationalComplex>{RationalComplex(-c), RationalComplex(Rational(1))});
    std::vector<Polynomial> factors{Polynomial::one()};
    for (int k = 1; k <= max_deriv; ++k) {
        const Polynomial& prev = factors.back();
        factors.push_back(prev.derivative() + iq * prev -
                          RationalComplex(Rational(1) / s2) * (shift * prev));
    }
    std::vector<Callable> derivs;
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (auto& fp : factors) {
        Polynomial qq = fp;
        derivs.push_back([qq, q, center, inv2s2, amplitude](double x) {
            const double u = x - center;
            return amplitude * qq.eval(x) * std::exp(Cplx(-u * u * inv2s2, q * x));
        });
    }
    return AnalyticFunction("modulated_gaussian", std::move(derivs));
}

AnalyticFunction AnalyticFunction::exponential(Cplx rate, Cplx amplitude, int max_deriv) {
    std::vector<Callable> derivs;
    Cplx factor = 1.0;
    for (int k = 0; k <= max_deriv; ++k) {
        const Cplx f = amplitude * factor;
        derivs.push_back([f, rate](double x) { return f * std::exp(rate * x); });
        factor *= rate;
    }
    return AnalyticFunction("exponential", std::move(derivs));
}

AnalyticFunction AnalyticFunction::circle_mode(int m) {
    const double norm = 1.0 / std::sqrt(2.0 * M_PI);
    AnalyticFunction f = exponential(Cplx(0.0, static_cast<double>(m)), Cplx(norm, 0.0), 4);
    f.label_ = "circle_mode(" + std::to_string(m) + ")";
    return f;
}

AnalyticFunction AnalyticFunction::sinusoid(double amplitude, double k, double phase,
                                            int max_deriv) {
    std::vector<Callable> derivs;
    double scale = amplitude;
    double shift = phase;
    for (int d = 0; d <= max_deriv; ++d) {
        const double s = scale, p = shift;
        derivs.push_back([s, p, k](double x) { return Cplx(s * std::sin(k * x + p), 0.0); });
        scale *= k;
        shift += M_PI / 2.0;
    }
    return AnalyticFunction("sinusoid", std::move(derivs));
}

AnalyticFunction AnalyticFunction::inverse_square_exponential(int sign_in_exponent, double hbar,
                                                              Cplx amplitude) {
    // f = A |x|^{-3/2} exp(s/(4 h x^2));  f'/f = -3/(2x) - s/(2 h x^3).
    const double s = sign_in_exponent >= 0 ? 1.0 : -1.0;
    const double h = hbar;
    auto value = [amplitude, s, h](double x) -> Cplx {
        if (x == 0.0) return s < 0 ? Cplx(0.0, 0.0) : Cplx(std::numeric_limits<double>::infinity(), 0.0);
        return amplitude * std::pow(std::abs(x), -1.5) * std::exp(s / (4.0 * h * x * x));
    };
    auto logd1 = [s, h](double x) { return -1.5 / x - s / (2.0 * h * x * x * x); };
    auto logd1p = [s, h](double x) { return 1.5 / (x * x) + 1.5 * s / (h * x * x * x * x); };
    auto d1 = [value, logd1](double x) -> Cplx {
        if (x == 0.0) return Cplx(0.0, 0.0);
        return value(x) * logd1(x);
    };
    auto d2 = [value, logd1, logd1p](double x) -> Cplx {
        if (x == 0.0) return Cplx(0.0, 0.0);
        const double l = logd1(x);
        return value(x) * (l * l + logd1p(x));
    };
    return AnalyticFunction(s > 0 ? "inv_square_exp_growing" : "inv_square_exp_decaying",
                            {value, d1, d2}, {0.0});
}

AnalyticFunction AnalyticFunction::superposition(
    std::vector<std::pair<Cplx, AnalyticFunction>> terms, std::string label) {
    if (terms.empty()) throw std::invalid_argument("superposition: no terms");
    int maxd = terms[0].second.max_derivative();
    std::vector<double> singular;
    for (auto& [c, f] : terms) {
        maxd = std::min(maxd, f.max_derivative());
        singular.insert(singular.end(), f.singular_points().begin(), f.singular_points().end());
    }
    auto shared = std::make_shared<std::vector<std::pair<Cplx, AnalyticFunction>>>(std::move(terms));
    std::vector<Callable> derivs;
    for (int k = 0; k <= maxd; ++k) {
        derivs.push_back([shared, k](double x) {
            Cplx acc{0.0, 0.0};
            for (const auto& [c, f] : *shared) acc += c * f.derivative(k, x);
            return acc;
        });
    }
    return AnalyticFunction(std::move(label), std::move(derivs), std::move(singular));
}

std::complex<double> apply_exact(const DifferentialExpression& expr, const AnalyticFunction& f,
                                 double x) {
    if (f.is_singular_at(x)) throw std::domain_error("apply_exact: evaluation at a singular point");
    if (f.max_derivative() < expr.order())
        throw std::invalid_argument("apply_exact: function carries too few derivatives");
    Cplx acc{0.0, 0.0};
    for (int k = 0; k <= expr.order(); ++k)
        acc += expr.coefficient(k).eval(x) * f.derivative(k, x);
    return acc;
}

AnalyticFunction apply_expression(const DifferentialExpression& expr, const AnalyticFunction& f,
                                  std::string label) {
    const int avail = f.max_derivative() - expr.order();
    if (avail < 0) throw std::invalid_argument("apply_expression: function carries too few derivatives");

    auto shared = std::make_shared<AnalyticFunction>(f);
    auto sharedExpr = std::make_shared<DifferentialExpression>(expr);
    std::vector<AnalyticFunction::Callable> derivs;
    for (int j = 0; j <= avail; ++j) {
        derivs.push_back([shared, sharedExpr, j](double x) {
            // d^j/dx^j sum_k c_k f^{(k)} = sum_k sum_{r<=j} C(j,r) c_k^{(r)} f^{(k+j-r)}
            Cplx acc{0.0, 0.0};
            for (int k = 0; k <= sharedExpr->order(); ++k) {
                Polynomial c = sharedExpr->coefficient(k);
                double binom = 1.0;
                for (int r = 0; r <= j; ++r) {
                    if (!c.is_zero())
                        acc += binom * c.eval(x) * shared->derivative(k + j - r, x);
                    c = c.derivative();
                    binom = binom * (j - r) / (r + 1.0);
                }
            }
            return acc;
        });
    }
    if (label.empty()) label = "L[" + f.label() + "]";
    return AnalyticFunction(std::move(label), std::move(derivs), f.singular_points());
}

}  // namespace qd
