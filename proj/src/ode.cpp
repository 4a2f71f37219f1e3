#include "qdomain/ode.hpp"

#include <cmath>

namespace qd {

namespace {

// Dormand-Prince coefficients
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

double log_add(double la, double lb) {
    if (std::isinf(la) && la < 0) return lb;
    if (std::isinf(lb) && lb < 0) return la;
    const double m = std::max(la, lb);
    return m + std::log(std::exp(la - m) + std::exp(lb - m));
}

}  // namespace

OdeResult rk45_integrate(const OdeRhs& rhs, double x0, const OdeState& y0, double x1,
                         const OdeOptions& opt) {
    OdeResult res;
    res.y = y0;
    const double dir = (x1 >= x0) ? 1.0 : -1.0;
    double x = x0;
    double h = dir * std::min(opt.initial_step, std::abs(x1 - x0));
    OdeState k1 = rhs(x, res.y);

    while (dir * (x1 - x) > 0) {
        if (++res.steps > opt.max_steps) {
            res.ok = false;
            return res;
        }
        if (dir * (x + h - x1) > 0) h = x1 - x;

        const OdeState k2 = rhs(x + c2 * h, res.y + h * (a21 * k1));
        const OdeState k3 = rhs(x + c3 * h, res.y + h * (a31 * k1 + a32 * k2));
        const OdeState k4 = rhs(x + c4 * h, res.y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const OdeState k5 = rhs(x + c5 * h, res.y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const OdeState k6 =
            rhs(x + h, res.y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const OdeState y5 = res.y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const OdeState k7 = rhs(x + h, y5);
        const OdeState err_v = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double sc = opt.abs_tol + opt.rel_tol * std::max(res.y.norm(), y5.norm());
        const double err = err_v.norm() / sc;

        if (err <= 1.0) {
            // accept: trapezoid contribution of |phi|^2 over [x, x+h]
            const double m0 = std::norm(res.y(0)), m1 = std::norm(y5(0));
            const double seg = 0.5 * (m0 + m1) * std::abs(h);
            if (seg > 0)
                res.log_mass = log_add(res.log_mass, std::log(seg) + 2.0 * res.log_scale);
            x += h;
            res.y = y5;
            k1 = k7;
            const double n = res.y.norm();
            if (n > 1e50 || (n > 0 && n < 1e-50)) {
                res.log_scale += std::log(n);
                res.y /= n;
                k1 = rhs(x, res.y);
            }
        }
        const double factor =
            (err > 0) ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        h *= factor;
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(x))) {
            res.ok = false;
            return res;
        }
    }
    return res;
}

}  // namespace qd
