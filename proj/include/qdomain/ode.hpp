#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qd {

using OdeState = Eigen::VectorXcd;
using OdeRhs = std::function<OdeState(double, const OdeState&)>;

struct OdeResult {
    OdeState y;
    // Accumulated log-scale: the true solution is exp(log_scale) * y.
    // Renormalization keeps long exponentially growing solves in range.
    double log_scale = 0.0;
    // log of integral |phi|^2 dx over the traversed span (phi = component 0),
    // including the scale factor. -inf when the mass is zero.
    double log_mass = -std::numeric_limits<double>::infinity();
    bool ok = true;
    int steps = 0;
};

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double initial_step = 1e-4;
    int max_steps = 200000;
};

// Embedded Dormand-Prince 4(5) with adaptive steps and renormalization.
// Integrates from x0 to x1 (either direction) and accumulates the |y[0]|^2
// trapezoid mass along the way.
OdeResult rk45_integrate(const OdeRhs& rhs, double x0, const OdeState& y0, double x1,
                         const OdeOptions& opt = {});

}  // namespace qd
