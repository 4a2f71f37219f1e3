#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qdomain/polynomial.hpp"

namespace qd {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Nodes and weights by Newton iteration on the Legendre polynomial.
const GaussRule& gauss_legendre(int order);

struct QuadratureOptions {
    int panels = 64;
    int order = 16;
};

// Environment hook honored by the CLI; returns the default order unless
// QDOMAIN_QUAD_ORDER is set.
int default_quadrature_order();

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, const QuadratureOptions& opt = {});

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& opt = {});

// integral_{a..b} p(x) exp(i k x) dx, exact (repeated integration by parts;
// the series terminates for polynomials). Falls back to quadrature when |k|
// is too small for the recursion to be well conditioned.
std::complex<double> integrate_poly_oscillatory(const Polynomial& p, double k, double a, double b);

// Mass of |f|^2 on dyadic shells marching from `start` toward `direction`
// (+1 or -1) up to `count` shells of initial width `width0`, each shell
// `factor` times the previous (2 marching to infinity, 1/2 closing in on a
// finite accumulation point). Used by integrability classifiers.
std::vector<double> dyadic_shell_masses(const std::function<std::complex<double>(double)>& f,
                                        double start, int direction, double width0, int count,
                                        int order = 16, double factor = 2.0);

enum class TailClass { convergent, divergent, inconclusive };

// Geometric decay/growth classification of shell masses: convergent when the
// ratio stays <= lo for `needed` consecutive shells, divergent when >= hi.
TailClass classify_shell_masses(const std::vector<double>& masses, double lo = 0.75,
                                double hi = 1.25, int needed = 5);

std::string to_string(TailClass c);

}  // namespace qd
