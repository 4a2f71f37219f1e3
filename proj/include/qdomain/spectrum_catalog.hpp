#pragma once

#include <complex>
#include <functional>
#include <string>

#include "qdomain/analytic_function.hpp"
#include "qdomain/interval.hpp"
#include "qdomain/polynomial.hpp"

namespace qd {

// Closed-form spectrum with eigenfunction closures and an exact overlap
// routine against polynomial states (oscillatory integrals done by parts, so
// high mode numbers cost nothing and lose nothing).
struct AnalyticSpectrum {
    std::string name;
    ExtendedInterval interval{0.0, 1.0};
    // smallest admissible index (1 for the well ladder, INT_MIN-free Z for circles)
    bool indexed_from_one = true;
    std::function<double(int)> eigenvalue;
    std::function<AnalyticFunction(int)> eigenfunction;
    std::function<std::complex<double>(int, const Polynomial&)> overlap_with_polynomial;
};

struct WellParams {
    double a = 1.0;
    double hbar = 1.0;
    double mass = 1.0;
};

// E_n = pi^2 hbar^2 n^2 / (8 m a^2) on [-a, a]; cosine modes for odd n, sine
// modes for even n.
AnalyticSpectrum infinite_well_spectrum(const WellParams& p = {});

// m hbar on [0, 2 pi], modes exp(i m phi)/sqrt(2 pi)
AnalyticSpectrum circle_momentum_spectrum(double hbar = 1.0);

// hbar (2 pi n - alpha) on [0, 1], modes exp(i(2 pi n - alpha) x)
AnalyticSpectrum twisted_momentum_spectrum(double alpha, double hbar = 1.0);

// dispatch by key: infinite_well | circle_Lz | momentum_twisted
AnalyticSpectrum analytic_spectrum(const std::string& key, double a_or_alpha = 1.0,
                                   double hbar = 1.0, double mass = 1.0);

}  // namespace qd
