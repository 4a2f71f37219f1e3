#include "qdomain/spectrum_catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "qdomain/quadrature.hpp"

namespace qd {

namespace {
using Cplx = std::complex<double>;
}

AnalyticSpectrum infinite_well_spectrum(const WellParams& p) {
    AnalyticSpectrum s;
    s.name = "infinite_well";
    s.interval = ExtendedInterval(-p.a, p.a);
    s.indexed_from_one = true;
    const double a = p.a, hbar = p.hbar, mass = p.mass;
    s.eigenvalue = [a, hbar, mass](int n) {
        if (n < 1) throw std::invalid_argument("well: n starts at 1");
        return M_PI * M_PI * hbar * hbar * n * n / (8.0 * mass * a * a);
    };
    s.eigenfunction = [a](int n) {
        const double k = n * M_PI / (2.0 * a);
        const double amp = 1.0 / std::sqrt(a);
        // odd n: cos(kx) = sin(kx + pi/2); even n: sin(kx)
        return AnalyticFunction::sinusoid(amp, k, (n % 2 == 1) ? M_PI / 2.0 : 0.0, 4);
    };
    s.overlap_with_polynomial = [a](int n, const Polynomial& poly) {
        const double k = n * M_PI / (2.0 * a);
        const double amp = 1.0 / std::sqrt(a);
        // sin/cos as combinations of e^{+-ikx}, each integral exact
        const Cplx plus = integrate_poly_oscillatory(poly, k, -a, a);
        const Cplx minus = integrate_poly_oscillatory(poly, -k, -a, a);
        if (n % 2 == 1) return amp * 0.5 * (plus + minus);                  // cos
        return amp * (plus - minus) / Cplx(0.0, 2.0);                       // sin
    };
    return s;
}

AnalyticSpectrum circle_momentum_spectrum(double hbar) {
    AnalyticSpectrum s;
    s.name = "circle_Lz";
    s.interval = ExtendedInterval(0.0, 2.0 * M_PI);
    s.indexed_from_one = false;
    s.eigenvalue = [hbar](int m) { return m * hbar; };
    s.eigenfunction = [](int m) { return AnalyticFunction::circle_mode(m); };
    s.overlap_with_polynomial = [](int m, const Polynomial& poly) {
        const double norm = 1.0 / std::sqrt(2.0 * M_PI);
        // <phi_m, p> = norm * int p e^{-i m x}
        return norm * integrate_poly_oscillatory(poly, -static_cast<double>(m), 0.0, 2.0 * M_PI);
    };
    return s;
}

AnalyticSpectrum twisted_momentum_spectrum(double alpha, double hbar) {
    AnalyticSpectrum s;
    s.name = "momentum_twisted";
    s.interval = ExtendedInterval(0.0, 1.0);
    s.indexed_from_one = false;
    s.eigenvalue = [alpha, hbar](int n) { return hbar * (2.0 * M_PI * n - alpha); };
    s.eigenfunction = [alpha, hbar](int n) {
        const double q = (2.0 * M_PI * n - alpha);  // momentum / hbar
        (void)hbar;
        return AnalyticFunction::exponential(Cplx(0.0, q), Cplx(1.0, 0.0), 4);
    };
    s.overlap_with_polynomial = [alpha](int n, const Polynomial& poly) {
        const double q = (2.0 * M_PI * n - alpha);
        return integrate_poly_oscillatory(poly, -q, 0.0, 1.0);
    };
    return s;
}

AnalyticSpectrum analytic_spectrum(const std::string& key, double a_or_alpha, double hbar,
                                   double mass) {
    if (key == "infinite_well") return infinite_well_spectrum({a_or_alpha, hbar, mass});
    if (key == "circle_Lz") return circle_momentum_spectrum(hbar);
    if (key == "momentum_twisted") return twisted_momentum_spectrum(a_or_alpha, hbar);
    throw std::invalid_argument("analytic_spectrum: unknown key '" + key + "'");
}

}  // namespace qd
