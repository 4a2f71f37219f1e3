#pragma once

#include <functional>
#include <optional>

#include "qdomain/eig.hpp"
#include "qdomain/membership.hpp"
#include "qdomain/operator_spec.hpp"
#include "qdomain/spectrum_catalog.hpp"

namespace qd {

// ---------------------------------------------------------------------------
// spectral functions of operators: f(A) = sum f(E_n) P_n
// ---------------------------------------------------------------------------

struct SpectralFunctionOperator {
    SpectralDecomposition dec;
    Eigen::VectorXd mapped;  // f(E_n)

    struct Applied {
        WaveFunction result;
        double truncation_residual;  // 1 - sum p_n over the available modes
    };
    Applied apply(const WaveFunction& psi) const;

    // <psi, f(A) psi> over the available modes
    double quadratic_form(const WaveFunction& psi) const;
};

SpectralFunctionOperator operator_function(const SpectralDecomposition& dec,
                                           const std::function<double(double)>& f);

// ---------------------------------------------------------------------------
// expectation values
// ---------------------------------------------------------------------------

struct ExpectationResult {
    std::complex<double> value;
    // Domain violation detected: the value is still reported, labeled formal,
    // with the membership evidence attached.
    bool formal = false;
    bool imaginary_residue_flagged = false;
    std::optional<DomainVerdict> verdict;
};

// <psi, L psi> by composite Gauss-Legendre on the spec interval (infinite
// intervals truncated where the integrand tail falls below 1e-14 of its peak).
ExpectationResult expectation(const OperatorSpec& spec, const AnalyticFunction& psi,
                              const QuadratureOptions& opt = {});

// grid path: <psi, M psi> under the grid weights
std::complex<double> expectation(const Eigen::MatrixXcd& m, const WaveFunction& psi);

// ||L psi||^2 by quadrature (same truncation policy)
double image_norm_sq(const OperatorSpec& spec, const AnalyticFunction& psi,
                     const QuadratureOptions& opt = {});

// ---------------------------------------------------------------------------
// moments through the spectrum
// ---------------------------------------------------------------------------

struct MomentResult {
    double partial_sum = 0.0;  // sum_{n <= n_max} E_n^power p_n
    double tail_estimate = 0.0;
    double weight_sum = 0.0;  // sum of p_n over the same range
    double decay_exponent = 0.0;

    double total() const { return partial_sum + tail_estimate; }
};

// exact overlaps against a polynomial state; n_max counts ladder modes (or
// |m| <= n_max for integer-indexed spectra)
MomentResult moment_via_spectrum(const AnalyticSpectrum& spectrum, const Polynomial& psi,
                                 int power, int n_max);

// discretized path: p_n from the decomposition's projectors
MomentResult moment_via_spectrum(const SpectralDecomposition& dec, const WaveFunction& psi,
                                 int power, int n_max);

// ---------------------------------------------------------------------------
// uncertainty products
// ---------------------------------------------------------------------------

struct UncertaintyReport {
    double delta_a = 0.0;
    double delta_b = 0.0;
    std::complex<double> mean_a, mean_b;
    double lhs_product = 0.0;
    // 1/2 | i<A psi, B psi> - i<B psi, A psi> |: defined on D(A) cap D(B)
    double rhs_sesquilinear = 0.0;
    // 1/2 | <psi, i[A,B] psi> |: only when psi lies in D(AB) cap D(BA)
    std::optional<double> rhs_commutator;
    // i (S_A(psi, B psi) - S_B(psi, A psi)): the boundary term separating the
    // commutator form from the sesquilinear form
    std::complex<double> surface_contribution;
};

// psi must lie in D(A) cap D(B); throws std::domain_error otherwise.
UncertaintyReport uncertainty_product(const OperatorSpec& a, const OperatorSpec& b,
                                      const AnalyticFunction& psi,
                                      const QuadratureOptions& opt = {});

// ---------------------------------------------------------------------------
// Fourier transform to the momentum representation
// ---------------------------------------------------------------------------

// (F psi)(p) = (2 pi hbar)^{-1/2} int psi(x) exp(-i p x / hbar) dx on a
// uniform grid; unitary by construction, so Parseval holds to roundoff.
WaveFunction fourier_transform(const WaveFunction& psi, double hbar = 1.0);

// ---------------------------------------------------------------------------
// Weyl relation check on a periodic grid
// ---------------------------------------------------------------------------

struct WeylResult {
    double deviation = 0.0;
    // exp(-i a L / hbar) = 1 required for the translation to close on the
    // circle; reported so callers can interpret a nonzero deviation
    bool torus_compatible = true;
};

// || U_a V_b psi - exp(-i a b / hbar) V_b U_a psi || with U_a the coordinate
// phase and V_b the lattice translation; b must be a multiple of the spacing.
WeylResult weyl_check(double a, double b, const WaveFunction& psi, double hbar = 1.0);

// ---------------------------------------------------------------------------
// approximate eigenfunctions
// ---------------------------------------------------------------------------

struct ApproxEigenResult {
    AnalyticFunction state;
    double lambda = 0.0;
    double residual = 0.0;  // ||(A - lambda) psi|| / ||psi||
    double truncation = 0.0;
};

// normalized Gaussian of width eps at x0; residual eps/sqrt(2) against the
// position operator. When a grid is supplied, eps below the spacing is refused.
ApproxEigenResult approximate_position_eigenfunction(double x0, double eps,
                                                     const Grid* grid = nullptr);

// plane wave under a broad spatial envelope; residual hbar/(width sqrt(2))
ApproxEigenResult approximate_momentum_eigenfunction(double p0, double width, double hbar = 1.0,
                                                     const Grid* grid = nullptr);

}  // namespace qd
