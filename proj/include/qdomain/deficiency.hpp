#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdomain/adjoint.hpp"
#include "qdomain/operator_spec.hpp"
#include "qdomain/quadrature.hpp"

namespace qd {

// One kernel element of (L† -/+ i kappa), with the integrability evidence
// that decided whether it contributes to the index.
struct DeficiencySolution {
    int sign = +1;  // lambda = sign * i * kappa
    std::string form;
    bool square_integrable = false;
    TailClass lower_classification = TailClass::convergent;
    TailClass upper_classification = TailClass::convergent;
    std::string detail;
};

struct DeficiencyResult {
    int n_plus = 0;
    int n_minus = 0;
    double kappa = 1.0;
    std::string method;
    bool conclusive = true;
    std::vector<DeficiencySolution> evidence;
    std::vector<std::string> notes;

    std::pair<int, int> indices() const { return {n_plus, n_minus}; }
};

struct DeficiencyOptions {
    // kappa carries the operator's units; the indices are invariant under
    // kappa > 0, so the default is immaterial and tested to be so.
    double kappa = 1.0;
    // Bypass the closed-form catalogs and force the ODE route (used for
    // catalog/numeric agreement checks).
    bool force_numeric = false;
};

// Solves L† phi = +- i kappa phi subject to the adjoint domain's boundary
// forms and counts independent square-integrable solutions per sign.
// Requires the spec to classify Hermitian.
DeficiencyResult deficiency_indices(const OperatorSpec& spec, const DeficiencyOptions& opt = {});

// Spectrum of a Hermitian operator from its deficiency indices.
// Orientation convention: Ker(A† - i kappa) non-trivial (n+ > 0) puts the
// residual spectrum in the lower half-plane, so (p>0, 0) -> closed lower,
// (0, q>0) -> closed upper.
SpectrumRegion spectrum_region_for(int n_plus, int n_minus);

struct ExtensionFamily {
    bool exists = false;
    std::string reason;           // when !exists, cites the index obstruction
    int parameter_dimension = 0;  // m^2 real parameters for indices (m, m)
    std::string catalog_name;
    OperatorSpec base;
    // one-parameter generator (phase alpha) for index (1,1) families
    std::function<OperatorSpec(double)> generator;
    // named self-adjoint presets for the (2,2) second-order catalog
    std::vector<std::pair<std::string, OperatorSpec>> presets;
};

ExtensionFamily self_adjoint_extensions(const OperatorSpec& spec);

enum class PointSpectrumClass { eigenvalue_of_spec, eigenvalue_of_adjoint, neither };

struct PointSpectrumResult {
    PointSpectrumClass cls = PointSpectrumClass::neither;
    std::complex<double> rate;  // phi_z(x) = exp(rate * x)
    double domain_residual = 0.0;
    double adjoint_residual = 0.0;
};

// Tests the exponential solution of (first-order, finite-interval) L phi = z phi
// for membership in the spec's domain and in the adjoint domain.
PointSpectrumResult point_spectrum_first_order(const OperatorSpec& spec, std::complex<double> z);

std::string to_string(PointSpectrumClass c);

}  // namespace qd
