#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdomain/analytic_function.hpp"
#include "qdomain/operator_spec.hpp"
#include "qdomain/quadrature.hpp"

namespace qd {

struct BoundaryCheck {
    std::string condition;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Verdict of a domain-membership test with the evidence that produced it.
struct DomainVerdict {
    bool in_domain = false;
    bool conclusive = true;
    std::vector<BoundaryCheck> boundary_checks;
    TailClass image_integrability = TailClass::convergent;
    double image_norm_sq = 0.0;  // finite part of ||L f||^2
    std::optional<bool> rapid_decay_ok;
    std::vector<std::string> notes;

    std::string to_string() const;
};

// Membership of an analytic function in the spec's domain: every boundary
// functional must vanish on the endpoint jet (residual tolerance relative to
// the jet scale), L f must be square integrable (quadrature, with shell
// classification toward infinite or singular points), and rapidly-decreasing
// domains additionally require polynomial-weighted decay. An inconclusive
// integrability classification is reported, never silently passed.
DomainVerdict is_in_domain(const OperatorSpec& spec, const AnalyticFunction& f);

// Grid-function variant: jets by one-sided finite differences, image norm by
// stencil application and summation. Boundary residual tolerances are widened
// to the finite-difference accuracy.
DomainVerdict is_in_domain(const OperatorSpec& spec, const std::vector<double>& xs,
                           const std::vector<std::complex<double>>& values);

}  // namespace qd
