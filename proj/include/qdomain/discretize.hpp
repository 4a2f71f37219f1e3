#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdomain/grid.hpp"
#include "qdomain/operator_spec.hpp"

namespace qd {

// Boundary-condition-aware matrix realization of a spec.
//
// Open topology uses the centered finite-difference stencils (2-point skew
// for d/dx, 3-point for d^2, 5-point for d^4) with Dirichlet rows eliminating
// the endpoint unknowns; periodic and phase-linked domains use the twisted
// Fourier differentiation matrix, which is exact on every resolved mode.
struct DiscretizedOperator {
    Eigen::MatrixXcd matrix;
    Grid grid;
    // True when the matrix is numerically conjugate-symmetric.
    bool hermitian_matrix = false;
    // True only when the spec itself is self-adjoint and the matrix is
    // Hermitian: the gate for eigendecomposition. A merely-Hermitian spec
    // gets a warning instead, its discrete spectrum is not meaningful.
    bool symmetric = false;
    std::vector<std::string> warnings;
    std::optional<double> truncation_used;
};

DiscretizedOperator discretize(const OperatorSpec& spec, int n,
                               std::optional<double> truncation = std::nullopt);

}  // namespace qd
