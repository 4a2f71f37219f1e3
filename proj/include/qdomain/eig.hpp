#pragma once

#include <Eigen/Dense>

#include "qdomain/discretize.hpp"
#include "qdomain/grid.hpp"

namespace qd {

// Eigenpairs of a discretized self-adjoint realization, ascending, with the
// deterministic phase convention (first significant component positive real).
struct SpectralDecomposition {
    Grid grid;
    Eigen::VectorXd eigenvalues;  // k entries
    Eigen::MatrixXcd vectors;     // n x k, l2-orthonormal columns

    // continuum-normalized overlap coefficients <phi_n, psi>
    Eigen::VectorXcd project(const WaveFunction& psi) const;
    // projector weights p_n = |<phi_n, psi>|^2
    Eigen::VectorXd projector_weights(const WaveFunction& psi) const;
    // continuum-normalized eigenfunction values on the grid
    WaveFunction eigenfunction(int n) const;
};

// k smallest eigenpairs via LAPACK (tridiagonal MRRR fast path, dense
// Hermitian otherwise). Rejects realizations whose symmetric flag is down.
SpectralDecomposition eigendecompose(const DiscretizedOperator& op, int k);

}  // namespace qd
