#include "qdomain/eig.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <lapacke.h>

namespace qd {

namespace {

using Cplx = std::complex<double>;

bool is_real_tridiagonal(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    const double tol = 1e-14 * std::max(1.0, m.norm());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (std::abs(i - j) > 1) {
                if (std::abs(m(i, j)) > tol) return false;
            } else if (std::abs(m(i, j).imag()) > tol) {
                return false;
            }
        }
    return true;
}

void fix_phase(Eigen::MatrixXcd& vectors) {
    for (int c = 0; c < vectors.cols(); ++c) {
        const double peak = vectors.col(c).cwiseAbs().maxCoeff();
        for (int r = 0; r < vectors.rows(); ++r) {
            const Cplx v = vectors(r, c);
            if (std::abs(v) > 1e-6 * peak) {
                vectors.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
}

}  // namespace

SpectralDecomposition eigendecompose(const DiscretizedOperator& op, int k) {
    const int n = static_cast<int>(op.matrix.rows());
    if (k < 1 || k > n) throw std::invalid_argument("eigendecompose: k out of range");
    if (!op.symmetric) {
        std::string why = "eigendecompose: realization is not flagged symmetric";
        for (const auto& w : op.warnings) why += "; " + w;
        throw std::invalid_argument(why);
    }

    SpectralDecomposition dec;
    dec.grid = op.grid;
    dec.eigenvalues.resize(k);
    dec.vectors.resize(n, k);

    if (is_real_tridiagonal(op.matrix)) {
        std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)] = op.matrix(i, i).real();
            if (i + 1 < n) e[static_cast<std::size_t>(i)] = op.matrix(i + 1, i).real();
        }
        std::vector<double> w(static_cast<std::size_t>(n));
        std::vector<double> z(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
        std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(k));
        lapack_int found = 0;
        lapack_logical tryrac = 1;
        const lapack_int info = LAPACKE_dstemr(
            LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, k, &found, w.data(),
            z.data(), n, k, isuppz.data(), &tryrac);
        if (info != 0 || found < k) {
            std::ostringstream os;
            os << "eigendecompose: tridiagonal MRRR failed, info=" << info << ", found=" << found;
            throw std::runtime_error(os.str());
        }
        for (int c = 0; c < k; ++c) {
            dec.eigenvalues(c) = w[static_cast<std::size_t>(c)];
            for (int r = 0; r < n; ++r)
                dec.vectors(r, c) =
                    Cplx(z[static_cast<std::size_t>(c) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(r)],
                         0.0);
        }
    } else {
        Eigen::MatrixXcd a = op.matrix;  // overwritten by LAPACK
        std::vector<double> w(static_cast<std::size_t>(n));
        Eigen::MatrixXcd z(n, k);
        std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(std::max(1, k)));
        lapack_int found = 0;
        // std::complex<double> is layout-compatible with the C99 complex
        // LAPACKE expects
        const lapack_int info = LAPACKE_zheevr(
            LAPACK_COL_MAJOR, 'V', 'I', 'L', n, reinterpret_cast<lapack_complex_double*>(a.data()),
            n, 0.0, 0.0, 1, k, 0.0, &found, w.data(),
            reinterpret_cast<lapack_complex_double*>(z.data()), n, isuppz.data());
        if (info != 0 || found < k) {
            std::ostringstream os;
            os << "eigendecompose: Hermitian solver failed, info=" << info << ", found=" << found;
            throw std::runtime_error(os.str());
        }
        for (int c = 0; c < k; ++c) dec.eigenvalues(c) = w[static_cast<std::size_t>(c)];
        dec.vectors = z;
    }

    fix_phase(dec.vectors);
    return dec;
}

Eigen::VectorXcd SpectralDecomposition::project(const WaveFunction& psi) const {
    if (psi.grid.n != grid.n) throw std::invalid_argument("project: grid mismatch");
    // uniform-weight grids: continuum phi_n = v_n / sqrt(h)
    return std::sqrt(grid.spacing) * (vectors.adjoint() * psi.values);
}

Eigen::VectorXd SpectralDecomposition::projector_weights(const WaveFunction& psi) const {
    return project(psi).cwiseAbs2();
}

WaveFunction SpectralDecomposition::eigenfunction(int n) const {
    if (n < 0 || n >= vectors.cols()) throw std::invalid_argument("eigenfunction: index");
    WaveFunction w;
    w.grid = grid;
    w.values = vectors.col(n) / std::sqrt(grid.spacing);
    return w;
}

}  // namespace qd
