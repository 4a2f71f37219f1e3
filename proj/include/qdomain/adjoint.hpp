#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "qdomain/operator_spec.hpp"

namespace qd {

// Lagrange adjoint  L†g = sum_k (-1)^k d^k/dx^k ( conj(c_k) g ), expanded to
// coefficient form. Exact in rational arithmetic; applying it twice returns
// the original expression coefficient-for-coefficient.
DifferentialExpression formal_adjoint(const DifferentialExpression& expr);

bool is_formally_symmetric(const DifferentialExpression& expr);

// Bilinear boundary concomitant S with
//   <g, L f> - <L†g, f> = S(g,f)(upper) - S(g,f)(lower)
// for smooth f, g on a finite interval, where
//   S(g,f)(x) = sum_{r,s} conj(g^{(r)}(x)) * M_rs(x) * f^{(s)}(x).
// The polynomial matrix M is produced symbolically.
class SurfaceForm {
  public:
    explicit SurfaceForm(const DifferentialExpression& expr);

    const Polynomial& entry(int r, int s) const { return m_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(s)); }

    // Pointwise concomitant matrix at x: jet(g)^H * M(x) * jet(f).
    Eigen::Matrix<std::complex<double>, kJetPerEnd, kJetPerEnd> eval(double x) const;

    // Full jet-space matrix C with S(g,f) = jet8(g)^H * C * jet8(f), where the
    // upper endpoint enters with + and the lower with -. Blocks at infinite
    // endpoints are zero (decay supplies the vanishing there).
    Eigen::Matrix<std::complex<double>, kJetDim, kJetDim> concomitant(const ExtendedInterval& iv) const;

    bool identically_zero() const;

  private:
    std::array<std::array<Polynomial, kJetPerEnd>, kJetPerEnd> m_;
};

// Largest boundary-form system on g making the surface term vanish against
// every f in the spec's domain. Finite-endpoint linear algebra on the jet
// space; for a spec with no surviving constraint the returned system is
// empty (maximal-domain adjoint).
BoundarySystem adjoint_domain(const OperatorSpec& spec);

// Hermitian / self-adjoint classification. Deficiency indices and the
// spectrum region are filled by the deficiency module when the spec is
// Hermitian and the solver supports its form.
ClassificationReport classify(const OperatorSpec& spec);

// classify() without the deficiency delegation (used internally to avoid
// recursion between the modules).
ClassificationReport classify_boundary_only(const OperatorSpec& spec);

}  // namespace qd
