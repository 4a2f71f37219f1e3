#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdomain/interval.hpp"

namespace qd {

// Endpoint jet layout: (f(a), f'(a), f''(a), f'''(a), f(b), f'(b), f''(b), f'''(b)).
// Jets at infinite endpoints are identically zero; functionals may not touch them.
inline constexpr int kJetPerEnd = 4;
inline constexpr int kJetDim = 2 * kJetPerEnd;

using JetVector = Eigen::Matrix<std::complex<double>, kJetDim, 1>;
using JetRow = Eigen::Matrix<std::complex<double>, 1, kJetDim>;

inline int jet_index(bool upper_end, int deriv) { return (upper_end ? kJetPerEnd : 0) + deriv; }

// One homogeneous linear condition on the endpoint jet.
struct BoundaryFunctional {
    JetRow row = JetRow::Zero();
    std::string label;

    static BoundaryFunctional value(bool upper_end, int deriv, std::string label = {});
    // f^{(deriv)}(a) - phase * f^{(deriv)}(b) = 0
    static BoundaryFunctional linked(int deriv, std::complex<double> phase, std::string label = {});

    std::string to_string() const;
};

// A system of boundary functionals; the domain it encodes is their joint
// null space inside the active jet coordinates. An empty system is the
// maximal domain.
class BoundarySystem {
  public:
    BoundarySystem() = default;
    explicit BoundarySystem(std::vector<BoundaryFunctional> rows) : rows_(std::move(rows)) {}

    static BoundarySystem maximal() { return BoundarySystem(); }
    static BoundarySystem dirichlet_both_ends();
    static BoundarySystem dirichlet_lower();
    static BoundarySystem periodic();
    static BoundarySystem quasi_periodic(double alpha);
    // f^{(k)}(a) = phase f^{(k)}(b) for k = 0..jets-1 (second-order operators
    // need the derivative linked as well)
    static BoundarySystem linked_jets(double alpha, int jets);
    static BoundarySystem neumann_both_ends();
    static BoundarySystem robin_both_ends(double theta);
    // value and second derivative pinned at both ends (fourth-order wells)
    static BoundarySystem clamped_value_and_second();

    bool empty() const { return rows_.empty(); }
    std::size_t size() const { return rows_.size(); }
    const std::vector<BoundaryFunctional>& rows() const { return rows_; }
    void add(BoundaryFunctional f) { rows_.push_back(std::move(f)); }

    Eigen::MatrixXcd matrix() const;

    // True when every row touches only jets of finite endpoints.
    bool respects(const ExtendedInterval& iv) const;

    std::string to_string() const;

  private:
    std::vector<BoundaryFunctional> rows_;
};

// Jet coordinates that are alive for a given interval (finite endpoints only).
std::vector<int> active_jet_indices(const ExtendedInterval& iv);

// Orthonormal basis (kJetDim x k) of the constraint null space of `sys`
// restricted to the active jet coordinates; inactive coordinates are pinned
// to zero.
Eigen::MatrixXcd constraint_null_basis(const BoundarySystem& sys, const ExtendedInterval& iv,
                                       double tol = 1e-12);

// Row-space rank over the active coordinates.
int system_rank(const BoundarySystem& sys, const ExtendedInterval& iv, double tol = 1e-12);

// Subspace tests on the encoded domains (null spaces over active coordinates).
bool same_domain_subspace(const BoundarySystem& a, const BoundarySystem& b,
                          const ExtendedInterval& iv, double tol = 1e-12);
// domain(a) <= domain(b), i.e. a's constraints imply membership in b's domain.
bool domain_contained_in(const BoundarySystem& a, const BoundarySystem& b,
                         const ExtendedInterval& iv, double tol = 1e-12);

}  // namespace qd
