#include "qdomain/discretize.hpp"

#include <cmath>
#include <sstream>

#include "qdomain/adjoint.hpp"
#include "qdomain/deficiency.hpp"

namespace qd {

namespace {

using Cplx = std::complex<double>;

struct DomainKind {
    enum Kind { maximal, dirichlet, linked } kind = maximal;
    double alpha = 0.0;  // phase for linked endpoints
};

std::optional<DomainKind> detect_domain(const OperatorSpec& spec) {
    const auto& iv = spec.interval;
    if (spec.domain.empty()) return DomainKind{DomainKind::maximal, 0.0};
    if (same_domain_subspace(spec.domain, BoundarySystem::dirichlet_both_ends(), iv))
        return DomainKind{DomainKind::dirichlet, 0.0};
    // phase-linked: find a row coupling f(a) and f(b)
    for (const auto& row : spec.domain.rows()) {
        const Cplx ca = row.row(jet_index(false, 0));
        const Cplx cb = row.row(jet_index(true, 0));
        if (std::abs(ca) > 1e-12 && std::abs(cb) > 1e-12) {
            const Cplx phase = -cb / ca;
            if (std::abs(std::abs(phase) - 1.0) < 1e-10) {
                const double alpha = std::arg(phase);
                const int jets = spec.expression.order() >= 2 ? 2 : 1;
                if (same_domain_subspace(spec.domain, BoundarySystem::linked_jets(alpha, jets), iv))
                    return DomainKind{DomainKind::linked, alpha};
            }
        }
    }
    return std::nullopt;
}

// centered stencil (offset -> weight / h^k)
std::vector<std::pair<int, double>> stencil(int k) {
    switch (k) {
        case 0: return {{0, 1.0}};
        case 1: return {{-1, -0.5}, {1, 0.5}};
        case 2: return {{-1, 1.0}, {0, -2.0}, {1, 1.0}};
        case 3: return {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}};
        default: return {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}};
    }
}

}  // namespace

DiscretizedOperator discretize(const OperatorSpec& spec, int n, std::optional<double> truncation) {
    if (spec.expression.order() > kMaxExpressionOrder)
        throw std::invalid_argument("discretize: order exceeds 4");

    DiscretizedOperator out;
    OperatorSpec working = spec;

    if (!spec.interval.finite()) {
        const std::optional<double> cut = truncation ? truncation : spec.truncation;
        if (!cut)
            throw std::invalid_argument(
                "discretize: infinite interval requires an explicit truncation directive");
        const double X = *cut;
        const double lo = spec.interval.lower_finite() ? spec.interval.lower : -X;
        const double hi = spec.interval.upper_finite() ? spec.interval.upper : X;
        working = OperatorSpec(spec.label + "_truncated", spec.expression,
                               ExtendedInterval(lo, hi), BoundarySystem::dirichlet_both_ends());
        out.truncation_used = X;
        std::ostringstream os;
        os << "interval truncated to [" << lo << ", " << hi << "] with value-pinned cutoff";
        out.warnings.push_back(os.str());
    }

    const auto kind = detect_domain(working);
    if (!kind)
        throw std::invalid_argument(
            "discretize: unsupported boundary system (value-pinned, phase-linked or maximal only)");

    const auto& iv = working.interval;
    const int order = working.expression.order();

    if (kind->kind == DomainKind::linked) {
        // exact twisted Fourier differentiation
        const Grid g = Grid::make(iv, n, GridTopology::periodic);
        const double L = iv.length();
        Eigen::MatrixXcd u(n, n);
        Eigen::VectorXcd q(n);
        for (int m = 0; m < n; ++m) {
            const int mm = (m <= n / 2 - 1) ? m : m - n;  // centered mode index
            q(m) = Cplx((2.0 * M_PI * mm - kind->alpha) / L, 0.0);
        }
        const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m)
                u(j, m) = std::polar(inv_sqrt_n, q(m).real() * (g.points[static_cast<std::size_t>(j)] - iv.lower));
        out.matrix = Eigen::MatrixXcd::Zero(n, n);
        for (int k = 0; k <= order; ++k) {
            const Polynomial& ck = working.expression.coefficient(k);
            if (ck.is_zero()) continue;
            Eigen::VectorXcd sym(n);
            for (int m = 0; m < n; ++m) sym(m) = std::pow(Cplx(0.0, 1.0) * q(m), k);
            Eigen::MatrixXcd dk = u * sym.asDiagonal() * u.adjoint();
            for (int j = 0; j < n; ++j)
                out.matrix.row(j) += ck.eval(g.points[static_cast<std::size_t>(j)]) * dk.row(j);
        }
        out.grid = g;
    } else {
        // centered differences; Dirichlet rows eliminate the endpoint unknowns
        const GridTopology topo =
            (kind->kind == DomainKind::dirichlet) ? GridTopology::open : GridTopology::closed;
        if (kind->kind == DomainKind::maximal && order > 0)
            out.warnings.push_back(
                "maximal domain discretized with interior stencils only; rows near the ends are one-sided truncations");
        const Grid g = Grid::make(iv, n, topo);
        out.matrix = Eigen::MatrixXcd::Zero(n, n);
        const double h = g.spacing;
        for (int k = 0; k <= order; ++k) {
            const Polynomial& ck = working.expression.coefficient(k);
            if (ck.is_zero()) continue;
            const double hk = std::pow(h, k);
            for (int j = 0; j < n; ++j) {
                const Cplx cj = ck.eval(g.points[static_cast<std::size_t>(j)]);
                for (const auto& [off, w] : stencil(k)) {
                    const int jj = j + off;
                    if (jj < 0 || jj >= n) continue;  // value-pinned neighbors vanish
                    out.matrix(j, jj) += cj * w / hk;
                }
            }
        }
        out.grid = g;
    }

    out.hermitian_matrix =
        (out.matrix - out.matrix.adjoint()).norm() <= 1e-13 * std::max(1.0, out.matrix.norm());

    const ClassificationReport cls = classify(spec.interval.finite() ? spec : working);
    out.symmetric = cls.self_adjoint && out.hermitian_matrix;
    if (cls.hermitian && !cls.self_adjoint) {
        out.warnings.push_back(
            "NOT_OBSERVABLE: spec is Hermitian but not self-adjoint; discrete eigenvalues of "
            "this realization are not physically meaningful");
    } else if (!cls.hermitian) {
        out.warnings.push_back("spec is not Hermitian; matrix flagged non-symmetric");
    }
    return out;
}

}  // namespace qd
