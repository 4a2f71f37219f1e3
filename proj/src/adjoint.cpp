#include "qdomain/adjoint.hpp"

#include <sstream>

namespace qd {

namespace {

long binomial(int n, int k) {
    long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}

}  // namespace

DifferentialExpression formal_adjoint(const DifferentialExpression& expr) {
    const int n = expr.order();
    std::vector<Polynomial> adj(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        // (-1)^k (conj(c_k) g)^{(k)} = (-1)^k sum_j C(k,j) conj(c_k)^{(k-j)} g^{(j)}
        const Polynomial ck = expr.coefficient(k).conj();
        const long sign = (k % 2 == 0) ? 1 : -1;
        for (int j = 0; j <= k; ++j) {
            const RationalComplex factor(Rational(sign * binomial(k, j)));
            adj[static_cast<std::size_t>(j)] +=
                factor * ck.derivative(static_cast<std::size_t>(k - j));
        }
    }
    return DifferentialExpression(std::move(adj), expr.hbar(), expr.mass());
}

bool is_formally_symmetric(const DifferentialExpression& expr) {
    return formal_adjoint(expr) == expr;
}

SurfaceForm::SurfaceForm(const DifferentialExpression& expr) {
    // S(g,f)(x) = sum_k sum_{m=0}^{k-1} (-1)^m (c_k conj(g))^{(m)} f^{(k-1-m)}
    // with (c_k conj(g))^{(m)} = sum_r C(m,r) c_k^{(m-r)} conj(g)^{(r)}.
    for (int k = 1; k <= expr.order(); ++k) {
        const Polynomial& ck = expr.coefficient(k);
        if (ck.is_zero()) continue;
        for (int m = 0; m < k; ++m) {
            const int s = k - 1 - m;
            const long sign = (m % 2 == 0) ? 1 : -1;
            for (int r = 0; r <= m; ++r) {
                const RationalComplex factor(Rational(sign * binomial(m, r)));
                m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] +=
                    factor * ck.derivative(static_cast<std::size_t>(m - r));
            }
        }
    }
}

Eigen::Matrix<std::complex<double>, kJetPerEnd, kJetPerEnd> SurfaceForm::eval(double x) const {
    Eigen::Matrix<std::complex<double>, kJetPerEnd, kJetPerEnd> m;
    for (int r = 0; r < kJetPerEnd; ++r)
        for (int s = 0; s < kJetPerEnd; ++s) m(r, s) = entry(r, s).eval(x);
    return m;
}

Eigen::Matrix<std::complex<double>, kJetDim, kJetDim> SurfaceForm::concomitant(
    const ExtendedInterval& iv) const {
    Eigen::Matrix<std::complex<double>, kJetDim, kJetDim> c;
    c.setZero();
    if (iv.lower_finite()) c.block<kJetPerEnd, kJetPerEnd>(0, 0) = -eval(iv.lower);
    if (iv.upper_finite()) c.block<kJetPerEnd, kJetPerEnd>(kJetPerEnd, kJetPerEnd) = eval(iv.upper);
    return c;
}

bool SurfaceForm::identically_zero() const {
    for (int r = 0; r < kJetPerEnd; ++r)
        for (int s = 0; s < kJetPerEnd; ++s)
            if (!entry(r, s).is_zero()) return false;
    return true;
}

BoundarySystem adjoint_domain(const OperatorSpec& spec) {
    const SurfaceForm surface(spec.expression);
    const auto c = surface.concomitant(spec.interval);
    const Eigen::MatrixXcd v = constraint_null_basis(spec.domain, spec.interval);
    if (v.cols() == 0) return BoundarySystem::maximal();

    // g must satisfy jet(g)^H (C v) = 0 for every admissible f-jet v; the
    // adjoint system is a row basis of (C V)^H.
    const Eigen::MatrixXcd w = c * v;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double thresh = 1e-12 * std::max<double>(1.0, sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > thresh) ++rank;

    BoundarySystem out;
    for (int k = 0; k < rank; ++k) {
        BoundaryFunctional f;
        f.row = svd.matrixU().col(k).adjoint();
        // Zero out numerically dead entries so labels stay readable.
        for (int j = 0; j < kJetDim; ++j)
            if (std::abs(f.row(j)) < 1e-13) f.row(j) = 0.0;
        out.add(std::move(f));
    }
    return out;
}

ClassificationReport classify_boundary_only(const OperatorSpec& spec) {
    ClassificationReport rep;
    rep.formally_symmetric = is_formally_symmetric(spec.expression);

    // Hellinger-Toeplitz bookkeeping: a differential expression of order >= 1
    // is defined at most on a proper dense subspace; an order-0 expression is
    // everywhere defined exactly when its symbol is bounded on the interval.
    rep.everywhere_defined =
        spec.expression.order() == 0 &&
        (spec.interval.finite() || spec.expression.coefficient(0).is_constant()) &&
        spec.domain.empty() && !spec.rapid_decay_domain;

    if (!rep.formally_symmetric) {
        rep.notes.push_back(
            "expression differs from its formal adjoint; not a candidate observable");
        rep.adjoint_domain = adjoint_domain(spec);
        return rep;
    }

    const SurfaceForm surface(spec.expression);
    const auto c = surface.concomitant(spec.interval);
    const Eigen::MatrixXcd v = constraint_null_basis(spec.domain, spec.interval);
    const double scale = std::max(1.0, c.norm());
    rep.hermitian = (v.cols() == 0) || ((v.adjoint() * c * v).norm() <= 1e-12 * scale);

    rep.adjoint_domain = adjoint_domain(spec);
    rep.self_adjoint =
        rep.hermitian && same_domain_subspace(rep.adjoint_domain, spec.domain, spec.interval);
    if (rep.self_adjoint && spec.rapid_decay_domain) {
        // Restricting to rapidly decreasing functions leaves a symmetric
        // operator whose closure may or may not be self-adjoint; the verdict
        // is settled by the deficiency indices, not by boundary algebra.
        rep.self_adjoint = false;
        rep.notes.push_back("restricted invariant domain; self-adjointness deferred to deficiency indices");
    }
    if (rep.hermitian && !rep.self_adjoint && !spec.rapid_decay_domain) {
        std::ostringstream os;
        os << "Hermitian but not self-adjoint: adjoint domain {" << rep.adjoint_domain.to_string()
           << "} differs from {" << spec.domain.to_string() << "}";
        rep.notes.push_back(os.str());
    }
    return rep;
}

std::string to_string(SpectrumRegion r) {
    switch (r) {
        case SpectrumRegion::real_subset: return "subset of the real axis";
        case SpectrumRegion::whole_plane: return "entire complex plane";
        case SpectrumRegion::closed_upper_half: return "closed upper half-plane";
        case SpectrumRegion::closed_lower_half: return "closed lower half-plane";
    }
    return "?";
}

std::string ClassificationReport::to_string() const {
    std::ostringstream os;
    os << "formally symmetric: " << (formally_symmetric ? "yes" : "no") << "\n";
    os << "Hermitian: " << (hermitian ? "yes" : "no") << "\n";
    os << "Self-adjoint: " << (self_adjoint ? "yes" : "no") << "\n";
    os << "Adjoint domain: " << adjoint_domain.to_string() << "\n";
    if (deficiency)
        os << "Deficiency indices: (" << deficiency->first << ", " << deficiency->second << ")\n";
    if (spectrum_region) os << "Spectrum region: " << qd::to_string(*spectrum_region) << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

std::string ExtendedInterval::to_string() const {
    std::ostringstream os;
    os << "[" << lower << ", " << upper << "]";
    return os.str();
}

}  // namespace qd
