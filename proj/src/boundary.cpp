#include "qdomain/boundary.hpp"

#include <cmath>
#include <sstream>

namespace qd {

using Cplx = std::complex<double>;

namespace {
void check_jet_order(int deriv) {
    if (deriv < 0 || deriv >= kJetPerEnd)
        throw std::invalid_argument(
            "boundary functionals carry jets up to f''' only (order " + std::to_string(deriv) +
            " requested)");
}
}  // namespace

BoundaryFunctional BoundaryFunctional::value(bool upper_end, int deriv, std::string label) {
    check_jet_order(deriv);
    BoundaryFunctional f;
    f.row(jet_index(upper_end, deriv)) = Cplx(1.0, 0.0);
    f.label = std::move(label);
    return f;
}

BoundaryFunctional BoundaryFunctional::linked(int deriv, Cplx phase, std::string label) {
    check_jet_order(deriv);
    BoundaryFunctional f;
    f.row(jet_index(false, deriv)) = Cplx(1.0, 0.0);
    f.row(jet_index(true, deriv)) = -phase;
    f.label = std::move(label);
    return f;
}

namespace {
std::string jet_name(int idx) {
    static const char* names[kJetDim] = {"f(a)", "f'(a)", "f''(a)", "f'''(a)",
                                         "f(b)", "f'(b)", "f''(b)", "f'''(b)"};
    return names[idx];
}

std::string coef_str(Cplx c) {
    std::ostringstream os;
    os.precision(12);
    if (std::abs(c.imag()) < 1e-14) {
        os << c.real();
    } else {
        os << "(" << c.real() << (c.imag() >= 0 ? "+" : "-") << std::abs(c.imag()) << "i)";
    }
    return os.str();
}
}  // namespace

std::string BoundaryFunctional::to_string() const {
    if (!label.empty()) return label;
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < kJetDim; ++k) {
        const Cplx c = row(k);
        if (std::abs(c) < 1e-14) continue;
        if (!first) os << " + ";
        first = false;
        if (std::abs(c - Cplx(1.0, 0.0)) < 1e-14) {
            os << jet_name(k);
        } else {
            os << coef_str(c) << "*" << jet_name(k);
        }
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

BoundarySystem BoundarySystem::dirichlet_both_ends() {
    return BoundarySystem({BoundaryFunctional::value(false, 0, "f(a) = 0"),
                           BoundaryFunctional::value(true, 0, "f(b) = 0")});
}

BoundarySystem BoundarySystem::dirichlet_lower() {
    return BoundarySystem({BoundaryFunctional::value(false, 0, "f(a) = 0")});
}

BoundarySystem BoundarySystem::periodic() {
    return BoundarySystem({BoundaryFunctional::linked(0, Cplx(1.0, 0.0), "f(a) = f(b)")});
}

BoundarySystem BoundarySystem::quasi_periodic(double alpha) {
    std::ostringstream lbl;
    lbl.precision(12);
    lbl << "f(a) = exp(" << alpha << "i)*f(b)";
    return BoundarySystem({BoundaryFunctional::linked(0, std::polar(1.0, alpha), lbl.str())});
}

BoundarySystem BoundarySystem::linked_jets(double alpha, int jets) {
    BoundarySystem sys;
    for (int k = 0; k < jets; ++k) {
        std::ostringstream lbl;
        lbl.precision(12);
        lbl << "f" << std::string(static_cast<std::size_t>(k), '\'') << "(a) = ";
        if (alpha != 0.0) lbl << "exp(" << alpha << "i)*";
        lbl << "f" << std::string(static_cast<std::size_t>(k), '\'') << "(b)";
        sys.add(BoundaryFunctional::linked(k, std::polar(1.0, alpha), lbl.str()));
    }
    return sys;
}

BoundarySystem BoundarySystem::neumann_both_ends() {
    return BoundarySystem({BoundaryFunctional::value(false, 1, "f'(a) = 0"),
                           BoundaryFunctional::value(true, 1, "f'(b) = 0")});
}

BoundarySystem BoundarySystem::robin_both_ends(double theta) {
    // f'(a) - theta f(a) = 0,  f'(b) + theta f(b) = 0 (real separated conditions)
    BoundaryFunctional lo, hi;
    lo.row(jet_index(false, 1)) = 1.0;
    lo.row(jet_index(false, 0)) = -theta;
    std::ostringstream l1;
    l1 << "f'(a) = " << theta << "*f(a)";
    lo.label = l1.str();
    hi.row(jet_index(true, 1)) = 1.0;
    hi.row(jet_index(true, 0)) = theta;
    std::ostringstream l2;
    l2 << "f'(b) = -" << theta << "*f(b)";
    hi.label = l2.str();
    return BoundarySystem({lo, hi});
}

BoundarySystem BoundarySystem::clamped_value_and_second() {
    return BoundarySystem({BoundaryFunctional::value(false, 0, "f(a) = 0"),
                           BoundaryFunctional::value(true, 0, "f(b) = 0"),
                           BoundaryFunctional::value(false, 2, "f''(a) = 0"),
                           BoundaryFunctional::value(true, 2, "f''(b) = 0")});
}

Eigen::MatrixXcd BoundarySystem::matrix() const {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_.size()), kJetDim);
    for (std::size_t r = 0; r < rows_.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows_[r].row;
    return m;
}

bool BoundarySystem::respects(const ExtendedInterval& iv) const {
    for (const auto& f : rows_) {
        for (int d = 0; d < kJetPerEnd; ++d) {
            if (!iv.lower_finite() && std::abs(f.row(jet_index(false, d))) > 0) return false;
            if (!iv.upper_finite() && std::abs(f.row(jet_index(true, d))) > 0) return false;
        }
    }
    return true;
}

std::string BoundarySystem::to_string() const {
    if (rows_.empty()) return "(maximal domain: no boundary conditions)";
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << "; ";
        os << rows_[r].to_string();
    }
    return os.str();
}

std::vector<int> active_jet_indices(const ExtendedInterval& iv) {
    std::vector<int> idx;
    if (iv.lower_finite())
        for (int d = 0; d < kJetPerEnd; ++d) idx.push_back(jet_index(false, d));
    if (iv.upper_finite())
        for (int d = 0; d < kJetPerEnd; ++d) idx.push_back(jet_index(true, d));
    return idx;
}

namespace {

Eigen::MatrixXcd active_submatrix(const Eigen::MatrixXcd& m, const std::vector<int>& active) {
    Eigen::MatrixXcd s(m.rows(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) s.col(static_cast<Eigen::Index>(j)) = m.col(active[j]);
    return s;
}

int rank_with_tol(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double thresh = tol * std::max<double>(1.0, sv.size() ? sv(0) : 0.0);
    int r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > thresh) ++r;
    return r;
}

}  // namespace

Eigen::MatrixXcd constraint_null_basis(const BoundarySystem& sys, const ExtendedInterval& iv,
                                       double tol) {
    const auto active = active_jet_indices(iv);
    const Eigen::Index n = static_cast<Eigen::Index>(active.size());
    if (n == 0) return Eigen::MatrixXcd::Zero(kJetDim, 0);

    Eigen::MatrixXcd basis_active;
    if (sys.empty()) {
        basis_active = Eigen::MatrixXcd::Identity(n, n);
    } else {
        const Eigen::MatrixXcd a = active_submatrix(sys.matrix(), active);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double thresh = tol * std::max<double>(1.0, sv.size() ? sv(0) : 0.0);
        int r = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > thresh) ++r;
        basis_active = svd.matrixV().rightCols(n - r);
    }

    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(kJetDim, basis_active.cols());
    for (std::size_t j = 0; j < active.size(); ++j) basis.row(active[j]) = basis_active.row(static_cast<Eigen::Index>(j));
    return basis;
}

int system_rank(const BoundarySystem& sys, const ExtendedInterval& iv, double tol) {
    if (sys.empty()) return 0;
    return rank_with_tol(active_submatrix(sys.matrix(), active_jet_indices(iv)), tol);
}

bool same_domain_subspace(const BoundarySystem& a, const BoundarySystem& b,
                          const ExtendedInterval& iv, double tol) {
    return domain_contained_in(a, b, iv, tol) && domain_contained_in(b, a, iv, tol);
}

bool domain_contained_in(const BoundarySystem& a, const BoundarySystem& b,
                         const ExtendedInterval& iv, double tol) {
    // null(A) subseteq null(B)  <=>  rowspace(B) subseteq rowspace(A)
    if (b.empty()) return true;
    const auto active = active_jet_indices(iv);
    const Eigen::MatrixXcd bm = active_submatrix(b.matrix(), active);
    if (a.empty()) return rank_with_tol(bm, tol) == 0;
    const Eigen::MatrixXcd am = active_submatrix(a.matrix(), active);
    Eigen::MatrixXcd stacked(am.rows() + bm.rows(), am.cols());
    stacked << am, bm;
    return rank_with_tol(stacked, tol) == rank_with_tol(am, tol);
}

}  // namespace qd
