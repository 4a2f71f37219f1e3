#include "qdomain/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qd {

using Cplx = std::complex<double>;

namespace {

constexpr double kBoundaryTol = 1e-9;   // relative to jet scale, analytic path
constexpr double kBoundaryTolFd = 1e-5; // finite-difference fallback

// Jet (f, f', f'', f''') at x, preferring closed-form derivatives and falling
// back to one-sided finite differences pointing into the interval.
struct Jet {
    std::array<Cplx, kJetPerEnd> d{};
    bool used_fd = false;
};

Jet jet_at(const AnalyticFunction& f, double x, int direction_into_interval) {
    Jet jet;
    const int have = f.max_derivative();
    for (int k = 0; k < kJetPerEnd; ++k) {
        if (k <= have) {
            jet.d[static_cast<std::size_t>(k)] = f.derivative(k, x);
        } else {
            jet.used_fd = true;
            const double h = 1e-4 * direction_into_interval;
            // one-sided stencils of order h^2
            auto v = [&](int j) { return f.value(x + j * h); };
            switch (k) {
                case 1:
                    jet.d[1] = (-1.5 * v(0) + 2.0 * v(1) - 0.5 * v(2)) / h;
                    break;
                case 2:
                    jet.d[2] = (2.0 * v(0) - 5.0 * v(1) + 4.0 * v(2) - v(3)) / (h * h);
                    break;
                case 3:
                    jet.d[3] = (-2.5 * v(0) + 9.0 * v(1) - 12.0 * v(2) + 7.0 * v(3) - 1.5 * v(4)) /
                               (h * h * h);
                    break;
                default: break;
            }
        }
    }
    return jet;
}

void check_boundaries(const OperatorSpec& spec, const JetVector& jet8, bool used_fd,
                      DomainVerdict& verdict) {
    double scale = 1.0;
    for (int k = 0; k < kJetDim; ++k) scale = std::max(scale, std::abs(jet8(k)));
    const double tol = (used_fd ? kBoundaryTolFd : kBoundaryTol) * scale;
    for (const auto& row : spec.domain.rows()) {
        BoundaryCheck chk;
        chk.condition = row.to_string();
        chk.residual = std::abs((row.row * jet8)(0, 0));
        chk.tolerance = tol;
        chk.pass = chk.residual <= tol;
        verdict.boundary_checks.push_back(std::move(chk));
    }
}

}  // namespace

DomainVerdict is_in_domain(const OperatorSpec& spec, const AnalyticFunction& f) {
    DomainVerdict verdict;
    const auto& iv = spec.interval;

    // (a) boundary functionals on the endpoint jet
    JetVector jet8 = JetVector::Zero();
    bool used_fd = false;
    if (iv.lower_finite()) {
        const Jet j = jet_at(f, iv.lower, +1);
        used_fd |= j.used_fd;
        for (int k = 0; k < kJetPerEnd; ++k) jet8(jet_index(false, k)) = j.d[static_cast<std::size_t>(k)];
    }
    if (iv.upper_finite()) {
        const Jet j = jet_at(f, iv.upper, -1);
        used_fd |= j.used_fd;
        for (int k = 0; k < kJetPerEnd; ++k) jet8(jet_index(true, k)) = j.d[static_cast<std::size_t>(k)];
    }
    check_boundaries(spec, jet8, used_fd, verdict);

    // (b) square integrability of L f
    if (f.max_derivative() < spec.expression.order()) {
        verdict.notes.push_back("image check skipped: too few derivatives available");
        verdict.conclusive = false;
    } else {
        const AnalyticFunction lf = apply_expression(spec.expression, f);
        auto lf_val = [&lf](double x) { return lf.value(x); };
        std::vector<TailClass> classes;

        double lo = iv.lower_finite() ? iv.lower : -1.0;
        double hi = iv.upper_finite() ? iv.upper : 1.0;
        if (lo >= hi) {
            lo = -1.0;
            hi = 1.0;
        }

        // interior singular points split the bulk quadrature
        std::vector<double> cuts;
        for (double s : f.singular_points())
            if (s > lo && s < hi) cuts.push_back(s);
        std::sort(cuts.begin(), cuts.end());

        double bulk = 0.0;
        double prev = lo;
        const double margin = 1e-3;
        for (double s : cuts) {
            bulk += integrate_real([&](double x) { return std::norm(lf_val(x)); }, prev,
                                   s - margin, {16, 16});
            // approach the singular point on shrinking dyadic shells
            auto masses = dyadic_shell_masses(lf_val, s - margin, +1, margin / 2.0, 40);
            classes.push_back(classify_shell_masses(masses));
            for (double m : masses) bulk += m;
            auto masses2 = dyadic_shell_masses(lf_val, s + margin, -1, margin / 2.0, 40);
            classes.push_back(classify_shell_masses(masses2));
            for (double m : masses2) bulk += m;
            prev = s + margin;
        }
        bulk += integrate_real([&](double x) { return std::norm(lf_val(x)); }, prev, hi, {16, 16});

        if (!iv.lower_finite()) {
            auto masses = dyadic_shell_masses(lf_val, lo, -1, 1.0, 24);
            classes.push_back(classify_shell_masses(masses));
            for (double m : masses) bulk += m;
        }
        if (!iv.upper_finite()) {
            auto masses = dyadic_shell_masses(lf_val, hi, +1, 1.0, 24);
            classes.push_back(classify_shell_masses(masses));
            for (double m : masses) bulk += m;
        }

        verdict.image_norm_sq = bulk;
        verdict.image_integrability = TailClass::convergent;
        for (TailClass c : classes) {
            if (c == TailClass::divergent) verdict.image_integrability = TailClass::divergent;
            if (c == TailClass::inconclusive &&
                verdict.image_integrability != TailClass::divergent)
                verdict.image_integrability = TailClass::inconclusive;
        }
        if (verdict.image_integrability == TailClass::inconclusive) {
            verdict.conclusive = false;
            verdict.notes.push_back("image integrability inconclusive: shell-mass ratios inside ambiguity band");
        }
    }

    // (c) rapid decrease (invariant Schwartz-type domains)
    if (spec.rapid_decay_domain) {
        bool ok = true;
        std::ostringstream detail;
        for (int w = 0; w <= 6 && ok; ++w) {
            double head = 0.0, tail = 0.0;
            for (double x = 1.0; x <= 256.0; x *= 2.0) {
                for (double sgn : {-1.0, 1.0}) {
                    if ((sgn < 0 && !std::isinf(iv.lower)) || (sgn > 0 && !std::isinf(iv.upper)))
                        continue;
                    const double xx = sgn * x;
                    const double m = std::pow(std::abs(xx), w) * std::abs(f.value(xx));
                    if (x <= 16.0) head = std::max(head, m);
                    else tail = std::max(tail, m);
                }
            }
            if (tail > 1e-8 * std::max(1.0, head) && tail > 1e-12) {
                ok = false;
                detail << "weight x^" << w << ": |x^" << w << " f| grows to " << tail
                       << " in the sampled tail";
            }
        }
        verdict.rapid_decay_ok = ok;
        if (!ok) verdict.notes.push_back("rapid-decrease check failed: " + detail.str());
    }

    bool boundaries_ok = true;
    for (const auto& chk : verdict.boundary_checks) boundaries_ok &= chk.pass;
    verdict.in_domain = boundaries_ok && verdict.image_integrability == TailClass::convergent &&
                        (!verdict.rapid_decay_ok.has_value() || *verdict.rapid_decay_ok);
    return verdict;
}

DomainVerdict is_in_domain(const OperatorSpec& spec, const std::vector<double>& xs,
                           const std::vector<Cplx>& values) {
    if (xs.size() != values.size() || xs.size() < 6)
        throw std::invalid_argument("is_in_domain(grid): need at least 6 samples");
    DomainVerdict verdict;
    const auto& iv = spec.interval;
    const std::size_t n = xs.size();
    const double h_lo = xs[1] - xs[0];
    const double h_hi = xs[n - 1] - xs[n - 2];

    auto one_sided_jet = [](const std::vector<Cplx>& v, double h, bool from_upper) {
        auto at = [&](std::size_t j) { return from_upper ? v[v.size() - 1 - j] : v[j]; };
        const double s = from_upper ? -1.0 : 1.0;
        std::array<Cplx, kJetPerEnd> jet;
        jet[0] = at(0);
        jet[1] = s * (-1.5 * at(0) + 2.0 * at(1) - 0.5 * at(2)) / h;
        jet[2] = (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) / (h * h);
        jet[3] = s * (-2.5 * at(0) + 9.0 * at(1) - 12.0 * at(2) + 7.0 * at(3) - 1.5 * at(4)) /
                 (h * h * h);
        return jet;
    };

    JetVector jet8 = JetVector::Zero();
    if (iv.lower_finite()) {
        auto j = one_sided_jet(values, h_lo, false);
        for (int k = 0; k < kJetPerEnd; ++k) jet8(jet_index(false, k)) = j[static_cast<std::size_t>(k)];
    }
    if (iv.upper_finite()) {
        auto j = one_sided_jet(values, h_hi, true);
        for (int k = 0; k < kJetPerEnd; ++k) jet8(jet_index(true, k)) = j[static_cast<std::size_t>(k)];
    }
    check_boundaries(spec, jet8, /*used_fd=*/true, verdict);

    // Discrete image norm: centered stencils in the bulk; a finite sum is
    // always finite, so integrability is trivially convergent on a grid.
    const int order = spec.expression.order();
    double norm_sq = 0.0;
    for (std::size_t j = 2; j + 2 < n; ++j) {
        const double h = xs[1] - xs[0];
        Cplx lf{0.0, 0.0};
        for (int k = 0; k <= order; ++k) {
            Cplx fd;
            switch (k) {
                case 0: fd = values[j]; break;
                case 1: fd = (values[j + 1] - values[j - 1]) / (2.0 * h); break;
                case 2: fd = (values[j + 1] - 2.0 * values[j] + values[j - 1]) / (h * h); break;
                case 3:
                    fd = (values[j + 2] - 2.0 * values[j + 1] + 2.0 * values[j - 1] -
                          values[j - 2]) /
                         (2.0 * h * h * h);
                    break;
                default:
                    fd = (values[j + 2] - 4.0 * values[j + 1] + 6.0 * values[j] -
                          4.0 * values[j - 1] + values[j - 2]) /
                         (h * h * h * h);
                    break;
            }
            lf += spec.expression.coefficient(k).eval(xs[j]) * fd;
        }
        norm_sq += std::norm(lf) * (xs[1] - xs[0]);
    }
    verdict.image_norm_sq = norm_sq;
    verdict.image_integrability = TailClass::convergent;
    verdict.notes.push_back("grid path: finite-difference jets; integrability trivial on a finite grid");

    bool boundaries_ok = true;
    for (const auto& chk : verdict.boundary_checks) boundaries_ok &= chk.pass;
    verdict.in_domain = boundaries_ok;
    return verdict;
}

std::string DomainVerdict::to_string() const {
    std::ostringstream os;
    os << (in_domain ? "in domain" : "NOT in domain");
    if (!conclusive) os << " (inconclusive)";
    for (const auto& chk : boundary_checks)
        os << "\n  " << chk.condition << ": residual " << chk.residual
           << (chk.pass ? " (ok)" : " (violated)");
    os << "\n  ||L f||^2 = " << image_norm_sq << ", tails " << qd::to_string(image_integrability);
    if (rapid_decay_ok) os << "\n  rapid decay: " << (*rapid_decay_ok ? "ok" : "violated");
    for (const auto& n : notes) os << "\n  note: " << n;
    return os.str();
}

}  // namespace qd
