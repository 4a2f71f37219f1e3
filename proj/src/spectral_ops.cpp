#include "qdomain/spectral_ops.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <fftw3.h>

#include "qdomain/adjoint.hpp"

namespace qd {

namespace {

using Cplx = std::complex<double>;

// Truncation window for quadrature on an infinite interval: expand until the
// integrand tail drops below 1e-14 of its peak.
std::pair<double, double> quad_window(const OperatorSpec& spec, const AnalyticFunction& psi) {
    const auto& iv = spec.interval;
    if (iv.finite()) return {iv.lower, iv.upper};
    if (spec.truncation) {
        const double X = *spec.truncation;
        return {iv.lower_finite() ? iv.lower : -X, iv.upper_finite() ? iv.upper : X};
    }
    double peak = 0.0;
    for (double x = -1.0; x <= 1.0; x += 0.125) peak = std::max(peak, std::norm(psi.value(x)));
    peak = std::max(peak, 1e-300);
    auto small = [&](double x) { return std::norm(psi.value(x)) <= 1e-14 * peak; };
    double lo = iv.lower_finite() ? iv.lower : -2.0;
    double hi = iv.upper_finite() ? iv.upper : 2.0;
    while (!iv.lower_finite() && !small(lo) && lo > -1024.0) lo *= 2.0;
    while (!iv.upper_finite() && !small(hi) && hi < 1024.0) hi *= 2.0;
    return {lo, hi};
}

}  // namespace

// ---------------------------------------------------------------------------
// operator_function
// ---------------------------------------------------------------------------

SpectralFunctionOperator operator_function(const SpectralDecomposition& dec,
                                           const std::function<double(double)>& f) {
    SpectralFunctionOperator op;
    op.dec = dec;
    op.mapped.resize(dec.eigenvalues.size());
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) op.mapped(i) = f(dec.eigenvalues(i));
    return op;
}

SpectralFunctionOperator::Applied SpectralFunctionOperator::apply(const WaveFunction& psi) const {
    const Eigen::VectorXcd coeffs = dec.project(psi);
    WaveFunction out = WaveFunction::zero(psi.grid);
    for (Eigen::Index n = 0; n < coeffs.size(); ++n)
        out.values += mapped(n) * coeffs(n) * (dec.vectors.col(n) / std::sqrt(dec.grid.spacing));
    const double norm2 = psi.norm() * psi.norm();
    const double captured = coeffs.cwiseAbs2().sum();
    return {std::move(out), std::max(0.0, norm2 > 0 ? 1.0 - captured / norm2 : 0.0)};
}

double SpectralFunctionOperator::quadratic_form(const WaveFunction& psi) const {
    const Eigen::VectorXd p = dec.projector_weights(psi);
    double acc = 0.0;
    for (Eigen::Index n = 0; n < p.size(); ++n) acc += mapped(n) * p(n);
    return acc;
}

// ---------------------------------------------------------------------------
// expectation
// ---------------------------------------------------------------------------

ExpectationResult expectation(const OperatorSpec& spec, const AnalyticFunction& psi,
                              const QuadratureOptions& opt) {
    ExpectationResult res;
    const AnalyticFunction lpsi = apply_expression(spec.expression, psi);
    const auto [lo, hi] = quad_window(spec, psi);
    res.value = integrate([&](double x) { return std::conj(psi.value(x)) * lpsi.value(x); }, lo,
                          hi, opt);
    res.verdict = is_in_domain(spec, psi);
    res.formal = !res.verdict->in_domain;
    const double scale = std::abs(res.value) + 1.0;
    res.imaginary_residue_flagged = std::abs(res.value.imag()) > 1e-10 * scale;
    return res;
}

std::complex<double> expectation(const Eigen::MatrixXcd& m, const WaveFunction& psi) {
    WaveFunction mp;
    mp.grid = psi.grid;
    mp.values = m * psi.values;
    return inner(psi, mp);
}

double image_norm_sq(const OperatorSpec& spec, const AnalyticFunction& psi,
                     const QuadratureOptions& opt) {
    const AnalyticFunction lpsi = apply_expression(spec.expression, psi);
    const auto [lo, hi] = quad_window(spec, psi);
    return integrate_real([&](double x) { return std::norm(lpsi.value(x)); }, lo, hi, opt);
}

// ---------------------------------------------------------------------------
// moments
// ---------------------------------------------------------------------------

namespace {

// power-law tail: fit a_n ~ C n^{-s} on the trailing nonzero terms, then sum
// the fit beyond n_max (partial sum plus integral remainder)
double tail_from_decay(const std::vector<std::pair<int, double>>& terms, int n_max,
                       double* exponent_out) {
    // keep only terms carrying real weight: parity selection rules leave
    // numerically-zero entries that would corrupt the log-log fit
    double peak = 0.0;
    for (const auto& t : terms)
        if (t.first > n_max / 2) peak = std::max(peak, t.second);
    std::vector<std::pair<int, double>> window;
    for (const auto& t : terms)
        if (t.second > 1e-12 * peak && t.first > n_max / 2) window.push_back(t);
    if (window.size() < 3) {
        if (exponent_out) *exponent_out = 0.0;
        return 0.0;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, a] : window) {
        const double x = std::log(static_cast<double>(n)), y = std::log(a);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(window.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double s = -slope;
    if (exponent_out) *exponent_out = s;
    if (!(s > 1.05)) return 0.0;  // non-summable fit: no finite tail claim
    double logc = 0.0;
    for (const auto& [n, a] : window) logc += std::log(a) + s * std::log(static_cast<double>(n));
    logc /= m;
    const double c = std::exp(logc);
    // density of nonzero terms in the window (parity selection rules)
    const double density =
        m / static_cast<double>(window.back().first - window.front().first + 1);
    double sum = 0.0;
    const int cap = n_max + 200000;
    for (int n = n_max + 1; n <= cap; ++n) sum += std::pow(n, -s);
    sum += std::pow(static_cast<double>(cap), 1.0 - s) / (s - 1.0);
    return c * density * sum;
}

MomentResult assemble_moment(const std::vector<std::pair<int, double>>& pn, int power,
                             int n_max, const std::function<double(int)>& eigenvalue) {
    MomentResult res;
    std::vector<std::pair<int, double>> terms;
    for (const auto& [n, p] : pn) {
        const double a = std::pow(eigenvalue(n), power) * p;
        res.partial_sum += a;
        res.weight_sum += p;
        terms.emplace_back(std::abs(n), std::abs(a));
    }
    res.tail_estimate = tail_from_decay(terms, n_max, &res.decay_exponent);
    return res;
}

}  // namespace

MomentResult moment_via_spectrum(const AnalyticSpectrum& spectrum, const Polynomial& psi,
                                 int power, int n_max) {
    // normalization gate (exact polynomial integral)
    const Polynomial density = psi.conj() * psi;
    const Polynomial anti = density.antiderivative();
    const double norm2 =
        (anti.eval(spectrum.interval.upper) - anti.eval(spectrum.interval.lower)).real();
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("moment_via_spectrum: state is not normalized");

    std::vector<std::pair<int, double>> pn;
    if (spectrum.indexed_from_one) {
        for (int n = 1; n <= n_max; ++n)
            pn.emplace_back(n, std::norm(spectrum.overlap_with_polynomial(n, psi)));
    } else {
        for (int n = -n_max; n <= n_max; ++n)
            pn.emplace_back(n, std::norm(spectrum.overlap_with_polynomial(n, psi)));
    }
    return assemble_moment(pn, power, n_max, spectrum.eigenvalue);
}

MomentResult moment_via_spectrum(const SpectralDecomposition& dec, const WaveFunction& psi,
                                 int power, int n_max) {
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("moment_via_spectrum: state is not normalized");
    const int count = std::min<int>(n_max, static_cast<int>(dec.eigenvalues.size()));
    const Eigen::VectorXd weights = dec.projector_weights(psi);
    std::vector<std::pair<int, double>> pn;
    for (int n = 0; n < count; ++n) pn.emplace_back(n + 1, weights(n));
    return assemble_moment(pn, power, n_max,
                           [&](int n) { return dec.eigenvalues(n - 1); });
}

// ---------------------------------------------------------------------------
// uncertainty
// ---------------------------------------------------------------------------

UncertaintyReport uncertainty_product(const OperatorSpec& a, const OperatorSpec& b,
                                      const AnalyticFunction& psi, const QuadratureOptions& opt) {
    if (std::abs(a.interval.lower - b.interval.lower) > 1e-12 ||
        std::abs(a.interval.upper - b.interval.upper) > 1e-12)
        throw std::invalid_argument("uncertainty_product: operator intervals differ");

    const DomainVerdict in_a = is_in_domain(a, psi);
    const DomainVerdict in_b = is_in_domain(b, psi);
    if (!in_a.in_domain || !in_b.in_domain)
        throw std::domain_error("uncertainty_product: state is outside D(A) cap D(B)");

    const AnalyticFunction apsi = apply_expression(a.expression, psi);
    const AnalyticFunction bpsi = apply_expression(b.expression, psi);
    const auto [lo, hi] = quad_window(a, psi);

    auto quad = [&](const std::function<Cplx(double)>& f) { return integrate(f, lo, hi, opt); };
    const double n2 = quad([&](double x) { return Cplx(std::norm(psi.value(x)), 0.0); }).real();

    UncertaintyReport rep;
    rep.mean_a = quad([&](double x) { return std::conj(psi.value(x)) * apsi.value(x); }) / n2;
    rep.mean_b = quad([&](double x) { return std::conj(psi.value(x)) * bpsi.value(x); }) / n2;
    const double a2 = quad([&](double x) { return Cplx(std::norm(apsi.value(x)), 0.0); }).real() / n2;
    const double b2 = quad([&](double x) { return Cplx(std::norm(bpsi.value(x)), 0.0); }).real() / n2;
    rep.delta_a = std::sqrt(std::max(0.0, a2 - std::norm(rep.mean_a)));
    rep.delta_b = std::sqrt(std::max(0.0, b2 - std::norm(rep.mean_b)));
    rep.lhs_product = rep.delta_a * rep.delta_b;

    const Cplx ab = quad([&](double x) { return std::conj(apsi.value(x)) * bpsi.value(x); }) / n2;
    // i<Apsi,Bpsi> - i<Bpsi,Apsi> = i(ab - conj(ab)) = -2 Im(ab)
    rep.rhs_sesquilinear = std::abs(ab.imag());

    // composite domains: D(AB) = {f in D(B) | B f in D(A)} and vice versa
    const bool in_dab = is_in_domain(a, bpsi).in_domain;
    const bool in_dba = is_in_domain(b, apsi).in_domain;
    if (in_dab && in_dba && psi.max_derivative() >= a.expression.order() + b.expression.order()) {
        const AnalyticFunction abpsi = apply_expression(a.expression, bpsi);
        const AnalyticFunction bapsi = apply_expression(b.expression, apsi);
        const Cplx comm =
            quad([&](double x) {
                return std::conj(psi.value(x)) * (abpsi.value(x) - bapsi.value(x));
            }) /
            n2;
        rep.rhs_commutator = 0.5 * std::abs(Cplx(0.0, 1.0) * comm);
    }

    // boundary term separating the two right-hand sides
    auto jet8 = [&](const AnalyticFunction& f) {
        JetVector j = JetVector::Zero();
        const auto& iv = a.interval;
        for (int k = 0; k < kJetPerEnd && k <= f.max_derivative(); ++k) {
            if (iv.lower_finite()) j(jet_index(false, k)) = f.derivative(k, iv.lower);
            if (iv.upper_finite()) j(jet_index(true, k)) = f.derivative(k, iv.upper);
        }
        return j;
    };
    const SurfaceForm sa(a.expression), sb(b.expression);
    const auto ca = sa.concomitant(a.interval), cb = sb.concomitant(b.interval);
    const Cplx s_a = (jet8(psi).adjoint() * ca * jet8(bpsi))(0, 0);
    const Cplx s_b = (jet8(psi).adjoint() * cb * jet8(apsi))(0, 0);
    rep.surface_contribution = Cplx(0.0, 1.0) * (s_a - s_b) / n2;
    return rep;
}

// ---------------------------------------------------------------------------
// Fourier transform
// ---------------------------------------------------------------------------

WaveFunction fourier_transform(const WaveFunction& psi, double hbar) {
    const int n = psi.grid.n;
    const double h = psi.grid.spacing;
    const double x0 = psi.grid.points.front();

    std::vector<Cplx> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) in[static_cast<std::size_t>(j)] = psi.values(j);
    {
        // FFTW planning is not reentrant; execution of a local plan is
        static std::mutex plan_mutex;
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(plan_mutex);
            plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                                    FFTW_ESTIMATE);
        }
        fftw_execute(plan);
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }

    const double p_half = M_PI * hbar / h;
    WaveFunction ft;
    ft.grid = Grid::make(ExtendedInterval(-p_half, p_half), n, GridTopology::periodic);
    ft.values.resize(n);
    const double amp = h / std::sqrt(2.0 * M_PI * hbar);
    for (int k = 0; k < n; ++k) {
        const int centered = k - n / 2;  // ascending momentum index
        const int src = (centered % n + n) % n;
        const double p = ft.grid.points[static_cast<std::size_t>(k)];
        // e^{-i p x_j / hbar} = e^{-i p x0 / hbar} e^{-2 pi i j centered / n}
        ft.values(k) = amp * std::polar(1.0, -p * x0 / hbar) * out[static_cast<std::size_t>(src)];
    }
    return ft;
}

// ---------------------------------------------------------------------------
// Weyl relation
// ---------------------------------------------------------------------------

WeylResult weyl_check(double a, double b, const WaveFunction& psi, double hbar) {
    if (psi.grid.topology != GridTopology::periodic)
        throw std::invalid_argument("weyl_check: periodic grid required");
    const double h = psi.grid.spacing;
    const double steps = b / h;
    const long s = std::lround(steps);
    if (std::abs(steps - static_cast<double>(s)) > 1e-9)
        throw std::invalid_argument("weyl_check: b is not an integer multiple of the grid spacing");

    const int n = psi.grid.n;
    const double L = psi.grid.interval.length();
    WeylResult res;
    res.torus_compatible = std::abs(std::polar(1.0, -a * L / hbar) - Cplx(1.0, 0.0)) < 1e-12;

    auto shift = [&](const Eigen::VectorXcd& v) {
        Eigen::VectorXcd w(n);
        for (int j = 0; j < n; ++j) w(j) = v(((j - s) % n + n) % n);
        return w;
    };
    Eigen::VectorXcd phase(n);
    for (int j = 0; j < n; ++j)
        phase(j) = std::polar(1.0, -a * psi.grid.points[static_cast<std::size_t>(j)] / hbar);

    const Eigen::VectorXcd uv = phase.cwiseProduct(shift(psi.values));
    const Eigen::VectorXcd vu = shift(phase.cwiseProduct(psi.values));
    const Cplx weyl_phase = std::polar(1.0, -a * b / hbar);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += std::norm(uv(j) - weyl_phase * vu(j)) * psi.grid.weight(j);
    res.deviation = std::sqrt(acc);
    return res;
}

// ---------------------------------------------------------------------------
// approximate eigenfunctions
// ---------------------------------------------------------------------------

ApproxEigenResult approximate_position_eigenfunction(double x0, double eps, const Grid* grid) {
    if (eps <= 0) throw std::invalid_argument("approximate eigenfunction: eps must be positive");
    if (grid && eps < grid->spacing)
        throw std::invalid_argument("approximate eigenfunction: eps below the grid resolution");
    ApproxEigenResult res{AnalyticFunction::gaussian(x0, eps, Cplx(1.0, 0.0), 4), x0, 0.0,
                          x0 + 9.0 * eps};
    const double lo = x0 - 9.0 * eps, hi = x0 + 9.0 * eps;
    const double n2 = integrate_real([&](double x) { return std::norm(res.state.value(x)); }, lo,
                                     hi, {64, 16});
    const double r2 = integrate_real(
        [&](double x) { return (x - x0) * (x - x0) * std::norm(res.state.value(x)); }, lo, hi,
        {64, 16});
    res.residual = std::sqrt(r2 / n2);
    return res;
}

ApproxEigenResult approximate_momentum_eigenfunction(double p0, double width, double hbar,
                                                     const Grid* grid) {
    if (width <= 0) throw std::invalid_argument("approximate eigenfunction: width must be positive");
    if (grid && 2.0 * M_PI * hbar / std::max(std::abs(p0), 1e-6) < 2.0 * grid->spacing)
        throw std::invalid_argument("approximate eigenfunction: momentum beyond the grid band");
    ApproxEigenResult res{AnalyticFunction::modulated_gaussian(p0 / hbar, 0.0, width, Cplx(1.0, 0.0), 4),
                          p0, 0.0, 9.0 * width};
    const double lo = -9.0 * width, hi = 9.0 * width;
    const DifferentialExpression p = ops::momentum(hbar);
    const AnalyticFunction ppsi = apply_expression(p, res.state);
    const double n2 = integrate_real([&](double x) { return std::norm(res.state.value(x)); }, lo,
                                     hi, {64, 16});
    const double r2 = integrate_real(
        [&](double x) { return std::norm(ppsi.value(x) - p0 * res.state.value(x)); }, lo, hi,
        {64, 16});
    res.residual = std::sqrt(r2 / n2);
    return res;
}

}  // namespace qd
