#include "qdomain/deficiency.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdomain/ode.hpp"

namespace qd {

namespace {

using Cplx = std::complex<double>;

constexpr double kKernelTol = 1e-9;

// Incremental shell-mass classifier in log space. Shells negligible against
// the running peak count as converged; the decision is final after 5
// consecutive hits of either kind.
class LogShellClassifier {
  public:
    // feed the next shell's log-mass; returns the verdict once decided
    std::optional<TailClass> feed(double log_mass) {
        const bool negligible =
            std::isinf(log_mass) ? log_mass < 0 : (log_mass < peak_ + std::log(1e-18));
        if (!std::isinf(log_mass)) peak_ = std::max(peak_, log_mass);
        if (negligible) {
            ++conv_;
            div_ = 0;
        } else if (has_prev_) {
            const double ratio = log_mass - prev_;
            if (ratio <= std::log(0.75)) {
                ++conv_;
                div_ = 0;
            } else if (ratio >= std::log(1.25)) {
                ++div_;
                conv_ = 0;
            } else {
                conv_ = div_ = 0;
            }
        }
        prev_ = log_mass;
        has_prev_ = true;
        if (conv_ >= 5) return TailClass::convergent;
        if (div_ >= 5) return TailClass::divergent;
        return std::nullopt;
    }

  private:
    double peak_ = -std::numeric_limits<double>::infinity();
    double prev_ = 0.0;
    bool has_prev_ = false;
    int conv_ = 0, div_ = 0;
};

// ---------------------------------------------------------------------------
// exponential solution bookkeeping: x^p e^{r x}
// ---------------------------------------------------------------------------

struct ExpSolution {
    Cplx rate;
    int power = 0;  // multiplicity slot

    // k-th derivative at t: e^{rt} sum_j C(k,j) p! / (p-j)! t^{p-j} r^{k-j}
    Cplx derivative(int k, double t) const {
        Cplx acc{0.0, 0.0};
        double binom = 1.0;
        double falling = 1.0;
        for (int j = 0; j <= std::min(k, power); ++j) {
            const double tp = std::pow(t, power - j);
            Cplx rp = 1.0;
            for (int q = 0; q < k - j; ++q) rp *= rate;
            acc += binom * falling * tp * rp;
            binom = binom * (k - j) / (j + 1.0);
            falling *= (power - j);
        }
        return acc * std::exp(rate * t);
    }

    std::string to_string() const {
        std::ostringstream os;
        os.precision(6);
        if (power > 0) os << "x^" << power << " ";
        os << "exp((" << rate.real() << (rate.imag() >= 0 ? "+" : "-") << std::abs(rate.imag())
           << "i) x)";
        return os.str();
    }
};

JetVector jet_of(const ExpSolution& s, const ExtendedInterval& iv) {
    JetVector jet = JetVector::Zero();
    if (iv.lower_finite())
        for (int k = 0; k < kJetPerEnd; ++k) jet(jet_index(false, k)) = s.derivative(k, iv.lower);
    if (iv.upper_finite())
        for (int k = 0; k < kJetPerEnd; ++k) jet(jet_index(true, k)) = s.derivative(k, iv.upper);
    return jet;
}

std::vector<Cplx> polynomial_roots(const std::vector<Cplx>& coeffs) {
    // coeffs[k] multiplies r^k; leading coefficient nonzero
    const int deg = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] /
                                                          coeffs[static_cast<std::size_t>(deg)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    std::vector<Cplx> roots(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return roots;
}

// Integrability of x^p e^{rx} toward each interval end.
void classify_exponential(const ExpSolution& s, const ExtendedInterval& iv, TailClass& lower,
                          TailClass& upper) {
    const double re = s.rate.real();
    const double tol = 1e-12;
    lower = iv.lower_finite() ? TailClass::convergent
                              : (re > tol ? TailClass::convergent : TailClass::divergent);
    upper = iv.upper_finite() ? TailClass::convergent
                              : (re < -tol ? TailClass::convergent : TailClass::divergent);
}

// Adjoint-condition matrix over a set of candidate solutions, kernel basis out.
Eigen::MatrixXcd boundary_kernel(const BoundarySystem& adjoint_sys, const ExtendedInterval& iv,
                                 const std::vector<ExpSolution>& basis) {
    const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
    if (adjoint_sys.empty()) return Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(adjoint_sys.size()), d);
    for (std::size_t r = 0; r < adjoint_sys.size(); ++r)
        for (Eigen::Index j = 0; j < d; ++j)
            m(static_cast<Eigen::Index>(r), j) =
                (adjoint_sys.rows()[r].row * jet_of(basis[static_cast<std::size_t>(j)], iv))(0, 0);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > kKernelTol * std::max(1.0, smax)) ++rank;
    return svd.matrixV().rightCols(d - rank);
}

// ---------------------------------------------------------------------------
// Route A: constant coefficients (any order <= 4)
// ---------------------------------------------------------------------------

bool has_constant_coefficients(const DifferentialExpression& e) {
    for (int k = 0; k <= e.order(); ++k)
        if (!e.coefficient(k).is_constant()) return false;
    return e.order() >= 1;
}

void constant_coefficient_sign(const OperatorSpec& spec, const BoundarySystem& adjoint_sys,
                               double kappa, int sign, DeficiencyResult& out) {
    const auto& expr = spec.expression;
    const Cplx lambda(0.0, sign * kappa);
    std::vector<Cplx> charpoly(static_cast<std::size_t>(expr.order()) + 1);
    for (int k = 0; k <= expr.order(); ++k)
        charpoly[static_cast<std::size_t>(k)] = expr.coefficient(k).coefficient(0).to_complex();
    charpoly[0] -= lambda;

    // root multiplicities
    std::vector<Cplx> roots = polynomial_roots(charpoly);
    std::sort(roots.begin(), roots.end(),
              [](Cplx a, Cplx b) { return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag()); });
    std::vector<ExpSolution> all;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int power = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-7 * std::max(1.0, std::abs(roots[i]))) ++power;
        all.push_back({roots[i], power});
    }

    // restrict to the square-integrable span first, then apply the adjoint
    // boundary forms on it
    std::vector<ExpSolution> l2;
    for (const auto& s : all) {
        TailClass lo, hi;
        classify_exponential(s, spec.interval, lo, hi);
        if (lo == TailClass::convergent && hi == TailClass::convergent) {
            l2.push_back(s);
        } else {
            DeficiencySolution ev;
            ev.sign = sign;
            ev.form = s.to_string();
            ev.square_integrable = false;
            ev.lower_classification = lo;
            ev.upper_classification = hi;
            ev.detail = "fails square-integrability toward an infinite endpoint";
            out.evidence.push_back(std::move(ev));
        }
    }

    const Eigen::MatrixXcd kernel = boundary_kernel(adjoint_sys, spec.interval, l2);
    const int n = static_cast<int>(kernel.cols());
    if (static_cast<int>(l2.size()) > n)
        out.notes.push_back(std::to_string(l2.size() - static_cast<std::size_t>(n)) +
                            " solution(s) of (L' - lambda) rejected by the adjoint boundary forms, sign " +
                            (sign > 0 ? std::string("+") : std::string("-")));
    for (int j = 0; j < n; ++j) {
        DeficiencySolution ev;
        ev.sign = sign;
        std::ostringstream form;
        bool first = true;
        for (std::size_t b = 0; b < l2.size(); ++b) {
            const Cplx c = kernel(static_cast<Eigen::Index>(b), j);
            if (std::abs(c) < 1e-10) continue;
            if (!first) form << " + ";
            first = false;
            form << "(" << c.real() << (c.imag() >= 0 ? "+" : "-") << std::abs(c.imag()) << "i)*"
                 << l2[b].to_string();
        }
        ev.form = form.str();
        ev.square_integrable = true;
        ev.detail = "kernel element satisfying the adjoint boundary forms";
        out.evidence.push_back(std::move(ev));
    }
    (sign > 0 ? out.n_plus : out.n_minus) = n;
}

// ---------------------------------------------------------------------------
// Route B: the symmetrized P x^n family, separable closed form
// ---------------------------------------------------------------------------

struct PqPattern {
    int n = 0;
    Cplx gamma;  // c1 = 2 gamma x^n, c0 = n gamma x^{n-1}
};

std::optional<PqPattern> detect_pq_power(const DifferentialExpression& e) {
    if (e.order() != 1) return std::nullopt;
    const Polynomial& c1 = e.coefficient(1);
    const Polynomial& c0 = e.coefficient(0);
    if (c1.is_zero() || c0.is_zero()) return std::nullopt;
    const int n = static_cast<int>(c1.degree());
    if (n < 2) return std::nullopt;
    // c1 must be a pure monomial of degree n, c0 a pure monomial of degree n-1
    for (int k = 0; k < n; ++k)
        if (!c1.coefficient(static_cast<std::size_t>(k)).is_zero()) return std::nullopt;
    if (static_cast<int>(c0.degree()) != n - 1) return std::nullopt;
    for (int k = 0; k + 1 < n; ++k)
        if (!c0.coefficient(static_cast<std::size_t>(k)).is_zero()) return std::nullopt;
    const Cplx top1 = c1.coefficient(static_cast<std::size_t>(n)).to_complex();
    const Cplx top0 = c0.coefficient(static_cast<std::size_t>(n - 1)).to_complex();
    const Cplx gamma = top1 / 2.0;
    if (std::abs(top0 - static_cast<double>(n) * gamma) > 1e-14 * std::abs(top0)) return std::nullopt;
    return PqPattern{n, gamma};
}

void separable_sign(const OperatorSpec& spec, const PqPattern& pq, double kappa, int sign,
                    DeficiencyResult& out) {
    // phi = |x|^{-n/2} exp(c_e x^{1-n}),  c_e = lambda / (2 gamma (1-n))
    const Cplx lambda(0.0, sign * kappa);
    const int n = pq.n;
    const Cplx ce = lambda / (2.0 * pq.gamma * static_cast<double>(1 - n));
    const int pow = 1 - n;  // negative

    auto side_class = [&](int side) {
        // behavior approaching 0 from the given side
        const double xsmall = side > 0 ? 1e-3 : -1e-3;
        const double arg = std::pow(xsmall, pow);  // +-inf-directional magnitude
        const double re = ce.real() * arg;
        if (re > 1e-12) return TailClass::divergent;     // exponential blow-up at 0
        if (re < -1e-12) return TailClass::convergent;   // superexponential vanishing
        // pure oscillation: |phi|^2 ~ |x|^{-n}, divergent at 0 for n >= 1
        return TailClass::divergent;
    };
    // |phi|^2 ~ |x|^{-n} at infinity: integrable for n >= 2
    const TailClass at_inf = (n >= 2) ? TailClass::convergent : TailClass::divergent;

    const TailClass near0_pos = side_class(+1);
    const TailClass near0_neg = side_class(-1);

    DeficiencySolution ev;
    ev.sign = sign;
    std::ostringstream form;
    form.precision(6);
    form << "|x|^{-" << n << "/2} exp((" << ce.real() << (ce.imag() >= 0 ? "+" : "-")
         << std::abs(ce.imag()) << "i) x^{" << pow << "})";
    ev.form = form.str();
    // per-side classification: each side of the interior singular point must
    // converge both toward its interval end and toward the origin
    auto combine = [](TailClass a, TailClass b) {
        if (a == TailClass::divergent || b == TailClass::divergent) return TailClass::divergent;
        if (a == TailClass::inconclusive || b == TailClass::inconclusive)
            return TailClass::inconclusive;
        return TailClass::convergent;
    };
    const bool origin_inside = spec.interval.lower < 0.0 && spec.interval.upper > 0.0;
    ev.lower_classification = spec.interval.lower_finite() ? TailClass::convergent : at_inf;
    ev.upper_classification = spec.interval.upper_finite() ? TailClass::convergent : at_inf;
    if (origin_inside) {
        ev.lower_classification = combine(ev.lower_classification, near0_neg);
        ev.upper_classification = combine(ev.upper_classification, near0_pos);
    }
    ev.square_integrable = ev.lower_classification == TailClass::convergent &&
                           ev.upper_classification == TailClass::convergent;
    std::ostringstream det;
    det << "per-side classification around the interior singular point x=0: toward 0 from -/+: "
        << qd::to_string(near0_neg) << "/" << qd::to_string(near0_pos)
        << "; tails folded into the side verdicts";
    ev.detail = det.str();
    (sign > 0 ? out.n_plus : out.n_minus) += ev.square_integrable ? 1 : 0;
    out.evidence.push_back(std::move(ev));
}

// Numeric cross-check of the separable family: integrate the first-order ODE
// on each side of the singular point; toward the origin the substitution
// u = 1/x removes the stiffness.
void separable_numeric_sign(const OperatorSpec& spec, double kappa, int sign,
                            DeficiencyResult& out) {
    const auto& e = spec.expression;
    const Cplx lambda(0.0, sign * kappa);
    auto logderiv = [&](double x) {
        return (lambda - e.coefficient(0).eval(x)) / e.coefficient(1).eval(x);
    };

    auto march_shells = [](const OdeRhs& rhs, double start, int direction, int max_shells) {
        OdeState cur(1);
        cur(0) = 1.0;
        double pos = start, w = 1.0, logscale = 0.0;
        LogShellClassifier cls;
        OdeOptions opt;
        opt.abs_tol = 1e-60;  // track decaying solutions to renormalization depth
        for (int s = 0; s < max_shells; ++s) {
            const double next = pos + direction * w;
            OdeResult r = rk45_integrate(rhs, pos, cur, next, opt);
            const auto verdict = cls.feed(r.log_mass + 2.0 * logscale);
            if (verdict) return *verdict;
            if (!r.ok) break;
            logscale += r.log_scale;
            cur = r.y;
            pos = next;
            w *= 2.0;
        }
        return TailClass::inconclusive;
    };

    auto outward_rhs = [&](double x, const OdeState& yy) {
        OdeState d(1);
        d(0) = logderiv(x) * yy(0);
        return d;
    };
    // u = 1/x, psi(u) = phi(1/u)/u; integrability of |phi|^2 dx near 0 equals
    // integrability of |psi|^2 du at infinity.
    auto inward_rhs = [&](double u, const OdeState& yy) {
        const double x = 1.0 / u;
        OdeState d(1);
        d(0) = (-1.0 / u - logderiv(x) / (u * u)) * yy(0);
        return d;
    };

    TailClass classes[4] = {march_shells(outward_rhs, 1.0, +1, 22),
                            march_shells(outward_rhs, -1.0, -1, 22),
                            march_shells(inward_rhs, 1.0, +1, 22),
                            march_shells(inward_rhs, -1.0, -1, 22)};

    DeficiencySolution ev;
    ev.sign = sign;
    ev.form = "numeric solution of the separable first-order equation";
    auto combine = [](TailClass a, TailClass b) {
        if (a == TailClass::divergent || b == TailClass::divergent) return TailClass::divergent;
        if (a == TailClass::inconclusive || b == TailClass::inconclusive)
            return TailClass::inconclusive;
        return TailClass::convergent;
    };
    ev.upper_classification = combine(classes[0], classes[2]);
    ev.lower_classification = combine(classes[1], classes[3]);
    bool conv = true, inconclusive = false;
    for (TailClass c : classes) {
        conv &= (c == TailClass::convergent);
        inconclusive |= (c == TailClass::inconclusive);
    }
    ev.square_integrable = conv;
    std::ostringstream det;
    det << "tails toward +inf/-inf: " << qd::to_string(classes[0]) << "/" << qd::to_string(classes[1])
        << "; toward origin from +/-: " << qd::to_string(classes[2]) << "/"
        << qd::to_string(classes[3]);
    ev.detail = det.str();
    if (inconclusive) {
        out.conclusive = false;
        out.notes.push_back("numeric shell classification inconclusive for sign " +
                            std::string(sign > 0 ? "+" : "-"));
    }
    (sign > 0 ? out.n_plus : out.n_minus) += ev.square_integrable ? 1 : 0;
    out.evidence.push_back(std::move(ev));
}

// ---------------------------------------------------------------------------
// Route C: numeric fundamental solutions (order <= 2, constant leading coeff)
// ---------------------------------------------------------------------------

// Jet completion: expresses f^{(m+j)} as polynomial combinations of
// (f, ..., f^{(m-1)}) using the ODE L f = lambda f.
std::vector<std::vector<Polynomial>> completion_polys(const DifferentialExpression& e,
                                                      const RationalComplex& lambda, int depth) {
    const int m = e.order();
    const RationalComplex lead_inv =
        e.coefficient(m).coefficient(0).inverse();  // constant leading coefficient
    std::vector<std::vector<Polynomial>> a;  // a[j][i]: f^{(m+j)} = sum_i a[j][i] f^{(i)}
    std::vector<Polynomial> a0(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Polynomial p = -e.coefficient(i);
        if (i == 0) p += Polynomial(lambda);
        a0[static_cast<std::size_t>(i)] = lead_inv * p;
    }
    a.push_back(a0);
    for (int j = 1; j < depth; ++j) {
        const auto& prev = a.back();
        std::vector<Polynomial> next(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            Polynomial p = prev[static_cast<std::size_t>(i)].derivative();
            if (i >= 1) p += prev[static_cast<std::size_t>(i - 1)];
            p += prev[static_cast<std::size_t>(m - 1)] * a0[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(i)] = p;
        }
        a.push_back(next);
    }
    return a;
}

struct NumericSolution {
    OdeState lower_state;  // (f, ..., f^{(m-1)}) at the lower node
    OdeState upper_state;
    double upper_log_scale = 0.0;
};

void numeric_sign(const OperatorSpec& spec, const BoundarySystem& adjoint_sys, double kappa,
                  int sign, DeficiencyResult& out) {
    const auto& e = spec.expression;
    const int m = e.order();
    const Cplx lambda(0.0, sign * kappa);
    const RationalComplex lambda_exact(Rational(0), rational_from_double(sign * kappa));

    auto rhs = [&](double x, const OdeState& y) {
        OdeState d(m);
        for (int i = 0; i + 1 < m; ++i) d(i) = y(i + 1);
        Cplx top = lambda * y(0);
        for (int k = 0; k < m; ++k) top -= e.coefficient(k).eval(x) * y(k);
        d(m - 1) = top / e.coefficient(m).eval(x);
        return d;
    };

    const auto completion = completion_polys(e, lambda_exact, kJetPerEnd);
    auto fill_jet = [&](JetVector& jet, bool upper_end, double x, const OdeState& state) {
        for (int k = 0; k < kJetPerEnd; ++k) {
            Cplx v;
            if (k < m) {
                v = state(k);
            } else {
                v = 0.0;
                for (int i = 0; i < m; ++i)
                    v += completion[static_cast<std::size_t>(k - m)][static_cast<std::size_t>(i)]
                             .eval(x) *
                         state(i);
            }
            jet(jet_index(upper_end, k)) = v;
        }
    };

    if (spec.interval.finite()) {
        std::vector<JetVector> jets;
        std::vector<std::string> forms;
        for (int s = 0; s < m; ++s) {
            OdeState y0 = OdeState::Zero(m);
            y0(s) = 1.0;
            OdeResult r = rk45_integrate(rhs, spec.interval.lower, y0, spec.interval.upper);
            if (!r.ok) {
                out.conclusive = false;
                out.notes.push_back("numeric integration failed");
                return;
            }
            JetVector jet = JetVector::Zero();
            fill_jet(jet, false, spec.interval.lower, y0);
            OdeState up = r.y * std::exp(r.log_scale);
            fill_jet(jet, true, spec.interval.upper, up);
            jets.push_back(jet);
            forms.push_back("numeric fundamental solution #" + std::to_string(s));
        }
        Eigen::MatrixXcd mtx(static_cast<Eigen::Index>(adjoint_sys.size()),
                             static_cast<Eigen::Index>(m));
        for (std::size_t r = 0; r < adjoint_sys.size(); ++r)
            for (int j = 0; j < m; ++j)
                mtx(static_cast<Eigen::Index>(r), j) =
                    (adjoint_sys.rows()[r].row * jets[static_cast<std::size_t>(j)])(0, 0);
        int kernel_dim = m;
        if (adjoint_sys.size() > 0) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mtx);
            const auto& sv = svd.singularValues();
            const double smax = sv.size() ? sv(0) : 0.0;
            int rank = 0;
            for (Eigen::Index k = 0; k < sv.size(); ++k)
                if (sv(k) > kKernelTol * std::max(1.0, smax)) ++rank;
            kernel_dim = m - rank;
        }
        for (int j = 0; j < kernel_dim; ++j) {
            DeficiencySolution ev;
            ev.sign = sign;
            ev.form = "numeric kernel solution";
            ev.square_integrable = true;  // finite interval, regular solution
            ev.detail = "finite interval: solutions are automatically square-integrable";
            out.evidence.push_back(std::move(ev));
        }
        if (kernel_dim < m)
            out.notes.push_back(std::to_string(m - kernel_dim) +
                                " numeric solution(s) rejected by the adjoint boundary forms, sign " +
                                (sign > 0 ? std::string("+") : std::string("-")));
        (sign > 0 ? out.n_plus : out.n_minus) = kernel_dim;
        return;
    }

    if (m != 1) {
        out.conclusive = false;
        out.notes.push_back("numeric route supports infinite intervals only at order 1");
        return;
    }

    // Single solution: classify |phi|^2 shell masses toward each infinite end.
    auto march = [&](double start, int direction) {
        OdeState cur(1);
        cur(0) = 1.0;
        double pos = start, w = 1.0, logscale = 0.0;
        LogShellClassifier cls;
        OdeOptions oopt;
        oopt.abs_tol = 1e-60;
        for (int s = 0; s < 22; ++s) {
            const double next = pos + direction * w;
            OdeResult r = rk45_integrate(rhs, pos, cur, next, oopt);
            const auto verdict = cls.feed(r.log_mass + 2.0 * logscale);
            if (verdict) return *verdict;
            if (!r.ok) break;
            logscale += r.log_scale;
            cur = r.y;
            pos = next;
            w *= 2.0;
        }
        return TailClass::inconclusive;
    };

    DeficiencySolution ev;
    ev.sign = sign;
    ev.form = "numeric solution of the first-order equation";
    const double start_lo = spec.interval.lower_finite() ? spec.interval.lower : 0.0;
    const double start_hi = spec.interval.upper_finite() ? spec.interval.upper : 0.0;
    ev.lower_classification =
        spec.interval.lower_finite() ? TailClass::convergent : march(start_hi, -1);
    ev.upper_classification =
        spec.interval.upper_finite() ? TailClass::convergent : march(start_lo, +1);

    bool boundary_ok = true;
    if (!adjoint_sys.empty()) {
        // evaluate the (single) solution's jet at the finite end
        JetVector jet = JetVector::Zero();
        OdeState y(1);
        y(0) = 1.0;
        if (spec.interval.lower_finite()) fill_jet(jet, false, spec.interval.lower, y);
        if (spec.interval.upper_finite()) fill_jet(jet, true, spec.interval.upper, y);
        for (const auto& row : adjoint_sys.rows())
            boundary_ok &= std::abs((row.row * jet)(0, 0)) <= kKernelTol;
    }

    if (ev.lower_classification == TailClass::inconclusive ||
        ev.upper_classification == TailClass::inconclusive) {
        out.conclusive = false;
        out.notes.push_back("shell-mass ratios within the ambiguity band (0.75, 1.25)");
    }
    ev.square_integrable = boundary_ok &&
                           ev.lower_classification == TailClass::convergent &&
                           ev.upper_classification == TailClass::convergent;
    ev.detail = boundary_ok ? "tail classification decides membership"
                            : "rejected by the adjoint boundary forms";
    (sign > 0 ? out.n_plus : out.n_minus) += ev.square_integrable ? 1 : 0;
    out.evidence.push_back(std::move(ev));
}

}  // namespace

DeficiencyResult deficiency_indices(const OperatorSpec& spec, const DeficiencyOptions& opt) {
    const ClassificationReport cls = classify_boundary_only(spec);
    if (!cls.hermitian)
        throw std::invalid_argument("deficiency_indices: spec does not classify Hermitian");
    if (opt.kappa <= 0) throw std::invalid_argument("deficiency_indices: kappa must be positive");

    DeficiencyResult out;
    out.kappa = opt.kappa;
    const BoundarySystem adjoint_sys = adjoint_domain(spec);

    const auto pq = detect_pq_power(spec.expression);
    if (!opt.force_numeric && has_constant_coefficients(spec.expression)) {
        out.method = "constant-coefficient catalog";
        for (int sign : {+1, -1}) constant_coefficient_sign(spec, adjoint_sys, opt.kappa, sign, out);
        return out;
    }
    if (!opt.force_numeric && pq) {
        out.method = "separable catalog";
        for (int sign : {+1, -1}) separable_sign(spec, *pq, opt.kappa, sign, out);
        return out;
    }
    if (pq) {
        out.method = "numeric (side-split around the singular point)";
        for (int sign : {+1, -1}) separable_numeric_sign(spec, opt.kappa, sign, out);
        return out;
    }
    if (spec.expression.order() >= 1 && spec.expression.order() <= 2 &&
        spec.expression.coefficient(spec.expression.order()).is_constant()) {
        out.method = "numeric fundamental solutions";
        for (int sign : {+1, -1}) numeric_sign(spec, adjoint_sys, opt.kappa, sign, out);
        return out;
    }
    if (spec.expression.order() == 0) {
        // real multiplication operator: (q(x) -+ i kappa) phi = 0 has only the
        // trivial solution, the operator is essentially self-adjoint
        out.method = "multiplication operator";
        out.n_plus = out.n_minus = 0;
        out.notes.push_back("multiplication by a real symbol: kernel of (q -+ i kappa) is trivial");
        return out;
    }
    throw std::invalid_argument("deficiency_indices: no solver route for this expression");
}

SpectrumRegion spectrum_region_for(int n_plus, int n_minus) {
    if (n_plus == 0 && n_minus == 0) return SpectrumRegion::real_subset;
    if (n_plus > 0 && n_minus > 0) return SpectrumRegion::whole_plane;
    return n_plus > 0 ? SpectrumRegion::closed_lower_half : SpectrumRegion::closed_upper_half;
}

ExtensionFamily self_adjoint_extensions(const OperatorSpec& spec) {
    const DeficiencyResult def = deficiency_indices(spec);
    ExtensionFamily fam;
    fam.base = spec;

    if (def.n_plus != def.n_minus) {
        fam.exists = false;
        std::ostringstream os;
        os << "deficiency indices (" << def.n_plus << ", " << def.n_minus
           << ") are unequal, so no enlargement of the domain is self-adjoint";
        fam.reason = os.str();
        return fam;
    }
    if (def.n_plus == 0) {
        fam.exists = true;
        fam.parameter_dimension = 0;
        fam.catalog_name = "trivial family (already essentially self-adjoint)";
        return fam;
    }
    const int m = def.n_plus;
    fam.parameter_dimension = m * m;

    if (m == 1 && spec.expression.order() == 1 && spec.interval.finite()) {
        fam.exists = true;
        fam.catalog_name = "phase-linked endpoints f(a) = e^{i alpha} f(b)";
        const OperatorSpec base = spec;
        fam.generator = [base](double alpha) {
            return OperatorSpec(base.label + "_alpha", base.expression, base.interval,
                                BoundarySystem::quasi_periodic(alpha));
        };
        return fam;
    }
    if (m == 2 && spec.expression.order() == 2 && spec.interval.finite()) {
        fam.exists = true;
        fam.catalog_name = "named second-order catalog";
        auto mk = [&](const std::string& name, BoundarySystem sys) {
            fam.presets.emplace_back(
                name, OperatorSpec(spec.label + "_" + name, spec.expression, spec.interval,
                                   std::move(sys)));
        };
        mk("dirichlet", BoundarySystem::dirichlet_both_ends());
        mk("neumann", BoundarySystem::neumann_both_ends());
        mk("periodic", BoundarySystem::linked_jets(0.0, 2));
        mk("quasi_periodic", BoundarySystem::linked_jets(1.0, 2));
        mk("robin", BoundarySystem::robin_both_ends(1.0));
        const OperatorSpec base = spec;
        fam.generator = [base](double alpha) {
            return OperatorSpec(base.label + "_alpha", base.expression, base.interval,
                                BoundarySystem::linked_jets(alpha, 2));
        };
        return fam;
    }

    fam.exists = true;
    fam.catalog_name = "extensions exist (equal indices); no constructive catalog for this form";
    return fam;
}

PointSpectrumResult point_spectrum_first_order(const OperatorSpec& spec, Cplx z) {
    if (spec.expression.order() != 1 || !spec.interval.finite())
        throw std::invalid_argument("point_spectrum_first_order: needs a first-order expression on a finite interval");
    if (!spec.expression.coefficient(1).is_constant() ||
        !spec.expression.coefficient(0).is_constant())
        throw std::invalid_argument("point_spectrum_first_order: needs constant coefficients");

    PointSpectrumResult res;
    const Cplx c1 = spec.expression.coefficient(1).coefficient(0).to_complex();
    const Cplx c0 = spec.expression.coefficient(0).is_zero()
                        ? Cplx(0.0, 0.0)
                        : spec.expression.coefficient(0).coefficient(0).to_complex();
    res.rate = (z - c0) / c1;

    const ExpSolution sol{res.rate, 0};
    const JetVector jet = jet_of(sol, spec.interval);
    double scale = 1.0;
    for (int k = 0; k < kJetDim; ++k) scale = std::max(scale, std::abs(jet(k)));

    auto residual = [&](const BoundarySystem& sys) {
        double r = 0.0;
        for (const auto& row : sys.rows()) r = std::max(r, std::abs((row.row * jet)(0, 0)));
        return r;
    };
    res.domain_residual = residual(spec.domain);
    res.adjoint_residual = residual(adjoint_domain(spec));

    const double tol = 1e-9 * scale;
    if (res.domain_residual <= tol) res.cls = PointSpectrumClass::eigenvalue_of_spec;
    else if (res.adjoint_residual <= tol) res.cls = PointSpectrumClass::eigenvalue_of_adjoint;
    else res.cls = PointSpectrumClass::neither;
    return res;
}

std::string to_string(PointSpectrumClass c) {
    switch (c) {
        case PointSpectrumClass::eigenvalue_of_spec: return "eigenvalue of the operator";
        case PointSpectrumClass::eigenvalue_of_adjoint: return "eigenvalue of the adjoint only";
        case PointSpectrumClass::neither: return "neither";
    }
    return "?";
}

}  // namespace qd
