#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdomain/spectral_ops.hpp"

using namespace qd;
using Cplx = std::complex<double>;

namespace {

OperatorSpec well_hamiltonian() {
    return OperatorSpec("H", ops::kinetic(), ExtendedInterval(-1.0, 1.0),
                        BoundarySystem::dirichlet_both_ends());
}

// normalized parabola sqrt(15)/4 (1 - x^2) on [-1, 1]
Polynomial parabola_state() {
    const Rational s = rational_from_double(std::sqrt(15.0) / 4.0);
    return Polynomial(std::vector<RationalComplex>{RationalComplex(s), RationalComplex(0L),
                                                   RationalComplex(-s)});
}

WaveFunction random_wave(const Grid& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    WaveFunction w = WaveFunction::zero(g);
    for (int j = 0; j < g.n; ++j) w.values(j) = Cplx(gauss(rng), gauss(rng));
    w.normalize();
    return w;
}

}  // namespace

TEST_CASE("well eigenvalues: pi^2 n^2 / 8 ladder from the Dirichlet stencil") {
    const DiscretizedOperator op = discretize(well_hamiltonian(), 2000);
    CHECK(op.symmetric);
    const SpectralDecomposition dec = eigendecompose(op, 10);
    for (int n = 1; n <= 10; ++n) {
        const double exact = M_PI * M_PI * n * n / 8.0;
        CHECK(std::abs(dec.eigenvalues(n - 1) - exact) <= 1e-3 * exact);
    }
    // ratio test E_n / E_1 = n^2
    for (int n = 2; n <= 10; ++n)
        CHECK(std::abs(dec.eigenvalues(n - 1) / dec.eigenvalues(0) - n * n) <= 1e-3 * n * n);
}

TEST_CASE("discrete symmetry for self-adjoint specs at several resolutions") {
    const std::vector<OperatorSpec> specs = {
        well_hamiltonian(),
        OperatorSpec("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                     BoundarySystem::periodic()),
        OperatorSpec("P_alpha", ops::momentum(), ExtendedInterval(0.0, 1.0),
                     BoundarySystem::quasi_periodic(1.0)),
    };
    for (const auto& spec : specs)
        for (int n : {64, 256, 1024}) {
            const DiscretizedOperator op = discretize(spec, n);
            CHECK(op.hermitian_matrix);
            CHECK((op.matrix - op.matrix.adjoint()).norm() <=
                  1e-13 * std::max(1.0, op.matrix.norm()));
        }
}

TEST_CASE("convergence order of the well ground state is h^2") {
    auto err = [&](int n) {
        const SpectralDecomposition dec = eigendecompose(discretize(well_hamiltonian(), n), 1);
        return std::abs(dec.eigenvalues(0) - M_PI * M_PI / 8.0);
    };
    const double ratio = err(250) / err(500);
    CHECK(ratio > 4.0 * 0.85);
    CHECK(ratio < 4.0 * 1.15);
}

TEST_CASE("discretize refuses an infinite interval without a truncation directive") {
    const OperatorSpec q("Q_line", ops::position(), ExtendedInterval::whole_line());
    CHECK_THROWS_AS(discretize(q, 128), std::invalid_argument);
    const DiscretizedOperator op = discretize(q, 128, 8.0);
    CHECK(op.truncation_used == 8.0);
    bool noted = false;
    for (const auto& w : op.warnings) noted |= w.find("truncated") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("merely Hermitian momentum box is refused by the eigensolver") {
    const OperatorSpec p("P_box", ops::momentum(), ExtendedInterval(0.0, 1.0),
                         BoundarySystem::dirichlet_both_ends());
    const DiscretizedOperator op = discretize(p, 128);
    CHECK_FALSE(op.symmetric);
    bool warned = false;
    for (const auto& w : op.warnings) warned |= w.find("NOT_OBSERVABLE") != std::string::npos;
    CHECK(warned);
    CHECK_THROWS(eigendecompose(op, 4));
}

TEST_CASE("twisted momentum grid: eigenvalues hbar(2 pi n - alpha), exact on resolved modes") {
    for (double alpha : {0.0, 1.0, M_PI}) {
        const OperatorSpec p("P_alpha", ops::momentum(), ExtendedInterval(0.0, 1.0),
                             BoundarySystem::quasi_periodic(alpha));
        const DiscretizedOperator op = discretize(p, 64);
        const SpectralDecomposition dec = eigendecompose(op, 64);
        for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
            CHECK(std::abs(dec.eigenvalues(i)) < 1e10);  // real spectrum, sane magnitudes
        for (int n = -5; n <= 5; ++n) {
            const double target = 2.0 * M_PI * n - alpha;
            double best = 1e300;
            for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
                best = std::min(best, std::abs(dec.eigenvalues(i) - target));
            CHECK(best <= 1e-8);
        }
    }
}

TEST_CASE("periodic angular momentum: integer ladder to spectral accuracy") {
    const OperatorSpec lz("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                          BoundarySystem::periodic());
    const int n = 1024;
    const DiscretizedOperator op = discretize(lz, n);
    const SpectralDecomposition dec = eigendecompose(op, n);
    for (int m = -5; m <= 5; ++m) {
        double best = 1e300;
        for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
            best = std::min(best, std::abs(dec.eigenvalues(i) - m));
        CHECK(best <= 1e-6);
    }
}

TEST_CASE("analytic spectrum catalog values") {
    const AnalyticSpectrum well = analytic_spectrum("infinite_well", 1.0);
    CHECK(well.eigenvalue(1) == doctest::Approx(M_PI * M_PI / 8.0).epsilon(1e-14));
    const AnalyticSpectrum lz = analytic_spectrum("circle_Lz");
    CHECK(lz.eigenvalue(-3) == doctest::Approx(-3.0));
    const AnalyticSpectrum tw = analytic_spectrum("momentum_twisted", M_PI);
    CHECK(tw.eigenvalue(1) == doctest::Approx(M_PI).epsilon(1e-14));
    // oracle: direct substitution of exp(i p x) into the twisted boundary rule
    const AnalyticFunction mode = tw.eigenfunction(1);
    const Cplx lhs = mode.value(0.0);
    const Cplx rhs = std::polar(1.0, M_PI) * mode.value(1.0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK_THROWS(analytic_spectrum("unknown_key"));
}

TEST_CASE("zero expression has eigenvalue zero") {
    const OperatorSpec zero("zero", DifferentialExpression(), ExtendedInterval(0.0, 1.0));
    const SpectralDecomposition dec = eigendecompose(discretize(zero, 16), 1);
    CHECK(dec.eigenvalues(0) == doctest::Approx(0.0));
}

TEST_CASE("spectral functions of the well Hamiltonian") {
    const DiscretizedOperator op = discretize(well_hamiltonian(), 600);
    const SpectralDecomposition dec = eigendecompose(op, 40);
    const Polynomial poly = parabola_state();
    WaveFunction psi = WaveFunction::sample(op.grid, AnalyticFunction::from_polynomial(poly));
    psi.normalize();

    SUBCASE("square maps the eigenvalues") {
        const SpectralFunctionOperator h2 = operator_function(dec, [](double e) { return e * e; });
        for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
            CHECK(h2.mapped(i) == doctest::Approx(dec.eigenvalues(i) * dec.eigenvalues(i)));
    }
    SUBCASE("identity reproduces the action on states in the span") {
        const SpectralFunctionOperator ident = operator_function(dec, [](double e) { return e; });
        const auto applied = ident.apply(psi);
        WaveFunction direct;
        direct.grid = op.grid;
        direct.values = op.matrix * psi.values;
        // compare against the matrix action projected to the same span
        WaveFunction projected = WaveFunction::zero(op.grid);
        const Eigen::VectorXcd c = dec.project(direct);
        for (Eigen::Index n = 0; n < c.size(); ++n)
            projected.values += c(n) * (dec.vectors.col(n) / std::sqrt(op.grid.spacing));
        double diff = 0.0;
        for (int j = 0; j < op.grid.n; ++j)
            diff += std::norm(applied.result.values(j) - projected.values(j)) * op.grid.weight(j);
        CHECK(std::sqrt(diff) <= 1e-9);
    }
    SUBCASE("spectral indicator is an idempotent rank-3 projector") {
        const double e3 = dec.eigenvalues(2);
        const SpectralFunctionOperator proj =
            operator_function(dec, [&](double e) { return e <= e3 + 1e-9 ? 1.0 : 0.0; });
        double rank = 0.0;
        for (Eigen::Index i = 0; i < proj.mapped.size(); ++i) rank += proj.mapped(i);
        CHECK(rank == doctest::Approx(3.0));
        const auto once = proj.apply(psi);
        const auto twice = proj.apply(once.result);
        double diff = 0.0;
        for (int j = 0; j < op.grid.n; ++j)
            diff += std::norm(once.result.values(j) - twice.result.values(j)) * op.grid.weight(j);
        CHECK(std::sqrt(diff) <= 1e-10);
    }
    SUBCASE("projector orthogonality") {
        for (int n = 0; n < 6; ++n)
            for (int m = 0; m < 6; ++m) {
                const Eigen::VectorXcd cn = dec.project(psi);
                // <P_n psi, P_m psi> = conj(c_n) c_m <phi_n, phi_m> = delta_nm p_n
                const Cplx gram = inner(dec.eigenfunction(n), dec.eigenfunction(m));
                const Cplx val = std::conj(cn(n)) * cn(m) * gram;
                const double expected = (n == m) ? std::norm(cn(n)) : 0.0;
                CHECK(std::abs(val - expected) <= 1e-10);
            }
    }
}

TEST_CASE("expectation values on the parabola state") {
    const Polynomial poly = parabola_state();
    const AnalyticFunction psi = AnalyticFunction::from_polynomial(poly);

    SUBCASE("||H psi||^2 = 15/8 by exact quadrature") {
        CHECK(image_norm_sq(well_hamiltonian(), psi) == doctest::Approx(1.875).epsilon(1e-10));
    }
    SUBCASE("<psi, H psi> = 5/4") {
        const ExpectationResult e = expectation(well_hamiltonian(), psi);
        CHECK_FALSE(e.formal);
        CHECK(e.value.real() == doctest::Approx(1.25).epsilon(1e-12));
        CHECK(std::abs(e.value.imag()) < 1e-12);
    }
    SUBCASE("naive fourth-derivative expectation is 0 and flagged formal") {
        const OperatorSpec h2("H2", ops::kinetic_squared(), ExtendedInterval(-1.0, 1.0),
                              BoundarySystem::clamped_value_and_second());
        const ExpectationResult e = expectation(h2, psi);
        CHECK(std::abs(e.value) <= 1e-12);
        CHECK(e.formal);
        REQUIRE(e.verdict.has_value());
        CHECK_FALSE(e.verdict->in_domain);
    }
}

TEST_CASE("moments of the well spectrum on the parabola state") {
    const AnalyticSpectrum well = analytic_spectrum("infinite_well", 1.0);
    const Polynomial psi = parabola_state();

    SUBCASE("p_1 = 960 / pi^6, cross-checked at two quadrature orders") {
        const double p1 = std::norm(well.overlap_with_polynomial(1, psi));
        CHECK(p1 == doctest::Approx(960.0 / std::pow(M_PI, 6)).epsilon(1e-12));
        const AnalyticFunction mode = well.eigenfunction(1);
        for (int order : {16, 24}) {
            const Cplx overlap = integrate(
                [&](double x) { return std::conj(mode.value(x)) * psi.eval(x); }, -1.0, 1.0,
                {32, order});
            CHECK(std::norm(overlap) == doctest::Approx(p1).epsilon(1e-10));
        }
    }
    SUBCASE("second moment reaches 15/8") {
        const MomentResult m = moment_via_spectrum(well, psi, 2, 10000);
        CHECK(m.partial_sum == doctest::Approx(1.875).epsilon(1e-4));
        CHECK(m.total() == doctest::Approx(1.875).epsilon(1e-5));
    }
    SUBCASE("weights sum to one and never exceed it") {
        const MomentResult m = moment_via_spectrum(well, psi, 0, 99);
        CHECK(m.partial_sum >= 1.0 - 1e-9);
        CHECK(m.partial_sum <= 1.0 + 1e-10);
    }
    SUBCASE("first moment cross-checks <H> = 5/4") {
        const MomentResult m = moment_via_spectrum(well, psi, 1, 2000);
        CHECK(m.partial_sum == doctest::Approx(1.25).epsilon(1e-6));
    }
    SUBCASE("unnormalized states are rejected") {
        CHECK_THROWS(moment_via_spectrum(well, Polynomial::one(), 2, 10));
    }
}

TEST_CASE("spectral-sum identity: operator_function(square) vs moment power 2") {
    const DiscretizedOperator op = discretize(well_hamiltonian(), 400);
    const SpectralDecomposition dec = eigendecompose(op, 30);
    WaveFunction psi =
        WaveFunction::sample(op.grid, AnalyticFunction::from_polynomial(parabola_state()));
    psi.normalize();
    const SpectralFunctionOperator sq = operator_function(dec, [](double e) { return e * e; });
    const MomentResult m = moment_via_spectrum(dec, psi, 2, 30);
    CHECK(sq.quadratic_form(psi) == doctest::Approx(m.partial_sum).epsilon(1e-12));
}

TEST_CASE("uncertainty of the canonical pair on a Gaussian is exactly hbar/2") {
    OperatorSpec p("P", ops::momentum(), ExtendedInterval::whole_line());
    OperatorSpec q("Q", ops::position(), ExtendedInterval::whole_line());
    p.truncation = 12.0;
    q.truncation = 12.0;
    const AnalyticFunction psi = AnalyticFunction::gaussian(0.0, 1.0, Cplx(1.0, 0.0), 4);
    const UncertaintyReport rep = uncertainty_product(p, q, psi);
    CHECK(rep.lhs_product == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rep.rhs_sesquilinear == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rep.lhs_product + 1e-9 >= rep.rhs_sesquilinear);
    CHECK(std::abs(rep.surface_contribution) < 1e-10);
    REQUIRE(rep.rhs_commutator.has_value());
    CHECK(*rep.rhs_commutator == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("uncertainty of angular momentum and angle on an eigenmode") {
    const OperatorSpec lz("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                          BoundarySystem::periodic());
    const OperatorSpec phi("phi", ops::position(), ExtendedInterval(0.0, 2.0 * M_PI));
    const AnalyticFunction psi_m = AnalyticFunction::circle_mode(1);
    const UncertaintyReport rep = uncertainty_product(lz, phi, psi_m);
    CHECK(rep.delta_a == doctest::Approx(0.0).epsilon(1e-8));            // eigenstate
    CHECK(rep.delta_b == doctest::Approx(M_PI / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(rep.rhs_sesquilinear == doctest::Approx(0.0).epsilon(1e-9));   // tight at zero
    CHECK(rep.lhs_product + 1e-9 >= rep.rhs_sesquilinear);
    // the eigenmode is outside D(Lz phi), so the commutator form is absent
    CHECK_FALSE(rep.rhs_commutator.has_value());
    // boundary term: i S_Lz(psi, phi psi) = 2 pi hbar |psi(2pi)|^2 = hbar
    CHECK(std::abs(rep.surface_contribution - Cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("uncertainty of the equal two-mode superposition on the circle") {
    const OperatorSpec lz("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                          BoundarySystem::periodic());
    const OperatorSpec phi("phi", ops::position(), ExtendedInterval(0.0, 2.0 * M_PI));
    const double c = 1.0 / std::sqrt(2.0);
    const AnalyticFunction psi = AnalyticFunction::superposition(
        {{Cplx(c, 0.0), AnalyticFunction::circle_mode(0)},
         {Cplx(c, 0.0), AnalyticFunction::circle_mode(1)}},
        "two_mode");
    const UncertaintyReport rep = uncertainty_product(lz, phi, psi);
    // eigenvalues 0 and 1 with equal weight: dispersion 1/2 exactly
    CHECK(rep.delta_a == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.lhs_product + 1e-9 >= rep.rhs_sesquilinear);
    // |psi(2 pi)|^2 = 2/(2 pi), so the endpoint-weighted bound is hbar/2
    CHECK(rep.rhs_sesquilinear == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("sesquilinear uncertainty bound holds on random smooth states") {
    std::mt19937 rng(31);
    std::normal_distribution<double> gauss;

    SUBCASE("canonical pair on the truncated line") {
        OperatorSpec p("P", ops::momentum(), ExtendedInterval::whole_line());
        OperatorSpec q("Q", ops::position(), ExtendedInterval::whole_line());
        p.truncation = 14.0;
        q.truncation = 14.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::pair<Cplx, AnalyticFunction>> terms;
            for (int c = 0; c < 3; ++c)
                terms.emplace_back(Cplx(gauss(rng), gauss(rng)),
                                   AnalyticFunction::modulated_gaussian(
                                       gauss(rng), 0.5 * gauss(rng), 1.0 + 0.2 * c, Cplx(1.0, 0.0), 4));
            const AnalyticFunction psi =
                AnalyticFunction::superposition(std::move(terms), "random_packet");
            const UncertaintyReport rep = uncertainty_product(p, q, psi);
            CHECK(rep.lhs_product + 1e-9 >= rep.rhs_sesquilinear);
        }
    }
    SUBCASE("angular pair on the circle") {
        const OperatorSpec lz("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                              BoundarySystem::periodic());
        const OperatorSpec phi("phi", ops::position(), ExtendedInterval(0.0, 2.0 * M_PI));
        std::uniform_int_distribution<int> mode(-3, 3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::pair<Cplx, AnalyticFunction>> terms;
            for (int c = 0; c < 3; ++c)
                terms.emplace_back(Cplx(gauss(rng), gauss(rng)),
                                   AnalyticFunction::circle_mode(mode(rng)));
            const AnalyticFunction psi =
                AnalyticFunction::superposition(std::move(terms), "random_circle_state");
            const UncertaintyReport rep = uncertainty_product(lz, phi, psi);
            CHECK(rep.lhs_product + 1e-9 >= rep.rhs_sesquilinear);
        }
    }
}

TEST_CASE("uncertainty rejects states outside the joint domain") {
    const OperatorSpec lz("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                          BoundarySystem::periodic());
    const OperatorSpec phi("phi", ops::position(), ExtendedInterval(0.0, 2.0 * M_PI));
    // exp(i x / 2) is not periodic on [0, 2 pi]
    const AnalyticFunction bad =
        AnalyticFunction::exponential(Cplx(0.0, 0.5), Cplx(1.0, 0.0), 4);
    CHECK_THROWS_AS(uncertainty_product(lz, phi, bad), std::domain_error);
}

TEST_CASE("Fourier transform: Parseval and Gaussian reciprocity") {
    const Grid g = Grid::make(ExtendedInterval(-20.0, 20.0), 4096, GridTopology::periodic);

    SUBCASE("Parseval for 100 random vectors") {
        for (unsigned seed = 0; seed < 100; ++seed) {
            const WaveFunction psi = random_wave(g, seed);
            const WaveFunction ft = fourier_transform(psi);
            CHECK(std::abs(ft.norm() - psi.norm()) <= 1e-12);
        }
    }
    SUBCASE("zero maps to zero") {
        const WaveFunction ft = fourier_transform(WaveFunction::zero(g));
        CHECK(ft.norm() == doctest::Approx(0.0));
    }
    SUBCASE("Gaussian widths are reciprocal") {
        const double sigma = 1.3;
        const WaveFunction psi =
            WaveFunction::sample(g, AnalyticFunction::gaussian(0.0, sigma, Cplx(1.0, 0.0), 0));
        const WaveFunction ft = fourier_transform(psi);
        auto width = [](const WaveFunction& w) {
            double m2 = 0.0, m0 = 0.0;
            for (int j = 0; j < w.grid.n; ++j) {
                const double x = w.grid.points[static_cast<std::size_t>(j)];
                m2 += x * x * std::norm(w.values(j)) * w.grid.weight(j);
                m0 += std::norm(w.values(j)) * w.grid.weight(j);
            }
            return std::sqrt(m2 / m0);
        };
        CHECK(width(psi) * width(ft) == doctest::Approx(0.5).epsilon(1e-8));
    }
}

TEST_CASE("demo: Hermite-type states reproduce the transform's fourth-root eigenvalues") {
    // With spacing h = sqrt(2 pi / N) the momentum grid coincides with the
    // coordinate grid, and the Gaussian-weighted Hermite states are
    // approximate eigenvectors of F with eigenvalues (-i)^n. A demonstration,
    // not an invariant: truncation and sampling limit the accuracy.
    const int n = 256;
    const double h = std::sqrt(2.0 * M_PI / n);
    const double X = 0.5 * n * h;
    const Grid g = Grid::make(ExtendedInterval(-X, X), n, GridTopology::periodic);

    auto hermite_state = [&](int degree) {
        Polynomial p = Polynomial::one();
        if (degree == 1) p = Polynomial::monomial(RationalComplex(1L), 1);
        if (degree == 2) {
            // H_2-type combination 2x^2 - 1
            p = Polynomial(std::vector<RationalComplex>{RationalComplex(-1L), RationalComplex(0L),
                                                        RationalComplex(2L)});
        }
        WaveFunction w = WaveFunction::sample(
            g, AnalyticFunction::poly_times_gaussian(p, 0.0, 1.0, 0));
        w.normalize();
        return w;
    };

    const Cplx eigen[3] = {Cplx(1.0, 0.0), Cplx(0.0, -1.0), Cplx(-1.0, 0.0)};
    for (int degree = 0; degree <= 2; ++degree) {
        const WaveFunction w = hermite_state(degree);
        const WaveFunction fw = fourier_transform(w);
        double residual = 0.0;
        for (int j = 0; j < n; ++j)
            residual += std::norm(fw.values(j) - eigen[degree] * w.values(j)) * g.spacing;
        CHECK(std::sqrt(residual) <= 1e-8);
    }
}

TEST_CASE("Weyl relation on the torus-compatible grid") {
    const Grid g = Grid::make(ExtendedInterval(0.0, 2.0 * M_PI), 512, GridTopology::periodic);
    const WaveFunction psi = random_wave(g, 77);
    SUBCASE("a = 1, b = 2h") {
        const WeylResult r = weyl_check(1.0, 2.0 * g.spacing, psi);
        CHECK(r.torus_compatible);
        CHECK(r.deviation <= 1e-12);
    }
    SUBCASE("b = 0 and a = 0 are exact") {
        CHECK(weyl_check(1.0, 0.0, psi).deviation == doctest::Approx(0.0));
        CHECK(weyl_check(0.0, 3.0 * g.spacing, psi).deviation == doctest::Approx(0.0));
    }
    SUBCASE("incompatible shifts are refused") {
        CHECK_THROWS(weyl_check(1.0, 1.5 * g.spacing, psi));
    }
}

TEST_CASE("approximate position eigenfunction: residual eps/sqrt(2)") {
    const ApproxEigenResult r = approximate_position_eigenfunction(0.3, 0.01);
    CHECK(r.residual == doctest::Approx(0.01 / std::sqrt(2.0)).epsilon(1e-6));
    const ApproxEigenResult half = approximate_position_eigenfunction(0.3, 0.005);
    CHECK(half.residual == doctest::Approx(0.5 * r.residual).epsilon(0.01));
    CHECK_THROWS(approximate_position_eigenfunction(0.3, -1.0));
    const Grid g = Grid::make(ExtendedInterval(0.0, 1.0), 64, GridTopology::closed);
    CHECK_THROWS(approximate_position_eigenfunction(0.3, 1e-4, &g));
}

TEST_CASE("approximate momentum eigenfunction: residual falls as the packet broadens") {
    double prev = 1e300;
    for (double w : {2.0, 4.0, 8.0}) {
        const ApproxEigenResult r = approximate_momentum_eigenfunction(0.0, w);
        CHECK(r.residual < prev);
        CHECK(r.residual == doctest::Approx(1.0 / (w * std::sqrt(2.0))).epsilon(1e-6));
        prev = r.residual;
    }
}
