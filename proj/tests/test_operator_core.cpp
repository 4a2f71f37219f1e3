#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qdomain/adjoint.hpp"
#include "qdomain/membership.hpp"
#include "qdomain/quadrature.hpp"

using namespace qd;
using Cplx = std::complex<double>;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-6, 6);
    std::vector<RationalComplex> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& z : c) z = RationalComplex(coef(rng), coef(rng));
    return Polynomial(std::move(c));
}

DifferentialExpression random_expression(std::mt19937& rng, int max_order, int max_degree) {
    std::uniform_int_distribution<int> ord(0, max_order);
    const int m = ord(rng);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(m) + 1);
    for (auto& p : coeffs) p = random_poly(rng, max_degree);
    if (coeffs.back().is_zero()) coeffs.back() = Polynomial::one();
    return DifferentialExpression(std::move(coeffs));
}

// <g, L f> by Gauss-Legendre; the integrand is polynomial, so the rule is exact.
Cplx poly_inner(const Polynomial& g, const Polynomial& h, double a, double b) {
    const Polynomial prod = g.conj() * h;
    return integrate([&](double x) { return prod.eval(x); }, a, b, {8, 24});
}

Cplx surface_value(const SurfaceForm& s, const Polynomial& g, const Polynomial& f,
                   const ExtendedInterval& iv) {
    JetVector jg = JetVector::Zero(), jf = JetVector::Zero();
    for (int k = 0; k < kJetPerEnd; ++k) {
        jg(jet_index(false, k)) = g.derivative(static_cast<std::size_t>(k)).eval(iv.lower);
        jg(jet_index(true, k)) = g.derivative(static_cast<std::size_t>(k)).eval(iv.upper);
        jf(jet_index(false, k)) = f.derivative(static_cast<std::size_t>(k)).eval(iv.lower);
        jf(jet_index(true, k)) = f.derivative(static_cast<std::size_t>(k)).eval(iv.upper);
    }
    return (jg.adjoint() * s.concomitant(iv) * jf)(0, 0);
}

}  // namespace

TEST_CASE("formal adjoint of the standard operators") {
    CHECK(formal_adjoint(ops::momentum()) == ops::momentum());
    CHECK(formal_adjoint(ops::position()) == ops::position());
    CHECK(formal_adjoint(ops::kinetic()) == ops::kinetic());
    CHECK(formal_adjoint(ops::kinetic_squared()) == ops::kinetic_squared());
    CHECK(formal_adjoint(ops::symmetric_pq_power(3)) == ops::symmetric_pq_power(3));
}

TEST_CASE("formal adjoint of x^3 d/dx is -x^3 d/dx - 3x^2") {
    std::vector<Polynomial> c(2);
    c[1] = Polynomial::monomial(RationalComplex(1L), 3);
    const DifferentialExpression L(std::move(c));
    const DifferentialExpression adj = formal_adjoint(L);
    CHECK(adj.order() == 1);
    CHECK(adj.coefficient(1) == Polynomial::monomial(RationalComplex(-1L), 3));
    CHECK(adj.coefficient(0) == Polynomial::monomial(RationalComplex(-3L), 2));
}

TEST_CASE("adjoint involution is coefficient-exact") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const DifferentialExpression e = random_expression(rng, 4, 6);
        CHECK(formal_adjoint(formal_adjoint(e)) == e);
    }
}

TEST_CASE("surface form of the standard operators") {
    SUBCASE("momentum: (hbar/i) conj(g) f at the endpoints") {
        const SurfaceForm s(ops::momentum());
        const auto m = s.eval(0.3);
        CHECK(m(0, 0) == Cplx(0.0, -1.0));
        for (int r = 0; r < kJetPerEnd; ++r)
            for (int c = 0; c < kJetPerEnd; ++c)
                if (r != 0 || c != 0) CHECK(std::abs(m(r, c)) == 0.0);
    }
    SUBCASE("kinetic: (hbar^2/2m)(conj(g') f - conj(g) f')") {
        const SurfaceForm s(ops::kinetic());
        const auto m = s.eval(-1.0);
        CHECK(m(1, 0) == Cplx(0.5, 0.0));
        CHECK(m(0, 1) == Cplx(-0.5, 0.0));
        CHECK(std::abs(m(0, 0)) == 0.0);
        CHECK(std::abs(m(1, 1)) == 0.0);
    }
    SUBCASE("multiplication operators have no surface term") {
        CHECK(SurfaceForm(ops::position()).identically_zero());
    }
    SUBCASE("fourth order alternating concomitant") {
        const SurfaceForm s(ops::kinetic_squared());
        const auto m = s.eval(0.0);
        CHECK(m(0, 3) == Cplx(0.25, 0.0));
        CHECK(m(1, 2) == Cplx(-0.25, 0.0));
        CHECK(m(2, 1) == Cplx(0.25, 0.0));
        CHECK(m(3, 0) == Cplx(-0.25, 0.0));
    }
}

TEST_CASE("Green identity: <g,Lf> - <L'g,f> = S(g,f), polynomial-exact quadrature") {
    std::mt19937 rng(7);
    const ExtendedInterval iv(-1.0, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        const DifferentialExpression L = random_expression(rng, 4, 5);
        const DifferentialExpression Ladj = formal_adjoint(L);
        const SurfaceForm s(L);
        const Polynomial f = random_poly(rng, 6), g = random_poly(rng, 6);
        const Polynomial lf = L.apply_to_polynomial(f);
        const Polynomial lg = Ladj.apply_to_polynomial(g);
        const Cplx lhs = poly_inner(g, lf, iv.lower, iv.upper);
        const Cplx rhs = poly_inner(lg, f, iv.lower, iv.upper);
        const Cplx surf = surface_value(s, g, f, iv);
        const double scale =
            std::sqrt(std::abs(poly_inner(f, f, iv.lower, iv.upper).real()) *
                      std::abs(poly_inner(g, g, iv.lower, iv.upper).real())) +
            1.0;
        CHECK(std::abs(lhs - rhs - surf) <= 1e-8 * scale);
    }
}

TEST_CASE("adjoint domain: momentum with Dirichlet ends has a free adjoint") {
    const OperatorSpec spec("P_box", ops::momentum(), ExtendedInterval(0.0, 1.0),
                            BoundarySystem::dirichlet_both_ends());
    const BoundarySystem adj = adjoint_domain(spec);
    CHECK(adj.empty());
}

TEST_CASE("adjoint domain: periodic first order stays periodic") {
    const OperatorSpec spec("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                            BoundarySystem::periodic());
    const BoundarySystem adj = adjoint_domain(spec);
    CHECK(same_domain_subspace(adj, spec.domain, spec.interval));
}

TEST_CASE("adjoint domain: Dirichlet Laplacian stays Dirichlet") {
    const OperatorSpec spec("H", ops::kinetic(), ExtendedInterval(-1.0, 1.0),
                            BoundarySystem::dirichlet_both_ends());
    const BoundarySystem adj = adjoint_domain(spec);
    CHECK(same_domain_subspace(adj, spec.domain, spec.interval));
}

TEST_CASE("classification: momentum on the unit box") {
    const OperatorSpec spec("P_box", ops::momentum(), ExtendedInterval(0.0, 1.0),
                            BoundarySystem::dirichlet_both_ends());
    const ClassificationReport rep = classify(spec);
    CHECK(rep.formally_symmetric);
    CHECK(rep.hermitian);
    CHECK_FALSE(rep.self_adjoint);
    REQUIRE(rep.deficiency.has_value());
    CHECK(rep.deficiency->first == 1);
    CHECK(rep.deficiency->second == 1);
    REQUIRE(rep.spectrum_region.has_value());
    CHECK(*rep.spectrum_region == SpectrumRegion::whole_plane);
}

TEST_CASE("classification: periodic angular momentum is self-adjoint") {
    const OperatorSpec spec("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                            BoundarySystem::periodic());
    const ClassificationReport rep = classify(spec);
    CHECK(rep.hermitian);
    CHECK(rep.self_adjoint);
    REQUIRE(rep.deficiency.has_value());
    CHECK(rep.deficiency->first == 0);
    CHECK(rep.deficiency->second == 0);
}

TEST_CASE("classification: phase-linked momentum family is self-adjoint, real spectrum") {
    for (double alpha : {0.0, 1.0, M_PI, -2.5}) {
        const OperatorSpec spec("P_alpha", ops::momentum(), ExtendedInterval(0.0, 1.0),
                                BoundarySystem::quasi_periodic(alpha));
        const ClassificationReport rep = classify(spec);
        CHECK(rep.self_adjoint);
        REQUIRE(rep.spectrum_region.has_value());
        CHECK(*rep.spectrum_region == SpectrumRegion::real_subset);
    }
}

TEST_CASE("classification: maximal momentum on a finite interval is not Hermitian") {
    const OperatorSpec spec("P_max", ops::momentum(), ExtendedInterval(0.0, 1.0));
    const ClassificationReport rep = classify(spec);
    CHECK(rep.formally_symmetric);
    CHECK_FALSE(rep.hermitian);
}

TEST_CASE("classification rejects non-symmetric expressions with a diagnostic") {
    std::vector<Polynomial> c(2);
    c[1] = Polynomial::monomial(RationalComplex(1L), 3);  // x^3 d/dx
    const OperatorSpec spec("skew", DifferentialExpression(std::move(c)),
                            ExtendedInterval(0.0, 1.0), BoundarySystem::dirichlet_both_ends());
    const ClassificationReport rep = classify(spec);
    CHECK_FALSE(rep.formally_symmetric);
    CHECK_FALSE(rep.hermitian);
    CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("Hellinger-Toeplitz bookkeeping: order >= 1 is never everywhere defined") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        DifferentialExpression e = random_expression(rng, 4, 4);
        if (e.order() == 0) continue;
        const OperatorSpec spec("r", e, ExtendedInterval(0.0, 1.0));
        CHECK_FALSE(classify_boundary_only(spec).everywhere_defined);
    }
    // bounded multiplication on a finite interval is everywhere defined
    const OperatorSpec q("Q", ops::position(), ExtendedInterval(0.0, 1.0));
    CHECK(classify_boundary_only(q).everywhere_defined);
    // multiplication by x on the line is unbounded, hence not everywhere defined
    const OperatorSpec qline("Q_line", ops::position(), ExtendedInterval::whole_line());
    CHECK_FALSE(classify_boundary_only(qline).everywhere_defined);
}

TEST_CASE("classification monotonicity: more constraints never free the adjoint") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> endd(0, 1), deriv(0, 3);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    const ExtendedInterval iv(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const DifferentialExpression L = random_expression(rng, 4, 3);
        BoundarySystem small;
        small.add(BoundaryFunctional::value(endd(rng) != 0, deriv(rng)));
        BoundarySystem large = small;
        BoundaryFunctional extra;
        extra.row(jet_index(endd(rng) != 0, deriv(rng))) = Cplx(re(rng), re(rng));
        extra.row(jet_index(endd(rng) != 0, deriv(rng))) = Cplx(re(rng), re(rng));
        large.add(extra);

        const OperatorSpec a("a", L, iv, small);
        const OperatorSpec b("b", L, iv, large);
        // D(b) <= D(a)  =>  D(a†) <= D(b†)
        REQUIRE(domain_contained_in(b.domain, a.domain, iv));
        CHECK(domain_contained_in(adjoint_domain(a), adjoint_domain(b), iv));
    }
}

TEST_CASE("self-adjointness fixed point: adjoint domain equals the domain") {
    const std::vector<OperatorSpec> specs = {
        OperatorSpec("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                     BoundarySystem::periodic()),
        OperatorSpec("P_alpha", ops::momentum(), ExtendedInterval(0.0, 1.0),
                     BoundarySystem::quasi_periodic(0.7)),
        OperatorSpec("H", ops::kinetic(), ExtendedInterval(-1.0, 1.0),
                     BoundarySystem::dirichlet_both_ends()),
        OperatorSpec("H_robin", ops::kinetic(), ExtendedInterval(-1.0, 1.0),
                     BoundarySystem::robin_both_ends(0.4)),
        OperatorSpec("H2", ops::kinetic_squared(), ExtendedInterval(-1.0, 1.0),
                     BoundarySystem::clamped_value_and_second()),
    };
    for (const auto& spec : specs) {
        const ClassificationReport rep = classify_boundary_only(spec);
        CHECK(rep.hermitian);
        CHECK(same_domain_subspace(rep.adjoint_domain, spec.domain, spec.interval));
    }
}

TEST_CASE("apply_exact on closed forms") {
    // (Q psi)(2) with psi = 1
    const AnalyticFunction one = AnalyticFunction::from_polynomial(Polynomial::one());
    CHECK(apply_exact(ops::position(), one, 2.0) == Cplx(2.0, 0.0));

    // (H p)(x) for p = a^2 - x^2 equals hbar^2/m
    const Polynomial parab(std::vector<RationalComplex>{RationalComplex(1L), RationalComplex(0L),
                                                        RationalComplex(-1L)});
    const AnalyticFunction p = AnalyticFunction::from_polynomial(parab);
    CHECK(std::abs(apply_exact(ops::kinetic(), p, 0.3) - Cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("eigen-equation of the symmetrized P x^3 operator at sample points") {
    // f = 2^{-1/2} |x|^{-3/2} exp(-1/(4x^2)) satisfies A f = (hbar/i) f pointwise
    const AnalyticFunction f =
        AnalyticFunction::inverse_square_exponential(-1, 1.0, Cplx(1.0 / std::sqrt(2.0), 0.0));
    const DifferentialExpression A = ops::symmetric_pq_power(3);
    for (double x : {0.7, 0.5, -0.9, 1.8, -2.5}) {
        const Cplx ratio = apply_exact(A, f, x) / f.value(x);
        CHECK(std::abs(ratio - Cplx(0.0, -1.0)) < 1e-12);
    }
}

TEST_CASE("membership: parabola is not in the fourth-order clamped domain") {
    // psi = sqrt(15)/4 (1 - x^2) on [-1,1]: psi(+-1)=0 holds, psi''(+-1)=0 fails
    const Rational s = rational_from_double(std::sqrt(15.0) / 4.0);
    const Polynomial parab(std::vector<RationalComplex>{RationalComplex(s), RationalComplex(0L),
                                                        RationalComplex(-s)});
    const AnalyticFunction psi = AnalyticFunction::from_polynomial(parab);
    const OperatorSpec h2("H2", ops::kinetic_squared(), ExtendedInterval(-1.0, 1.0),
                          BoundarySystem::clamped_value_and_second());
    const DomainVerdict v = is_in_domain(h2, psi);
    CHECK_FALSE(v.in_domain);
    int failed = 0;
    for (const auto& chk : v.boundary_checks)
        if (!chk.pass) ++failed;
    CHECK(failed == 2);  // exactly the two second-derivative conditions

    const OperatorSpec h("H", ops::kinetic(), ExtendedInterval(-1.0, 1.0),
                         BoundarySystem::dirichlet_both_ends());
    CHECK(is_in_domain(h, psi).in_domain);
}

TEST_CASE("membership: circle eigenmodes are periodic") {
    const OperatorSpec lz("Lz", ops::momentum(), ExtendedInterval(0.0, 2.0 * M_PI),
                          BoundarySystem::periodic());
    for (int m : {-2, 0, 1, 5}) {
        const DomainVerdict v = is_in_domain(lz, AnalyticFunction::circle_mode(m));
        CHECK(v.in_domain);
    }
}

TEST_CASE("boundary construction guards") {
    CHECK_THROWS_AS(BoundaryFunctional::value(false, 4), std::invalid_argument);
    // functionals may not reference an infinite endpoint
    CHECK_THROWS_AS(OperatorSpec("bad", ops::momentum(), ExtendedInterval::whole_line(),
                                 BoundarySystem::dirichlet_both_ends()),
                    std::invalid_argument);
}

TEST_CASE("apply_exact refuses declared singular points") {
    const AnalyticFunction f =
        AnalyticFunction::inverse_square_exponential(-1, 1.0, Cplx(1.0, 0.0));
    CHECK_THROWS_AS(apply_exact(ops::momentum(), f, 0.0), std::domain_error);
}

TEST_CASE("membership: ambiguous tails are reported inconclusive, never passed") {
    // x * (1+x^2)^{-3/4} has |Q f|^2 ~ 1/|x|: shell ratios sit in the ambiguity band
    std::vector<AnalyticFunction::Callable> derivs;
    derivs.push_back([](double x) { return Cplx(std::pow(1.0 + x * x, -0.75), 0.0); });
    const AnalyticFunction slow("slow_decay", std::move(derivs));
    const OperatorSpec q("Q_line", ops::position(), ExtendedInterval::whole_line());
    const DomainVerdict v = is_in_domain(q, slow);
    CHECK(v.image_integrability == TailClass::inconclusive);
    CHECK_FALSE(v.conclusive);
    CHECK_FALSE(v.in_domain);
}

TEST_CASE("membership: the pointwise eigenfunction of A fails the rapid-decay domain") {
    const AnalyticFunction f =
        AnalyticFunction::inverse_square_exponential(-1, 1.0, Cplx(1.0 / std::sqrt(2.0), 0.0));
    OperatorSpec a("A", ops::symmetric_pq_power(3), ExtendedInterval::whole_line());
    a.rapid_decay_domain = true;
    const DomainVerdict v = is_in_domain(a, f);
    CHECK_FALSE(v.in_domain);
    REQUIRE(v.rapid_decay_ok.has_value());
    CHECK_FALSE(*v.rapid_decay_ok);
    // the failure is decay, not integrability: ||A f|| = ||f|| is finite
    CHECK(v.image_integrability == TailClass::convergent);
}
