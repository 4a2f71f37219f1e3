#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdomain/paradox.hpp"

using namespace qd;

namespace {

const ClaimRecord* find_claim(const ParadoxVerdict& v, const std::string& needle) {
    for (const auto& c : v.claims)
        if (c.description.find(needle) != std::string::npos) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("trace paradox across dimensions") {
    for (int n : {1, 4, 100}) {
        const ParadoxVerdict v = paradox_trace(n);
        CHECK(v.all_ok());
        CHECK(v.claims.size() >= 2);
        const ClaimRecord* disc = find_claim(v, "discrepancy magnitude");
        REQUIRE(disc);
        CHECK(disc->computed.real() == doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
    }
}

TEST_CASE("decay paradox: unbounded but square-integrable, and the domain resolution") {
    const ParadoxVerdict v = paradox_decay();
    CHECK(v.all_ok());
    const ClaimRecord* incr = find_claim(v, "relative increment");
    REQUIRE(incr);
    CHECK(std::abs(incr->computed) <= 1e-8);
    const ClaimRecord* comb = find_claim(v, "comb area");
    REQUIRE(comb);
    CHECK(comb->computed.real() == doctest::Approx(0.6449340668).epsilon(2e-6));
    CHECK(find_claim(v, "maximal momentum domain"));
}

TEST_CASE("complex-eigenvalue paradox for the symmetrized P x^3 operator") {
    const ParadoxVerdict v = paradox_pq3();
    CHECK(v.all_ok());
    const ClaimRecord* norm = find_claim(v, "||f||^2");
    REQUIRE(norm);
    CHECK(norm->computed.real() == doctest::Approx(1.0).epsilon(1e-8));
    const ClaimRecord* idx = find_claim(v, "deficiency indices");
    REQUIRE(idx);
    CHECK(idx->computed == std::complex<double>(0.0, 1.0));
}

TEST_CASE("boxed momentum paradox") {
    const ParadoxVerdict v = paradox_momentum_box();
    CHECK(v.all_ok());
    const ClaimRecord* ladder = find_claim(v, "max |grid eigenvalue");
    REQUIRE(ladder);
    CHECK(std::abs(ladder->computed) <= 1e-8);
}

TEST_CASE("angle commutator paradox") {
    const ParadoxVerdict v = paradox_angle();
    CHECK(v.all_ok());
    const ClaimRecord* surf = find_claim(v, "surface term");
    REQUIRE(surf);
    CHECK(std::abs(surf->computed - std::complex<double>(0.0, -1.0)) <= 1e-12);
    const ClaimRecord* modulus = find_claim(v, "modulus of the difference");
    REQUIRE(modulus);
    CHECK(modulus->computed.real() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("circle uncertainty paradox") {
    const ParadoxVerdict v = paradox_uncertainty_circle();
    CHECK(v.all_ok());
    const ClaimRecord* disp = find_claim(v, "dispersion of the angle");
    REQUIRE(disp);
    CHECK(disp->computed.real() == doctest::Approx(M_PI / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("squared-energy paradox on the parabola state") {
    const ParadoxVerdict v = paradox_well_h2();
    CHECK(v.all_ok());
    const ClaimRecord* naive = find_claim(v, "naive");
    REQUIRE(naive);
    CHECK(std::abs(naive->computed) <= 1e-12);
    const ClaimRecord* spectral = find_claim(v, "E_n^2 p_n");
    REQUIRE(spectral);
    CHECK(spectral->computed.real() == doctest::Approx(1.875).epsilon(1e-4));
    const ClaimRecord* direct = find_claim(v, "||H psi||^2");
    REQUIRE(direct);
    CHECK(direct->computed.real() == doctest::Approx(1.875).epsilon(1e-10));
}

TEST_CASE("every verdict carries both the fallacy and its correction") {
    for (const auto& v : run_all_paradoxes()) {
        CHECK(v.claims.size() >= 2);
        bool has_reproduced = false, has_resolution = false;
        for (const auto& c : v.claims) {
            has_reproduced |= c.status == ClaimRecord::Status::reproduced;
            has_resolution |= c.status != ClaimRecord::Status::reproduced;
        }
        CHECK(has_reproduced);
        CHECK(has_resolution);
        CHECK_FALSE(v.resolution_note.empty());
        CHECK(v.all_ok());
    }
}

TEST_CASE("verdicts are deterministic") {
    auto snapshot = [](const ParadoxVerdict& v) {
        std::string s = v.title + "|" + v.resolution_note;
        char buf[64];
        for (const auto& c : v.claims) {
            std::snprintf(buf, sizeof buf, "%.17g:%.17g;", c.computed.real(), c.computed.imag());
            s += c.description + buf;
        }
        return s;
    };
    for (int id : {1, 3, 5, 6}) {
        const std::string a = snapshot(run_paradox(id));
        const std::string b = snapshot(run_paradox(id));
        CHECK(a == b);
    }
}
