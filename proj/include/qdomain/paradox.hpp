#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qd {

struct ClaimRecord {
    std::string description;
    std::complex<double> computed;
    // absent claimed value means the quantity is asserted undefined/divergent
    std::optional<std::complex<double>> claimed;
    std::string claimed_text;
    double tolerance = 0.0;
    enum class Status { reproduced, refuted_as_expected, resolved } status = Status::reproduced;
    bool ok = false;
};

struct ParadoxVerdict {
    int example_id = 0;
    std::string title;
    std::vector<ClaimRecord> claims;
    std::string resolution_note;

    bool all_ok() const {
        for (const auto& c : claims)
            if (!c.ok) return false;
        return !claims.empty();
    }
};

// Knobs are fixed here so verdicts are reproducible artifacts; two runs with
// the same config produce byte-identical reports.
struct ParadoxConfig {
    int trace_dimension = 100;
    int grid_n = 2000;
    int spectral_modes = 10000;
    int weight_modes = 99;
    double truncation = 12.0;
    unsigned seed = 20240811;
};

// finite-dimensional trace of the canonical commutator
ParadoxVerdict paradox_trace(int dimension, const ParadoxConfig& cfg = {});
// square-integrability versus decay at infinity
ParadoxVerdict paradox_decay(const ParadoxConfig& cfg = {});
// complex "eigenvalue" of a symmetric operator (symmetrized P x^3)
ParadoxVerdict paradox_pq3(const ParadoxConfig& cfg = {});
// boxed momentum: empty point spectrum, residual spectrum everywhere
ParadoxVerdict paradox_momentum_box(const ParadoxConfig& cfg = {});
// angle/angular-momentum commutator average on an eigenmode
ParadoxVerdict paradox_angle(const ParadoxConfig& cfg = {});
// uncertainty bound on the circle
ParadoxVerdict paradox_uncertainty_circle(const ParadoxConfig& cfg = {});
// squared well Hamiltonian on the parabola state
ParadoxVerdict paradox_well_h2(const ParadoxConfig& cfg = {});

ParadoxVerdict run_paradox(int example_id, const ParadoxConfig& cfg = {});
std::vector<ParadoxVerdict> run_all_paradoxes(const ParadoxConfig& cfg = {});

std::string to_string(ClaimRecord::Status s);

}  // namespace qd
