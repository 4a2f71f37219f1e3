#pragma once

#include <optional>
#include <string>

#include "qdomain/specfile.hpp"

namespace qd {

struct CliConfig {
    enum class Command { classify, deficiency, extensions, spectrum, paradox, report, uncertainty };
    enum class Format { text, json, csv };

    Command command = Command::report;
    std::string spec_path;
    std::string op_a_path, op_b_path;  // composite analyses
    Format output_format = Format::text;
    int grid_n = 2000;
    std::optional<double> truncation;
    int quadrature_order = 16;
    int example_id = 0;      // paradox
    int k = 5;               // spectrum: eigenpair count
    double kappa = 1.0;      // deficiency
    bool force_numeric = false;
    int trace_dimension = 100;
    std::string state = "gaussian:1";  // uncertainty state: gaussian:sigma | mode:m
    SpecParams params;                 // alpha and friends, forwarded to the parser
    std::string output_path;           // empty: stdout payload
    std::string plot_prefix;           // empty: no plot data
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 domain/classification warnings, 1 errors
    std::string payload;
    std::string diagnostics;  // warnings and machine-readable codes
};

RunResult run_command(const CliConfig& cfg);

}  // namespace qd
