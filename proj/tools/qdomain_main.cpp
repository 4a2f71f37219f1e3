#include <CLI11.hpp>
#include <iostream>

#include "qdomain/cli.hpp"
#include "qdomain/quadrature.hpp"

namespace {

void add_common(CLI::App* cmd, qd::CliConfig& cfg) {
    cmd->add_option("--format", [&cfg](const std::vector<std::string>& vals) {
            const std::string& v = vals.front();
            if (v == "text") cfg.output_format = qd::CliConfig::Format::text;
            else if (v == "json") cfg.output_format = qd::CliConfig::Format::json;
            else if (v == "csv") cfg.output_format = qd::CliConfig::Format::csv;
            else return false;
            return true;
        },
        "Output format: text | json | csv");
    cmd->add_option("--output", cfg.output_path, "Write the payload to a file");
    cmd->add_option("--alpha", [&cfg](const std::vector<std::string>& vals) {
            cfg.params["alpha"] = std::stod(vals.front());
            return true;
        },
        "Value for the 'alpha' parameter in boundary lines");
    cmd->add_option("--param", [&cfg](const std::vector<std::string>& vals) {
            for (const auto& kv : vals) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) return false;
                cfg.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            return true;
        },
        "Extra named parameter(s) as name=value")->take_all();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qdomain: a workbench for 1D quantum-mechanical operators where the domain of "
        "definition is part of the operator's identity"};
    app.require_subcommand(1);

    qd::CliConfig cfg;
    cfg.quadrature_order = qd::default_quadrature_order();

    auto* classify = app.add_subcommand("classify", "Hermitian / self-adjoint classification");
    classify->add_option("spec", cfg.spec_path, "Operator spec file")->required();
    add_common(classify, cfg);

    auto* deficiency = app.add_subcommand("deficiency", "Von Neumann deficiency indices");
    deficiency->add_option("spec", cfg.spec_path, "Operator spec file")->required();
    deficiency->add_option("--kappa", cfg.kappa, "Scale of the test eigenvalue +- i kappa");
    deficiency->add_flag("--numeric", cfg.force_numeric, "Bypass the closed-form catalogs");
    add_common(deficiency, cfg);

    auto* extensions = app.add_subcommand("extensions", "Self-adjoint extension families");
    extensions->add_option("spec", cfg.spec_path, "Operator spec file")->required();
    add_common(extensions, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "Discretize and diagonalize");
    spectrum->add_option("spec", cfg.spec_path, "Operator spec file")->required();
    spectrum->add_option("--k", cfg.k, "Number of eigenpairs");
    spectrum->add_option("--grid-n", cfg.grid_n, "Grid points");
    spectrum->add_option("--truncation", [&cfg](const std::vector<std::string>& vals) {
            cfg.truncation = std::stod(vals.front());
            return true;
        },
        "Half-width for truncating infinite intervals");
    spectrum->add_option("--plot", cfg.plot_prefix, "Prefix for two-column plot data files");
    add_common(spectrum, cfg);

    auto* paradox = app.add_subcommand("paradox", "Run one of the seven case studies");
    paradox->add_option("id", cfg.example_id, "Example id 1..7")->required();
    paradox->add_option("--dimension", cfg.trace_dimension, "Matrix dimension for example 1");
    paradox->add_option("--grid-n", cfg.grid_n, "Grid points for discretized cross-checks");
    add_common(paradox, cfg);

    auto* report = app.add_subcommand("report", "Run all seven case studies and bundle verdicts");
    report->add_option("--grid-n", cfg.grid_n, "Grid points for discretized cross-checks");
    report->add_option("--plot", cfg.plot_prefix, "Prefix for two-column plot data files");
    add_common(report, cfg);

    auto* uncertainty =
        app.add_subcommand("uncertainty", "Uncertainty product for a pair of operators");
    uncertainty->add_option("--op-a", cfg.op_a_path, "First operator spec file")->required();
    uncertainty->add_option("--op-b", cfg.op_b_path, "Second operator spec file")->required();
    uncertainty->add_option("--state", cfg.state, "State: gaussian:sigma | mode:m");
    uncertainty->add_option("--truncation", [&cfg](const std::vector<std::string>& vals) {
            cfg.truncation = std::stod(vals.front());
            return true;
        },
        "Half-width for truncating infinite intervals");
    add_common(uncertainty, cfg);

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) cfg.command = qd::CliConfig::Command::classify;
    else if (deficiency->parsed()) cfg.command = qd::CliConfig::Command::deficiency;
    else if (extensions->parsed()) cfg.command = qd::CliConfig::Command::extensions;
    else if (spectrum->parsed()) cfg.command = qd::CliConfig::Command::spectrum;
    else if (paradox->parsed()) cfg.command = qd::CliConfig::Command::paradox;
    else if (report->parsed()) cfg.command = qd::CliConfig::Command::report;
    else if (uncertainty->parsed()) cfg.command = qd::CliConfig::Command::uncertainty;

    const qd::RunResult res = qd::run_command(cfg);
    if (!res.payload.empty() && cfg.output_path.empty()) std::cout << res.payload;
    if (!res.diagnostics.empty()) std::cerr << res.diagnostics << "\n";
    return res.exit_code;
}
