#include "qdomain/cli.hpp"

#include <fstream>
#include <sstream>

#include "qdomain/report.hpp"

namespace qd {

namespace {

using Cplx = std::complex<double>;

std::string format_payload(const CliConfig& cfg, const std::string& kind,
                           const std::string& label, const Json& json_payload,
                           const std::string& text_payload, const std::string& csv_payload) {
    switch (cfg.output_format) {
        case CliConfig::Format::json: {
            Json envelope = make_report(kind, label, json_payload);
            return envelope.dump(2) + "\n";
        }
        case CliConfig::Format::csv:
            return csv_payload.empty() ? text_payload : csv_payload;
        case CliConfig::Format::text: break;
    }
    return text_payload;
}

AnalyticFunction make_state(const std::string& descriptor) {
    const auto colon = descriptor.find(':');
    const std::string kind = descriptor.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    if (kind == "gaussian") {
        const double sigma = arg.empty() ? 1.0 : std::stod(arg);
        return AnalyticFunction::gaussian(0.0, sigma, Cplx(1.0, 0.0), 4);
    }
    if (kind == "mode") {
        const int m = arg.empty() ? 1 : std::stoi(arg);
        return AnalyticFunction::circle_mode(m);
    }
    throw std::invalid_argument("unknown state descriptor '" + descriptor +
                                "' (use gaussian:sigma or mode:m)");
}

void maybe_write(const CliConfig& cfg, const std::string& payload) {
    if (cfg.output_path.empty()) return;
    std::ofstream out(cfg.output_path);
    if (!out) throw std::runtime_error("cannot write output file '" + cfg.output_path + "'");
    out << payload;
}

RunResult dispatch(const CliConfig& cfg) {
    RunResult res;

    switch (cfg.command) {
        case CliConfig::Command::classify: {
            const OperatorSpec spec = parse_spec_file(cfg.spec_path, cfg.params);
            const ClassificationReport rep = classify(spec);
            res.payload = format_payload(cfg, "classification", spec.label, to_json(rep),
                                         render_text(rep), "");
            if (!rep.self_adjoint) {
                res.exit_code = 2;
                res.diagnostics = "NOT_OBSERVABLE";
            }
            break;
        }
        case CliConfig::Command::deficiency: {
            const OperatorSpec spec = parse_spec_file(cfg.spec_path, cfg.params);
            const DeficiencyResult rep =
                deficiency_indices(spec, {.kappa = cfg.kappa, .force_numeric = cfg.force_numeric});
            res.payload =
                format_payload(cfg, "deficiency", spec.label, to_json(rep), render_text(rep), "");
            if (!rep.conclusive) {
                res.exit_code = 2;
                res.diagnostics = "INCONCLUSIVE_EVIDENCE";
            }
            break;
        }
        case CliConfig::Command::extensions: {
            const OperatorSpec spec = parse_spec_file(cfg.spec_path, cfg.params);
            const ExtensionFamily fam = self_adjoint_extensions(spec);
            res.payload =
                format_payload(cfg, "extensions", spec.label, to_json(fam), render_text(fam), "");
            if (!fam.exists) {
                res.exit_code = 2;
                res.diagnostics = "NO_SELF_ADJOINT_EXTENSION";
            }
            break;
        }
        case CliConfig::Command::spectrum: {
            const OperatorSpec spec = parse_spec_file(cfg.spec_path, cfg.params);
            const DiscretizedOperator op = discretize(spec, cfg.grid_n, cfg.truncation);
            if (!op.symmetric) {
                const ClassificationReport rep = classify(spec);
                std::ostringstream os;
                os << "spectrum refused: the realization is not self-adjoint\n";
                for (const auto& w : op.warnings) os << "warning: " << w << "\n";
                os << render_text(rep);
                Json j = to_json(rep);
                j["warnings"] = op.warnings;
                res.payload = format_payload(cfg, "classification", spec.label, j, os.str(), "");
                res.exit_code = 2;
                res.diagnostics = "NOT_OBSERVABLE";
                break;
            }
            const SpectralDecomposition dec = eigendecompose(op, cfg.k);
            Json j = spectrum_to_json(dec);
            j["warnings"] = op.warnings;
            res.payload = format_payload(cfg, "spectrum", spec.label, j, spectrum_text(dec),
                                         spectrum_csv(dec));
            if (!cfg.plot_prefix.empty()) {
                std::vector<double> ns, es;
                for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
                    ns.push_back(static_cast<double>(i + 1));
                    es.push_back(dec.eigenvalues(i));
                }
                write_xy(cfg.plot_prefix + "_ladder.dat", ns, es);
                const int modes = std::min<int>(3, cfg.k);
                for (int m = 0; m < modes; ++m) {
                    const WaveFunction phi = dec.eigenfunction(m);
                    std::vector<double> ys(static_cast<std::size_t>(phi.grid.n));
                    for (int jx = 0; jx < phi.grid.n; ++jx) ys[static_cast<std::size_t>(jx)] = phi.values(jx).real();
                    write_xy(cfg.plot_prefix + "_mode" + std::to_string(m + 1) + ".dat",
                             phi.grid.points, ys);
                }
            }
            break;
        }
        case CliConfig::Command::paradox: {
            if (cfg.example_id < 1 || cfg.example_id > 7)
                throw std::invalid_argument("paradox requires an example id in 1..7");
            ParadoxConfig pc;
            pc.grid_n = cfg.grid_n;
            pc.trace_dimension = cfg.trace_dimension;
            const ParadoxVerdict v = run_paradox(cfg.example_id, pc);
            res.payload = format_payload(cfg, "paradox", "example_" + std::to_string(v.example_id),
                                         to_json(v), render_text(v), claims_csv(v));
            if (!v.all_ok()) {
                res.exit_code = 1;
                res.diagnostics = "PARADOX_CLAIM_FAILED";
            }
            break;
        }
        case CliConfig::Command::report: {
            ParadoxConfig pc;
            pc.grid_n = cfg.grid_n;
            pc.trace_dimension = cfg.trace_dimension;
            const auto verdicts = run_all_paradoxes(pc);
            bool all_ok = true;
            Json bundle = Json::array();
            std::ostringstream text;
            std::ostringstream csv;
            bool first = true;
            for (const auto& v : verdicts) {
                all_ok &= v.all_ok();
                bundle.push_back(to_json(v));
                text << render_text(v) << "\n";
                std::istringstream claims(claims_csv(v));
                std::string line;
                bool header = true;
                while (std::getline(claims, line)) {
                    if (header && !first) {
                        header = false;
                        continue;
                    }
                    header = false;
                    csv << line << "\n";
                }
                first = false;
            }
            res.payload = format_payload(cfg, "report", "paradox_suite",
                                         Json{{"verdicts", bundle}}, text.str(), csv.str());
            if (!cfg.plot_prefix.empty()) {
                // residual-vs-eps curve for the approximate position eigenfunction
                std::vector<double> epss, residuals;
                for (double eps = 0.2; eps > 0.2 / 512.0; eps *= 0.5) {
                    epss.push_back(eps);
                    residuals.push_back(approximate_position_eigenfunction(0.3, eps).residual);
                }
                write_xy(cfg.plot_prefix + "_residual_vs_eps.dat", epss, residuals);
                // the parabola state sampled on the well grid
                const Grid g = Grid::make(ExtendedInterval(-1.0, 1.0), 512, GridTopology::closed);
                const Rational s = rational_from_double(std::sqrt(15.0) / 4.0);
                const Polynomial parab(std::vector<RationalComplex>{
                    RationalComplex(s), RationalComplex(0L), RationalComplex(-s)});
                const WaveFunction w =
                    WaveFunction::sample(g, AnalyticFunction::from_polynomial(parab));
                std::vector<double> ys(static_cast<std::size_t>(g.n));
                for (int j = 0; j < g.n; ++j) ys[static_cast<std::size_t>(j)] = w.values(j).real();
                write_xy(cfg.plot_prefix + "_parabola_state.dat", g.points, ys);
            }
            if (!all_ok) {
                res.exit_code = 1;
                res.diagnostics = "PARADOX_CLAIM_FAILED";
            }
            break;
        }
        case CliConfig::Command::uncertainty: {
            if (cfg.op_a_path.empty() || cfg.op_b_path.empty())
                throw std::invalid_argument("uncertainty requires --op-a and --op-b spec files");
            OperatorSpec a = parse_spec_file(cfg.op_a_path, cfg.params);
            OperatorSpec b = parse_spec_file(cfg.op_b_path, cfg.params);
            if (cfg.truncation) {
                a.truncation = cfg.truncation;
                b.truncation = cfg.truncation;
            }
            const AnalyticFunction psi = make_state(cfg.state);
            const UncertaintyReport rep =
                uncertainty_product(a, b, psi, {64, cfg.quadrature_order});
            res.payload = format_payload(cfg, "uncertainty", a.label + "_" + b.label,
                                         to_json(rep), render_text(rep), "");
            break;
        }
    }
    maybe_write(cfg, res.payload);
    return res;
}

}  // namespace

RunResult run_command(const CliConfig& cfg) {
    try {
        return dispatch(cfg);
    } catch (const ParseError& e) {
        return {1, "", std::string("parse error: ") + e.what()};
    } catch (const std::exception& e) {
        return {1, "", std::string("error: ") + e.what()};
    }
}

}  // namespace qd
