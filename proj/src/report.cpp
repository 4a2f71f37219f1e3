#include "qdomain/report.hpp"

#include <fstream>
#include <sstream>

namespace qd {

namespace {

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

Json to_json(const ClassificationReport& rep) {
    Json j;
    j["formally_symmetric"] = rep.formally_symmetric;
    j["hermitian"] = rep.hermitian;
    j["self_adjoint"] = rep.self_adjoint;
    j["everywhere_defined"] = rep.everywhere_defined;
    j["adjoint_domain"] = rep.adjoint_domain.to_string();
    if (rep.deficiency) j["deficiency"] = Json::array({rep.deficiency->first, rep.deficiency->second});
    if (rep.spectrum_region) j["spectrum_region"] = to_string(*rep.spectrum_region);
    j["notes"] = rep.notes;
    if (rep.hermitian && !rep.self_adjoint) j["warning_code"] = "NOT_OBSERVABLE";
    return j;
}

Json to_json(const DeficiencyResult& rep) {
    Json j;
    j["n_plus"] = rep.n_plus;
    j["n_minus"] = rep.n_minus;
    j["kappa"] = rep.kappa;
    j["method"] = rep.method;
    j["conclusive"] = rep.conclusive;
    j["spectrum_region"] = to_string(spectrum_region_for(rep.n_plus, rep.n_minus));
    Json evidence = Json::array();
    for (const auto& ev : rep.evidence) {
        evidence.push_back(Json{{"sign", ev.sign},
                                {"form", ev.form},
                                {"square_integrable", ev.square_integrable},
                                {"lower", to_string(ev.lower_classification)},
                                {"upper", to_string(ev.upper_classification)},
                                {"detail", ev.detail}});
    }
    j["evidence"] = evidence;
    j["notes"] = rep.notes;
    return j;
}

Json to_json(const ExtensionFamily& fam) {
    Json j;
    j["exists"] = fam.exists;
    if (!fam.exists) j["reason"] = fam.reason;
    j["parameter_dimension"] = fam.parameter_dimension;
    j["catalog_name"] = fam.catalog_name;
    Json presets = Json::array();
    for (const auto& [name, spec] : fam.presets)
        presets.push_back(Json{{"name", name}, {"domain", spec.domain.to_string()}});
    j["presets"] = presets;
    return j;
}

Json to_json(const ParadoxVerdict& verdict) {
    Json j;
    j["example_id"] = verdict.example_id;
    j["title"] = verdict.title;
    Json claims = Json::array();
    for (const auto& c : verdict.claims) {
        Json cj;
        cj["description"] = c.description;
        cj["computed"] = complex_json(c.computed);
        if (c.claimed) cj["claimed"] = complex_json(*c.claimed);
        else cj["claimed"] = c.claimed_text.empty() ? "undefined" : c.claimed_text;
        cj["tolerance"] = c.tolerance;
        cj["status"] = to_string(c.status);
        cj["ok"] = c.ok;
        claims.push_back(std::move(cj));
    }
    j["claims"] = claims;
    j["resolution_note"] = verdict.resolution_note;
    j["all_ok"] = verdict.all_ok();
    return j;
}

Json to_json(const UncertaintyReport& rep) {
    Json j;
    j["delta_a"] = rep.delta_a;
    j["delta_b"] = rep.delta_b;
    j["mean_a"] = complex_json(rep.mean_a);
    j["mean_b"] = complex_json(rep.mean_b);
    j["lhs_product"] = rep.lhs_product;
    j["rhs_sesquilinear"] = rep.rhs_sesquilinear;
    if (rep.rhs_commutator) j["rhs_commutator"] = *rep.rhs_commutator;
    j["surface_term"] = complex_json(rep.surface_contribution);
    return j;
}

Json spectrum_to_json(const SpectralDecomposition& dec) {
    Json j;
    j["count"] = dec.eigenvalues.size();
    Json vals = Json::array();
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) vals.push_back(dec.eigenvalues(i));
    j["eigenvalues"] = vals;
    j["grid_n"] = dec.grid.n;
    j["spacing"] = dec.grid.spacing;
    return j;
}

Json make_report(const std::string& kind, const std::string& label, Json payload) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = kind;
    j["label"] = label;
    j["payload"] = std::move(payload);
    return j;
}

// ---------------------------------------------------------------------------
// schema
// ---------------------------------------------------------------------------

Json report_schema() {
    return Json{
        {"type", "object"},
        {"required", Json::array({"schema_version", "kind", "label", "payload"})},
        {"properties",
         Json{{"schema_version", Json{{"type", "integer"}}},
              {"kind",
               Json{{"type", "string"},
                    {"enum", Json::array({"classification", "deficiency", "extensions", "spectrum",
                                          "paradox", "report", "uncertainty"})}}},
              {"label", Json{{"type", "string"}}},
              {"payload", Json{{"type", "object"}}}}}};
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    return false;
}

bool validate_node(const Json& doc, const Json& schema, std::string* error, std::string path) {
    if (schema.contains("type") && !type_matches(doc, schema["type"].get<std::string>())) {
        if (error) *error = path + ": expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& v : schema["enum"]) hit |= (v == doc);
        if (!hit) {
            if (error) *error = path + ": value not in enum";
            return false;
        }
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!doc.contains(key.get<std::string>())) {
                if (error) *error = path + ": missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties")) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (doc.contains(key) &&
                !validate_node(doc[key], sub, error, path + "/" + key))
                return false;
        }
    }
    if (schema.contains("items") && doc.is_array()) {
        int idx = 0;
        for (const auto& item : doc) {
            if (!validate_node(item, schema["items"], error, path + "[" + std::to_string(idx) + "]"))
                return false;
            ++idx;
        }
    }
    return true;
}

}  // namespace

bool validate_report(const Json& doc, std::string* error) {
    return validate_node(doc, report_schema(), error, "$");
}

// ---------------------------------------------------------------------------
// text renderers
// ---------------------------------------------------------------------------

std::string render_text(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "Formally symmetric: " << (rep.formally_symmetric ? "yes" : "no") << "\n";
    os << "Hermitian: " << (rep.hermitian ? "yes" : "no") << "\n";
    os << "Self-adjoint: " << (rep.self_adjoint ? "yes" : "no") << "\n";
    os << "Everywhere defined: " << (rep.everywhere_defined ? "yes" : "no") << "\n";
    os << "Adjoint domain: " << rep.adjoint_domain.to_string() << "\n";
    if (rep.deficiency)
        os << "Deficiency indices: (" << rep.deficiency->first << ", " << rep.deficiency->second
           << ")\n";
    if (rep.spectrum_region) os << "Spectrum region: " << to_string(*rep.spectrum_region) << "\n";
    if (rep.hermitian && !rep.self_adjoint) os << "Warning: NOT_OBSERVABLE\n";
    for (const auto& n : rep.notes) os << "Note: " << n << "\n";
    return os.str();
}

std::string render_text(const DeficiencyResult& rep) {
    std::ostringstream os;
    os << "Deficiency indices: (" << rep.n_plus << ", " << rep.n_minus << ")   [kappa = "
       << rep.kappa << ", " << rep.method << "]\n";
    os << "Spectrum region: " << to_string(spectrum_region_for(rep.n_plus, rep.n_minus)) << "\n";
    for (const auto& ev : rep.evidence) {
        os << "  sign " << (ev.sign > 0 ? "+" : "-") << ": " << ev.form << " -> "
           << (ev.square_integrable ? "square-integrable" : "rejected") << " ("
           << to_string(ev.lower_classification) << "/" << to_string(ev.upper_classification)
           << ") " << ev.detail << "\n";
    }
    for (const auto& n : rep.notes) os << "Note: " << n << "\n";
    if (!rep.conclusive) os << "Warning: evidence inconclusive\n";
    return os.str();
}

std::string render_text(const ExtensionFamily& fam) {
    std::ostringstream os;
    if (!fam.exists) {
        os << "No self-adjoint extension: " << fam.reason << "\n";
        return os.str();
    }
    os << "Self-adjoint extensions: " << fam.catalog_name << "\n";
    os << "Real parameters: " << fam.parameter_dimension << "\n";
    for (const auto& [name, spec] : fam.presets)
        os << "  " << name << ": " << spec.domain.to_string() << "\n";
    return os.str();
}

std::string render_text(const ParadoxVerdict& verdict) {
    std::ostringstream os;
    os.precision(12);
    os << "Example " << verdict.example_id << ": " << verdict.title << "\n";
    for (const auto& c : verdict.claims) {
        os << "  [" << (c.ok ? "ok" : "FAIL") << "|" << to_string(c.status) << "] "
           << c.description << "\n";
        os << "      computed = " << c.computed.real();
        if (c.computed.imag() != 0.0) os << (c.computed.imag() > 0 ? " + " : " - ")
                                         << std::abs(c.computed.imag()) << "i";
        if (c.claimed) {
            os << ", claimed = " << c.claimed->real();
            if (c.claimed->imag() != 0.0) os << (c.claimed->imag() > 0 ? " + " : " - ")
                                             << std::abs(c.claimed->imag()) << "i";
            os << ", tolerance = " << c.tolerance;
        } else if (!c.claimed_text.empty()) {
            os << ", claimed: " << c.claimed_text;
        }
        os << "\n";
    }
    os << "Resolution: " << verdict.resolution_note << "\n";
    return os.str();
}

std::string render_text(const UncertaintyReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "Delta_A = " << rep.delta_a << "\n";
    os << "Delta_B = " << rep.delta_b << "\n";
    os << "Product = " << rep.lhs_product << "\n";
    os << "Sesquilinear bound = " << rep.rhs_sesquilinear << "\n";
    if (rep.rhs_commutator) os << "Commutator bound = " << *rep.rhs_commutator << "\n";
    else os << "Commutator bound: undefined (state outside the composite domains)\n";
    os << "Boundary term = " << rep.surface_contribution.real() << " + "
       << rep.surface_contribution.imag() << "i\n";
    return os.str();
}

std::string spectrum_text(const SpectralDecomposition& dec) {
    std::ostringstream os;
    os.precision(12);
    os << "n    E_n\n";
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
        os << (i + 1) << "    " << dec.eigenvalues(i) << "\n";
    return os.str();
}

std::string spectrum_csv(const SpectralDecomposition& dec) {
    std::ostringstream os;
    os.precision(17);
    os << "n,E_n\n";
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
        os << (i + 1) << "," << dec.eigenvalues(i) << "\n";
    return os.str();
}

std::string claims_csv(const ParadoxVerdict& verdict) {
    std::ostringstream os;
    os.precision(17);
    os << "example_id,claim,computed_re,computed_im,claimed_re,claimed_im,tolerance,status,ok\n";
    for (const auto& c : verdict.claims) {
        std::string desc = c.description;
        for (auto& ch : desc)
            if (ch == ',') ch = ';';
        os << verdict.example_id << "," << desc << "," << c.computed.real() << ","
           << c.computed.imag() << ",";
        if (c.claimed) os << c.claimed->real() << "," << c.claimed->imag();
        else os << ",";
        os << "," << c.tolerance << "," << to_string(c.status) << "," << (c.ok ? 1 : 0) << "\n";
    }
    return os.str();
}

void write_xy(const std::string& path, const std::vector<double>& x,
              const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("write_xy: length mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_xy: cannot open '" + path + "'");
    out.precision(17);
    for (std::size_t i = 0; i < x.size(); ++i) out << x[i] << " " << y[i] << "\n";
}

}  // namespace qd
