#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qdomain/deficiency.hpp"
#include "qdomain/eig.hpp"
#include "qdomain/paradox.hpp"
#include "qdomain/spectral_ops.hpp"

namespace qd {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// payload serializers (deterministic field order)
Json to_json(const ClassificationReport& rep);
Json to_json(const DeficiencyResult& rep);
Json to_json(const ExtensionFamily& fam);
Json to_json(const ParadoxVerdict& verdict);
Json to_json(const UncertaintyReport& rep);
Json spectrum_to_json(const SpectralDecomposition& dec);

// envelope: {schema_version, kind, label, payload}
Json make_report(const std::string& kind, const std::string& label, Json payload);

// mini JSON-schema subset validator (type, properties, required, items, enum)
bool validate_report(const Json& doc, std::string* error = nullptr);
Json report_schema();

// text renderers
std::string render_text(const ClassificationReport& rep);
std::string render_text(const DeficiencyResult& rep);
std::string render_text(const ExtensionFamily& fam);
std::string render_text(const ParadoxVerdict& verdict);
std::string render_text(const UncertaintyReport& rep);
std::string spectrum_text(const SpectralDecomposition& dec);

// csv flatteners
std::string spectrum_csv(const SpectralDecomposition& dec);
std::string claims_csv(const ParadoxVerdict& verdict);

// two-column plot data
void write_xy(const std::string& path, const std::vector<double>& x,
              const std::vector<double>& y);

}  // namespace qd
