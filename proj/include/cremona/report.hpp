#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/dynamics.hpp"
#include "cremona/heisenberg.hpp"

namespace cremona::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "0.1.0";

/// One JSON document; body["kind"] is one of embedding, growth, degseq,
/// claim, map, family, batch, error. Field order is fixed by the builders,
/// so equal inputs give byte-identical text.
struct ReportDoc {
  Json body;

  std::string kind() const;
  bool operator==(const ReportDoc& other) const { return body == other.body; }
};

ReportDoc embedding_doc(const heisenberg::EmbeddingReport& r, const std::string& f_text,
                        const std::string& g_text, const std::optional<std::string>& family = std::nullopt);
ReportDoc growth_doc(const std::string& map_text, int n_max, const dynamics::DegreeSequence& seq,
                     const dynamics::GrowthReport& r);
ReportDoc degseq_doc(const std::string& map_text, int n_max, const dynamics::DegreeSequence& seq);
ReportDoc claim_doc(const std::string& mu_text, const std::string& lambda2_text, int max_deg,
                    const heisenberg::ClaimSolution& s);
/// op is compose, invert or commutator.
ReportDoc map_doc(const std::string& op, const std::vector<std::string>& args, const BirMap& result);
ReportDoc family_doc(const heisenberg::FamilySpec& spec, const std::string& f_text, const std::string& g_text,
                     const std::vector<heisenberg::Constraint>& constraints,
                     const std::optional<GaussRational>& kappa, const std::optional<ReportDoc>& embedding);

struct BatchItem {
  int line = 0;
  std::string command;
  int exit_code = 0;
  ReportDoc document;
};
ReportDoc batch_doc(const std::string& input, const std::vector<BatchItem>& items);

/// category: parse, usage, domain, shape, inverse, cap, schema, io.
ReportDoc error_doc(const std::string& category, const std::string& message, std::optional<int> line = std::nullopt,
                    std::optional<int> column = std::nullopt, const std::vector<std::string>& expected = {});

/// Pretty-printed with two-space indentation, no trailing newline.
std::string report_to_json(const ReportDoc& doc);
/// Parses and validates against the report schema. Throws SchemaError whose
/// path points at the offending field ("$.relations.fh", "$.results[3].line").
ReportDoc report_from_json(const std::string& text);
/// Validation only.
void validate_report(const Json& body);

/// The JSON schema shipped as schema/report.schema.json.
const Json& report_schema();

/// Plain-text rendering for the human output format.
std::string render_human(const ReportDoc& doc);

}  // namespace cremona::io
