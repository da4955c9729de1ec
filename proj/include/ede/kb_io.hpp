#pragma once
// Document formats: knowledge bases (*.kb.json), evidence sets (*.ev.json),
// evaluation traces, and sweep tables.
//
// Parsing is strict. Unknown fields, unknown format versions, duplicate keys
// and out-of-range numbers are rejected with a diagnostic naming the field
// path, e.g. "factors[0].roles[0].intensity". Nothing is silently repaired.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ede/aggregation.hpp"
#include "ede/belief.hpp"

namespace ede {

inline constexpr std::string_view kFormatVersion = "1";

inline constexpr std::string_view kSweepHeader =
    "eta,belief,stage_supportive,stage_adverse,stage_sufficient,stage_contrary,stage_necessary";

struct KbDocument {
    std::string format_version{kFormatVersion};
    KnowledgeBase kb;
    std::optional<EvaluationOptions> options;  // per-KB evaluation defaults

    friend bool operator==(const KbDocument&, const KbDocument&) = default;
};

// Fixed nine-decimal rendering used by every text output.
std::string format_belief(double value);

// --- text documents --------------------------------------------------------

// Errors: Syntax, Schema (shape, types, ranges), Semantic (validate_kb).
KbDocument parse_kb_document(std::string_view text);
KnowledgeBase parse_kb(std::string_view text);
std::string write_kb(const KbDocument& doc);

// Structural parse of an evidence document, without resolving factor ids.
std::vector<EvidenceItem> parse_evidence_entries(std::string_view text);

// Parses and resolves against `kb`. Errors: UnknownFactor, Scale (value on a
// nominal or ordinal factor), DuplicateEvidence, plus the structural ones.
std::vector<EvidenceItem> parse_evidence(std::string_view text, const KnowledgeBase& kb);

// Checks evidence entries against a KB without evaluating them.
void check_evidence(std::span<const EvidenceItem> evidence, const KnowledgeBase& kb);

std::string write_evidence(std::span<const EvidenceItem> evidence);

std::string write_trace(const EvaluationTrace& trace);
EvaluationTrace parse_trace(std::string_view text);

// Comma-separated table with kSweepHeader, values printed to nine decimals.
std::string write_sweep(std::span<const SweepRow> rows);
std::vector<SweepRow> parse_sweep(std::string_view text);

// --- JSON values -------------------------------------------------------------

// Syntax errors carry line and column; duplicate object keys are rejected.
nlohmann::json parse_json(std::string_view text);

KbDocument kb_from_json(const nlohmann::json& doc);
// `entries` is the array of evidence entries; paths are "evidence[i]...".
std::vector<EvidenceItem> evidence_from_json(const nlohmann::json& entries);
// Fields present in `doc` override `base`. `path` prefixes diagnostics.
EvaluationOptions options_from_json(const nlohmann::json& doc, const std::string& path, EvaluationOptions base);

nlohmann::json to_json(const KbDocument& doc);
nlohmann::json to_json(std::span<const EvidenceItem> evidence);
nlohmann::json to_json(const EvaluationOptions& options);
nlohmann::json to_json(const EvaluationTrace& trace);  // array of stage records
nlohmann::json to_json(std::span<const SweepRow> rows);

EvaluationTrace trace_from_json(const nlohmann::json& stages);

// Machine-readable description of the KB, evidence and options fields.
nlohmann::json field_schema();

}  // namespace ede
