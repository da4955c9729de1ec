#pragma once
// Shared domain types for the evidential decision engine: beliefs, factor
// roles, value scales, evidence, and the evaluation trace. Every type here is
// a plain value; operations on them are pure.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ede/error.hpp"

namespace ede {

// A degree of belief in the hypothesis, always within [0, 1].
class BeliefDegree {
public:
    constexpr BeliefDegree() noexcept = default;

    // Throws Error(Range) for values outside [0, 1] or NaN.
    explicit BeliefDegree(double value);

    // For results of formulas that are mathematically inside [0, 1] but may
    // overshoot by rounding. Still rejects NaN.
    static BeliefDegree saturating(double value);

    constexpr double value() const noexcept { return value_; }

    friend constexpr auto operator<=>(const BeliefDegree&, const BeliefDegree&) = default;

private:
    double value_ = 0.0;
};

enum class RoleKind { Supportive, Adverse, Sufficient, Necessary, Contrary };

inline constexpr std::array<RoleKind, 5> kAllRoleKinds = {
    RoleKind::Supportive, RoleKind::Adverse, RoleKind::Sufficient,
    RoleKind::Necessary, RoleKind::Contrary};

std::string_view to_string(RoleKind kind) noexcept;
std::optional<RoleKind> parse_role_kind(std::string_view text) noexcept;

struct RoleSpec {
    RoleKind kind = RoleKind::Supportive;
    double intensity = 0.0;  // SUPP, ADV, SUFF, NEC or CONTR depending on kind

    friend bool operator==(const RoleSpec&, const RoleSpec&) = default;
};

struct IntervalScale {
    double v_low = 0.0;
    double v_high = 1.0;
    std::string units;

    friend bool operator==(const IntervalScale&, const IntervalScale&) = default;
};

struct NominalScale {
    friend bool operator==(const NominalScale&, const NominalScale&) = default;
};

struct OrdinalScale {
    friend bool operator==(const OrdinalScale&, const OrdinalScale&) = default;
};

using ValueScale = std::variant<IntervalScale, NominalScale, OrdinalScale>;

std::string_view scale_kind_name(const ValueScale& scale) noexcept;

struct FactorSpec {
    std::string id;
    std::string label;
    ValueScale scale = IntervalScale{};
    std::vector<RoleSpec> roles;
    int sharpness = 1;  // exponent n applied to the evidential strength

    const RoleSpec* role(RoleKind kind) const noexcept;
    bool plays(RoleKind kind) const noexcept { return role(kind) != nullptr; }

    friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

struct ObservedValue {
    double v = 0.0;
    friend bool operator==(const ObservedValue&, const ObservedValue&) = default;
};

struct ObservedStrength {
    double eta = 0.0;
    friend bool operator==(const ObservedStrength&, const ObservedStrength&) = default;
};

// No evidence at all. Not the same as a strength of 0, which confirms the
// factor sits at its lower margin.
struct Unobserved {
    friend bool operator==(const Unobserved&, const Unobserved&) = default;
};

using Observation = std::variant<ObservedValue, ObservedStrength, Unobserved>;

struct EvidenceItem {
    std::string factor_id;
    Observation observation = Unobserved{};

    static EvidenceItem value(std::string factor_id, double v) { return {std::move(factor_id), ObservedValue{v}}; }
    static EvidenceItem strength(std::string factor_id, double eta) { return {std::move(factor_id), ObservedStrength{eta}}; }
    static EvidenceItem unknown(std::string factor_id) { return {std::move(factor_id), Unobserved{}}; }

    friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct KnowledgeBase {
    std::string hypothesis;
    BeliefDegree prior;
    std::vector<FactorSpec> factors;

    const FactorSpec* find(std::string_view factor_id) const noexcept;

    friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

enum class TNormKind { Product, Minimum, Lukasiewicz, Hamacher };

std::string_view to_string(TNormKind kind) noexcept;
std::optional<TNormKind> parse_tnorm_kind(std::string_view text) noexcept;

struct TNorm {
    TNormKind kind = TNormKind::Product;
    double lambda = 1.0;  // Hamacher parameter, ignored by the other kinds

    static constexpr TNorm product() noexcept { return {TNormKind::Product, 1.0}; }
    static constexpr TNorm minimum() noexcept { return {TNormKind::Minimum, 1.0}; }
    static constexpr TNorm lukasiewicz() noexcept { return {TNormKind::Lukasiewicz, 1.0}; }
    static constexpr TNorm hamacher(double lambda) noexcept { return {TNormKind::Hamacher, lambda}; }

    friend bool operator==(const TNorm&, const TNorm&) = default;
};

enum class OutOfRangePolicy { Error, Clamp };

struct EvaluationOptions {
    TNorm tnorm;
    OutOfRangePolicy out_of_range = OutOfRangePolicy::Error;

    friend bool operator==(const EvaluationOptions&, const EvaluationOptions&) = default;
};

// Throws Error(Range) when the Hamacher parameter is outside [0, 1].
void validate_options(const EvaluationOptions& options);

// Pipeline stages share their names with the role kinds, applied in this order.
inline constexpr std::array<RoleKind, 5> kPipelineOrder = {
    RoleKind::Supportive, RoleKind::Adverse, RoleKind::Sufficient,
    RoleKind::Contrary, RoleKind::Necessary};

struct StageInput {
    std::string factor_id;
    double intensity = 0.0;
    double eta = 0.0;

    friend bool operator==(const StageInput&, const StageInput&) = default;
};

struct StageRecord {
    RoleKind stage = RoleKind::Supportive;
    std::vector<StageInput> inputs;  // in the order they were aggregated
    BeliefDegree belief_before;
    BeliefDegree belief_after;

    friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

struct EvaluationTrace {
    std::vector<StageRecord> stages;

    friend bool operator==(const EvaluationTrace&, const EvaluationTrace&) = default;
};

struct Violation {
    std::string factor_id;  // empty for KB-level violations
    std::string path;
    std::string reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Structural validation. Violations are returned as data; an empty list means
// the knowledge base is valid.
std::vector<Violation> validate_kb(const KnowledgeBase& kb);

// Converts violations into a Semantic error when the list is non-empty.
void require_valid(const KnowledgeBase& kb);

// Role pairs that move belief in opposite directions at the same margin.
bool roles_conflict(RoleKind a, RoleKind b) noexcept;

// eta^n; n must be >= 1.
double sharpen(double eta, int n);

// Evidential strength of an observation against its factor, sharpened by the
// factor's exponent. std::nullopt stands for an unknown observation.
//
// Errors: OutOfRange for a value outside the margins under the Error policy,
// Scale for a value on a nominal or ordinal factor, Range for a strength
// outside [0, 1].
std::optional<double> effective_strength(const EvidenceItem& item, const FactorSpec& factor,
                                         OutOfRangePolicy policy);

}  // namespace ede
