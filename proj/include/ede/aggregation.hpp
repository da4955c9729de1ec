#pragma once
// Multi-factor combination: triangular norms, aggregation of partially
// matched evidence per role class, and the staged evaluation pipeline.
//
// Stage order is fixed: supportive, adverse, sufficient, contrary, necessary.
// Within a stage, inputs are taken in the knowledge base's declared factor
// order. With the Product t-norm that order is irrelevant; with Hamacher at
// lambda != 1 the left fold is order dependent and the trace records the
// order that was used.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ede/belief.hpp"

namespace ede {

// Commutative, associative, monotone, with unit 1. Hamacher at lambda = 0
// evaluated at (0, 0) is taken as 0.
double tnorm_eval(const TNorm& t, double eta, double zeta);

// Probabilistic sum s1 + s2 - s1 * s2.
double combine_support(double s1, double s2);

struct WeightedEvidence {
    std::string factor_id;
    double intensity = 0.0;
    double eta = 0.0;
};

struct RoleStrength {
    double intensity = 0.0;
    double eta = 1.0;
};

// Aggregated degree of support. For two items:
//   S1*eta1 + S2*eta2 - S1*S2*T(eta1, eta2)
// Further items fold in with the accumulated support treated as a factor at
// full strength. Empty input gives 0.
double aggregate_support(std::span<const WeightedEvidence> items, const TNorm& t);

// Same combination as aggregate_support, applied to adversities.
double aggregate_adversity(std::span<const WeightedEvidence> items, const TNorm& t);

// Supportive evidence first, then discounted by the adverse evidence:
//   [bel + s*eta*(1 - bel)] * (1 - a*zeta)
BeliefDegree joint_mixed(BeliefDegree bel, RoleStrength support, RoleStrength adversity);

// max(bel, max_i (1 - eta_i)*bel + eta_i*SUFF_i)
BeliefDegree aggregate_sufficient(BeliefDegree bel, std::span<const WeightedEvidence> items);

// min(bel, min_i eta_i*bel + (1 - eta_i)*(1 - NEC_i))
BeliefDegree aggregate_necessary(BeliefDegree bel, std::span<const WeightedEvidence> items);

// min(bel, min_i (1 - eta_i)*bel + eta_i*(1 - CONTR_i))
BeliefDegree aggregate_contrary(BeliefDegree bel, std::span<const WeightedEvidence> items);

// Evidence resolved against a knowledge base: one optional effective strength
// per KB factor, in KB order. Missing and unknown evidence are both nullopt.
struct ResolvedEvidence {
    std::vector<std::optional<double>> strengths;
    std::vector<std::string> warnings;
};

// Errors: UnknownFactor, DuplicateEvidence, and whatever effective_strength
// raises. The KB is assumed valid.
ResolvedEvidence resolve_evidence(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                  OutOfRangePolicy policy);

// Evidence of one role class in KB order, skipping factors without evidence.
std::vector<WeightedEvidence> collect_stage(const KnowledgeBase& kb, const ResolvedEvidence& resolved,
                                            RoleKind stage);

struct EvaluationResult {
    BeliefDegree belief;
    EvaluationTrace trace;
    std::vector<std::string> warnings;
};

// Runs the five stages and records each one. The KB must pass validate_kb
// (Semantic error otherwise).
EvaluationResult evaluate_pipeline(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                   const EvaluationOptions& options);

struct SweepRow {
    double eta = 0.0;
    BeliefDegree belief;
    std::array<double, 5> stage_beliefs{};  // belief after each stage, pipeline order
};

// Holds all other evidence fixed and sets the target factor's observed
// strength to k / (steps - 1) for k = 0 .. steps - 1. The factor's sharpness
// still applies. steps must be >= 2.
std::vector<SweepRow> sweep_factor(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                   const EvaluationOptions& options, std::string_view factor_id, int steps);

}  // namespace ede
