#include "ede/aggregation.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

#include "ede/roles.hpp"

namespace ede {

namespace {

void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::Range, fmt::format("{} {} outside [0, 1]", name, x));
    }
}

void require_items(std::span<const WeightedEvidence> items) {
    for (const auto& item : items) {
        require_unit(item.intensity, "intensity");
        require_unit(item.eta, "strength");
    }
}

// Shared by support and adversity, which combine identically.
double fold_probabilistic(std::span<const WeightedEvidence> items, const TNorm& t) {
    require_items(items);
    if (items.empty()) return 0.0;
    double acc = items.front().intensity;
    double acc_eta = items.front().eta;
    if (items.size() == 1) return acc * acc_eta;
    for (const auto& item : items.subspan(1)) {
        acc = acc * acc_eta + item.intensity * item.eta - acc * item.intensity * tnorm_eval(t, acc_eta, item.eta);
        acc = std::clamp(acc, 0.0, 1.0);
        acc_eta = 1.0;
    }
    return acc;
}

}  // namespace

double tnorm_eval(const TNorm& t, double eta, double zeta) {
    require_unit(eta, "strength");
    require_unit(zeta, "strength");
    switch (t.kind) {
        case TNormKind::Product:
            return eta * zeta;
        case TNormKind::Minimum:
            return std::min(eta, zeta);
        case TNormKind::Lukasiewicz:
            return std::max(0.0, eta + zeta - 1.0);
        case TNormKind::Hamacher: {
            require_unit(t.lambda, "hamacher lambda");
            const double num = eta * zeta;
            if (num == 0.0) return 0.0;
            const double den = t.lambda + (1.0 - t.lambda) * (eta + zeta - num);
            return std::clamp(num / den, 0.0, 1.0);
        }
    }
    return 0.0;
}

double combine_support(double s1, double s2) {
    require_unit(s1, "support");
    require_unit(s2, "support");
    return std::clamp(s1 + s2 - s1 * s2, 0.0, 1.0);
}

double aggregate_support(std::span<const WeightedEvidence> items, const TNorm& t) {
    return fold_probabilistic(items, t);
}

double aggregate_adversity(std::span<const WeightedEvidence> items, const TNorm& t) {
    return fold_probabilistic(items, t);
}

BeliefDegree joint_mixed(BeliefDegree bel, RoleStrength support, RoleStrength adversity) {
    return update_adverse(update_supportive(bel, support.intensity, support.eta), adversity.intensity,
                          adversity.eta);
}

BeliefDegree aggregate_sufficient(BeliefDegree bel, std::span<const WeightedEvidence> items) {
    require_items(items);
    const double b = bel.value();
    double out = b;
    for (const auto& item : items) out = std::max(out, (1.0 - item.eta) * b + item.eta * item.intensity);
    return BeliefDegree::saturating(out);
}

BeliefDegree aggregate_necessary(BeliefDegree bel, std::span<const WeightedEvidence> items) {
    require_items(items);
    const double b = bel.value();
    double out = b;
    for (const auto& item : items) out = std::min(out, item.eta * b + (1.0 - item.eta) * (1.0 - item.intensity));
    return BeliefDegree::saturating(out);
}

BeliefDegree aggregate_contrary(BeliefDegree bel, std::span<const WeightedEvidence> items) {
    require_items(items);
    const double b = bel.value();
    double out = b;
    for (const auto& item : items) out = std::min(out, (1.0 - item.eta) * b + item.eta * (1.0 - item.intensity));
    return BeliefDegree::saturating(out);
}

ResolvedEvidence resolve_evidence(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                  OutOfRangePolicy policy) {
    std::unordered_map<std::string_view, std::size_t> index;
    index.reserve(kb.factors.size());
    for (std::size_t i = 0; i < kb.factors.size(); ++i) index.emplace(kb.factors[i].id, i);

    ResolvedEvidence out;
    out.strengths.assign(kb.factors.size(), std::nullopt);
    std::vector<bool> seen(kb.factors.size(), false);

    for (std::size_t e = 0; e < evidence.size(); ++e) {
        const auto& item = evidence[e];
        auto it = index.find(item.factor_id);
        if (it == index.end()) {
            throw Error(ErrorCode::UnknownFactor, fmt::format("unknown factor '{}'", item.factor_id),
                        fmt::format("evidence[{}].factor", e));
        }
        const auto& factor = kb.factors[it->second];
        if (seen[it->second]) {
            throw Error(ErrorCode::DuplicateEvidence, fmt::format("duplicate evidence for factor '{}'", factor.id),
                        fmt::format("evidence[{}].factor", e));
        }
        seen[it->second] = true;

        try {
            out.strengths[it->second] = effective_strength(item, factor, policy);
        } catch (const Error& err) {
            throw Error(err.code(), err.message(), fmt::format("evidence[{}]", e));
        }

        const auto* value = std::get_if<ObservedValue>(&item.observation);
        const auto* interval = std::get_if<IntervalScale>(&factor.scale);
        if (value != nullptr && interval != nullptr && (value->v < interval->v_low || value->v > interval->v_high)) {
            out.warnings.push_back(fmt::format("value {} for '{}' clamped to margins [{}, {}]", value->v,
                                               factor.id, interval->v_low, interval->v_high));
        }
    }
    return out;
}

std::vector<WeightedEvidence> collect_stage(const KnowledgeBase& kb, const ResolvedEvidence& resolved,
                                            RoleKind stage) {
    std::vector<WeightedEvidence> items;
    for (std::size_t i = 0; i < kb.factors.size(); ++i) {
        const auto* role = kb.factors[i].role(stage);
        if (role == nullptr || !resolved.strengths[i]) continue;
        items.push_back({kb.factors[i].id, role->intensity, *resolved.strengths[i]});
    }
    return items;
}

EvaluationResult evaluate_pipeline(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                   const EvaluationOptions& options) {
    require_valid(kb);
    validate_options(options);
    auto resolved = resolve_evidence(kb, evidence, options.out_of_range);

    EvaluationResult result;
    BeliefDegree bel = kb.prior;
    for (RoleKind stage : kPipelineOrder) {
        auto items = collect_stage(kb, resolved, stage);
        const BeliefDegree before = bel;
        switch (stage) {
            case RoleKind::Supportive:
                bel = update_supportive(bel, aggregate_support(items, options.tnorm), 1.0);
                break;
            case RoleKind::Adverse:
                bel = update_adverse(bel, aggregate_adversity(items, options.tnorm), 1.0);
                break;
            case RoleKind::Sufficient:
                bel = aggregate_sufficient(bel, items);
                break;
            case RoleKind::Contrary:
                bel = aggregate_contrary(bel, items);
                break;
            case RoleKind::Necessary:
                bel = aggregate_necessary(bel, items);
                break;
        }
        StageRecord record{stage, {}, before, bel};
        record.inputs.reserve(items.size());
        for (auto& item : items) record.inputs.push_back({std::move(item.factor_id), item.intensity, item.eta});
        result.trace.stages.push_back(std::move(record));
    }
    result.belief = bel;
    result.warnings = std::move(resolved.warnings);
    return result;
}

std::vector<SweepRow> sweep_factor(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                   const EvaluationOptions& options, std::string_view factor_id, int steps) {
    if (steps < 2) throw Error(ErrorCode::Range, fmt::format("steps {} must be >= 2", steps), "steps");
    if (kb.find(factor_id) == nullptr) {
        throw Error(ErrorCode::UnknownFactor, fmt::format("unknown factor '{}'", factor_id), "factor");
    }

    std::vector<EvidenceItem> varied;
    varied.reserve(evidence.size() + 1);
    for (const auto& item : evidence) {
        if (item.factor_id != factor_id) varied.push_back(item);
    }
    varied.push_back(EvidenceItem::strength(std::string(factor_id), 0.0));

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double eta = static_cast<double>(k) / static_cast<double>(steps - 1);
        varied.back().observation = ObservedStrength{eta};
        auto result = evaluate_pipeline(kb, varied, options);
        SweepRow row{eta, result.belief, {}};
        for (std::size_t s = 0; s < result.trace.stages.size(); ++s) {
            row.stage_beliefs[s] = result.trace.stages[s].belief_after.value();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ede
