#include "ede/belief.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

namespace ede {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

BeliefDegree::BeliefDegree(double value) : value_(value) {
    if (!in_unit(value)) {
        throw Error(ErrorCode::Range, fmt::format("belief {} outside [0, 1]", value));
    }
}

BeliefDegree BeliefDegree::saturating(double value) {
    if (std::isnan(value)) throw Error(ErrorCode::Range, "belief is NaN");
    return BeliefDegree(std::clamp(value, 0.0, 1.0));
}

std::string_view to_string(RoleKind kind) noexcept {
    switch (kind) {
        case RoleKind::Supportive: return "supportive";
        case RoleKind::Adverse: return "adverse";
        case RoleKind::Sufficient: return "sufficient";
        case RoleKind::Necessary: return "necessary";
        case RoleKind::Contrary: return "contrary";
    }
    return "?";
}

std::optional<RoleKind> parse_role_kind(std::string_view text) noexcept {
    for (auto kind : kAllRoleKinds) {
        if (to_string(kind) == text) return kind;
    }
    return std::nullopt;
}

std::string_view scale_kind_name(const ValueScale& scale) noexcept {
    switch (scale.index()) {
        case 0: return "interval";
        case 1: return "nominal";
        default: return "ordinal";
    }
}

const RoleSpec* FactorSpec::role(RoleKind kind) const noexcept {
    auto it = std::find_if(roles.begin(), roles.end(), [kind](const RoleSpec& r) { return r.kind == kind; });
    return it == roles.end() ? nullptr : &*it;
}

const FactorSpec* KnowledgeBase::find(std::string_view factor_id) const noexcept {
    auto it = std::find_if(factors.begin(), factors.end(),
                           [factor_id](const FactorSpec& f) { return f.id == factor_id; });
    return it == factors.end() ? nullptr : &*it;
}

std::string_view to_string(TNormKind kind) noexcept {
    switch (kind) {
        case TNormKind::Product: return "product";
        case TNormKind::Minimum: return "min";
        case TNormKind::Lukasiewicz: return "lukasiewicz";
        case TNormKind::Hamacher: return "hamacher";
    }
    return "?";
}

std::optional<TNormKind> parse_tnorm_kind(std::string_view text) noexcept {
    for (auto kind : {TNormKind::Product, TNormKind::Minimum, TNormKind::Lukasiewicz, TNormKind::Hamacher}) {
        if (to_string(kind) == text) return kind;
    }
    return std::nullopt;
}

void validate_options(const EvaluationOptions& options) {
    if (options.tnorm.kind == TNormKind::Hamacher && !in_unit(options.tnorm.lambda)) {
        throw Error(ErrorCode::Range, fmt::format("hamacher lambda {} outside [0, 1]", options.tnorm.lambda),
                    "options.lambda");
    }
}

bool roles_conflict(RoleKind a, RoleKind b) noexcept {
    auto raises = [](RoleKind k) { return k == RoleKind::Supportive || k == RoleKind::Sufficient; };
    auto lowers = [](RoleKind k) { return k == RoleKind::Adverse || k == RoleKind::Contrary; };
    return (raises(a) && lowers(b)) || (lowers(a) && raises(b));
}

std::vector<Violation> validate_kb(const KnowledgeBase& kb) {
    std::vector<Violation> out;
    if (!in_unit(kb.prior.value())) {
        out.push_back({"", "prior", "prior outside [0, 1]"});
    }

    std::set<std::string, std::less<>> seen_ids;
    for (std::size_t i = 0; i < kb.factors.size(); ++i) {
        const auto& f = kb.factors[i];
        const std::string base = fmt::format("factors[{}]", i);
        auto add = [&](std::string path, std::string reason) {
            out.push_back({f.id, std::move(path), std::move(reason)});
        };

        if (f.id.empty()) {
            add(base + ".id", "factor id is empty");
        } else if (!seen_ids.insert(f.id).second) {
            add(base + ".id", fmt::format("duplicate factor id '{}'", f.id));
        }

        if (const auto* interval = std::get_if<IntervalScale>(&f.scale)) {
            if (!std::isfinite(interval->v_low) || !std::isfinite(interval->v_high)) {
                add(base + ".scale", "margins must be finite");
            } else if (interval->v_low == interval->v_high) {
                add(base + ".scale", "degenerate margins: v_low equals v_high");
            } else if (interval->v_low > interval->v_high) {
                add(base + ".scale", "reversed margins: v_low exceeds v_high");
            }
        }

        if (f.sharpness < 1) {
            add(base + ".sharpness", fmt::format("sharpness {} must be >= 1", f.sharpness));
        }

        if (f.roles.empty()) {
            add(base + ".roles", "factor plays no role");
        }
        for (std::size_t r = 0; r < f.roles.size(); ++r) {
            const auto& role = f.roles[r];
            const std::string role_path = fmt::format("{}.roles[{}]", base, r);
            if (!in_unit(role.intensity)) {
                add(role_path + ".intensity", "intensity out of [0,1]");
            }
            for (std::size_t q = 0; q < r; ++q) {
                const auto other = f.roles[q].kind;
                if (other == role.kind) {
                    add(role_path + ".kind", fmt::format("role '{}' listed twice", to_string(role.kind)));
                } else if (roles_conflict(other, role.kind)) {
                    add(role_path + ".kind", fmt::format("conflicting roles '{}' and '{}' on one factor",
                                                         to_string(other), to_string(role.kind)));
                }
            }
        }
    }
    return out;
}

void require_valid(const KnowledgeBase& kb) {
    auto violations = validate_kb(kb);
    if (violations.empty()) return;
    std::vector<Diagnostic> diagnostics;
    diagnostics.reserve(violations.size());
    for (auto& v : violations) diagnostics.push_back({std::move(v.path), std::move(v.reason)});
    throw Error(ErrorCode::Semantic, std::move(diagnostics));
}

double sharpen(double eta, int n) {
    if (n < 1) throw Error(ErrorCode::Range, fmt::format("sharpness {} must be >= 1", n));
    if (n == 1) return eta;
    double out = 1.0;
    for (int i = 0; i < n; ++i) out *= eta;
    return out;
}

std::optional<double> effective_strength(const EvidenceItem& item, const FactorSpec& factor,
                                         OutOfRangePolicy policy) {
    if (item.factor_id != factor.id) {
        throw Error(ErrorCode::UnknownFactor,
                    fmt::format("evidence for '{}' matched against factor '{}'", item.factor_id, factor.id));
    }

    if (std::holds_alternative<Unobserved>(item.observation)) return std::nullopt;

    if (const auto* s = std::get_if<ObservedStrength>(&item.observation)) {
        if (!in_unit(s->eta)) {
            throw Error(ErrorCode::Range, fmt::format("strength {} for '{}' outside [0, 1]", s->eta, factor.id));
        }
        return sharpen(s->eta, factor.sharpness);
    }

    const double v = std::get<ObservedValue>(item.observation).v;
    const auto* interval = std::get_if<IntervalScale>(&factor.scale);
    if (interval == nullptr) {
        throw Error(ErrorCode::Scale,
                    fmt::format("factor '{}' has a {} scale; partial matching requires interval scale",
                                factor.id, scale_kind_name(factor.scale)));
    }
    if (std::isnan(v)) throw Error(ErrorCode::OutOfRange, fmt::format("value for '{}' is NaN", factor.id));

    double clamped = v;
    if (v < interval->v_low || v > interval->v_high) {
        if (policy == OutOfRangePolicy::Error) {
            throw Error(ErrorCode::OutOfRange,
                        fmt::format("value {} for '{}' outside margins [{}, {}]", v, factor.id,
                                    interval->v_low, interval->v_high));
        }
        clamped = std::clamp(v, interval->v_low, interval->v_high);
    }
    const double eta = std::clamp((clamped - interval->v_low) / (interval->v_high - interval->v_low), 0.0, 1.0);
    return sharpen(eta, factor.sharpness);
}

}  // namespace ede
