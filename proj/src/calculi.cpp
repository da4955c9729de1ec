#include "ede/calculi.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ede/aggregation.hpp"

namespace ede {

namespace {

constexpr double kMassTolerance = 1e-12;

void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::Range, fmt::format("{} {} outside [0, 1]", name, x));
    }
}

void require_masses(const Bpa& m) {
    if (!(m.m_h >= 0.0 && m.m_not_h >= 0.0 && m.m_theta >= 0.0)) {
        throw Error(ErrorCode::Range, "bpa masses must be non-negative");
    }
    const double total = m.total();
    if (m.normalized ? std::abs(total - 1.0) > kMassTolerance : total > 1.0 + kMassTolerance) {
        throw Error(ErrorCode::Range, fmt::format("bpa masses sum to {}", total));
    }
}

}  // namespace

Bpa Bpa::make(double m_h, double m_not_h, double m_theta) {
    Bpa out{m_h, m_not_h, m_theta, true};
    require_masses(out);
    return out;
}

double ds_conflict(const Bpa& a, const Bpa& b) noexcept { return a.m_h * b.m_not_h + a.m_not_h * b.m_h; }

Bpa ds_combine(const Bpa& a, const Bpa& b, Normalization mode) {
    require_masses(a);
    require_masses(b);

    Bpa out;
    out.m_h = a.m_h * b.m_h + a.m_h * b.m_theta + a.m_theta * b.m_h;
    out.m_not_h = a.m_not_h * b.m_not_h + a.m_not_h * b.m_theta + a.m_theta * b.m_not_h;
    out.m_theta = a.m_theta * b.m_theta;

    if (mode == Normalization::Unnormalized) {
        out.normalized = false;
        return out;
    }

    const double kept = out.m_h + out.m_not_h + out.m_theta;
    if (kept <= 0.0) {
        throw Error(ErrorCode::TotalConflict, "total conflict: normalization factor is undefined");
    }
    out.m_h /= kept;
    out.m_not_h /= kept;
    out.m_theta /= kept;
    out.normalized = true;
    return out;
}

double cf_mycin(double mb, double md) {
    require_unit(mb, "MB");
    require_unit(md, "MD");
    return mb - md;
}

double cf_emycin(double mb, double md) {
    require_unit(mb, "MB");
    require_unit(md, "MD");
    const double lo = std::min(mb, md);
    if (lo >= 1.0) throw Error(ErrorCode::UndefinedCf, "EMYCIN certainty factor undefined for MB = MD = 1");
    return (mb - md) / (1.0 - lo);
}

namespace {

KnowledgeBase two_factor_kb(BeliefDegree prior, RoleKind kind, double i1, double i2) {
    KnowledgeBase kb;
    kb.hypothesis = "H";
    kb.prior = prior;
    kb.factors.push_back({"f1", "", NominalScale{}, {{kind, i1}}, 1});
    kb.factors.push_back({"f2", "", NominalScale{}, {{kind, i2}}, 1});
    return kb;
}

const std::vector<EvidenceItem>& both_present() {
    static const std::vector<EvidenceItem> items = {EvidenceItem::strength("f1", 1.0),
                                                    EvidenceItem::strength("f2", 1.0)};
    return items;
}

}  // namespace

OracleReport oracle_supportive(BeliefDegree bel_e, double s1, double s2) {
    require_unit(s1, "support");
    require_unit(s2, "support");
    const auto kb = two_factor_kb(bel_e, RoleKind::Supportive, s1, s2);
    const double pipeline = evaluate_pipeline(kb, both_present(), {}).belief.value();

    const Bpa e = Bpa::supporting(bel_e.value());
    const Bpa combined =
        ds_combine(ds_combine(e, Bpa::supporting(s1), Normalization::Normalized), Bpa::supporting(s2),
                   Normalization::Normalized);
    return {pipeline, combined.m_h, std::abs(pipeline - combined.m_h)};
}

OracleReport oracle_adverse(BeliefDegree bel_e, double a1, double a2) {
    require_unit(a1, "adversity");
    require_unit(a2, "adversity");
    const auto kb = two_factor_kb(bel_e, RoleKind::Adverse, a1, a2);
    const double pipeline = evaluate_pipeline(kb, both_present(), {}).belief.value();

    const Bpa e = Bpa::supporting(bel_e.value());
    const Bpa combined = ds_combine(ds_combine(e, Bpa::refuting(a1), Normalization::Unnormalized),
                                    Bpa::refuting(a2), Normalization::Unnormalized);
    return {pipeline, combined.m_h, std::abs(pipeline - combined.m_h)};
}

std::string_view to_string(Calculus calculus) noexcept {
    switch (calculus) {
        case Calculus::RolePipeline: return "role_pipeline";
        case Calculus::Mycin: return "mycin_cf";
        case Calculus::Emycin: return "emycin_cf";
        case Calculus::DempsterNormalized: return "dempster_shafer_normalized";
        case Calculus::DempsterUnnormalized: return "dempster_shafer_unnormalized";
    }
    return "?";
}

ComparisonTable compare_calculi(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                const EvaluationOptions& options) {
    require_valid(kb);
    validate_options(options);

    std::vector<std::string> offending;
    for (const auto& f : kb.factors) {
        for (const auto& role : f.roles) {
            if (role.kind != RoleKind::Supportive && role.kind != RoleKind::Adverse) {
                offending.push_back(f.id);
                break;
            }
        }
    }
    if (!offending.empty()) {
        throw Error(ErrorCode::UnsupportedComparison,
                    fmt::format("comparison needs supportive/adverse roles only; offending factors: {}",
                                fmt::join(offending, ", ")));
    }

    const auto resolved = resolve_evidence(kb, evidence, options.out_of_range);
    ComparisonTable table;
    table.prior = kb.prior.value();
    table.support = aggregate_support(collect_stage(kb, resolved, RoleKind::Supportive), options.tnorm);
    table.adversity = aggregate_adversity(collect_stage(kb, resolved, RoleKind::Adverse), options.tnorm);

    const double role = evaluate_pipeline(kb, evidence, options).belief.value();
    table.rows.push_back({Calculus::RolePipeline, role, ""});
    table.rows.push_back({Calculus::Mycin, cf_mycin(table.support, table.adversity), ""});
    try {
        table.rows.push_back({Calculus::Emycin, cf_emycin(table.support, table.adversity), ""});
    } catch (const Error& err) {
        table.rows.push_back({Calculus::Emycin, std::nullopt, err.message()});
    }

    const Bpa e = Bpa::supporting(table.prior);
    const Bpa supp = Bpa::supporting(table.support);
    const Bpa adv = Bpa::refuting(table.adversity);
    try {
        const Bpa n = ds_combine(ds_combine(e, supp, Normalization::Normalized), adv, Normalization::Normalized);
        table.rows.push_back({Calculus::DempsterNormalized, n.m_h, ""});
    } catch (const Error& err) {
        table.rows.push_back({Calculus::DempsterNormalized, std::nullopt, err.message()});
    }
    const Bpa u = ds_combine(ds_combine(e, supp, Normalization::Unnormalized), adv, Normalization::Unnormalized);
    table.rows.push_back({Calculus::DempsterUnnormalized, u.m_h,
                          fmt::format("conflict {:.9f} discarded", 1.0 - u.total())});
    return table;
}

}  // namespace ede
