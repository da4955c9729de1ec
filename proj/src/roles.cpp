#include "ede/roles.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace ede {

namespace {

void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::Range, fmt::format("{} {} outside [0, 1]", name, x));
    }
}

}  // namespace

BeliefDegree update_supportive(BeliefDegree bel, double supp, double eta) {
    require_unit(supp, "support");
    require_unit(eta, "strength");
    const double b = bel.value();
    return BeliefDegree::saturating(b + supp * eta * (1.0 - b));
}

BeliefDegree update_adverse(BeliefDegree bel, double adv, double eta) {
    require_unit(adv, "adversity");
    require_unit(eta, "strength");
    return BeliefDegree::saturating(bel.value() * (1.0 - adv * eta));
}

BeliefDegree update_sufficient(BeliefDegree bel, double suff, double eta) {
    require_unit(suff, "sufficiency");
    require_unit(eta, "strength");
    const double b = bel.value();
    return BeliefDegree::saturating(std::max(b, (1.0 - eta) * b + eta * suff));
}

BeliefDegree update_necessary(BeliefDegree bel, double nec, double eta) {
    require_unit(nec, "necessity");
    require_unit(eta, "strength");
    const double b = bel.value();
    return BeliefDegree::saturating(std::min(b, eta * b + (1.0 - eta) * (1.0 - nec)));
}

BeliefDegree update_contrary(BeliefDegree bel, double contr, double eta) {
    require_unit(contr, "contrariness");
    require_unit(eta, "strength");
    const double b = bel.value();
    return BeliefDegree::saturating(std::min(b, (1.0 - eta) * b + eta * (1.0 - contr)));
}

BeliefDegree apply(const RoleUpdate& update, BeliefDegree bel) {
    switch (update.role) {
        case RoleKind::Supportive: return update_supportive(bel, update.intensity, update.eta);
        case RoleKind::Adverse: return update_adverse(bel, update.intensity, update.eta);
        case RoleKind::Sufficient: return update_sufficient(bel, update.intensity, update.eta);
        case RoleKind::Necessary: return update_necessary(bel, update.intensity, update.eta);
        case RoleKind::Contrary: return update_contrary(bel, update.intensity, update.eta);
    }
    return bel;
}

double elicit_supp(BeliefDegree prior, BeliefDegree posterior) {
    if (prior.value() == 1.0) {
        throw Error(ErrorCode::DegeneratePrior, "degree of support is undefined for prior 1");
    }
    if (posterior < prior) {
        throw Error(ErrorCode::Ordering,
                    fmt::format("posterior {} below prior {}; use the adverse role", posterior.value(),
                                prior.value()));
    }
    return std::clamp((posterior.value() - prior.value()) / (1.0 - prior.value()), 0.0, 1.0);
}

double elicit_adv(BeliefDegree prior, BeliefDegree posterior) {
    if (prior.value() == 0.0) {
        throw Error(ErrorCode::DegeneratePrior, "degree of adversity is undefined for prior 0");
    }
    if (posterior > prior) {
        throw Error(ErrorCode::Ordering,
                    fmt::format("posterior {} above prior {}; use the supportive role", posterior.value(),
                                prior.value()));
    }
    return std::clamp((prior.value() - posterior.value()) / prior.value(), 0.0, 1.0);
}

double elicit_nec(BeliefDegree bel_at_low) { return 1.0 - bel_at_low.value(); }

double elicit_contr(BeliefDegree bel_at_high) { return 1.0 - bel_at_high.value(); }

}  // namespace ede
