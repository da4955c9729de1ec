#pragma once
// Single-factor belief updates for each role, at full or partial evidential
// strength, and the inverses used to elicit role intensities.
//
// Every update interpolates linearly between the factor's lower-margin
// behaviour (eta = 0) and its upper-margin behaviour (eta = 1). Arguments
// outside [0, 1] throw Error(Range).

#include "ede/belief.hpp"

namespace ede {

struct RoleUpdate {
    RoleKind role = RoleKind::Supportive;
    double intensity = 0.0;
    double eta = 1.0;
};

// bel + supp * eta * (1 - bel)
BeliefDegree update_supportive(BeliefDegree bel, double supp, double eta);

// bel * (1 - adv * eta)
BeliefDegree update_adverse(BeliefDegree bel, double adv, double eta);

// max(bel, (1 - eta) * bel + eta * suff)
BeliefDegree update_sufficient(BeliefDegree bel, double suff, double eta);

// min(bel, eta * bel + (1 - eta) * (1 - nec))
BeliefDegree update_necessary(BeliefDegree bel, double nec, double eta);

// min(bel, (1 - eta) * bel + eta * (1 - contr))
BeliefDegree update_contrary(BeliefDegree bel, double contr, double eta);

BeliefDegree apply(const RoleUpdate& update, BeliefDegree bel);

// (posterior - prior) / (1 - prior). Throws DegeneratePrior for prior == 1 and
// Ordering when posterior < prior.
double elicit_supp(BeliefDegree prior, BeliefDegree posterior);

// (prior - posterior) / prior. Throws DegeneratePrior for prior == 0 and
// Ordering when posterior > prior.
double elicit_adv(BeliefDegree prior, BeliefDegree posterior);

// 1 - Bel(H | E, F at its lower margin)
double elicit_nec(BeliefDegree bel_at_low);

// 1 - Bel(H | E, F at its upper margin)
double elicit_contr(BeliefDegree bel_at_high);

}  // namespace ede
