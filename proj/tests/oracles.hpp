#pragma once
// Independent reference computations for tests. Nothing here calls into the
// engine; each function is written straight from the defining equations.

#include <array>
#include <cmath>
#include <vector>

namespace ede::oracle {

// Closed forms of the full-strength role equations at the upper (present)
// and lower (absent) margins.
inline double supportive_present(double bel, double supp) { return bel + supp * (1.0 - bel); }
inline double adverse_present(double bel, double adv) { return bel * (1.0 - adv); }
inline double sufficient_present(double bel, double suff) { return bel > suff ? bel : suff; }
inline double necessary_absent(double bel, double nec) { return bel < 1.0 - nec ? bel : 1.0 - nec; }
inline double contrary_present(double bel, double contr) { return bel < 1.0 - contr ? bel : 1.0 - contr; }

// Joint support of independent supportive factors at full strength:
// 1 - prod(1 - s_i), the closed form of repeated probabilistic sums.
inline double joint_support(const std::vector<double>& effective) {
    double keep = 1.0;
    for (double s : effective) keep *= (1.0 - s);
    return 1.0 - keep;
}

// Supportive factor lessened by the adverse one: adverse applied first, then
// the supportive update on the discounted belief.
inline double adverse_then_supportive(double bel, double s, double a) {
    const double discounted = bel * (1.0 - a);
    return discounted + s * (1.0 - discounted);
}

// Dempster's rule by enumerating focal-element intersections on the power
// set of {H, notH}. Subsets are bitmasks: 1 = {H}, 2 = {notH}, 3 = Theta.
struct Masses {
    std::array<double, 4> m{};  // index 0 is the empty set
};

inline Masses dempster_enumerate(const Masses& a, const Masses& b, bool normalize) {
    Masses out;
    for (int x = 1; x < 4; ++x) {
        for (int y = 1; y < 4; ++y) out.m[static_cast<std::size_t>(x & y)] += a.m[x] * b.m[y];
    }
    if (normalize) {
        const double kept = out.m[1] + out.m[2] + out.m[3];
        for (int s = 1; s < 4; ++s) out.m[s] /= kept;
        out.m[0] = 0.0;
    }
    return out;
}

inline Masses masses(double h, double not_h, double theta) {
    Masses out;
    out.m[1] = h;
    out.m[2] = not_h;
    out.m[3] = theta;
    return out;
}

// Hamacher product evaluated from its definition with a guarded 0/0.
inline double hamacher(double lambda, double x, double y) {
    const double den = lambda + (1.0 - lambda) * (x + y - x * y);
    return den == 0.0 ? 0.0 : x * y / den;
}

}  // namespace ede::oracle
