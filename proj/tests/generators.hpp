#pragma once
// Seeded random knowledge bases and evidence sets for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ede/belief.hpp"

namespace ede::testgen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double between(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin(double p = 0.5) { return unit() < p; }

    // Mostly interior points, with the endpoints drawn often enough to matter.
    double unit_with_edges() {
        const int pick = range(0, 9);
        if (pick == 0) return 0.0;
        if (pick == 1) return 1.0;
        return unit();
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct KbShape {
    int max_factors = 8;
    bool multi_role = true;  // allow a second, compatible role on a factor
    bool mixed_scales = true;
};

inline std::vector<RoleSpec> random_roles(Rng& rng, bool multi_role) {
    std::vector<RoleSpec> roles;
    const auto first = kAllRoleKinds[static_cast<std::size_t>(rng.range(0, 4))];
    roles.push_back({first, rng.unit_with_edges()});
    if (multi_role && rng.coin(0.3)) {
        const auto second = kAllRoleKinds[static_cast<std::size_t>(rng.range(0, 4))];
        if (second != first && !roles_conflict(first, second)) roles.push_back({second, rng.unit_with_edges()});
    }
    return roles;
}

inline KnowledgeBase random_kb(Rng& rng, const KbShape& shape = {}) {
    KnowledgeBase kb;
    kb.hypothesis = "H";
    kb.prior = BeliefDegree(rng.unit_with_edges());
    const int n = rng.range(0, shape.max_factors);
    for (int i = 0; i < n; ++i) {
        FactorSpec f;
        f.id = "f" + std::to_string(i);
        const int scale = shape.mixed_scales ? rng.range(0, 3) : 0;
        if (scale <= 1) {
            const double lo = rng.between(-100.0, 100.0);
            f.scale = IntervalScale{lo, lo + rng.between(0.01, 50.0), ""};
        } else if (scale == 2) {
            f.scale = NominalScale{};
        } else {
            f.scale = OrdinalScale{};
        }
        f.roles = random_roles(rng, shape.multi_role);
        f.sharpness = rng.coin(0.7) ? 1 : rng.range(2, 5);
        kb.factors.push_back(std::move(f));
    }
    return kb;
}

// One entry per factor at most. With `allow_faults`, some values fall outside
// the margins or land on non-interval factors, which are declared errors.
inline std::vector<EvidenceItem> random_evidence(Rng& rng, const KnowledgeBase& kb, bool allow_faults) {
    std::vector<EvidenceItem> out;
    for (const auto& f : kb.factors) {
        const int pick = rng.range(0, 9);
        if (pick == 0) continue;
        if (pick == 1) {
            out.push_back(EvidenceItem::unknown(f.id));
            continue;
        }
        const auto* interval = std::get_if<IntervalScale>(&f.scale);
        if (pick <= 5 || (interval == nullptr && !allow_faults)) {
            out.push_back(EvidenceItem::strength(f.id, rng.unit_with_edges()));
            continue;
        }
        if (interval == nullptr) {
            out.push_back(EvidenceItem::value(f.id, rng.between(-10.0, 10.0)));
            continue;
        }
        const double width = interval->v_high - interval->v_low;
        double v = std::clamp(interval->v_low + rng.unit_with_edges() * width, interval->v_low, interval->v_high);
        if (allow_faults && rng.coin(0.1)) v = rng.coin() ? interval->v_low - width * 0.5 : interval->v_high + 1.0;
        out.push_back(EvidenceItem::value(f.id, v));
    }
    rng.shuffle(out);
    return out;
}

}  // namespace ede::testgen
