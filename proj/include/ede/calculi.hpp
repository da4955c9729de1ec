#pragma once
// Reference calculi on the two-element frame {H, not H}: Dempster's rule of
// combination (normalized and unnormalized) and the MYCIN / EMYCIN certainty
// factors, plus oracles that check the role pipeline against them.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ede/belief.hpp"

namespace ede {

// Basic probability assignment over {H, not H, Theta}. A normalized Bpa sums
// to 1; an unnormalized one (the output of unnormalized combination) sums to
// 1 - K where K is the discarded conflict.
struct Bpa {
    double m_h = 0.0;
    double m_not_h = 0.0;
    double m_theta = 1.0;
    bool normalized = true;

    // Validates non-negative masses summing to 1 within 1e-12.
    static Bpa make(double m_h, double m_not_h, double m_theta);
    // Simple support function putting `mass` on H and the rest on Theta.
    static Bpa supporting(double mass) { return make(mass, 0.0, 1.0 - mass); }
    // Simple support function putting `mass` on not H and the rest on Theta.
    static Bpa refuting(double mass) { return make(0.0, mass, 1.0 - mass); }

    double total() const noexcept { return m_h + m_not_h + m_theta; }
};

enum class Normalization { Normalized, Unnormalized };

// Product-intersection rule. Conflict K = m1(H)m2(notH) + m1(notH)m2(H).
// Normalized output is divided by the non-conflicting mass (1 - K for
// normalized inputs) and throws TotalConflict when none is left. Unnormalized
// output keeps the raw masses and is flagged as such.
Bpa ds_combine(const Bpa& a, const Bpa& b, Normalization mode);

// Conflict mass between two assignments.
double ds_conflict(const Bpa& a, const Bpa& b) noexcept;

// MB - MD
double cf_mycin(double mb, double md);

// (MB - MD) / (1 - min(MB, MD)); UndefinedCf when MB = MD = 1.
double cf_emycin(double mb, double md);

struct OracleReport {
    double pipeline = 0.0;
    double dempster = 0.0;
    double difference = 0.0;
};

// Two full-strength supportive factors through the role pipeline versus
// E o F1 o F2 with simple support functions.
OracleReport oracle_supportive(BeliefDegree bel_e, double s1, double s2);

// Two full-strength adverse factors through the role pipeline versus
// unnormalized E o F1 o F2 with adversities as masses on not H.
OracleReport oracle_adverse(BeliefDegree bel_e, double a1, double a2);

enum class Calculus { RolePipeline, Mycin, Emycin, DempsterNormalized, DempsterUnnormalized };

std::string_view to_string(Calculus calculus) noexcept;

struct ComparisonRow {
    Calculus calculus = Calculus::RolePipeline;
    std::optional<double> value;  // nullopt when the calculus is undefined for this input
    std::string note;
};

struct ComparisonTable {
    double prior = 0.0;
    double support = 0.0;    // aggregated SUPP, used as MB
    double adversity = 0.0;  // aggregated ADV, used as MD
    std::vector<ComparisonRow> rows;
};

// Evaluates a supportive/adverse-only KB under each calculus from the same
// aggregated support and adversity. Throws UnsupportedComparison naming any
// factor with a sufficient, necessary or contrary role.
ComparisonTable compare_calculi(const KnowledgeBase& kb, std::span<const EvidenceItem> evidence,
                                const EvaluationOptions& options);

}  // namespace ede
