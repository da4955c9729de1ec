#include "doctest.h"

#include "ede/roles.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace ede;
using doctest::Approx;

namespace {

constexpr double kTight = 1e-12;

double sup(double b, double i, double e) { return update_supportive(BeliefDegree(b), i, e).value(); }
double adv(double b, double i, double e) { return update_adverse(BeliefDegree(b), i, e).value(); }
double suf(double b, double i, double e) { return update_sufficient(BeliefDegree(b), i, e).value(); }
double nec(double b, double i, double e) { return update_necessary(BeliefDegree(b), i, e).value(); }
double con(double b, double i, double e) { return update_contrary(BeliefDegree(b), i, e).value(); }

}  // namespace

TEST_CASE("supportive update") {
    CHECK(sup(0.5, 0.4, 1.0) == Approx(0.70).epsilon(kTight));
    CHECK(sup(0.5, 0.4, 0.5) == Approx(0.60).epsilon(kTight));
    CHECK(sup(0.5, 0.4, 0.0) == 0.5);
    // A prior of 1 is a fixed point.
    CHECK(sup(1.0, 0.9, 1.0) == 1.0);
}

TEST_CASE("adverse update") {
    CHECK(adv(0.8, 0.25, 1.0) == Approx(0.60).epsilon(kTight));
    CHECK(adv(0.8, 0.25, 0.5) == Approx(0.70).epsilon(kTight));
    CHECK(adv(0.0, 0.9, 1.0) == 0.0);
}

TEST_CASE("sufficient update") {
    CHECK(suf(0.3, 0.9, 1.0) == Approx(0.90).epsilon(kTight));
    CHECK(suf(0.3, 0.9, 0.5) == Approx(0.60).epsilon(kTight));
    CHECK(suf(0.95, 0.9, 1.0) == 0.95);
}

TEST_CASE("necessary update") {
    CHECK(nec(0.7, 0.9, 0.0) == Approx(0.10).epsilon(kTight));
    CHECK(nec(0.7, 0.9, 0.5) == Approx(0.40).epsilon(kTight));
    CHECK(nec(0.7, 0.9, 1.0) == 0.7);
}

TEST_CASE("contrary update") {
    CHECK(con(0.7, 0.95, 1.0) == Approx(0.05).epsilon(kTight));
    CHECK(con(0.7, 0.95, 0.5) == Approx(0.375).epsilon(kTight));
    CHECK(con(0.7, 0.95, 0.0) == 0.7);
}

TEST_CASE("updates reject arguments outside [0,1]") {
    CHECK_THROWS_AS(sup(0.5, 1.2, 1.0), Error);
    CHECK_THROWS_AS(adv(0.5, 0.2, -0.1), Error);
    CHECK_THROWS_AS(nec(0.5, std::nan(""), 1.0), Error);
}

TEST_CASE("apply dispatches on the role") {
    const BeliefDegree b(0.7);
    CHECK(apply({RoleKind::Supportive, 0.4, 0.5}, b) == update_supportive(b, 0.4, 0.5));
    CHECK(apply({RoleKind::Adverse, 0.4, 0.5}, b) == update_adverse(b, 0.4, 0.5));
    CHECK(apply({RoleKind::Sufficient, 0.9, 0.5}, b) == update_sufficient(b, 0.9, 0.5));
    CHECK(apply({RoleKind::Necessary, 0.9, 0.5}, b) == update_necessary(b, 0.9, 0.5));
    CHECK(apply({RoleKind::Contrary, 0.9, 0.5}, b) == update_contrary(b, 0.9, 0.5));
}

TEST_CASE("endpoint consistency with the margin equations") {
    testgen::Rng rng(101);
    for (int i = 0; i < 5000; ++i) {
        const double b = rng.unit_with_edges();
        const double x = rng.unit_with_edges();
        CHECK(std::abs(sup(b, x, 1.0) - oracle::supportive_present(b, x)) <= kTight);
        CHECK(sup(b, x, 0.0) == b);
        CHECK(std::abs(adv(b, x, 1.0) - oracle::adverse_present(b, x)) <= kTight);
        CHECK(adv(b, x, 0.0) == b);
        CHECK(std::abs(suf(b, x, 1.0) - oracle::sufficient_present(b, x)) <= kTight);
        CHECK(suf(b, x, 0.0) == b);
        CHECK(nec(b, x, 1.0) == b);
        CHECK(std::abs(nec(b, x, 0.0) - oracle::necessary_absent(b, x)) <= kTight);
        CHECK(std::abs(con(b, x, 1.0) - oracle::contrary_present(b, x)) <= kTight);
        CHECK(con(b, x, 0.0) == b);
    }
}

TEST_CASE("monotone in the evidential strength and bounded") {
    testgen::Rng rng(202);
    for (int i = 0; i < 5000; ++i) {
        const double b = rng.unit_with_edges();
        const double x = rng.unit_with_edges();
        double e1 = rng.unit_with_edges();
        double e2 = rng.unit_with_edges();
        if (e1 > e2) std::swap(e1, e2);
        CHECK(sup(b, x, e1) <= sup(b, x, e2));
        CHECK(suf(b, x, e1) <= suf(b, x, e2));
        CHECK(nec(b, x, e1) <= nec(b, x, e2));
        CHECK(adv(b, x, e1) >= adv(b, x, e2));
        CHECK(con(b, x, e1) >= con(b, x, e2));
        for (double v : {sup(b, x, e1), adv(b, x, e1), suf(b, x, e1), nec(b, x, e1), con(b, x, e1)}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("elicitation") {
    CHECK(elicit_supp(BeliefDegree(0.5), BeliefDegree(0.7)) == Approx(0.4).epsilon(kTight));
    CHECK(elicit_supp(BeliefDegree(0.0), BeliefDegree(0.37)) == 0.37);
    CHECK(elicit_supp(BeliefDegree(0.3), BeliefDegree(0.3)) == 0.0);

    CHECK(elicit_adv(BeliefDegree(0.8), BeliefDegree(0.6)) == Approx(0.25).epsilon(kTight));
    CHECK(elicit_adv(BeliefDegree(0.8), BeliefDegree(0.0)) == 1.0);
    CHECK(elicit_adv(BeliefDegree(0.8), BeliefDegree(0.8)) == 0.0);

    CHECK(elicit_nec(BeliefDegree(0.1)) == Approx(0.9).epsilon(kTight));
    CHECK(elicit_contr(BeliefDegree(0.05)) == Approx(0.95).epsilon(kTight));
    CHECK(elicit_nec(BeliefDegree(1.0)) == 0.0);

    SUBCASE("errors") {
        auto code_of = [](auto&& fn) {
            try {
                fn();
            } catch (const Error& e) {
                return e.code();
            }
            return ErrorCode::Usage;
        };
        CHECK(code_of([] { elicit_supp(BeliefDegree(1.0), BeliefDegree(1.0)); }) == ErrorCode::DegeneratePrior);
        CHECK(code_of([] { elicit_supp(BeliefDegree(0.6), BeliefDegree(0.5)); }) == ErrorCode::Ordering);
        CHECK(code_of([] { elicit_adv(BeliefDegree(0.0), BeliefDegree(0.0)); }) == ErrorCode::DegeneratePrior);
        CHECK(code_of([] { elicit_adv(BeliefDegree(0.5), BeliefDegree(0.6)); }) == ErrorCode::Ordering);
    }
}

TEST_CASE("elicitation inverts the full-strength updates") {
    testgen::Rng rng(303);
    for (int i = 0; i < 10000; ++i) {
        // Cancellation in (posterior - prior) / (1 - prior) grows as the prior
        // approaches 1, so the supportive round trip stays below 0.999.
        const double b = rng.between(0.0, 0.999);
        const double s = rng.unit_with_edges();
        const auto post = update_supportive(BeliefDegree(b), s, 1.0);
        CHECK(std::abs(elicit_supp(BeliefDegree(b), post) - s) <= kTight);

        const double b2 = rng.between(1e-3, 1.0);
        const double a = rng.unit_with_edges();
        const auto post2 = update_adverse(BeliefDegree(b2), a, 1.0);
        CHECK(std::abs(elicit_adv(BeliefDegree(b2), post2) - a) <= kTight);
    }
}
