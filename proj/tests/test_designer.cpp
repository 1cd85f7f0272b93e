#include "raaskit/designer.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "support/fixtures.hpp"

using namespace raaskit;
using raaskit::testing::case1_scenario;
using raaskit::testing::case2_scenario;

namespace {

Scenario single_action_case1() {
    Scenario s = case1_scenario();
    s.actions.levels = {240.0};
    s.distribution.rows = {{0.8, 0.2}};
    return s;
}

}  // namespace

TEST_CASE("design problem rows for the middle generation level") {
    Scenario s = case2_scenario();
    LpProblem lp = build_design_lp(s, 1);
    REQUIRE(lp.n_vars() == 3);
    REQUIRE(lp.n_rows() == 3);

    CHECK(lp.objective[0] == doctest::Approx(0.35));
    CHECK(lp.objective[1] == doctest::Approx(0.35));
    CHECK(lp.objective[2] == 0.0);

    // participation row mirrors the objective
    CHECK(lp.rows[0] == lp.objective);
    CHECK(lp.rhs[0] == doctest::Approx(7666.6274802333).epsilon(1e-9));

    // deviation to the lower level
    CHECK(lp.rows[1][0] == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(lp.rows[1][1] == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(lp.rows[1][2] == doctest::Approx(-0.4).epsilon(1e-12));
    CHECK(lp.rhs[1] == doctest::Approx(-21984.6509944).epsilon(1e-9));

    // deviation to the higher level
    CHECK(lp.rows[2][0] == doctest::Approx(-0.05).epsilon(1e-12));
    CHECK(lp.rows[2][1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lp.rows[2][2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(lp.rhs[2] == doctest::Approx(12717.6460485).epsilon(1e-9));

    for (double lo : lp.lower) CHECK(lo == 0.0);
    for (double hi : lp.upper) CHECK(hi == kInf);

    CHECK_THROWS_AS(build_design_lp(s, 3), std::invalid_argument);
}

TEST_CASE("bound conventions show up in the problem") {
    Scenario s = case2_scenario();
    DesignOptions opts;
    opts.nonnegative_prices = false;
    opts.expost_cap = true;
    LpProblem lp = build_design_lp(s, 1, opts);
    for (double lo : lp.lower) CHECK(lo == -kInf);
    CHECK(lp.upper[0] == doctest::Approx(25118.8643151).epsilon(1e-9));
    CHECK(lp.upper[1] == doctest::Approx(37614.3570570).epsilon(1e-9));
    CHECK(lp.upper[2] == doctest::Approx(57707.9962363).epsilon(1e-9));

    // dropping the deviation rows leaves participation alone
    LpProblem ir_only = build_design_lp(s, 1, DesignOptions{}, false);
    CHECK(ir_only.n_rows() == 1);
}

TEST_CASE("a scenario with nothing to price is rejected") {
    Scenario s;
    s.costs = raaskit::testing::table_costs();
    s.actions.levels = {100.0};
    s.actions.load = 50.0;
    s.actions.max_generation = 200.0;
    s.outcomes.values = {-100.0, -50.0};
    s.distribution.rows = {{0.5, 0.5}};
    CHECK_THROWS_AS(build_design_lp(s, 0), std::domain_error);
}

TEST_CASE("implementable sets under both price conventions") {
    Scenario s = case2_scenario();

    ImplementabilityReport def = implementable_actions(s);
    CHECK(def.implementable_set() == std::vector<std::size_t>{0, 1});
    CHECK(def.actions[2].phase1_objective > 0.0);

    // every witness satisfies its own constraints
    for (const auto& a : def.actions) {
        if (!a.implementable) continue;
        ConstraintSlacks sl = constraint_slacks(s, a.witness, a.action);
        CHECK(sl.ir >= -1e-6);
        for (double v : sl.ic) CHECK(v >= -1e-6);
    }

    DesignOptions free_prices;
    free_prices.nonnegative_prices = false;
    ImplementabilityReport rebates = implementable_actions(s, free_prices);
    CHECK(rebates.implementable_set() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("two-step design on the three-action case") {
    Scenario s = case2_scenario();
    DesignResult r = two_step_design(s);
    CHECK_FALSE(r.market_collapse);
    CHECK(r.implemented_action == 1);
    CHECK(r.revenue == doctest::Approx(7666.6274802333).epsilon(1e-9));
    CHECK(r.cost == doctest::Approx(126000.0));
    CHECK(r.sp_payoff == doctest::Approx(-115333.3725198).epsilon(1e-9));

    REQUIRE(r.per_action.size() == 3);
    CHECK(r.per_action[0].implementable);
    CHECK(r.per_action[0].revenue == doctest::Approx(29651.2784746).epsilon(1e-9));
    CHECK(r.per_action[0].cost == doctest::Approx(213000.0));
    CHECK(r.per_action[1].cost == doctest::Approx(126000.0));
    CHECK_FALSE(r.per_action[2].implementable);
    CHECK(r.per_action[2].cost == doctest::Approx(81000.0));

    // participation binds at the optimum
    CHECK(std::abs(r.slacks.ir) <= 1e-6);
    for (double v : r.slacks.ic) CHECK(v >= -1e-6);
}

TEST_CASE("a richer satisfaction scale moves the design up a level") {
    Scenario s = case2_scenario(250.0);
    DesignResult r = two_step_design(s);
    CHECK(r.implemented_action == 2);
    CHECK(r.revenue == doctest::Approx(15662.4535793).epsilon(1e-9));
    CHECK(r.cost == doctest::Approx(81000.0));
    CHECK(r.per_action[0].revenue == doctest::Approx(88738.1961866).epsilon(1e-9));
    CHECK(r.per_action[1].revenue == doctest::Approx(40601.5687006).epsilon(1e-9));
}

TEST_CASE("observable actions are worth nothing in the case studies") {
    for (double kappa : {100.0, 250.0}) {
        Scenario s = case2_scenario(kappa);
        DesignResult hidden = two_step_design(s);
        DesignResult full = full_information_design(s);
        for (std::size_t a = 0; a < 3; ++a) {
            if (!hidden.per_action[a].implementable) continue;
            CHECK(full.per_action[a].implementable);
            CHECK(full.per_action[a].revenue >= hidden.per_action[a].revenue - 1e-9);
        }
        VoiReport voi = value_of_information(s);
        CHECK_FALSE(voi.market_collapse);
        CHECK(std::abs(voi.value) <= 1e-6);
    }
}

TEST_CASE("revenue falls linearly with the storage tariff") {
    double revenue[3];
    double tau[3] = {30.0, 60.0, 90.0};
    for (int i = 0; i < 3; ++i) {
        Scenario s = case2_scenario();
        s.costs.tau = tau[i];
        DesignResult r = two_step_design(s);
        CHECK(r.implemented_action == 1);
        revenue[i] = r.revenue;
    }
    CHECK(revenue[0] == doctest::Approx(8716.6274802333).epsilon(1e-9));
    // slope is minus the expected stored energy of the implemented action
    CHECK((revenue[1] - revenue[0]) / 30.0 == doctest::Approx(-35.0).epsilon(1e-6));
    CHECK((revenue[2] - revenue[1]) / 30.0 == doctest::Approx(-35.0).epsilon(1e-6));
}

TEST_CASE("the provider payoff does not depend on the premium") {
    Scenario a = case2_scenario();
    Scenario b = case2_scenario();
    b.costs.premium = 1000.0;
    DesignResult ra = two_step_design(a);
    DesignResult rb = two_step_design(b);
    CHECK(ra.implemented_action == rb.implemented_action);
    CHECK(ra.sp_payoff == doctest::Approx(rb.sp_payoff).epsilon(1e-9));
    // the premium passes through one for one into revenue instead
    CHECK(rb.revenue - ra.revenue == doctest::Approx(2000.0).epsilon(1e-9));
}

TEST_CASE("allowing rebates revives the top level") {
    Scenario s = case2_scenario();
    DesignOptions opts;
    opts.nonnegative_prices = false;
    DesignResult r = two_step_design(s, opts);
    CHECK(r.implemented_action == 2);
    CHECK(r.revenue == doctest::Approx(-5051.0185683).epsilon(1e-9));
    CHECK(r.sp_payoff == doctest::Approx(-83051.0185683).epsilon(1e-9));
}

TEST_CASE("an unaffordable premium collapses the market") {
    Scenario s = case2_scenario();
    s.costs.premium = 1e9;
    DesignResult r = two_step_design(s);
    CHECK(r.market_collapse);
    for (const auto& a : r.per_action) CHECK_FALSE(a.implementable);
    VoiReport voi = value_of_information(s);
    CHECK(voi.market_collapse);
    CHECK(voi.value == 0.0);
}

TEST_CASE("a single action needs no deviation rows") {
    Scenario s = single_action_case1();
    DesignResult r = two_step_design(s);
    CHECK_FALSE(r.market_collapse);
    CHECK(r.implemented_action == 0);
    CHECK(r.revenue == doctest::Approx(3413.0694546).epsilon(1e-9));
    CHECK(r.slacks.actions.empty());
    // matches the closed-form payoff of the high-generation schedule
    CHECK(r.sp_payoff == doctest::Approx(-83586.9305454).epsilon(1e-9));
}

TEST_CASE("design is deterministic") {
    Scenario s = case2_scenario();
    DesignResult a = two_step_design(s);
    DesignResult b = two_step_design(s);
    CHECK(a.revenue == b.revenue);
    REQUIRE(a.contract.prices.size() == b.contract.prices.size());
    for (std::size_t i = 0; i < a.contract.prices.size(); ++i)
        CHECK(a.contract.prices[i] == b.contract.prices[i]);
}
