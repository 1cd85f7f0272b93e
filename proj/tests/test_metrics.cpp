#include "raaskit/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "raaskit/two_by_two.hpp"
#include "support/fixtures.hpp"

using namespace raaskit;
using raaskit::testing::case1_instance;
using raaskit::testing::case2_reference_contract;
using raaskit::testing::case2_scenario;
using raaskit::testing::table_costs;

namespace {

Contract case1_contract() {
    TwoByTwoInstance inst = case1_instance();
    PricePair p = solve_pa1a(inst);
    return Contract{{50.0, 100.0}, {p.at_low, p.at_high}, 3000.0};
}

}  // namespace

TEST_CASE("per-outcome gains of the closed-form contract") {
    Contract c = case1_contract();
    CostParams costs = table_costs();
    CHECK(resilience_gain(c, 50.0, costs) == doctest::Approx(8575.2).epsilon(1e-9));
    CHECK(resilience_gain(c, 100.0, costs) == doctest::Approx(2487.2).epsilon(1e-9));
    CHECK_THROWS_AS(resilience_gain(c, -50.0, costs), std::domain_error);
    CHECK_THROWS_AS(resilience_gain(c, 75.0, costs), std::domain_error);
}

TEST_CASE("resilience report on the two-by-two case") {
    Scenario s = scenario_from_two_by_two(case1_instance());
    ResilienceReport r = average_resilience(s, case1_contract(), 1);
    REQUIRE(r.outcomes.size() == 2);
    CHECK(r.outcomes[0] == doctest::Approx(50.0));
    CHECK(r.gains[0] == doctest::Approx(8575.2).epsilon(1e-9));
    CHECK(r.gains[1] == doctest::Approx(2487.2).epsilon(1e-9));
    CHECK(r.weighted_gains[0] == doctest::Approx(0.8 * 11575.2).epsilon(1e-9));
    CHECK(r.weighted_gains[1] == doctest::Approx(0.2 * 5487.2).epsilon(1e-9));
    CHECK(r.unit_prices[0] == doctest::Approx(-12.8315852113).epsilon(1e-9));
    CHECK(r.unit_prices[1] == doctest::Approx(196.3166431510).epsilon(1e-9));
    // the distribution-weighted average equals the higher generation cost
    CHECK(r.weighted_average == doctest::Approx(7357.6).epsilon(1e-9));
    CHECK(r.unweighted_mean_of_gains == doctest::Approx(5531.2).epsilon(1e-9));

    double sum = 0.0;
    for (double g : r.weighted_gains) sum += g;
    CHECK(r.weighted_average + 3000.0 == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("report under the reference case-2 schedule") {
    Scenario s = case2_scenario();
    Contract c = case2_reference_contract();
    ResilienceReport r = average_resilience(s, c, 1);
    CHECK(r.weighted_average == doctest::Approx(14291.1274802).epsilon(1e-9));

    // weighted average minus the participation slack is storage plus
    // generation cost, whatever the contract
    ConstraintSlacks slacks = constraint_slacks(s, c, 1);
    CHECK(r.weighted_average - slacks.ir == doctest::Approx(11290.0).epsilon(1e-12));

    // gains ignore zero-probability outcomes in the unweighted mean
    double g100 = satisfaction(100.0, s.costs) - 4440.0 - 3000.0;
    double g140 = satisfaction(140.0, s.costs) - 8890.0 - 3000.0;
    CHECK(r.unweighted_mean_of_gains == doctest::Approx((g100 + g140) / 2.0).epsilon(1e-12));
}

TEST_CASE("unit prices divide by the outcome") {
    Contract c = case2_reference_contract();
    auto pairs = unit_prices(c);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].first == doctest::Approx(100.0));
    CHECK(pairs[0].second == doctest::Approx(44.4));
    CHECK(pairs[1].second == doctest::Approx(63.5));
    CHECK(pairs[2].second == doctest::Approx(297.9));

    Contract zero;
    zero.outcomes = {0.0};
    zero.prices = {10.0};
    CHECK_THROWS_AS(unit_prices(zero), std::domain_error);
}

TEST_CASE("constraint slacks report participation and deviation margins") {
    Scenario s = case2_scenario();
    ConstraintSlacks slacks = constraint_slacks(s, case2_reference_contract(), 1);
    CHECK(slacks.ir == doctest::Approx(3001.1274802).epsilon(1e-9));
    REQUIRE(slacks.actions == std::vector<std::size_t>{0, 2});
    CHECK(slacks.ic[0] == doctest::Approx(736.8490056).epsilon(1e-9));
    CHECK(slacks.ic[1] == doctest::Approx(10717.1460485).epsilon(1e-9));
}

TEST_CASE("raising one price moves the slack by its probability") {
    Scenario s = case2_scenario();
    Contract c = case2_reference_contract();
    double base = constraint_slacks(s, c, 1).ir;
    c.prices[1] += 200.0;
    CHECK(constraint_slacks(s, c, 1).ir == doctest::Approx(base - 0.35 * 200.0).epsilon(1e-12));
}
