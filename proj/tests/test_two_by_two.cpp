#include "raaskit/two_by_two.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "raaskit/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace raaskit;
using raaskit::testing::case1_instance;
using raaskit::testing::random_two_by_two;

namespace {

Contract embed(const TwoByTwoInstance& inst, const PricePair& pair) {
    return Contract{{inst.x_low, inst.x_high}, {pair.at_low, pair.at_high},
                    inst.costs.premium};
}

}  // namespace

TEST_CASE("closed form for the high-generation contract") {
    PricePair p = solve_pa1a(case1_instance());
    CHECK(p.at_high == doctest::Approx(19631.6643151).epsilon(1e-9));
    CHECK(p.at_low == doctest::Approx(-641.5792606).epsilon(1e-9));
}

TEST_CASE("high-generation contract binds both constraints") {
    TwoByTwoInstance inst = case1_instance();
    Scenario s = scenario_from_two_by_two(inst);
    Contract c = embed(inst, solve_pa1a(inst));
    double pi_high = expected_requester_payoff(s, c, 1);
    double pi_low = expected_requester_payoff(s, c, 0);
    CHECK(std::abs(pi_high) <= 1e-8);
    CHECK(std::abs(pi_high - pi_low) <= 1e-8);
}

TEST_CASE("low-generation contract is the same schedule less one premium") {
    TwoByTwoInstance inst = case1_instance();
    PricePair a = solve_pa1a(inst);
    PricePair b = solve_pa1b(inst);
    CHECK(b.at_high == doctest::Approx(a.at_high - 3000.0).epsilon(1e-12));
    CHECK(b.at_low == doctest::Approx(a.at_low - 3000.0).epsilon(1e-12));

    // it leaves the requester exactly one premium of surplus
    Scenario s = scenario_from_two_by_two(inst);
    Contract c = embed(inst, b);
    CHECK(expected_requester_payoff(s, c, 0) == doctest::Approx(3000.0).epsilon(1e-9));
    CHECK(expected_requester_payoff(s, c, 0) ==
          doctest::Approx(expected_requester_payoff(s, c, 1)).epsilon(1e-9));

    inst.costs.premium = 0.0;
    a = solve_pa1a(inst);
    b = solve_pa1b(inst);
    CHECK(a.at_high == b.at_high);
    CHECK(a.at_low == b.at_low);
}

TEST_CASE("flat generation cost drops out of the prices") {
    TwoByTwoInstance inst = case1_instance();
    inst.costs.alpha = 0.0;
    inst.costs.beta = 0.0;
    PricePair p = solve_pa1a(inst);
    double t = inst.costs.premium;
    CHECK(p.at_high ==
          doctest::Approx(satisfaction(inst.x_high, inst.costs) - 100.0 - t).epsilon(1e-12));
    CHECK(p.at_low ==
          doctest::Approx(satisfaction(inst.x_low, inst.costs) - 100.0 - t).epsilon(1e-12));
}

TEST_CASE("premium enters the two contracts with slopes -1 and -2") {
    TwoByTwoInstance inst = case1_instance();
    PricePair a0 = solve_pa1a(inst);
    PricePair b0 = solve_pa1b(inst);
    inst.costs.premium += 1000.0;
    PricePair a1 = solve_pa1a(inst);
    PricePair b1 = solve_pa1b(inst);
    CHECK(a1.at_high == doctest::Approx(a0.at_high - 1000.0).epsilon(1e-12));
    CHECK(a1.at_low == doctest::Approx(a0.at_low - 1000.0).epsilon(1e-12));
    CHECK(b1.at_high == doctest::Approx(b0.at_high - 2000.0).epsilon(1e-12));
    CHECK(b1.at_low == doctest::Approx(b0.at_low - 2000.0).epsilon(1e-12));
}

TEST_CASE("prices move monotonically in the likelihood shift") {
    TwoByTwoInstance inst = case1_instance();
    double prev_high = 1e300;
    double prev_low = -1e300;
    for (double q : {0.2, 0.4, 0.6, 0.8}) {
        inst.q = q;
        PricePair p = solve_pa1a(inst);
        CHECK(p.at_high < prev_high);
        CHECK(p.at_low > prev_low);
        CHECK(p.at_high > p.at_low);
        prev_high = p.at_high;
        prev_low = p.at_low;
    }
}

TEST_CASE("degenerate likelihood shift is rejected") {
    TwoByTwoInstance inst = case1_instance();
    inst.q = 0.0;
    CHECK_THROWS_AS(solve_pa1a(inst), std::domain_error);
    inst.q = -0.1;
    CHECK_THROWS_AS(solve_pa1b(inst), std::domain_error);
    inst.q = 0.9;  // above k
    CHECK_THROWS_AS(solve_pa1a(inst), ValidationError);
}

TEST_CASE("contract selection on the bundled case") {
    TwoByTwoResult r = select_contract(case1_instance());
    CHECK(r.payoff_a == doctest::Approx(-83586.9305454).epsilon(1e-9));
    CHECK(r.payoff_b == doctest::Approx(-97532.2818303).epsilon(1e-9));
    CHECK(r.selected == SelectedContract::high_generation);
    CHECK(r.threshold_value == doctest::Approx(16380.5512849).epsilon(1e-9));
    CHECK(r.threshold_agrees);
}

TEST_CASE("selection flips with the delivery cost") {
    // With free delivery the provider wants the requester to generate little
    // (larger requests collect the larger price more often); once delivery is
    // ruinous the high-generation contract wins.
    TwoByTwoInstance inst = case1_instance();
    inst.costs.alpha = 0.0;
    inst.costs.beta = 0.0;
    inst.costs.zeta = 1e-9;
    inst.costs.premium = 0.0;
    CHECK(select_contract(inst).selected == SelectedContract::low_generation);

    inst.costs.zeta = 1e6;
    CHECK(select_contract(inst).selected == SelectedContract::high_generation);
}

TEST_CASE("threshold differs from the direct comparison by twice the cost gap") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        TwoByTwoInstance inst = random_two_by_two(rng);
        TwoByTwoResult r = select_contract(inst);
        double dphi = generation_cost(inst.pg_high, inst.costs) -
                      generation_cost(inst.pg_low, inst.costs);
        double direct = r.payoff_a - r.payoff_b;
        double scale = 1.0 + std::abs(r.threshold_value);
        CHECK(std::abs(r.threshold_value - direct - 2.0 * dphi) <= 1e-9 * scale);
        CHECK(r.threshold_agrees == ((r.threshold_value > 0.0) == (direct >= 0.0)));
        CHECK(r.contract_a.at_high > r.contract_a.at_low);
        CHECK(r.contract_b.at_high > r.contract_b.at_low);
    }
}

TEST_CASE("resilience gains have the closed form") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        TwoByTwoInstance inst = random_two_by_two(rng);
        Contract c = embed(inst, solve_pa1a(inst));
        double dphi = generation_cost(inst.pg_high, inst.costs) -
                      generation_cost(inst.pg_low, inst.costs);
        double phi_high = generation_cost(inst.pg_high, inst.costs);
        double r_low = resilience_gain(c, inst.x_low, inst.costs);
        double r_high = resilience_gain(c, inst.x_high, inst.costs);
        CHECK(r_low == doctest::Approx(phi_high + (1.0 - inst.k) * dphi / inst.q)
                           .epsilon(1e-9));
        CHECK(r_high == doctest::Approx(phi_high - inst.k * dphi / inst.q).epsilon(1e-9));
    }
}

TEST_CASE("no $1 neighbor of the closed form does better") {
    TwoByTwoInstance inst = case1_instance();
    Scenario s = scenario_from_two_by_two(inst);
    PricePair best = solve_pa1a(inst);
    double revenue = 0.2 * best.at_high + 0.8 * best.at_low;
    for (double dh : {-1.0, 0.0, 1.0}) {
        for (double dl : {-1.0, 0.0, 1.0}) {
            if (dh == 0.0 && dl == 0.0) continue;
            Contract c{{inst.x_low, inst.x_high},
                       {best.at_low + dl, best.at_high + dh},
                       inst.costs.premium};
            ConstraintSlacks slacks = constraint_slacks(s, c, 1);
            bool feasible = slacks.ir >= -1e-9;
            for (double ic : slacks.ic) feasible = feasible && ic >= -1e-9;
            double r = 0.2 * (best.at_high + dh) + 0.8 * (best.at_low + dl);
            if (feasible) CHECK(r <= revenue + 1e-9);
        }
    }
}

TEST_CASE("q sweep evaluates the grid in order") {
    TwoByTwoInstance inst = case1_instance();
    std::vector<double> grid;
    for (int i = 4; i <= 16; ++i) grid.push_back(i / 20.0);
    std::vector<QSweepRow> rows = sweep_q(inst, grid);
    REQUIRE(rows.size() == 13);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].q == doctest::Approx(grid[i]));
        CHECK(rows[i].result.contract_a.at_high > rows[i].result.contract_a.at_low);
    }

    std::vector<double> bad{0.2, 0.85};  // beyond k = 0.8
    CHECK_THROWS_AS(sweep_q(inst, bad), std::domain_error);
    std::vector<double> zero{0.0};
    CHECK_THROWS_AS(sweep_q(inst, zero), std::domain_error);
}

TEST_CASE("scenario embedding round-trips the instance") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        TwoByTwoInstance inst = random_two_by_two(rng);
        Scenario s = scenario_from_two_by_two(inst);
        TwoByTwoInstance back = two_by_two_from_scenario(s);
        CHECK(back.pg_low == inst.pg_low);
        CHECK(back.pg_high == inst.pg_high);
        CHECK(back.x_low == inst.x_low);
        CHECK(back.x_high == inst.x_high);
        CHECK(back.k == doctest::Approx(inst.k).epsilon(1e-12));
        CHECK(back.q == doctest::Approx(inst.q).epsilon(1e-12));
        CHECK(back.costs.kappa == inst.costs.kappa);
    }
}

TEST_CASE("only true two-by-two scenarios convert") {
    Scenario s = raaskit::testing::case2_scenario();
    CHECK_THROWS_AS(two_by_two_from_scenario(s), std::invalid_argument);

    Scenario c1 = raaskit::testing::case1_scenario();
    c1.outcomes.values = {-50.0, 100.0};
    CHECK_THROWS_AS(two_by_two_from_scenario(c1), std::invalid_argument);
}

TEST_CASE("instance validation names the violations") {
    TwoByTwoInstance inst = case1_instance();
    inst.x_low = -5.0;
    CHECK_THROWS_AS(inst.validate(), ValidationError);
    inst = case1_instance();
    inst.pg_low = inst.pg_high;
    CHECK_THROWS_AS(inst.validate(), ValidationError);
    inst = case1_instance();
    inst.costs.premium = -1.0;
    CHECK_THROWS_AS(inst.validate(), ValidationError);
}
