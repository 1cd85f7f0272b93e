#pragma once

// In-code copies of the bundled case studies so unit tests need no file
// paths. Kept byte-for-byte in sync with scenarios/*.scn by a round-trip
// test in the scenario_io suite.

#include "raaskit/scenario.hpp"
#include "raaskit/two_by_two.hpp"

namespace raaskit::testing {

inline CostParams table_costs(double kappa = 100.0) {
    CostParams c;
    c.alpha = 0.001;
    c.beta = 30.0;
    c.gamma = 100.0;
    c.tau = 60.0;
    c.zeta = 1500.0;
    c.kappa = kappa;
    c.rho = 1.2;
    c.premium = 3000.0;
    return c;
}

// Two actions (200, 240), two outcomes (50, 100), k = 0.8, q = 0.2.
inline Scenario case1_scenario() {
    Scenario s;
    s.costs = table_costs();
    s.actions.levels = {200.0, 240.0};
    s.actions.load = 340.0;
    s.actions.max_generation = 400.0;
    s.outcomes.values = {50.0, 100.0};
    s.distribution.rows = {{0.6, 0.4}, {0.8, 0.2}};
    return s;
}

inline TwoByTwoInstance case1_instance() {
    TwoByTwoInstance inst;
    inst.pg_low = 200.0;
    inst.pg_high = 240.0;
    inst.x_low = 50.0;
    inst.x_high = 100.0;
    inst.k = 0.8;
    inst.q = 0.2;
    inst.costs = table_costs();
    return inst;
}

// Three actions (200, 300, 400), five outcomes (-150 .. 200).
inline Scenario case2_scenario(double kappa = 100.0) {
    Scenario s;
    s.costs = table_costs(kappa);
    s.actions.levels = {200.0, 300.0, 400.0};
    s.actions.load = 540.0;
    s.actions.max_generation = 700.0;
    s.outcomes.values = {-150.0, -100.0, 100.0, 140.0, 200.0};
    s.distribution.rows = {{0.0, 0.1, 0.2, 0.3, 0.4},
                           {0.1, 0.2, 0.35, 0.35, 0.0},
                           {0.2, 0.3, 0.4, 0.1, 0.0}};
    return s;
}

// The reference price schedule quoted for case 2 (4440, 8890, 59580 $).
inline Contract case2_reference_contract() {
    Contract c;
    c.outcomes = {100.0, 140.0, 200.0};
    c.prices = {4440.0, 8890.0, 59580.0};
    c.premium = 3000.0;
    return c;
}

}  // namespace raaskit::testing
