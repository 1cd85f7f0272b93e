#pragma once

#include <span>
#include <vector>

#include "raaskit/scenario.hpp"

namespace raaskit {

// Two-action / two-outcome market. The outcome distribution is pinned down
// by two constants: P(x_low | pg_high) = k and P(x_low | pg_low) = k - q.
struct TwoByTwoInstance {
    double pg_low = 0.0;   // lower generation level (MWh)
    double pg_high = 0.0;  // higher generation level (MWh), > pg_low
    double x_low = 0.0;    // smaller positive request (MWh)
    double x_high = 0.0;   // larger positive request (MWh)
    double k = 0.0;        // P(x_low | pg_high), in [q, 1]
    double q = 0.0;        // likelihood shift between the actions, in (0, 1]
    CostParams costs;

    // Throws ValidationError naming the violated invariant.
    void validate() const;
};

// Price pair for the two outcomes.
struct PricePair {
    double at_high = 0.0;  // H(x_high) ($)
    double at_low = 0.0;   // H(x_low) ($)
};

enum class SelectedContract { high_generation, low_generation };

struct TwoByTwoResult {
    PricePair contract_a;  // implements pg_high (IR and IC bind at premium T)
    PricePair contract_b;  // implements pg_low (same closed form shifted by -T)
    double payoff_a = 0.0;  // provider expected payoff under contract_a ($)
    double payoff_b = 0.0;  // provider expected payoff under contract_b ($)
    SelectedContract selected = SelectedContract::high_generation;
    double threshold_value = 0.0;  // audit value of the sign-rule expression ($)
    bool threshold_agrees = true;  // sign rule matched the direct comparison
};

// Closed form for the contract implementing pg_high:
//   H(x) = psi(x) - Phi(pg_high) + {k, -(1-k)} * dPhi / q - T
// with dPhi = Phi(pg_high) - Phi(pg_low). Both its constraints bind.
PricePair solve_pa1a(const TwoByTwoInstance& inst);

// Same expressions with -2T in place of -T; implements pg_low.
PricePair solve_pa1b(const TwoByTwoInstance& inst);

// Computes both contracts, evaluates the provider payoff of each directly
// (sum f (H - zeta x) + T under the contract's own implemented action), and
// selects the larger; ties go to the high-generation contract. The audit
// threshold q(psi(x_low)-psi(x_high)-zeta(x_low-x_high)) + dPhi + T is
// reported alongside, with a flag when its sign disagrees.
TwoByTwoResult select_contract(const TwoByTwoInstance& inst);

struct QSweepRow {
    double q = 0.0;
    TwoByTwoResult result;
};

// One select_contract run per grid value; every q must lie in (0, k].
std::vector<QSweepRow> sweep_q(const TwoByTwoInstance& inst, std::span<const double> q_grid);

// Recover the two-by-two constants from a 2x2 scenario, and embed an
// instance as a scenario so the multi-action machinery can run on it.
TwoByTwoInstance two_by_two_from_scenario(const Scenario& s);
Scenario scenario_from_two_by_two(const TwoByTwoInstance& inst);

}  // namespace raaskit
