#pragma once

#include <cstddef>
#include <vector>

#include "raaskit/lp.hpp"
#include "raaskit/metrics.hpp"
#include "raaskit/scenario.hpp"

namespace raaskit {

// Bound conventions for the design LPs. The defaults are the only pair that
// reproduces the reference case study outcomes (see README): prices are kept
// nonnegative and the ex-post cap H(x) <= psi(x) stays off.
struct DesignOptions {
    bool nonnegative_prices = true;  // lower bound H(x) >= 0
    bool expost_cap = false;         // upper bound H(x) <= psi(x)
    LpOptions lp;
    double slack_tol = 1e-6;
};

// One action's revenue-maximization LP: variables are the prices of the
// positive outcomes, the objective is expected revenue under the target
// action, one IR row plus one IC row per alternative action (omitted when
// include_ic is false, giving the full-information problem).
LpProblem build_design_lp(const Scenario& s, std::size_t target_action,
                          const DesignOptions& options = {}, bool include_ic = true);

struct ActionFeasibility {
    std::size_t action = 0;
    bool implementable = false;
    Contract witness;               // a feasible contract when implementable
    double phase1_objective = 0.0;  // residual infeasibility when not
};

struct ImplementabilityReport {
    std::vector<ActionFeasibility> actions;
    std::vector<std::size_t> implementable_set() const;
};

// Phase-1 feasibility of the design LP, one entry per action.
ImplementabilityReport implementable_actions(const Scenario& s,
                                             const DesignOptions& options = {});

struct ActionDesign {
    std::size_t action = 0;
    bool implementable = false;
    double revenue = 0.0;  // optimal expected revenue B ($)
    double cost = 0.0;     // expected delivery cost C ($)
    Contract contract;     // revenue-optimal contract when implementable
};

struct DesignResult {
    bool market_collapse = false;       // no action implementable
    std::size_t implemented_action = 0;
    Contract contract;
    double revenue = 0.0;               // B at the implemented action ($)
    double cost = 0.0;                  // C at the implemented action ($)
    double sp_payoff = 0.0;             // B - C + premium ($)
    ConstraintSlacks slacks;            // diagnostics for the winning contract
    std::vector<ActionDesign> per_action;
};

// Two-step procedure: solve the design LP per implementable action, then
// implement the argmax of revenue minus delivery cost (ties to the lowest
// generation level). No implementable action yields market_collapse rather
// than an exception. Throws UnboundedDesignError if an LP is unbounded.
DesignResult two_step_design(const Scenario& s, const DesignOptions& options = {});

// Same selection over the IR-only problem (the action is observable).
DesignResult full_information_design(const Scenario& s, const DesignOptions& options = {});

struct VoiReport {
    DesignResult hidden;  // two_step_design outcome
    DesignResult full;    // full_information_design outcome
    double value = 0.0;   // full payoff minus hidden payoff ($), >= 0
    bool market_collapse = false;
};

// Value of observing the action: full-information payoff minus hidden-action
// payoff. Collapse on the hidden side propagates as market_collapse.
VoiReport value_of_information(const Scenario& s, const DesignOptions& options = {});

}  // namespace raaskit
