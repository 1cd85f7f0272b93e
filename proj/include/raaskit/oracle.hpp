#pragma once

#include <cstddef>
#include <cstdint>

#include "raaskit/designer.hpp"
#include "raaskit/scenario.hpp"

namespace raaskit {

struct OracleOptions {
    DesignOptions design;           // bound conventions mirrored from the solver side
    double feasibility_tol = 1e-6;  // absolute slack allowed in IR/IC checks
    std::int64_t max_points = 100000000;   // grid size guard
    std::size_t max_priced_outcomes = 3;   // complexity guard
    bool tighten_ranges = true;     // one interval-propagation pass before enumerating
};

struct OracleReport {
    Contract best_contract;
    double best_objective = 0.0;    // expected revenue at the best feasible tuple ($)
    double solver_objective = 0.0;  // LP optimum for the same instance ($)
    double gap = 0.0;               // solver_objective - best_objective ($)
    double grid_resolution = 0.0;   // step ($)
    std::int64_t feasible_count = 0;
    std::int64_t evaluated_count = 0;
    bool found_feasible = false;
    bool solver_feasible = false;
};

// Exhaustive enumeration of price tuples on the lattice
// {lo, lo+step, ...} per priced outcome, intersected with the active bound
// convention. Feasibility (IR and every IC) is evaluated by direct
// expected-payoff arithmetic, independent of the LP path. Returns the
// revenue-maximizing feasible tuple, ties to the lexicographically smallest.
// Throws std::length_error when the lattice exceeds max_points and
// std::invalid_argument on a bad grid or too many priced outcomes.
OracleReport grid_search(const Scenario& s, std::size_t target_action,
                         double price_lo, double price_hi, double step,
                         const OracleOptions& options = {});

// The default search box: [-2 psi(x_max), psi(x_max)] over the largest
// priced outcome, wide enough for negative closed-form prices.
std::pair<double, double> default_price_box(const Scenario& s);

}  // namespace raaskit
