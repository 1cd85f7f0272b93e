#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "raaskit/scenario.hpp"

namespace raaskit {

// Resilience view of a contract under one implemented action. The headline
// average follows the defining expectation; the two extra fields reproduce
// the alternative arithmetics that show up in reported figures.
struct ResilienceReport {
    std::vector<double> outcomes;        // priced outcomes (MWh)
    std::vector<double> gains;           // psi(x) - H(x) - T per priced outcome ($)
    std::vector<double> weighted_gains;  // f(x) * (psi(x) - H(x)) per priced outcome ($)
    std::vector<double> unit_prices;     // H(x)/x per priced outcome ($/MWh)
    double weighted_average = 0.0;       // sum U f - T over priced outcomes ($)
    double unweighted_mean_of_gains = 0.0;  // mean gain over positive-probability outcomes ($)
};

// Net benefit of being served at request level x: psi(x) - H(x) - T.
// Throws std::domain_error when x is not positive or not priced.
double resilience_gain(const Contract& contract, double x, const CostParams& costs);

ResilienceReport average_resilience(const Scenario& s, const Contract& contract,
                                    std::size_t implemented_action);

// m(x) = H(x)/x pairs, one per priced outcome.
std::vector<std::pair<double, double>> unit_prices(const Contract& contract);

struct ConstraintSlacks {
    double ir = 0.0;                   // expected payoff under the implemented action
    std::vector<std::size_t> actions;  // alternative action indices
    std::vector<double> ic;            // payoff(implemented) - payoff(alternative)
};

// Feasibility diagnostics: the contract is incentive-feasible iff every
// reported slack is >= -1e-6.
ConstraintSlacks constraint_slacks(const Scenario& s, const Contract& contract,
                                   std::size_t implemented_action);

}  // namespace raaskit
