#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "raaskit/errors.hpp"

namespace raaskit {

// Cost and utility parameters of one market instance.
// Money in dollars, energy in MWh.
struct CostParams {
    double alpha = 0.0;    // generation cost, quadratic term ($/MWh^2)
    double beta = 0.0;     // generation cost, linear term ($/MWh)
    double gamma = 0.0;    // generation cost, fixed term ($)
    double tau = 0.0;      // unit storage cost ($/MWh)
    double zeta = 0.0;     // provider's unit delivery cost ($/MWh)
    double kappa = 0.0;    // satisfaction scale ($/MWh^rho)
    double rho = 0.0;      // satisfaction exponent
    double premium = 0.0;  // upfront participation fee T ($)
};

// Generation levels the requester can choose from, plus the load band
// that brackets the possible outcomes.
struct ActionSet {
    std::vector<double> levels;   // ascending generation choices (MWh)
    double load = 0.0;            // requester's load (MWh)
    double max_generation = 0.0;  // upper limit on local generation (MWh)
};

// Realized power requests. Positive = bought from the provider,
// non-positive = surplus sent to storage.
struct OutcomeSet {
    std::vector<double> values;  // ascending (MWh)
};

// One probability row per action, one column per outcome.
struct OutcomeDistribution {
    std::vector<std::vector<double>> rows;

    double prob(std::size_t action, std::size_t outcome) const {
        return rows[action][outcome];
    }
};

struct Scenario {
    CostParams costs;
    ActionSet actions;
    OutcomeSet outcomes;
    OutcomeDistribution distribution;

    std::size_t action_count() const { return actions.levels.size(); }
    std::size_t outcome_count() const { return outcomes.values.size(); }

    // Indices of strictly positive outcomes (the priced ones), ascending.
    std::vector<std::size_t> positive_outcomes() const;

    // Throws ValidationError naming the violated invariant.
    void validate() const;
};

// Price schedule over the positive outcomes of a scenario.
struct Contract {
    std::vector<double> outcomes;  // ascending, strictly positive (MWh)
    std::vector<double> prices;    // total payment per outcome ($)
    double premium = 0.0;          // participation fee echoed from the scenario ($)

    // Price for an exactly matching outcome; throws std::invalid_argument
    // when x is not priced.
    double price_for(double x) const;
};

// Primitive economic functions.
double generation_cost(double pg, const CostParams& costs);             // Phi
double satisfaction(double x, const CostParams& costs);                 // psi
double storage_cost(double x, const CostParams& costs);                 // tau * |x|, x <= 0
double requester_utility(double price, double x, const CostParams& costs);  // psi(x) - price
double sp_stage_payoff(double price, double x, const CostParams& costs);     // price - zeta * x

// Per-action expectations shared by the designer and the oracle.
double expected_satisfaction(const Scenario& s, std::size_t action);  // sum psi(x) f over x > 0
double expected_storage_cost(const Scenario& s, std::size_t action);  // tau * sum |x| f over x <= 0
double delivery_cost(const Scenario& s, std::size_t action);          // zeta * sum x f over x > 0

// Expected requester payoff under a contract and action:
// sum U f over x > 0, minus expected storage cost, minus Phi, minus T.
double expected_requester_payoff(const Scenario& s, const Contract& c, std::size_t action);

struct MonteCarloTerms {
    double utility_term = 0.0;  // (1/N) sum of U over positive draws
    double storage_term = 0.0;  // (1/N) sum of tau|x| over non-positive draws
};

// Data-driven estimate of the two expectation terms of the requester payoff.
// Positive draws are priced at the nearest contracted outcome (ties toward
// the lower one); satisfaction is evaluated at the draw itself.
MonteCarloTerms monte_carlo_expected_terms(std::span<const double> samples,
                                           const Contract& contract,
                                           const CostParams& costs);

// Draw n outcomes from one action's distribution row. Bit-stable across
// platforms for a fixed seed.
std::vector<double> sample_outcomes(const Scenario& s, std::size_t action,
                                    std::size_t n, std::uint64_t seed);

}  // namespace raaskit
