#include "raaskit/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace raaskit {

namespace {

std::string fmt(double v) {
    std::string s = std::to_string(v);
    // trim trailing zeros for readable error messages
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace

std::vector<std::size_t> Scenario::positive_outcomes() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < outcomes.values.size(); ++i)
        if (outcomes.values[i] > 0.0) idx.push_back(i);
    return idx;
}

void Scenario::validate() const {
    require(costs.alpha > 0.0, "alpha must be positive");
    require(costs.beta > 0.0, "beta must be positive");
    require(costs.gamma > 0.0, "gamma must be positive");
    require(costs.tau > 0.0, "tau must be positive");
    require(costs.zeta > 0.0, "zeta must be positive");
    require(costs.kappa > 0.0, "kappa must be positive");
    require(costs.rho > 0.0, "rho must be positive");
    require(costs.premium >= 0.0, "premium must be nonnegative");

    require(!actions.levels.empty(), "at least one action level required");
    require(actions.load < actions.max_generation, "load must be below max_generation");
    for (std::size_t j = 0; j < actions.levels.size(); ++j) {
        double pg = actions.levels[j];
        require(pg >= 0.0 && pg <= actions.max_generation,
                "action level " + fmt(pg) + " outside [0, max_generation]");
        if (j > 0)
            require(actions.levels[j - 1] < pg, "action levels must be strictly increasing");
    }

    require(!outcomes.values.empty(), "at least one outcome required");
    double x_min = actions.load - actions.max_generation;
    double x_max = actions.load;
    for (std::size_t i = 0; i < outcomes.values.size(); ++i) {
        double x = outcomes.values[i];
        require(x >= x_min && x <= x_max,
                "outcome " + fmt(x) + " outside [load - max_generation, load]");
        if (i > 0)
            require(outcomes.values[i - 1] < x, "outcomes must be strictly increasing");
    }
    require(!positive_outcomes().empty(), "at least one positive outcome required");

    require(distribution.rows.size() == actions.levels.size(),
            "distribution must have one row per action");
    for (std::size_t j = 0; j < distribution.rows.size(); ++j) {
        const auto& row = distribution.rows[j];
        require(row.size() == outcomes.values.size(),
                "distribution row for action " + fmt(actions.levels[j]) +
                    " must have one entry per outcome");
        double sum = 0.0;
        for (double p : row) {
            require(p >= 0.0 && p <= 1.0,
                    "distribution entries must lie in [0, 1] (action " +
                        fmt(actions.levels[j]) + ")");
            sum += p;
        }
        require(std::abs(sum - 1.0) <= 1e-9,
                "distribution row for action " + fmt(actions.levels[j]) + " sums to " +
                    fmt(sum) + ", expected 1");
    }
}

double Contract::price_for(double x) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i] == x) return prices[i];
    throw std::invalid_argument("contract does not price outcome " + fmt(x));
}

double generation_cost(double pg, const CostParams& costs) {
    if (pg < 0.0) throw std::domain_error("generation level must be nonnegative");
    return costs.alpha * pg * pg + costs.beta * pg + costs.gamma;
}

double satisfaction(double x, const CostParams& costs) {
    if (x < 0.0) throw std::domain_error("satisfaction is defined for nonnegative requests");
    return costs.kappa * std::pow(x, costs.rho);
}

double storage_cost(double x, const CostParams& costs) {
    if (x > 0.0) throw std::domain_error("storage cost applies to non-positive outcomes");
    return costs.tau * -x;
}

double requester_utility(double price, double x, const CostParams& costs) {
    return satisfaction(x, costs) - price;
}

double sp_stage_payoff(double price, double x, const CostParams& costs) {
    return price - costs.zeta * x;
}

double expected_satisfaction(const Scenario& s, std::size_t action) {
    double sum = 0.0;
    for (std::size_t i : s.positive_outcomes())
        sum += satisfaction(s.outcomes.values[i], s.costs) * s.distribution.prob(action, i);
    return sum;
}

double expected_storage_cost(const Scenario& s, std::size_t action) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.outcome_count(); ++i) {
        double x = s.outcomes.values[i];
        if (x <= 0.0) sum += storage_cost(x, s.costs) * s.distribution.prob(action, i);
    }
    return sum;
}

double delivery_cost(const Scenario& s, std::size_t action) {
    double sum = 0.0;
    for (std::size_t i : s.positive_outcomes())
        sum += s.outcomes.values[i] * s.distribution.prob(action, i);
    return s.costs.zeta * sum;
}

double expected_requester_payoff(const Scenario& s, const Contract& c, std::size_t action) {
    if (action >= s.action_count()) throw std::invalid_argument("action index out of range");
    double sum = 0.0;
    for (std::size_t i : s.positive_outcomes()) {
        double x = s.outcomes.values[i];
        sum += requester_utility(c.price_for(x), x, s.costs) * s.distribution.prob(action, i);
    }
    sum -= expected_storage_cost(s, action);
    sum -= generation_cost(s.actions.levels[action], s.costs);
    sum -= c.premium;
    return sum;
}

MonteCarloTerms monte_carlo_expected_terms(std::span<const double> samples,
                                           const Contract& contract,
                                           const CostParams& costs) {
    if (samples.empty()) throw std::domain_error("sample list must not be empty");
    if (contract.outcomes.empty())
        throw std::invalid_argument("contract must price at least one outcome");
    MonteCarloTerms terms;
    for (double x : samples) {
        if (x > 0.0) {
            // price at the nearest contracted level, ties toward the lower one
            double best = contract.prices[0];
            double best_dist = std::abs(contract.outcomes[0] - x);
            for (std::size_t i = 1; i < contract.outcomes.size(); ++i) {
                double d = std::abs(contract.outcomes[i] - x);
                if (d < best_dist) {
                    best_dist = d;
                    best = contract.prices[i];
                }
            }
            terms.utility_term += requester_utility(best, x, costs);
        } else {
            terms.storage_term += storage_cost(x, costs);
        }
    }
    terms.utility_term /= static_cast<double>(samples.size());
    terms.storage_term /= static_cast<double>(samples.size());
    return terms;
}

std::vector<double> sample_outcomes(const Scenario& s, std::size_t action,
                                    std::size_t n, std::uint64_t seed) {
    if (action >= s.action_count()) throw std::invalid_argument("action index out of range");
    std::mt19937_64 rng(seed);
    const auto& row = s.distribution.rows[action];
    std::vector<double> draws;
    draws.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        // explicit 53-bit uniform so results don't depend on the platform's
        // std::uniform_real_distribution
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double acc = 0.0;
        std::size_t pick = s.outcome_count() - 1;
        for (std::size_t i = 0; i < row.size(); ++i) {
            acc += row[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        draws.push_back(s.outcomes.values[pick]);
    }
    return draws;
}

}  // namespace raaskit
