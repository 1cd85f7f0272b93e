#include "raaskit/metrics.hpp"

#include <stdexcept>

namespace raaskit {

double resilience_gain(const Contract& contract, double x, const CostParams& costs) {
    if (x <= 0.0) throw std::domain_error("resilience gain is defined for positive requests");
    for (std::size_t i = 0; i < contract.outcomes.size(); ++i) {
        if (contract.outcomes[i] == x)
            return satisfaction(x, costs) - contract.prices[i] - contract.premium;
    }
    throw std::domain_error("outcome is not priced by the contract");
}

ResilienceReport average_resilience(const Scenario& s, const Contract& contract,
                                    std::size_t implemented_action) {
    if (implemented_action >= s.action_count())
        throw std::invalid_argument("action index out of range");
    ResilienceReport report;
    double weighted_sum = 0.0;
    double gain_sum = 0.0;
    std::size_t supported = 0;
    for (std::size_t i : s.positive_outcomes()) {
        double x = s.outcomes.values[i];
        double price = contract.price_for(x);
        double f = s.distribution.prob(implemented_action, i);
        double utility = requester_utility(price, x, s.costs);
        report.outcomes.push_back(x);
        report.gains.push_back(utility - contract.premium);
        report.weighted_gains.push_back(f * utility);
        report.unit_prices.push_back(price / x);
        weighted_sum += f * utility;
        if (f > 0.0) {
            gain_sum += utility - contract.premium;
            ++supported;
        }
    }
    report.weighted_average = weighted_sum - contract.premium;
    report.unweighted_mean_of_gains =
        supported > 0 ? gain_sum / static_cast<double>(supported) : 0.0;
    return report;
}

std::vector<std::pair<double, double>> unit_prices(const Contract& contract) {
    std::vector<std::pair<double, double>> out;
    out.reserve(contract.outcomes.size());
    for (std::size_t i = 0; i < contract.outcomes.size(); ++i) {
        double x = contract.outcomes[i];
        if (x == 0.0) throw std::domain_error("unit price is undefined at a zero outcome");
        out.emplace_back(x, contract.prices[i] / x);
    }
    return out;
}

ConstraintSlacks constraint_slacks(const Scenario& s, const Contract& contract,
                                   std::size_t implemented_action) {
    ConstraintSlacks slacks;
    slacks.ir = expected_requester_payoff(s, contract, implemented_action);
    for (std::size_t a = 0; a < s.action_count(); ++a) {
        if (a == implemented_action) continue;
        slacks.actions.push_back(a);
        slacks.ic.push_back(slacks.ir - expected_requester_payoff(s, contract, a));
    }
    return slacks;
}

}  // namespace raaskit
