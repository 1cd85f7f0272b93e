#include "raaskit/two_by_two.hpp"

#include <cmath>
#include <stdexcept>

namespace raaskit {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
}

// Shared body of the two closed forms; premium_scale is 1 or 2.
PricePair closed_form(const TwoByTwoInstance& inst, double premium_scale) {
    if (inst.q <= 0.0) throw std::domain_error("q must be positive");
    inst.validate();
    double dphi = generation_cost(inst.pg_high, inst.costs) -
                  generation_cost(inst.pg_low, inst.costs);
    double base_high = satisfaction(inst.x_high, inst.costs) -
                       generation_cost(inst.pg_high, inst.costs);
    double base_low = satisfaction(inst.x_low, inst.costs) -
                      generation_cost(inst.pg_high, inst.costs);
    double t = premium_scale * inst.costs.premium;
    PricePair pair;
    pair.at_high = base_high + inst.k * dphi / inst.q - t;
    pair.at_low = base_low - (1.0 - inst.k) * dphi / inst.q - t;
    return pair;
}

}  // namespace

void TwoByTwoInstance::validate() const {
    require(q > 0.0 && q <= 1.0, "q must lie in (0, 1]");
    require(k >= q && k <= 1.0, "k must lie in [q, 1]");
    require(x_low > 0.0 && x_high > x_low, "outcomes must satisfy x_high > x_low > 0");
    require(pg_high > pg_low && pg_low >= 0.0, "levels must satisfy pg_high > pg_low >= 0");
    require(costs.premium >= 0.0, "premium must be nonnegative");
    require(costs.kappa > 0.0 && costs.rho > 0.0, "satisfaction parameters must be positive");
}

PricePair solve_pa1a(const TwoByTwoInstance& inst) { return closed_form(inst, 1.0); }

PricePair solve_pa1b(const TwoByTwoInstance& inst) { return closed_form(inst, 2.0); }

TwoByTwoResult select_contract(const TwoByTwoInstance& inst) {
    TwoByTwoResult r;
    r.contract_a = solve_pa1a(inst);
    r.contract_b = solve_pa1b(inst);

    // Direct payoffs: each contract is scored under the action it implements.
    auto payoff = [&](const PricePair& p, double prob_low) {
        double at_high = sp_stage_payoff(p.at_high, inst.x_high, inst.costs);
        double at_low = sp_stage_payoff(p.at_low, inst.x_low, inst.costs);
        return (1.0 - prob_low) * at_high + prob_low * at_low + inst.costs.premium;
    };
    r.payoff_a = payoff(r.contract_a, inst.k);
    r.payoff_b = payoff(r.contract_b, inst.k - inst.q);
    r.selected = (r.payoff_a >= r.payoff_b) ? SelectedContract::high_generation
                                            : SelectedContract::low_generation;

    double dphi = generation_cost(inst.pg_high, inst.costs) -
                  generation_cost(inst.pg_low, inst.costs);
    double dsat = satisfaction(inst.x_low, inst.costs) - satisfaction(inst.x_high, inst.costs);
    r.threshold_value = inst.q * (dsat - inst.costs.zeta * (inst.x_low - inst.x_high)) +
                        dphi + inst.costs.premium;
    bool threshold_picks_a = r.threshold_value > 0.0;
    r.threshold_agrees =
        threshold_picks_a == (r.selected == SelectedContract::high_generation);
    return r;
}

std::vector<QSweepRow> sweep_q(const TwoByTwoInstance& inst, std::span<const double> q_grid) {
    for (double q : q_grid)
        if (q <= 0.0 || q > 1.0 || q > inst.k)
            throw std::domain_error("every sweep q must lie in (0, min(1, k)]");
    std::vector<QSweepRow> rows;
    rows.reserve(q_grid.size());
    for (double q : q_grid) {
        TwoByTwoInstance point = inst;
        point.q = q;
        rows.push_back({q, select_contract(point)});
    }
    return rows;
}

TwoByTwoInstance two_by_two_from_scenario(const Scenario& s) {
    s.validate();
    if (s.action_count() != 2 || s.outcome_count() != 2)
        throw std::invalid_argument("expected exactly two actions and two outcomes");
    if (s.outcomes.values[0] <= 0.0)
        throw std::invalid_argument("both outcomes must be strictly positive");
    TwoByTwoInstance inst;
    inst.pg_low = s.actions.levels[0];
    inst.pg_high = s.actions.levels[1];
    inst.x_low = s.outcomes.values[0];
    inst.x_high = s.outcomes.values[1];
    inst.k = s.distribution.prob(1, 0);
    inst.q = inst.k - s.distribution.prob(0, 0);
    inst.costs = s.costs;
    inst.validate();
    return inst;
}

Scenario scenario_from_two_by_two(const TwoByTwoInstance& inst) {
    inst.validate();
    Scenario s;
    s.costs = inst.costs;
    s.actions.levels = {inst.pg_low, inst.pg_high};
    s.actions.load = inst.x_high;  // outcome band [load - max_gen, load]
    s.actions.max_generation = std::max(inst.pg_high, inst.x_high) + 1.0;
    s.outcomes.values = {inst.x_low, inst.x_high};
    s.distribution.rows = {{inst.k - inst.q, 1.0 - (inst.k - inst.q)},
                           {inst.k, 1.0 - inst.k}};
    s.validate();
    return s;
}

}  // namespace raaskit
