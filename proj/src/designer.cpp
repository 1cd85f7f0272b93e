#include "raaskit/designer.hpp"

#include <stdexcept>

namespace raaskit {

namespace {

// Expected satisfaction minus storage and generation cost; the pieces of
// the IR/IC right-hand sides that do not involve prices.
double action_net(const Scenario& s, std::size_t action) {
    return expected_satisfaction(s, action) - expected_storage_cost(s, action) -
           generation_cost(s.actions.levels[action], s.costs);
}

Contract contract_from_point(const Scenario& s, const std::vector<double>& point) {
    Contract c;
    for (std::size_t i : s.positive_outcomes()) c.outcomes.push_back(s.outcomes.values[i]);
    c.prices = point;
    c.premium = s.costs.premium;
    return c;
}

// Shared: solve every per-action LP and fold the results.
DesignResult run_design(const Scenario& s, const DesignOptions& options, bool include_ic) {
    s.validate();
    DesignResult result;
    bool have_winner = false;
    double best_margin = 0.0;
    for (std::size_t a = 0; a < s.action_count(); ++a) {
        LpProblem lp = build_design_lp(s, a, options, include_ic);
        LpSolution sol = solve_lp(lp, options.lp);
        ActionDesign design;
        design.action = a;
        design.cost = delivery_cost(s, a);
        if (sol.status == LpStatus::unbounded)
            throw UnboundedDesignError("design problem is unbounded for action " +
                                       std::to_string(s.actions.levels[a]));
        if (sol.status == LpStatus::optimal) {
            design.implementable = true;
            design.revenue = sol.objective_value;
            design.contract = contract_from_point(s, sol.point);
            double margin = design.revenue - design.cost;
            if (!have_winner || margin > best_margin) {
                have_winner = true;
                best_margin = margin;
                result.implemented_action = a;
            }
        }
        result.per_action.push_back(std::move(design));
    }
    if (!have_winner) {
        result.market_collapse = true;
        return result;
    }
    const ActionDesign& winner = result.per_action[result.implemented_action];
    result.contract = winner.contract;
    result.revenue = winner.revenue;
    result.cost = winner.cost;
    result.sp_payoff = winner.revenue - winner.cost + s.costs.premium;
    result.slacks = constraint_slacks(s, result.contract, result.implemented_action);
    return result;
}

}  // namespace

LpProblem build_design_lp(const Scenario& s, std::size_t target_action,
                          const DesignOptions& options, bool include_ic) {
    if (s.positive_outcomes().empty())
        throw std::domain_error("scenario has no positive outcomes to price");
    s.validate();
    if (target_action >= s.action_count())
        throw std::invalid_argument("target action index out of range");

    std::vector<std::size_t> pos = s.positive_outcomes();
    LpProblem lp;
    for (std::size_t i : pos) {
        double x = s.outcomes.values[i];
        lp.objective.push_back(s.distribution.prob(target_action, i));
        lp.lower.push_back(options.nonnegative_prices ? 0.0 : -kInf);
        lp.upper.push_back(options.expost_cap ? satisfaction(x, s.costs) : kInf);
    }

    double target_net = action_net(s, target_action);

    // IR: expected revenue may not exceed what participation leaves on the table.
    std::vector<double> ir_row;
    for (std::size_t i : pos) ir_row.push_back(s.distribution.prob(target_action, i));
    lp.add_row(std::move(ir_row), target_net - s.costs.premium);

    // IC per alternative: deviating must not raise the requester's payoff.
    if (include_ic) {
        for (std::size_t a = 0; a < s.action_count(); ++a) {
            if (a == target_action) continue;
            std::vector<double> row;
            for (std::size_t i : pos)
                row.push_back(s.distribution.prob(target_action, i) -
                              s.distribution.prob(a, i));
            lp.add_row(std::move(row), target_net - action_net(s, a));
        }
    }
    return lp;
}

std::vector<std::size_t> ImplementabilityReport::implementable_set() const {
    std::vector<std::size_t> set;
    for (const auto& a : actions)
        if (a.implementable) set.push_back(a.action);
    return set;
}

ImplementabilityReport implementable_actions(const Scenario& s, const DesignOptions& options) {
    s.validate();
    ImplementabilityReport report;
    for (std::size_t a = 0; a < s.action_count(); ++a) {
        LpProblem lp = build_design_lp(s, a, options);
        LpSolution sol = solve_lp(lp, options.lp);
        ActionFeasibility feas;
        feas.action = a;
        if (sol.status == LpStatus::infeasible) {
            feas.phase1_objective = sol.phase1_objective;
        } else {
            feas.implementable = true;
            feas.witness = contract_from_point(s, sol.point);
        }
        report.actions.push_back(std::move(feas));
    }
    return report;
}

DesignResult two_step_design(const Scenario& s, const DesignOptions& options) {
    return run_design(s, options, true);
}

DesignResult full_information_design(const Scenario& s, const DesignOptions& options) {
    return run_design(s, options, false);
}

VoiReport value_of_information(const Scenario& s, const DesignOptions& options) {
    VoiReport report;
    report.hidden = two_step_design(s, options);
    report.full = full_information_design(s, options);
    if (report.hidden.market_collapse || report.full.market_collapse) {
        report.market_collapse = true;
        return report;
    }
    report.value = report.full.sp_payoff - report.hidden.sp_payoff;
    return report;
}

}  // namespace raaskit
