#include "raaskit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "raaskit/lp.hpp"

namespace raaskit {

std::pair<double, double> default_price_box(const Scenario& s) {
    auto pos = s.positive_outcomes();
    if (pos.empty()) throw std::domain_error("scenario has no positive outcomes to price");
    double top = satisfaction(s.outcomes.values[pos.back()], s.costs);
    return {-2.0 * top, top};
}

OracleReport grid_search(const Scenario& s, std::size_t target_action,
                         double price_lo, double price_hi, double step,
                         const OracleOptions& options) {
    s.validate();
    if (target_action >= s.action_count())
        throw std::invalid_argument("target action index out of range");
    if (!(price_lo < price_hi)) throw std::invalid_argument("price_lo must be below price_hi");
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");

    const std::vector<std::size_t> pos = s.positive_outcomes();
    const std::size_t n = pos.size();
    if (n > options.max_priced_outcomes)
        throw std::invalid_argument("instance has more priced outcomes than the oracle guard allows");
    const std::size_t n_actions = s.action_count();

    // Constraint rows assembled by direct arithmetic (deliberately not via
    // the LP builder): IR is sum f_t H <= net_t - T, each IC is
    // sum (f_t - f_a) H <= net_t - net_a.
    std::vector<double> net(n_actions);
    for (std::size_t a = 0; a < n_actions; ++a)
        net[a] = expected_satisfaction(s, a) - expected_storage_cost(s, a) -
                 generation_cost(s.actions.levels[a], s.costs);
    std::vector<std::vector<double>> row_coeffs;
    std::vector<double> row_rhs;
    {
        std::vector<double> ir(n);
        for (std::size_t i = 0; i < n; ++i) ir[i] = s.distribution.prob(target_action, pos[i]);
        row_coeffs.push_back(std::move(ir));
        row_rhs.push_back(net[target_action] - s.costs.premium);
        for (std::size_t a = 0; a < n_actions; ++a) {
            if (a == target_action) continue;
            std::vector<double> ic(n);
            for (std::size_t i = 0; i < n; ++i)
                ic[i] = s.distribution.prob(target_action, pos[i]) -
                        s.distribution.prob(a, pos[i]);
            row_coeffs.push_back(std::move(ic));
            row_rhs.push_back(net[target_action] - net[a]);
        }
    }

    // Per-variable continuous ranges: the search box intersected with the
    // active bound convention.
    std::vector<double> lo_i(n, price_lo), hi_i(n, price_hi);
    for (std::size_t i = 0; i < n; ++i) {
        if (options.design.nonnegative_prices) lo_i[i] = std::max(lo_i[i], 0.0);
        if (options.design.expost_cap)
            hi_i[i] = std::min(hi_i[i], satisfaction(s.outcomes.values[pos[i]], s.costs));
    }

    // One interval-propagation pass. Each row bounds one variable using the
    // others' interval extremes; relaxing by the feasibility tolerance means
    // no tolerance-feasible point is ever discarded.
    if (options.tighten_ranges) {
        for (std::size_t r = 0; r < row_coeffs.size(); ++r) {
            for (std::size_t i = 0; i < n; ++i) {
                double a = row_coeffs[r][i];
                if (a == 0.0) continue;
                double rest_min = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    double c = row_coeffs[r][j];
                    rest_min += c >= 0.0 ? c * lo_i[j] : c * hi_i[j];
                }
                double bound = (row_rhs[r] + options.feasibility_tol - rest_min) / a;
                if (a > 0.0)
                    hi_i[i] = std::min(hi_i[i], bound);
                else
                    lo_i[i] = std::max(lo_i[i], bound);
            }
        }
    }

    // Lattice anchored at the original price_lo so tightening never shifts
    // the grid points themselves.
    std::vector<std::int64_t> k_lo(n), k_hi(n);
    bool empty_range = false;
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        k_lo[i] = static_cast<std::int64_t>(std::ceil((lo_i[i] - price_lo) / step - 1e-9));
        k_hi[i] = static_cast<std::int64_t>(std::floor((hi_i[i] - price_lo) / step + 1e-9));
        if (k_lo[i] < 0) k_lo[i] = 0;
        if (k_lo[i] > k_hi[i]) {
            empty_range = true;
            break;
        }
        std::int64_t count = k_hi[i] - k_lo[i] + 1;
        if (total > options.max_points / count)
            throw std::length_error("price grid exceeds the point guard");
        total *= count;
    }

    OracleReport report;
    report.grid_resolution = step;

    // Solver answer for the same instance, for the gap line.
    {
        LpProblem lp = build_design_lp(s, target_action, options.design);
        LpSolution sol = solve_lp(lp, options.design.lp);
        if (sol.status == LpStatus::optimal) {
            report.solver_feasible = true;
            report.solver_objective = sol.objective_value;
        }
    }

    if (!empty_range) {
        // Depth-first odometer with running per-action revenue sums.
        std::vector<std::int64_t> idx(n);
        std::vector<std::vector<double>> partial(n + 1, std::vector<double>(n_actions, 0.0));
        std::vector<double> best(n, 0.0), current(n, 0.0);
        const std::size_t target = target_action;
        double best_objective = 0.0;

        std::size_t depth = 0;
        idx[0] = k_lo[0];
        while (true) {
            if (idx[depth] > k_hi[depth]) {
                if (depth == 0) break;
                --depth;
                ++idx[depth];
                continue;
            }
            double price = price_lo + static_cast<double>(idx[depth]) * step;
            current[depth] = price;
            for (std::size_t a = 0; a < n_actions; ++a)
                partial[depth + 1][a] =
                    partial[depth][a] + s.distribution.prob(a, pos[depth]) * price;
            if (depth + 1 < n) {
                ++depth;
                idx[depth] = k_lo[depth];
                continue;
            }
            ++report.evaluated_count;
            const std::vector<double>& sums = partial[n];
            bool ok = sums[target] <= row_rhs[0] + options.feasibility_tol;
            if (ok) {
                std::size_t r = 1;
                for (std::size_t a = 0; a < n_actions && ok; ++a) {
                    if (a == target) continue;
                    ok = sums[target] - sums[a] <= row_rhs[r] + options.feasibility_tol;
                    ++r;
                }
            }
            if (ok) {
                ++report.feasible_count;
                if (!report.found_feasible || sums[target] > best_objective) {
                    report.found_feasible = true;
                    best_objective = sums[target];
                    best = current;
                }
            }
            ++idx[depth];
        }
        if (report.found_feasible) {
            report.best_objective = best_objective;
            for (std::size_t i = 0; i < n; ++i)
                report.best_contract.outcomes.push_back(s.outcomes.values[pos[i]]);
            report.best_contract.prices = best;
            report.best_contract.premium = s.costs.premium;
        }
    }
    report.gap = report.solver_objective - report.best_objective;
    return report;
}

}  // namespace raaskit
