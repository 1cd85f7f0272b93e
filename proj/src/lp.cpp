#include "raaskit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace raaskit {

namespace {

constexpr double kPivotEps = 1e-11;  // smallest usable pivot magnitude

// How one user variable maps into the nonnegative transformed space.
struct VarMap {
    enum Kind { shifted, flipped, split } kind = shifted;
    std::size_t col = 0;      // primary transformed column
    std::size_t neg_col = 0;  // second column for split variables
    double shift = 0.0;       // h = shift + x' (shifted) or h = shift - x' (flipped)
};

void validate_problem(const LpProblem& p) {
    std::size_t n = p.n_vars();
    if (p.rows.size() != p.rhs.size())
        throw std::invalid_argument("row and rhs counts differ");
    if (p.lower.size() != n || p.upper.size() != n)
        throw std::invalid_argument("bound vectors must match variable count");
    for (double c : p.objective)
        if (!std::isfinite(c)) throw std::invalid_argument("objective has a non-finite entry");
    for (const auto& row : p.rows) {
        if (row.size() != n) throw std::invalid_argument("row width must match variable count");
        for (double a : row)
            if (!std::isfinite(a)) throw std::invalid_argument("matrix has a non-finite entry");
    }
    for (double b : p.rhs)
        if (!std::isfinite(b)) throw std::invalid_argument("rhs has a non-finite entry");
    for (std::size_t j = 0; j < n; ++j)
        if (std::isnan(p.lower[j]) || std::isnan(p.upper[j]))
            throw std::invalid_argument("bounds must not be NaN");
}

}  // namespace

void LpProblem::add_row(std::vector<double> coeffs, double b) {
    rows.push_back(std::move(coeffs));
    rhs.push_back(b);
}

LpSolution solve_lp(const LpProblem& problem, const LpOptions& options) {
    validate_problem(problem);
    const std::size_t n_user = problem.n_vars();
    const std::size_t m_user = problem.n_rows();

    LpSolution sol;

    // Contradictory bounds are an infeasible problem, not a malformed one.
    for (std::size_t j = 0; j < n_user; ++j) {
        if (problem.lower[j] > problem.upper[j]) {
            sol.status = LpStatus::infeasible;
            sol.phase1_objective = problem.lower[j] - problem.upper[j];
            return sol;
        }
    }

    // Map every variable onto x' >= 0. Finite lower bounds shift, upper-only
    // bounds flip, free variables split into a positive and a negative part.
    std::vector<VarMap> vmap(n_user);
    std::size_t n_struct = 0;
    for (std::size_t j = 0; j < n_user; ++j) {
        double lo = problem.lower[j], up = problem.upper[j];
        if (lo > -kInf) {
            vmap[j] = {VarMap::shifted, n_struct++, 0, lo};
        } else if (up < kInf) {
            vmap[j] = {VarMap::flipped, n_struct++, 0, up};
        } else {
            vmap[j].kind = VarMap::split;
            vmap[j].col = n_struct++;
            vmap[j].neg_col = n_struct++;
        }
    }

    // Transformed rows: the user rows first, then one row per finite upper
    // bound of a shifted variable (x' <= up - lo).
    std::vector<std::vector<double>> arows;
    std::vector<double> brhs;
    for (std::size_t i = 0; i < m_user; ++i) {
        std::vector<double> out(n_struct, 0.0);
        double shift_correction = 0.0;
        for (std::size_t j = 0; j < n_user; ++j) {
            double a = problem.rows[i][j];
            if (a == 0.0) continue;
            switch (vmap[j].kind) {
                case VarMap::shifted:
                    out[vmap[j].col] += a;
                    shift_correction += a * vmap[j].shift;
                    break;
                case VarMap::flipped:
                    out[vmap[j].col] -= a;
                    shift_correction += a * vmap[j].shift;
                    break;
                case VarMap::split:
                    out[vmap[j].col] += a;
                    out[vmap[j].neg_col] -= a;
                    break;
            }
        }
        arows.push_back(std::move(out));
        brhs.push_back(problem.rhs[i] - shift_correction);
    }
    for (std::size_t j = 0; j < n_user; ++j) {
        if (vmap[j].kind == VarMap::shifted && problem.upper[j] < kInf) {
            std::vector<double> row(n_struct, 0.0);
            row[vmap[j].col] = 1.0;
            arows.push_back(std::move(row));
            brhs.push_back(problem.upper[j] - vmap[j].shift);
        }
    }
    const std::size_t m = arows.size();

    // Transformed objective plus the constant it picks up from the shifts.
    std::vector<double> cost(n_struct, 0.0);
    double cost_constant = 0.0;
    for (std::size_t j = 0; j < n_user; ++j) {
        double c = problem.objective[j];
        if (c == 0.0) continue;
        switch (vmap[j].kind) {
            case VarMap::shifted:
                cost[vmap[j].col] += c;
                cost_constant += c * vmap[j].shift;
                break;
            case VarMap::flipped:
                cost[vmap[j].col] -= c;
                cost_constant += c * vmap[j].shift;
                break;
            case VarMap::split:
                cost[vmap[j].col] += c;
                cost[vmap[j].neg_col] -= c;
                break;
        }
    }

    // Standard form with slacks: A x' + s = b. Rows with negative rhs are
    // negated in place (slack coefficient -1) and get an artificial variable.
    std::vector<double> row_sign(m, 1.0);
    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (brhs[i] < 0.0) {
            row_sign[i] = -1.0;
            for (double& a : arows[i]) a = -a;
            brhs[i] = -brhs[i];
            art_rows.push_back(i);
        }
    }
    const std::size_t slack_start = n_struct;
    const std::size_t art_start = slack_start + m;
    const std::size_t n_cols = art_start + art_rows.size();

    // Dense tableau: constraint body plus rhs column, and two objective rows
    // (phase 1 and phase 2) carried through every pivot. Each z row stores
    // reduced costs, with the negated objective value in the rhs column.
    std::vector<std::vector<double>> tab(m, std::vector<double>(n_cols + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n_struct; ++j) tab[i][j] = arows[i][j];
        tab[i][slack_start + i] = row_sign[i];
        tab[i][n_cols] = brhs[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = slack_start + i;
    for (std::size_t a = 0; a < art_rows.size(); ++a) {
        tab[art_rows[a]][art_start + a] = 1.0;
        basis[art_rows[a]] = art_start + a;
    }

    std::vector<double> z1(n_cols + 1, 0.0);  // phase 1: maximize -(sum of artificials)
    std::vector<double> z2(n_cols + 1, 0.0);  // phase 2: maximize transformed cost
    for (std::size_t a = 0; a < art_rows.size(); ++a) z1[art_start + a] = -1.0;
    for (std::size_t i : art_rows)
        for (std::size_t j = 0; j <= n_cols; ++j) z1[j] += tab[i][j];
    for (std::size_t j = 0; j < n_struct; ++j) z2[j] = cost[j];

    auto pivot = [&](std::size_t r, std::size_t col) {
        double p = tab[r][col];
        for (std::size_t j = 0; j <= n_cols; ++j) tab[r][j] /= p;
        tab[r][col] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            double f = tab[i][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_cols; ++j) tab[i][j] -= f * tab[r][j];
            tab[i][col] = 0.0;
        }
        for (auto* z : {&z1, &z2}) {
            double f = (*z)[col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_cols; ++j) (*z)[j] -= f * tab[r][j];
            (*z)[col] = 0.0;
        }
        basis[r] = col;
    };

    // Bland's rule: enter the lowest-index improving column, leave by the
    // minimum ratio with ties broken toward the lowest basis index. Returns
    // 0 when optimal for the phase, or 1 + entering column when unbounded.
    auto simplex = [&](std::vector<double>& z, std::size_t col_limit) -> std::size_t {
        while (true) {
            std::size_t enter = n_cols;
            for (std::size_t j = 0; j < col_limit; ++j) {
                if (z[j] > options.opt_tol) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_cols) return 0;
            std::size_t leave = m;
            double best_ratio = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                double a = tab[i][enter];
                if (a <= kPivotEps) continue;
                double ratio = tab[i][n_cols] / a;
                if (leave == m || ratio < best_ratio - 1e-12 ||
                    (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return enter + 1;
            pivot(leave, enter);
            if (++sol.iterations > options.max_iterations)
                throw std::runtime_error("simplex iteration limit exceeded");
        }
    };

    auto current_point = [&]() {
        std::vector<double> xprime(n_struct, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n_struct) xprime[basis[i]] = tab[i][n_cols];
        std::vector<double> h(n_user, 0.0);
        for (std::size_t j = 0; j < n_user; ++j) {
            switch (vmap[j].kind) {
                case VarMap::shifted: h[j] = vmap[j].shift + xprime[vmap[j].col]; break;
                case VarMap::flipped: h[j] = vmap[j].shift - xprime[vmap[j].col]; break;
                case VarMap::split: h[j] = xprime[vmap[j].col] - xprime[vmap[j].neg_col]; break;
            }
        }
        return h;
    };
    auto user_objective = [&](const std::vector<double>& h) {
        double v = 0.0;
        for (std::size_t j = 0; j < n_user; ++j) v += problem.objective[j] * h[j];
        return v;
    };

    // Phase 1.
    if (!art_rows.empty()) {
        simplex(z1, n_cols);
        double phase1_value = -z1[n_cols];  // -(sum of artificials) at its max
        if (phase1_value < -options.feas_tol) {
            sol.status = LpStatus::infeasible;
            sol.phase1_objective = -phase1_value;
            return sol;
        }
        // Drive remaining basic artificials out through degenerate pivots.
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < art_start) continue;
            std::size_t j = 0;
            for (; j < art_start; ++j)
                if (std::abs(tab[i][j]) > 1e-9) break;
            if (j < art_start) pivot(i, j);
            // otherwise the row is redundant; its artificial stays basic at zero
        }
    }

    // Phase 2 (artificial columns are never allowed back in).
    std::size_t grow = simplex(z2, art_start);
    if (grow != 0) {
        std::size_t enter = grow - 1;
        sol.status = LpStatus::unbounded;
        sol.point = current_point();
        sol.objective_value = user_objective(sol.point);
        std::vector<double> dprime(n_struct, 0.0);
        if (enter < n_struct) dprime[enter] = 1.0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n_struct) dprime[basis[i]] = -tab[i][enter];
        sol.ray.assign(n_user, 0.0);
        for (std::size_t j = 0; j < n_user; ++j) {
            switch (vmap[j].kind) {
                case VarMap::shifted: sol.ray[j] = dprime[vmap[j].col]; break;
                case VarMap::flipped: sol.ray[j] = -dprime[vmap[j].col]; break;
                case VarMap::split:
                    sol.ray[j] = dprime[vmap[j].col] - dprime[vmap[j].neg_col];
                    break;
            }
        }
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.point = current_point();
    sol.objective_value = user_objective(sol.point);

    // Duals: the reduced cost of row i's slack is -sign_i * y_i, so the
    // shadow price of the user's b_i is -z2[slack_i] under either sign.
    sol.row_duals.assign(m_user, 0.0);
    for (std::size_t i = 0; i < m_user; ++i) sol.row_duals[i] = -z2[slack_start + i];
    double dual_val = cost_constant;
    for (std::size_t i = 0; i < m; ++i) {
        double y = -z2[slack_start + i] * row_sign[i];  // equality-system dual
        dual_val += y * brhs[i];
    }
    sol.dual_objective = dual_val;

    // Certificate numbers, recomputed against the pristine stored system.
    std::vector<double> xfull(n_cols, 0.0);
    for (std::size_t i = 0; i < m; ++i) xfull[basis[i]] = tab[i][n_cols];
    for (std::size_t i = 0; i < m; ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n_struct; ++j) lhs += arows[i][j] * xfull[j];
        lhs += row_sign[i] * xfull[slack_start + i];
        for (std::size_t a = 0; a < art_rows.size(); ++a)
            if (art_rows[a] == i) lhs += xfull[art_start + a];
        sol.max_primal_residual =
            std::max(sol.max_primal_residual, std::abs(lhs - brhs[i]));
    }
    for (std::size_t j = 0; j < art_start; ++j)
        sol.max_dual_violation = std::max(sol.max_dual_violation, z2[j]);

    return sol;
}

}  // namespace raaskit
