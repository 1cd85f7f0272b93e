#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace raaskit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense linear program: maximize c.h subject to A h <= b plus per-variable
// bounds. Use -kInf / +kInf for absent bounds.
struct LpProblem {
    std::vector<double> objective;          // c
    std::vector<std::vector<double>> rows;  // A
    std::vector<double> rhs;                // b
    std::vector<double> lower;              // per-variable lower bounds
    std::vector<double> upper;              // per-variable upper bounds

    std::size_t n_vars() const { return objective.size(); }
    std::size_t n_rows() const { return rows.size(); }
    void add_row(std::vector<double> coeffs, double b);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOptions {
    double feas_tol = 1e-7;
    double opt_tol = 1e-7;
    int max_iterations = 20000;
};

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> point;      // optimal h (last basic point when unbounded)
    double objective_value = 0.0;   // objective at `point`
    std::vector<double> row_duals;  // shadow price per input row when optimal
    double dual_objective = 0.0;    // certified dual bound when optimal
    std::vector<double> ray;        // improving feasible direction when unbounded
    double phase1_objective = 0.0;  // residual infeasibility, > 0 when infeasible
    double max_primal_residual = 0.0;  // standard-form |Ax-b| at the final point
    double max_dual_violation = 0.0;   // worst reduced cost over nonbasic columns
    int iterations = 0;
};

// Two-phase primal simplex with Bland's rule. Deterministic: identical
// inputs give identical outputs. Throws std::invalid_argument on dimension
// mismatches or non-finite coefficients.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace raaskit
