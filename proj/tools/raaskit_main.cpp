#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raaskit/designer.hpp"
#include "raaskit/metrics.hpp"
#include "raaskit/oracle.hpp"
#include "raaskit/scenario_io.hpp"
#include "raaskit/two_by_two.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInfeasibleMarket = 4;
constexpr int kExitUnbounded = 5;

struct CommonOpts {
    std::string scenario_path;
    std::string out_path;
    bool cap = false;
    bool negative_prices = false;
    bool kilodollars = false;
    double feas_tol = 1e-7;
    double opt_tol = 1e-7;

    raaskit::DesignOptions design() const {
        raaskit::DesignOptions o;
        o.expost_cap = cap;
        o.nonnegative_prices = !negative_prices;
        o.lp.feas_tol = feas_tol;
        o.lp.opt_tol = opt_tol;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("scenario", opts.scenario_path, "scenario file")->required();
    cmd->add_option("--out", opts.out_path, "also write the output to this file");
    cmd->add_flag("--cap", opts.cap, "enable the ex-post cap H(x) <= psi(x)");
    cmd->add_flag("--negative-prices", opts.negative_prices, "allow prices below zero");
    cmd->add_flag("--kilodollars", opts.kilodollars, "print money in K$ in reports");
    cmd->add_option("--feas-tol", opts.feas_tol, "LP feasibility tolerance");
    cmd->add_option("--opt-tol", opts.opt_tol, "LP optimality tolerance");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string money(double v, const CommonOpts& opts) {
    if (opts.kilodollars) return fmt(v / 1000.0) + "K$";
    return fmt(v) + "$";
}

struct Grid {
    double lo = 0.0, hi = 0.0, step = 0.0;

    std::vector<double> points() const {
        std::vector<double> pts;
        for (int i = 0;; ++i) {
            double v = lo + i * step;
            if (v > hi + 1e-12) break;
            pts.push_back(v);
        }
        return pts;
    }
};

Grid parse_grid(const std::string& text) {
    Grid g;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step, &extra) != 3 ||
        g.step <= 0.0 || g.hi < g.lo)
        throw raaskit::ParseError("grid must be lo:hi:step with step > 0", 0);
    return g;
}

// Every command assembles its output here; --out mirrors it to a file.
int emit(const std::string& text, const CommonOpts& opts) {
    std::cout << text;
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opts.out_path << "\n";
            return kExitError;
        }
        out << text;
    }
    return kExitOk;
}

void describe_design(std::ostream& out, const raaskit::Scenario& s,
                     const raaskit::DesignResult& r, const CommonOpts& opts) {
    out << "implemented action: " << fmt(s.actions.levels[r.implemented_action]) << " MWh\n";
    out << "expected revenue B: " << money(r.revenue, opts)
        << ", delivery cost C: " << money(r.cost, opts)
        << ", provider payoff: " << money(r.sp_payoff, opts) << "\n";
    out << "contract (outcome MWh, price, unit price $/MWh, gain):\n";
    raaskit::ResilienceReport res =
        raaskit::average_resilience(s, r.contract, r.implemented_action);
    for (std::size_t i = 0; i < res.outcomes.size(); ++i) {
        out << "  " << fmt(res.outcomes[i]) << "  " << money(r.contract.prices[i], opts)
            << "  " << fmt(res.unit_prices[i]) << "  " << money(res.gains[i], opts) << "\n";
    }
    out << "average gain (distribution-weighted): " << money(res.weighted_average, opts) << "\n";
    out << "average gain (unweighted mean): " << money(res.unweighted_mean_of_gains, opts)
        << "\n";
    out << "IR slack: " << fmt(r.slacks.ir);
    for (std::size_t i = 0; i < r.slacks.ic.size(); ++i)
        out << ", IC slack vs " << fmt(s.actions.levels[r.slacks.actions[i]]) << ": "
            << fmt(r.slacks.ic[i]);
    out << "\n";
}

int cmd_design(const CommonOpts& opts, bool with_voi) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    raaskit::DesignOptions design_opts = opts.design();
    raaskit::DesignResult r = raaskit::two_step_design(s, design_opts);
    std::ostringstream out;
    raaskit::ImplementabilityReport impl = raaskit::implementable_actions(s, design_opts);
    out << "implementable actions:";
    for (std::size_t a : impl.implementable_set()) out << " " << fmt(s.actions.levels[a]);
    if (impl.implementable_set().empty()) out << " none";
    out << "\n";
    if (r.market_collapse) {
        out << "market collapse: no action is implementable\n";
        emit(out.str(), opts);
        return kExitInfeasibleMarket;
    }
    for (const auto& per : r.per_action) {
        if (!per.implementable) continue;
        out << "action " << fmt(s.actions.levels[per.action]) << ": B = "
            << money(per.revenue, opts) << ", C = " << money(per.cost, opts)
            << ", B - C = " << money(per.revenue - per.cost, opts) << "\n";
    }
    describe_design(out, s, r, opts);
    if (with_voi) {
        raaskit::VoiReport voi = raaskit::value_of_information(s, design_opts);
        out << "full-information payoff: " << money(voi.full.sp_payoff, opts)
            << ", value of information: " << money(voi.value, opts) << "\n";
    }
    return emit(out.str(), opts);
}

int cmd_design_2x2(const CommonOpts& opts) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    raaskit::TwoByTwoInstance inst = raaskit::two_by_two_from_scenario(s);
    raaskit::TwoByTwoResult r = raaskit::select_contract(inst);
    std::ostringstream out;
    out << "contract a (implements " << fmt(inst.pg_high) << " MWh): H(x_high) = "
        << money(r.contract_a.at_high, opts) << ", H(x_low) = "
        << money(r.contract_a.at_low, opts) << ", payoff = " << money(r.payoff_a, opts)
        << "\n";
    out << "contract b (implements " << fmt(inst.pg_low) << " MWh): H(x_high) = "
        << money(r.contract_b.at_high, opts) << ", H(x_low) = "
        << money(r.contract_b.at_low, opts) << ", payoff = " << money(r.payoff_b, opts)
        << "\n";
    out << "selected: " << (r.selected == raaskit::SelectedContract::high_generation ? "a" : "b")
        << ", threshold value: " << money(r.threshold_value, opts) << "\n";
    if (!r.threshold_agrees)
        out << "note: threshold sign disagrees with the direct payoff comparison\n";
    const raaskit::PricePair& sel = r.selected == raaskit::SelectedContract::high_generation
                                        ? r.contract_a
                                        : r.contract_b;
    raaskit::Contract contract{{inst.x_low, inst.x_high}, {sel.at_low, sel.at_high},
                               inst.costs.premium};
    out << "gain at x_low: "
        << money(raaskit::resilience_gain(contract, inst.x_low, inst.costs), opts)
        << ", gain at x_high: "
        << money(raaskit::resilience_gain(contract, inst.x_high, inst.costs), opts) << "\n";
    return emit(out.str(), opts);
}

int cmd_sweep_q(const CommonOpts& opts, const std::string& grid_text) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    raaskit::TwoByTwoInstance inst = raaskit::two_by_two_from_scenario(s);
    Grid grid = parse_grid(grid_text);
    std::vector<double> qs = grid.points();
    std::vector<raaskit::QSweepRow> rows = raaskit::sweep_q(inst, qs);
    std::ostringstream out;
    out << "q,H_xH,H_xL,selected,payoff_a,payoff_b\n";
    for (const auto& row : rows) {
        bool a = row.result.selected == raaskit::SelectedContract::high_generation;
        const raaskit::PricePair& sel = a ? row.result.contract_a : row.result.contract_b;
        out << fmt(row.q) << "," << fmt(sel.at_high) << "," << fmt(sel.at_low) << ","
            << (a ? "a" : "b") << "," << fmt(row.result.payoff_a) << ","
            << fmt(row.result.payoff_b) << "\n";
    }
    return emit(out.str(), opts);
}

int cmd_sweep_T(const CommonOpts& opts, const std::string& grid_text) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    Grid grid = parse_grid(grid_text);
    std::ostringstream out;
    out << "T,implemented,B,C,payoff\n";
    for (double t : grid.points()) {
        raaskit::Scenario variant = s;
        variant.costs.premium = t;
        raaskit::DesignResult r = raaskit::two_step_design(variant, opts.design());
        if (r.market_collapse) {
            out << fmt(t) << ",collapse,NA,NA,NA\n";
            continue;
        }
        out << fmt(t) << "," << fmt(s.actions.levels[r.implemented_action]) << ","
            << fmt(r.revenue) << "," << fmt(r.cost) << "," << fmt(r.sp_payoff) << "\n";
    }
    return emit(out.str(), opts);
}

int cmd_sweep_kappa(const CommonOpts& opts, const std::string& grid_text) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    Grid grid = parse_grid(grid_text);
    std::ostringstream out;
    out << "kappa,n_implementable,implemented,B,C,payoff\n";
    for (double kappa : grid.points()) {
        raaskit::Scenario variant = s;
        variant.costs.kappa = kappa;
        raaskit::DesignOptions design_opts = opts.design();
        std::size_t n_impl =
            raaskit::implementable_actions(variant, design_opts).implementable_set().size();
        raaskit::DesignResult r = raaskit::two_step_design(variant, design_opts);
        if (r.market_collapse) {
            out << fmt(kappa) << ",0,collapse,NA,NA,NA\n";
            continue;
        }
        out << fmt(kappa) << "," << n_impl << ","
            << fmt(s.actions.levels[r.implemented_action]) << "," << fmt(r.revenue) << ","
            << fmt(r.cost) << "," << fmt(r.sp_payoff) << "\n";
    }
    return emit(out.str(), opts);
}

int cmd_voi(const CommonOpts& opts) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    raaskit::VoiReport voi = raaskit::value_of_information(s, opts.design());
    std::ostringstream out;
    if (voi.market_collapse) {
        out << "market collapse: no action is implementable\n";
        emit(out.str(), opts);
        return kExitInfeasibleMarket;
    }
    out << "hidden-action payoff: " << money(voi.hidden.sp_payoff, opts) << " (implements "
        << fmt(s.actions.levels[voi.hidden.implemented_action]) << " MWh)\n";
    out << "full-information payoff: " << money(voi.full.sp_payoff, opts) << " (implements "
        << fmt(s.actions.levels[voi.full.implemented_action]) << " MWh)\n";
    out << "value of information: " << money(voi.value, opts) << "\n";
    return emit(out.str(), opts);
}

int cmd_oracle_check(const CommonOpts& opts, int target_index, double lo, double hi,
                     double step, std::int64_t max_points, bool have_box) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    raaskit::OracleOptions oracle_opts;
    oracle_opts.design = opts.design();
    oracle_opts.max_points = max_points;
    if (!have_box) {
        auto box = raaskit::default_price_box(s);
        lo = box.first;
        hi = box.second;
        if (oracle_opts.design.nonnegative_prices) lo = 0.0;
    }
    std::ostringstream out;
    std::vector<std::size_t> targets;
    if (target_index >= 0) {
        targets.push_back(static_cast<std::size_t>(target_index));
    } else {
        for (std::size_t a = 0; a < s.action_count(); ++a) targets.push_back(a);
    }
    for (std::size_t a : targets) {
        raaskit::OracleReport r = raaskit::grid_search(s, a, lo, hi, step, oracle_opts);
        out << "target " << fmt(s.actions.levels[a]) << " MWh: ";
        if (!r.found_feasible) {
            out << "no feasible grid point (evaluated " << r.evaluated_count << ")\n";
            continue;
        }
        out << "oracle best " << money(r.best_objective, opts) << ", solver "
            << money(r.solver_objective, opts) << ", gap " << fmt(r.gap) << ", feasible "
            << r.feasible_count << " of " << r.evaluated_count << "\n";
        out << "  best prices:";
        for (double p : r.best_contract.prices) out << " " << fmt(p);
        out << "\n";
    }
    return emit(out.str(), opts);
}

int cmd_montecarlo(const CommonOpts& opts, std::size_t samples, std::uint64_t seed) {
    raaskit::Scenario s = raaskit::load_scenario(opts.scenario_path);
    raaskit::DesignResult r = raaskit::two_step_design(s, opts.design());
    std::ostringstream out;
    if (r.market_collapse) {
        out << "market collapse: no action is implementable\n";
        emit(out.str(), opts);
        return kExitInfeasibleMarket;
    }
    std::vector<double> draws =
        raaskit::sample_outcomes(s, r.implemented_action, samples, seed);
    raaskit::MonteCarloTerms est =
        raaskit::monte_carlo_expected_terms(draws, r.contract, s.costs);
    double exact_utility = 0.0;
    for (std::size_t i : s.positive_outcomes()) {
        double x = s.outcomes.values[i];
        exact_utility += raaskit::requester_utility(r.contract.price_for(x), x, s.costs) *
                         s.distribution.prob(r.implemented_action, i);
    }
    double exact_storage = raaskit::expected_storage_cost(s, r.implemented_action);
    out << "samples: " << samples << ", seed: " << seed << "\n";
    out << "utility term: estimate " << money(est.utility_term, opts) << ", exact "
        << money(exact_utility, opts) << "\n";
    out << "storage term: estimate " << money(est.storage_term, opts) << ", exact "
        << money(exact_storage, opts) << "\n";
    return emit(out.str(), opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contract design toolkit for resilience-as-a-service markets"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool with_voi = false;
    std::string grid_q = "0.2:0.8:0.05";
    std::string grid_T = "0:6000:1000";
    std::string grid_kappa = "50:250:50";
    int target_index = -1;
    double lo = 0.0, hi = 0.0, step = 50.0;
    std::int64_t max_points = 100000000;
    std::size_t samples = 100000;
    std::uint64_t seed = 42;

    CLI::App* design = app.add_subcommand("design", "two-step contract design");
    add_common(design, opts);
    design->add_flag("--voi", with_voi, "also report the value of information");

    CLI::App* design2 = app.add_subcommand("design-2x2", "closed-form two-by-two design");
    add_common(design2, opts);

    CLI::App* sweepq = app.add_subcommand("sweep-q", "closed-form sweep over q (CSV)");
    add_common(sweepq, opts);
    sweepq->add_option("--grid", grid_q, "q grid lo:hi:step");

    CLI::App* sweept = app.add_subcommand("sweep-T", "design sweep over the premium (CSV)");
    add_common(sweept, opts);
    sweept->add_option("--grid", grid_T, "premium grid lo:hi:step");

    CLI::App* sweepk = app.add_subcommand("sweep-kappa", "design sweep over kappa (CSV)");
    add_common(sweepk, opts);
    sweepk->add_option("--grid", grid_kappa, "kappa grid lo:hi:step");

    CLI::App* voi = app.add_subcommand("voi", "value of information report");
    add_common(voi, opts);

    CLI::App* oracle = app.add_subcommand("oracle-check", "brute-force verification");
    add_common(oracle, opts);
    oracle->add_option("--target-index", target_index, "action index (default: all)");
    CLI::Option* lo_opt = oracle->add_option("--lo", lo, "price grid lower edge");
    CLI::Option* hi_opt = oracle->add_option("--hi", hi, "price grid upper edge");
    lo_opt->needs(hi_opt);
    hi_opt->needs(lo_opt);
    oracle->add_option("--step", step, "price grid step");
    oracle->add_option("--max-points", max_points, "grid size guard");

    CLI::App* mc = app.add_subcommand("montecarlo", "estimator vs exact expectation");
    add_common(mc, opts);
    mc->add_option("--samples", samples, "number of draws");
    mc->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (design->parsed()) return cmd_design(opts, with_voi);
        if (design2->parsed()) return cmd_design_2x2(opts);
        if (sweepq->parsed()) return cmd_sweep_q(opts, grid_q);
        if (sweept->parsed()) return cmd_sweep_T(opts, grid_T);
        if (sweepk->parsed()) return cmd_sweep_kappa(opts, grid_kappa);
        if (voi->parsed()) return cmd_voi(opts);
        if (oracle->parsed())
            return cmd_oracle_check(opts, target_index, lo, hi, step, max_points,
                                    !lo_opt->empty());
        if (mc->parsed()) return cmd_montecarlo(opts, samples, seed);
    } catch (const raaskit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const raaskit::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const raaskit::UnboundedDesignError& e) {
        std::cerr << "unbounded: " << e.what() << "\n";
        return kExitUnbounded;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::length_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
