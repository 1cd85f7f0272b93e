#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raaskit/designer.hpp"
#include "raaskit/metrics.hpp"
#include "raaskit/oracle.hpp"
#include "raaskit/scenario_io.hpp"
#include "raaskit/two_by_two.hpp"

namespace py = pybind11;
using namespace raaskit;

PYBIND11_MODULE(_core, m) {
    m.doc() = "contract design toolkit for resilience-as-a-service markets";

    py::register_exception<ParseError>(m, "ScenarioParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ScenarioValidationError", PyExc_ValueError);
    py::register_exception<UnboundedDesignError>(m, "UnboundedDesignError", PyExc_RuntimeError);

    py::class_<CostParams>(m, "CostParams")
        .def(py::init<>())
        .def_readwrite("alpha", &CostParams::alpha)
        .def_readwrite("beta", &CostParams::beta)
        .def_readwrite("gamma", &CostParams::gamma)
        .def_readwrite("tau", &CostParams::tau)
        .def_readwrite("zeta", &CostParams::zeta)
        .def_readwrite("kappa", &CostParams::kappa)
        .def_readwrite("rho", &CostParams::rho)
        .def_readwrite("premium", &CostParams::premium);

    py::class_<ActionSet>(m, "ActionSet")
        .def(py::init<>())
        .def_readwrite("levels", &ActionSet::levels)
        .def_readwrite("load", &ActionSet::load)
        .def_readwrite("max_generation", &ActionSet::max_generation);

    py::class_<OutcomeSet>(m, "OutcomeSet")
        .def(py::init<>())
        .def_readwrite("values", &OutcomeSet::values);

    py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
        .def(py::init<>())
        .def_readwrite("rows", &OutcomeDistribution::rows);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("costs", &Scenario::costs)
        .def_readwrite("actions", &Scenario::actions)
        .def_readwrite("outcomes", &Scenario::outcomes)
        .def_readwrite("distribution", &Scenario::distribution)
        .def("validate", &Scenario::validate)
        .def("positive_outcomes", &Scenario::positive_outcomes);

    py::class_<Contract>(m, "Contract")
        .def(py::init<>())
        .def_readwrite("outcomes", &Contract::outcomes)
        .def_readwrite("prices", &Contract::prices)
        .def_readwrite("premium", &Contract::premium)
        .def("price_for", &Contract::price_for);

    py::class_<DesignOptions>(m, "DesignOptions")
        .def(py::init<>())
        .def_readwrite("nonnegative_prices", &DesignOptions::nonnegative_prices)
        .def_readwrite("expost_cap", &DesignOptions::expost_cap);

    py::class_<ConstraintSlacks>(m, "ConstraintSlacks")
        .def_readonly("ir", &ConstraintSlacks::ir)
        .def_readonly("actions", &ConstraintSlacks::actions)
        .def_readonly("ic", &ConstraintSlacks::ic);

    py::class_<ActionDesign>(m, "ActionDesign")
        .def_readonly("action", &ActionDesign::action)
        .def_readonly("implementable", &ActionDesign::implementable)
        .def_readonly("revenue", &ActionDesign::revenue)
        .def_readonly("cost", &ActionDesign::cost)
        .def_readonly("contract", &ActionDesign::contract);

    py::class_<DesignResult>(m, "DesignResult")
        .def_readonly("market_collapse", &DesignResult::market_collapse)
        .def_readonly("implemented_action", &DesignResult::implemented_action)
        .def_readonly("contract", &DesignResult::contract)
        .def_readonly("revenue", &DesignResult::revenue)
        .def_readonly("cost", &DesignResult::cost)
        .def_readonly("sp_payoff", &DesignResult::sp_payoff)
        .def_readonly("slacks", &DesignResult::slacks)
        .def_readonly("per_action", &DesignResult::per_action);

    py::class_<ActionFeasibility>(m, "ActionFeasibility")
        .def_readonly("action", &ActionFeasibility::action)
        .def_readonly("implementable", &ActionFeasibility::implementable)
        .def_readonly("witness", &ActionFeasibility::witness)
        .def_readonly("phase1_objective", &ActionFeasibility::phase1_objective);

    py::class_<ImplementabilityReport>(m, "ImplementabilityReport")
        .def_readonly("actions", &ImplementabilityReport::actions)
        .def("implementable_set", &ImplementabilityReport::implementable_set);

    py::class_<VoiReport>(m, "VoiReport")
        .def_readonly("hidden", &VoiReport::hidden)
        .def_readonly("full", &VoiReport::full)
        .def_readonly("value", &VoiReport::value)
        .def_readonly("market_collapse", &VoiReport::market_collapse);

    py::class_<ResilienceReport>(m, "ResilienceReport")
        .def_readonly("outcomes", &ResilienceReport::outcomes)
        .def_readonly("gains", &ResilienceReport::gains)
        .def_readonly("weighted_gains", &ResilienceReport::weighted_gains)
        .def_readonly("unit_prices", &ResilienceReport::unit_prices)
        .def_readonly("weighted_average", &ResilienceReport::weighted_average)
        .def_readonly("unweighted_mean_of_gains", &ResilienceReport::unweighted_mean_of_gains);

    py::class_<TwoByTwoInstance>(m, "TwoByTwoInstance")
        .def(py::init<>())
        .def_readwrite("pg_low", &TwoByTwoInstance::pg_low)
        .def_readwrite("pg_high", &TwoByTwoInstance::pg_high)
        .def_readwrite("x_low", &TwoByTwoInstance::x_low)
        .def_readwrite("x_high", &TwoByTwoInstance::x_high)
        .def_readwrite("k", &TwoByTwoInstance::k)
        .def_readwrite("q", &TwoByTwoInstance::q)
        .def_readwrite("costs", &TwoByTwoInstance::costs)
        .def("validate", &TwoByTwoInstance::validate);

    py::enum_<SelectedContract>(m, "SelectedContract")
        .value("high_generation", SelectedContract::high_generation)
        .value("low_generation", SelectedContract::low_generation);

    py::class_<PricePair>(m, "PricePair")
        .def_readonly("at_high", &PricePair::at_high)
        .def_readonly("at_low", &PricePair::at_low);

    py::class_<TwoByTwoResult>(m, "TwoByTwoResult")
        .def_readonly("contract_a", &TwoByTwoResult::contract_a)
        .def_readonly("contract_b", &TwoByTwoResult::contract_b)
        .def_readonly("payoff_a", &TwoByTwoResult::payoff_a)
        .def_readonly("payoff_b", &TwoByTwoResult::payoff_b)
        .def_readonly("selected", &TwoByTwoResult::selected)
        .def_readonly("threshold_value", &TwoByTwoResult::threshold_value)
        .def_readonly("threshold_agrees", &TwoByTwoResult::threshold_agrees);

    py::class_<QSweepRow>(m, "QSweepRow")
        .def_readonly("q", &QSweepRow::q)
        .def_readonly("result", &QSweepRow::result);

    py::class_<OracleOptions>(m, "OracleOptions")
        .def(py::init<>())
        .def_readwrite("design", &OracleOptions::design)
        .def_readwrite("feasibility_tol", &OracleOptions::feasibility_tol)
        .def_readwrite("max_points", &OracleOptions::max_points)
        .def_readwrite("max_priced_outcomes", &OracleOptions::max_priced_outcomes)
        .def_readwrite("tighten_ranges", &OracleOptions::tighten_ranges);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("best_contract", &OracleReport::best_contract)
        .def_readonly("best_objective", &OracleReport::best_objective)
        .def_readonly("solver_objective", &OracleReport::solver_objective)
        .def_readonly("gap", &OracleReport::gap)
        .def_readonly("grid_resolution", &OracleReport::grid_resolution)
        .def_readonly("feasible_count", &OracleReport::feasible_count)
        .def_readonly("evaluated_count", &OracleReport::evaluated_count)
        .def_readonly("found_feasible", &OracleReport::found_feasible)
        .def_readonly("solver_feasible", &OracleReport::solver_feasible);

    py::class_<MonteCarloTerms>(m, "MonteCarloTerms")
        .def_readonly("utility_term", &MonteCarloTerms::utility_term)
        .def_readonly("storage_term", &MonteCarloTerms::storage_term);

    m.def("parse_scenario", &parse_scenario, py::arg("text"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("format_scenario", &format_scenario, py::arg("scenario"));

    m.def("generation_cost", &generation_cost, py::arg("pg"), py::arg("costs"));
    m.def("satisfaction", &satisfaction, py::arg("x"), py::arg("costs"));
    m.def("storage_cost", &storage_cost, py::arg("x"), py::arg("costs"));
    m.def("requester_utility", &requester_utility, py::arg("price"), py::arg("x"),
          py::arg("costs"));
    m.def("sp_stage_payoff", &sp_stage_payoff, py::arg("price"), py::arg("x"),
          py::arg("costs"));
    m.def("expected_requester_payoff", &expected_requester_payoff, py::arg("scenario"),
          py::arg("contract"), py::arg("action"));

    m.def("two_step_design", &two_step_design, py::arg("scenario"),
          py::arg("options") = DesignOptions{});
    m.def("full_information_design", &full_information_design, py::arg("scenario"),
          py::arg("options") = DesignOptions{});
    m.def("implementable_actions", &implementable_actions, py::arg("scenario"),
          py::arg("options") = DesignOptions{});
    m.def("value_of_information", &value_of_information, py::arg("scenario"),
          py::arg("options") = DesignOptions{});

    m.def("resilience_gain", &resilience_gain, py::arg("contract"), py::arg("x"),
          py::arg("costs"));
    m.def("average_resilience", &average_resilience, py::arg("scenario"), py::arg("contract"),
          py::arg("implemented_action"));
    m.def("unit_prices", &unit_prices, py::arg("contract"));
    m.def("constraint_slacks", &constraint_slacks, py::arg("scenario"), py::arg("contract"),
          py::arg("implemented_action"));

    m.def("solve_pa1a", &solve_pa1a, py::arg("instance"));
    m.def("solve_pa1b", &solve_pa1b, py::arg("instance"));
    m.def("select_contract", &select_contract, py::arg("instance"));
    m.def(
        "sweep_q",
        [](const TwoByTwoInstance& inst, const std::vector<double>& grid) {
            return sweep_q(inst, grid);
        },
        py::arg("instance"), py::arg("q_grid"));
    m.def("two_by_two_from_scenario", &two_by_two_from_scenario, py::arg("scenario"));
    m.def("scenario_from_two_by_two", &scenario_from_two_by_two, py::arg("instance"));

    m.def("grid_search", &grid_search, py::arg("scenario"), py::arg("target_action"),
          py::arg("price_lo"), py::arg("price_hi"), py::arg("step"),
          py::arg("options") = OracleOptions{});
    m.def("default_price_box", &default_price_box, py::arg("scenario"));

    m.def(
        "monte_carlo_expected_terms",
        [](const std::vector<double>& samples, const Contract& contract,
           const CostParams& costs) {
            return monte_carlo_expected_terms(samples, contract, costs);
        },
        py::arg("samples"), py::arg("contract"), py::arg("costs"));
    m.def("sample_outcomes", &sample_outcomes, py::arg("scenario"), py::arg("action"),
          py::arg("n"), py::arg("seed"));
}
