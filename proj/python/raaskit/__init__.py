"""Contract design toolkit for resilience-as-a-service markets."""

from ._core import (
    ActionDesign,
    ActionFeasibility,
    ActionSet,
    ConstraintSlacks,
    Contract,
    CostParams,
    DesignOptions,
    DesignResult,
    ImplementabilityReport,
    MonteCarloTerms,
    OracleOptions,
    OracleReport,
    OutcomeDistribution,
    OutcomeSet,
    PricePair,
    QSweepRow,
    ResilienceReport,
    Scenario,
    ScenarioParseError,
    ScenarioValidationError,
    SelectedContract,
    TwoByTwoInstance,
    TwoByTwoResult,
    UnboundedDesignError,
    VoiReport,
    average_resilience,
    constraint_slacks,
    default_price_box,
    expected_requester_payoff,
    format_scenario,
    full_information_design,
    generation_cost,
    grid_search,
    implementable_actions,
    load_scenario,
    monte_carlo_expected_terms,
    parse_scenario,
    requester_utility,
    resilience_gain,
    sample_outcomes,
    satisfaction,
    scenario_from_two_by_two,
    select_contract,
    solve_pa1a,
    solve_pa1b,
    sp_stage_payoff,
    storage_cost,
    sweep_q,
    two_by_two_from_scenario,
    two_step_design,
    unit_prices,
    value_of_information,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
