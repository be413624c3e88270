//! Claims ledger, verification campaigns and counterexample search.

mod campaign;
mod ledger;
mod search;

pub use campaign::{
    default_lambda_grid, default_q_grid, evaluate_claim, resolve_claims, resolve_functions,
    run_campaign, sort_records, CampaignConfig, CampaignResult, CampaignSummary, ClaimSummary,
    IntervalSampler, IntervalSpec, CONFIRM_TOL,
};
pub use ledger::{
    claim_lookup, ledger_standard, BoundClaim, Hypothesis, LhsSpec, Provenance, RhsSpec,
};
pub use search::{find_counterexample, SearchOutcome};
