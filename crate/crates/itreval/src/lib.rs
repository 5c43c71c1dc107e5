//! Evaluation of deterministic individualized treatment rules (ITRs) from
//! observational data.
//!
//! The crate distinguishes two regimes. In the *new ITR* regime no patient's
//! treatment was ever based on the rule; the average rule effect (ARE) is
//! estimable from data, and the average implementation effect (AIE) and
//! maximal implementation gain (MIG) can be explored under hypothesized
//! stochastic implementation schemes. In the *partially implemented* regime
//! the rule drove treatment for an unknown subset of patients; implementation
//! is a latent variable and the ARE/AIE estimators rest on a two-expert
//! mixture (a known deterministic rule expert and a learned logistic expert,
//! gated by a learned logistic network) fitted with an EM algorithm.
//!
//! Modules:
//! - [`data`]: dataset representation, CSV ingestion, linear rules
//! - [`glm`]: weighted logistic regression via IRLS (the inner solver)
//! - [`nuisance`]: prognostic, propensity and treatment-effect models
//! - [`schemes`]: stochastic implementation schemes for the new-ITR regime
//! - [`estimators`]: ARE/AIE/MIG point estimators in both regimes
//! - [`em`]: the mixture-of-experts EM procedure
//! - [`bootstrap`]: nonparametric percentile bootstrap over units
//! - [`sim`]: synthetic data generation and the Monte Carlo study harness

pub mod bootstrap;
pub mod data;
pub mod em;
pub mod estimators;
pub mod glm;
pub mod nuisance;
pub mod rng;
pub mod schemes;
pub mod sim;

pub use bootstrap::{bootstrap_ci, BootstrapResult};
pub use data::{ColumnSpec, CsvSchema, Dataset, LinearRule, Rule};
pub use em::{em_fit, EmFit, EmOptions};
pub use estimators::{Estimand, EstimateReport, Regime};
pub use glm::{expit, irls_fit, GlmFit};
pub use nuisance::NuisanceEstimates;
pub use schemes::SchemeSpec;
pub use sim::{ground_truth, run_study, Scenario, ScenarioConfig, SimStudyConfig};

use thiserror::Error;

/// Crate-wide error, wrapping each module's failure modes so pipelines can
/// surface the originating subsystem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("data: {0}")]
    Data(#[from] data::DataError),
    #[error("glm: {0}")]
    Glm(#[from] glm::GlmError),
    #[error("nuisance: {0}")]
    Nuisance(#[from] nuisance::NuisanceError),
    #[error("scheme: {0}")]
    Scheme(#[from] schemes::SchemeError),
    #[error("estimator: {0}")]
    Estimator(#[from] estimators::EstimatorError),
    #[error("em: {0}")]
    Em(#[from] em::EmError),
    #[error("bootstrap: {0}")]
    Bootstrap(#[from] bootstrap::BootstrapError),
    #[error("simulation: {0}")]
    Sim(#[from] sim::SimError),
}

pub type Result<T> = std::result::Result<T, Error>;
