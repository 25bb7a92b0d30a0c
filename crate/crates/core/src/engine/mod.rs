//! Deciding rational realizability of small reduced structures.

pub mod counting;
pub mod plan;
pub mod residual;
pub(crate) mod search;
pub mod solve;

pub use counting::{count_identity_check, rich_triple_count, Infeasible};
pub use plan::{plan, ConstraintPlan, PlanError, PlanStep};
pub use residual::{certify_not_rational, Certification, NonRationalCertificate, ResidualSystem};
pub use search::Placement;
pub use solve::{solve, solve_with, SolveOptions, SolveOutcome};
