//! Exact linear algebra: field matrices, integer normal forms and strict
//! linear feasibility.

mod integer;
mod lp;
mod matrix;

use thiserror::Error;

pub use integer::{hnf, integer_kernel, integer_solve, snf, IntegerMatrix};
pub use lp::{strict_lp_feasible, Constraint, Relation, VARIABLE_BUDGET};
pub use matrix::{dot, rank_kernel_solve, FieldMatrix, LinearSolve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entries belong to different fields")]
    MixedFields,
    #[error("{vars} variables exceed the feasibility budget of {budget}")]
    VariableBudgetExceeded { vars: usize, budget: usize },
}
