use alloc::string::String;

use crate::ideal::StabilityWitness;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("ideal is not stable: {0}")]
    NotStable(StabilityWitness),

    #[error("operation requires b = 2, got b = {0}")]
    RequiresTwoBlocks(u32),

    #[error("operation requires every block to have size 1")]
    RequiresUnitBlocks,

    #[error("strand count {strands} exceeds the budget of {budget}")]
    BudgetExceeded { strands: u128, budget: u64 },

    #[error("{0} is not an odd prime")]
    InvalidField(u64),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
