//! The interpretation of System F in the cubical category of finite
//! relations, tabulated over a bounded universe of cells.
//!
//! Types become cubical functors `|Rel|ⁿ → Rel` (interned as [`FId`]s and
//! evaluated lazily with memoization); terms become cubical natural
//! transformations given by their 0-dimensional components. Quantifiers are
//! computed as sets of uniform families.

mod forall;
pub mod laws;
mod model;
mod terms;

use alloc::string::String;

use crate::relcube::RelError;
use crate::syntax::TypeError;

pub use model::{CellId, Config, FId, FNode, Families, Model};
pub use terms::NatTrans;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemError {
    #[error("estimated {estimate} entries exceeds the budget of {budget}")]
    Budget { estimate: u128, budget: u128 },
    #[error("value too large: {0}")]
    TooLarge(String),
    #[error("arity: {0}")]
    Arity(String),
    #[error("a type abstraction denotes a non-uniform family: {0}")]
    NotUniform(String),
    #[error("instantiation at a carrier of size {size}, outside the universe")]
    OutOfUniverse { size: u32 },
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Rel(RelError),
}

impl SemError {
    /// Failures caused by the configured bounds rather than by the input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            SemError::Budget { .. } | SemError::TooLarge(_) | SemError::OutOfUniverse { .. }
        )
    }
}

impl From<RelError> for SemError {
    fn from(e: RelError) -> Self {
        match e {
            RelError::BudgetExceeded { estimate, budget } => SemError::Budget { estimate, budget },
            RelError::TooLarge(m) => SemError::TooLarge(m),
            e => SemError::Rel(e),
        }
    }
}
