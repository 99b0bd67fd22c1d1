//! Consequences of parametricity: graphs of morphisms and their
//! opcartesian description, the Graph Lemma, and Church-encoded initial
//! algebras and final coalgebras.

mod algebra;
pub mod checks;
mod graph;
mod strength;

use alloc::string::String;

pub use algebra::{ChurchAlgebra, ChurchCoalgebra};
pub use graph::{graph, graph_morphism, graph_via_opreindex, GraphCell};
pub use strength::{is_positive, Strength};

use crate::cube::Level;
use crate::relcube::RelError;
use crate::semantics::SemError;
use crate::syntax::TypeError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("a graph at level {level} needs level {} to exist, but p = {p}", level + 1)]
    LevelBound { level: Level, p: Level },
    #[error("the variable occurs negatively in {0}")]
    Positivity(String),
    #[error(transparent)]
    Sem(#[from] SemError),
}

impl VerifyError {
    pub fn is_budget(&self) -> bool {
        matches!(self, VerifyError::Sem(e) if e.is_budget())
    }
}

impl From<RelError> for VerifyError {
    fn from(e: RelError) -> Self {
        VerifyError::Sem(e.into())
    }
}

impl From<TypeError> for VerifyError {
    fn from(e: TypeError) -> Self {
        VerifyError::Sem(e.into())
    }
}

impl From<crate::cube::CubeError> for VerifyError {
    fn from(e: crate::cube::CubeError) -> Self {
        VerifyError::Sem(RelError::from(e).into())
    }
}
