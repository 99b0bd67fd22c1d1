//! The cubical category of finite relations.
//!
//! An `l`-cell carries a finite set at each vertex of the `l`-cube and a
//! relation at every face of positive dimension. `□_p` acts on cells by
//! restriction (faces) and by equality along new dimensions (degeneracies).

mod act;
mod cell;
mod enumerate;
mod fibration;
mod pattern;
pub mod stability;
mod structure;
mod tuples;

use alloc::string::String;
use alloc::vec::Vec;

use crate::cube::{CubeError, Level};

pub use act::{act, act_morphism, degenerate, face_of, source_pattern};
pub use cell::{CellMorphism, CubeCell, GoodIso};
pub(crate) use cell::CellBuilder;
pub use enumerate::{
    enumerate_cells, enumerate_morphisms_between, estimate_cells, for_each_morphism, Universe,
};
pub use fibration::{factor_through_cartesian, opreindex, reindex, Lift};
pub use pattern::{FacePattern, Pat};
pub use structure::{
    apply_function, curry, decode_function, encode_function, exponential, exponential_cell,
    function_space_size, pair, product, product_cell, terminal, terminal_morphism, Exponential,
    Product,
};
pub use tuples::TupleSet;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RelError {
    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: Level, found: Level },
    #[error("malformed: {0}")]
    Malformed(String),
    #[error("tuple {tuple:?} at {pattern} does not restrict into face {face}")]
    Incoherent {
        pattern: String,
        tuple: Vec<u32>,
        face: String,
    },
    #[error("tuple {tuple:?} at {pattern} is not mapped into the target relation")]
    NotAMorphism { pattern: String, tuple: Vec<u32> },
    #[error("face mismatch: {0}")]
    FaceMismatch(String),
    #[error("carrier too large: {0}")]
    TooLarge(String),
    #[error("estimated {estimate} entries exceeds the budget of {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error(transparent)]
    Cube(#[from] CubeError),
}
