//! Cubical relational parametricity for System F over finite relations.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! computation over finite data: the cube categories, the cubical category
//! of finite relations, a System F front end, the tabulated interpretation of
//! types and terms, and the executable consequences of parametricity (graphs,
//! Church-encoded initial algebras). IO, reports and the command line live in
//! the `cubepar` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cube;
pub mod relcube;
pub mod report;
pub mod semantics;
pub mod suites;
pub mod syntax;
pub mod verify;

pub use cube::{BoxMorphism, Entry, GeneratorWord, Star};
pub use relcube::{CellMorphism, CubeCell, FacePattern, GoodIso, Pat, TupleSet};
