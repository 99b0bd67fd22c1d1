//! System F with a unit type: de Bruijn syntax, parser, printer,
//! typechecker and βη-normalization.

mod ast;
mod normalize;
mod parse;
mod print;
mod typeck;

pub use ast::{Name, Term, Type};
pub use normalize::{beta_eta_normalize, beta_eta_equal};
pub use parse::{parse_term, parse_term_in, parse_type, parse_type_in, ParseError, ParseErrorKind};
pub use print::{print_term, print_term_in, print_type, print_type_in};
pub use typeck::{typecheck, Judgment, TypeError};
