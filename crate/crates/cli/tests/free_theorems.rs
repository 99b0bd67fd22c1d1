mod support;

use cubepar_core::semantics::{Config, Model};
use cubepar_core::suites::elements;
use cubepar_core::syntax::parse_type;
use support::reynolds::{arrow, count, Simple::*};

fn model_count(text: &str, size: u32, empty: bool) -> usize {
    let model = Model::new(Config::new(1, size, empty, 10_000_000));
    elements(&model, &parse_type(text).unwrap()).unwrap().len()
}

#[test]
fn oracle_agrees_with_the_model() {
    let cases = [
        ("forall X. X -> X", arrow(X, X)),
        ("forall X. X -> X -> X", arrow(X, arrow(X, X))),
        ("forall X. (X -> X) -> X", arrow(arrow(X, X), X)),
        ("forall X. (X -> X) -> X -> X", arrow(arrow(X, X), arrow(X, X))),
        ("forall X. X -> X -> X -> X", arrow(X, arrow(X, arrow(X, X)))),
        ("forall X. (Unit -> X) -> X", arrow(arrow(Base(1), X), X)),
        ("forall X. (X -> Unit) -> X -> Unit", arrow(arrow(X, Base(1)), arrow(X, Base(1)))),
    ];
    for (text, simple) in &cases {
        for (size, empty) in [(1, true), (2, true), (2, false)] {
            let lo = if empty { 0 } else { 1 };
            assert_eq!(
                model_count(text, size, empty),
                count(simple, lo, size as usize),
                "{text} at N = {size}, empty = {empty}"
            );
        }
    }
}

#[test]
fn frozen_counts() {
    assert_eq!(count(&arrow(X, X), 0, 2), 1);
    assert_eq!(count(&arrow(X, arrow(X, X)), 0, 2), 2);
    assert_eq!(count(&arrow(arrow(X, X), X), 0, 2), 0);
    // the initial-algebra carriers for Unit, booleans and the identity functor
    assert_eq!(count(&arrow(arrow(Base(1), X), X), 0, 2), 1);
    assert_eq!(count(&arrow(arrow(Base(2), X), X), 0, 2), 2);
    assert_eq!(count(&arrow(arrow(X, X), X), 0, 2), 0);
}

#[test]
fn majority_survives_small_universes() {
    // the three projections and the majority vote, which preserves every
    // binary relation between sets of size at most 2
    assert_eq!(count(&arrow(X, arrow(X, arrow(X, X))), 0, 2), 4);
}
