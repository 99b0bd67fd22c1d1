use cubepar_core::semantics::{Config, Model};
use cubepar_core::syntax::parse_type_in;
use cubepar_core::verify::{is_positive, ChurchAlgebra, ChurchCoalgebra, VerifyError};

fn model() -> Model {
    Model::new(Config::new(1, 2, true, 10_000_000))
}

fn functor(t: &str) -> cubepar_core::syntax::Type {
    parse_type_in(t, &["X"]).unwrap()
}

#[test]
fn church_booleans_are_initial_for_a_constant_functor() {
    let m = model();
    let alg = ChurchAlgebra::build(&m, &functor("forall Y. Y -> Y -> Y")).unwrap();
    assert_eq!(m.size(alg.carrier(), &[]).unwrap(), 2);
    for level in 0..=1 {
        let inn = alg.structure(&m, level).unwrap();
        let fold = alg.fold(&m, &inn).unwrap();
        assert!(fold.is_identity(), "fold of in at level {level}");
        assert!(alg.is_algebra_morphism(&m, &inn, &fold).unwrap());
        assert_eq!(alg.parametric_morphisms(&m, &inn).unwrap(), vec![fold]);
    }
}

#[test]
fn identity_functor_has_an_empty_initial_algebra() {
    let m = model();
    let alg = ChurchAlgebra::build(&m, &functor("X")).unwrap();
    assert_eq!(m.size(alg.carrier(), &[]).unwrap(), 0);
    let co = ChurchCoalgebra::build(&m, &functor("X")).unwrap();
    assert_eq!(m.size(co.carrier(), &[]).unwrap(), 1);
}

#[test]
fn unfold_of_out_is_the_identity() {
    let m = model();
    for f in ["Unit", "forall Y. Y -> Y -> Y"] {
        let co = ChurchCoalgebra::build(&m, &functor(f)).unwrap();
        let out = co.structure(&m, 0).unwrap();
        assert!(co.unfold(&m, &out).unwrap().is_identity(), "{f}");
    }
}

#[test]
fn negative_functors_are_rejected() {
    let m = model();
    assert!(!is_positive(&functor("X -> X"), 0));
    assert!(is_positive(&functor("(X -> Unit) -> Unit"), 0));
    assert!(matches!(
        ChurchAlgebra::build(&m, &functor("X -> X")),
        Err(VerifyError::Positivity(_))
    ));
}
