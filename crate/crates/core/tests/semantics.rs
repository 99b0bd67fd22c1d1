use cubepar_core::report::Check;
use cubepar_core::semantics::laws::{degeneracy_preservation, homset, naturality, substitution_lemma};
use cubepar_core::semantics::{Config, Model, SemError};
use cubepar_core::syntax::{parse_term, parse_term_in, parse_type, parse_type_in, Judgment};

fn model(p: usize, n: u32) -> Model {
    Model::new(Config::new(p, n, true, 10_000_000))
}

fn closed_size(m: &Model, t: &str) -> u32 {
    let f = m.interp_type(&parse_type(t).unwrap(), 0).unwrap();
    m.size(f, &[]).unwrap()
}

#[test]
fn closed_type_sizes() {
    let m = model(1, 2);
    assert_eq!(closed_size(&m, "Unit"), 1);
    assert_eq!(closed_size(&m, "Unit -> Unit"), 1);
    assert_eq!(closed_size(&m, "forall X. X -> X"), 1);
    assert_eq!(closed_size(&m, "forall X. X -> X -> X"), 2);
    assert_eq!(closed_size(&m, "forall X. (X -> X) -> X"), 0);
    // zero, one and two: thrice agrees with once at carriers of size 2
    assert_eq!(closed_size(&m, "forall X. (X -> X) -> X -> X"), 3);
    let m = Model::new(Config::new(1, 2, false, 10_000_000));
    assert_eq!(closed_size(&m, "forall X. (X -> X) -> X"), 0);
}

#[test]
fn open_types_at_level_zero() {
    let m = model(1, 2);
    let f = m.interp_type(&parse_type_in("X -> X", &["X"]).unwrap(), 1).unwrap();
    for s in 0..=2 {
        assert_eq!(m.size(f, &[m.point(s)]).unwrap(), s.pow(s));
    }
}

#[test]
fn identity_extension_at_dimension_two() {
    let m = model(2, 1);
    for t in ["X -> X", "forall Y. (X -> Y) -> Y", "(X -> Unit) -> X"] {
        let f = m.interp_type(&parse_type_in(t, &["X"]).unwrap(), 1).unwrap();
        let mut c = Check::new(t);
        degeneracy_preservation(&m, f, &mut c).unwrap();
        assert!(c.passed() && c.cases > 0, "{t}: {:?}", c.failures);
    }
}

#[test]
fn substitution_in_an_arrow() {
    let m = model(1, 2);
    let t = parse_type_in("X -> X", &["X"]).unwrap();
    let mut c = Check::new("subst");
    substitution_lemma(&m, &t, &parse_type("forall Y. Y -> Y -> Y").unwrap(), 0, &mut c).unwrap();
    assert!(c.passed() && c.cases > 0);
}

#[test]
fn terms_are_natural() {
    let m = model(1, 2);
    for t in ["/\\X. \\x:X. x", "/\\X. \\f:X -> X. \\x:X. f (f x)"] {
        let nt = m.interp_term(&Judgment::closed(parse_term(t).unwrap()).unwrap()).unwrap();
        let mut c = Check::new(t);
        naturality(&m, &nt, &mut c).unwrap();
        assert!(c.passed() && c.cases > 0);
    }
}

#[test]
fn the_only_endomorphism_of_the_identity_functor() {
    let m = model(1, 2);
    let x = m.proj(0, 1);
    assert_eq!(homset(&m, x, x).unwrap().len(), 1);
}

#[test]
fn budgets_fail_before_building() {
    let m = Model::new(Config::new(1, 4, true, 1000));
    let t = parse_type("forall X. (X -> X) -> X -> X").unwrap();
    let err = m.interp_type(&t, 0).and_then(|f| m.size(f, &[])).unwrap_err();
    assert!(err.is_budget(), "{err}");
    assert!(matches!(err, SemError::Budget { .. } | SemError::TooLarge(_)));
}

#[test]
fn instantiation_outside_the_universe_is_reported() {
    let m = model(1, 2);
    let t = parse_term_in("(/\\Y. \\y:Y. y) [X -> X] (\\z:X. z)", &["X"], &[]).unwrap();
    let nt = m.interp_term(&Judgment::new(1, vec![], t).unwrap()).unwrap();
    // at X of size 2, X -> X has 4 elements
    let err = nt.value(&m, &[m.point(2)]).unwrap_err();
    assert_eq!(err, SemError::OutOfUniverse { size: 4 });
    assert!(nt.value(&m, &[m.point(1)]).is_ok());
}
