use cubepar_core::syntax::{
    beta_eta_equal, beta_eta_normalize, parse_term, parse_type, print_term, print_type, typecheck, Judgment,
    Term, Type,
};
use proptest::prelude::*;

/// Random types whose out-of-scope variables are replaced by `Unit`.
fn closed_type() -> impl Strategy<Value = Type> {
    fn close(t: Type, depth: usize) -> Type {
        match t {
            Type::Var(i) if i < depth => Type::Var(i),
            Type::Var(_) | Type::Unit => Type::Unit,
            Type::Arrow(a, b) => Type::arrow(close(*a, depth), close(*b, depth)),
            Type::Forall(n, b) => Type::Forall(n, Box::new(close(*b, depth + 1))),
        }
    }
    let leaf = prop_oneof![Just(Type::Unit), (0..3usize).prop_map(Type::Var)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Type::arrow(a, b)),
            inner.prop_map(|b| Type::forall("X", b)),
        ]
    })
    .prop_map(|t| close(t, 0))
}

proptest! {
    #[test]
    fn types_round_trip(t in closed_type()) {
        prop_assert_eq!(parse_type(&print_type(&t)).unwrap(), t);
    }

    #[test]
    fn substitution_of_a_fresh_variable_is_identity(t in closed_type()) {
        prop_assert_eq!(t.shift(1, 0).instantiate(&Type::Unit), t);
    }
}

#[test]
fn typing_examples() {
    let id = parse_term("/\\X. \\x:X. x").unwrap();
    assert_eq!(typecheck(0, &[], &id).unwrap(), parse_type("forall X. X -> X").unwrap());
    let applied = Term::ty_app(id.clone(), Type::Unit);
    assert_eq!(typecheck(0, &[], &applied).unwrap(), parse_type("Unit -> Unit").unwrap());
    assert!(Judgment::closed(parse_term("\\x:Unit. x x").unwrap()).is_err());
    assert!(parse_term("\\x:X. x").is_err());
}

#[test]
fn normalization() {
    let redex = parse_term("(/\\X. \\x:X. x) [Unit] unit").unwrap();
    assert_eq!(beta_eta_normalize(&redex), parse_term("unit").unwrap());
    let eta = parse_term("/\\X. \\f:X -> X. \\x:X. f x").unwrap();
    assert!(beta_eta_equal(&eta, &parse_term("/\\X. \\f:X -> X. f").unwrap()));
    let t = parse_term("/\\X. \\x:X. \\y:X. x").unwrap();
    let f = parse_term("/\\X. \\x:X. \\y:X. y").unwrap();
    assert!(!beta_eta_equal(&t, &f));
    assert_eq!(parse_term(&print_term(&t)).unwrap(), t);
}
