use alloc::boxed::Box;

use super::ast::{Term, Type};

/// One leftmost-outermost β or η step.
fn step(t: &Term) -> Option<Term> {
    match t {
        Term::App(f, a) => {
            if let Term::Lam(_, _, b) = &**f {
                return Some(b.instantiate(a));
            }
            if let Some(f2) = step(f) {
                return Some(Term::App(Box::new(f2), a.clone()));
            }
            step(a).map(|a2| Term::App(f.clone(), Box::new(a2)))
        }
        Term::TyApp(f, s) => {
            if let Term::TyLam(_, b) = &**f {
                return Some(b.instantiate_type(s));
            }
            step(f).map(|f2| Term::TyApp(Box::new(f2), s.clone()))
        }
        Term::Lam(n, ty, b) => {
            if let Term::App(g, x) = &**b {
                if **x == Term::Var(0) && !g.has_free(0) {
                    return Some(g.shift(-1, 0));
                }
            }
            step(b).map(|b2| Term::Lam(n.clone(), ty.clone(), Box::new(b2)))
        }
        Term::TyLam(n, b) => {
            if let Term::TyApp(g, Type::Var(0)) = &**b {
                if !g.has_free_type(0) {
                    return Some(g.shift_types(-1, 0));
                }
            }
            step(b).map(|b2| Term::TyLam(n.clone(), Box::new(b2)))
        }
        Term::Var(_) | Term::Unit => None,
    }
}

/// The βη-normal form, reached by normal-order reduction. Terminates on
/// well-typed terms.
pub fn beta_eta_normalize(t: &Term) -> Term {
    let mut t = t.clone();
    while let Some(next) = step(&t) {
        t = next;
    }
    t
}

pub fn beta_eta_equal(a: &Term, b: &Term) -> bool {
    beta_eta_normalize(a) == beta_eta_normalize(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_term, parse_term_in, typecheck};

    #[test]
    fn beta() {
        let t = parse_term_in("(\\x:T. x) u", &["T"], &["u"]).unwrap();
        assert_eq!(beta_eta_normalize(&t), Term::Var(0));
        let t = parse_term("(/\\X. \\x:X. x) [Unit] unit").unwrap();
        assert_eq!(beta_eta_normalize(&t), Term::Unit);
    }

    #[test]
    fn eta() {
        let t = parse_term_in("\\x:T. f x", &["T"], &["f"]).unwrap();
        assert_eq!(beta_eta_normalize(&t), Term::Var(0));
        let t = parse_term_in("/\\X. p [X]", &[], &["p"]).unwrap();
        assert_eq!(beta_eta_normalize(&t), Term::Var(0));
        // x occurs in the head: not an η-redex
        let t = parse_term_in("\\x:T -> T. x x", &["T"], &[]).unwrap();
        assert_eq!(beta_eta_normalize(&t), t);
    }

    #[test]
    fn normalization_preserves_types() {
        let t = parse_term(
            "(/\\X. \\f:X -> X. \\x:X. f (f x)) [Unit] (\\u:Unit. u)",
        )
        .unwrap();
        let ty = typecheck(0, &[], &t).unwrap();
        let n = beta_eta_normalize(&t);
        assert_eq!(typecheck(0, &[], &n).unwrap(), ty);
        assert_eq!(n, parse_term("\\x:Unit. x").unwrap());
    }
}
