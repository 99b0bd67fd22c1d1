use alloc::vec;
use alloc::vec::Vec;

use super::VerifyError;
use crate::relcube::{encode_function, CellMorphism};
use crate::semantics::{FId, Model, NatTrans};
use crate::syntax::{print_type_in, Judgment, Term, Type};

/// Whether variable `j` occurs only positively in `t`.
pub fn is_positive(t: &Type, j: usize) -> bool {
    polarity(t, j, true)
}

fn polarity(t: &Type, j: usize, positive: bool) -> bool {
    match t {
        Type::Var(i) => positive || *i != j,
        Type::Unit => true,
        Type::Arrow(s, r) => polarity(s, j, !positive) && polarity(r, j, positive),
        Type::Forall(_, b) => polarity(b, j + 1, positive),
    }
}

/// `t[A/X]` where `X` is variable `j`, `B` is `j` as well and `A` is `j + 1`.
fn at_a(t: &Type, j: usize) -> Type {
    t.subst(j, &Type::Var(j + 1))
}

fn up(t: &Term) -> Term {
    t.shift(1, 0)
}

fn up_types(t: &Term) -> Term {
    t.shift_types(1, 0)
}

/// Given `x : t[A]`, a term of type `t[B]`.
fn cov(t: &Type, j: usize, f: &Term, x: Term) -> Term {
    if !t.has_free(j) {
        return x;
    }
    match t {
        Type::Var(_) => Term::app(f.clone(), x),
        Type::Arrow(s, r) => {
            let arg = contra(s, j, &up(f), Term::Var(0));
            Term::lam("y", (**s).clone(), cov(r, j, &up(f), Term::app(up(&x), arg)))
        }
        Type::Forall(n, r) => Term::TyLam(
            n.clone(),
            alloc::boxed::Box::new(cov(r, j + 1, &up_types(f), Term::ty_app(up_types(&x), Type::Var(0)))),
        ),
        Type::Unit => x,
    }
}

/// Given `y : t[B]` with `X` only negative in `t`, a term of type `t[A]`.
fn contra(t: &Type, j: usize, f: &Term, y: Term) -> Term {
    if !t.has_free(j) {
        return y;
    }
    match t {
        Type::Arrow(s, r) => {
            let arg = cov(s, j, &up(f), Term::Var(0));
            Term::lam("y", at_a(s, j), contra(r, j, &up(f), Term::app(up(&y), arg)))
        }
        Type::Forall(n, r) => Term::TyLam(
            n.clone(),
            alloc::boxed::Box::new(contra(r, j + 1, &up_types(f), Term::ty_app(up_types(&y), Type::Var(0)))),
        ),
        Type::Var(_) | Type::Unit => unreachable!("positivity checked"),
    }
}

/// The action on morphisms of a functor `X ⊢ F X` in which `X` is
/// strictly covariant, given by the term
/// `ΛA. ΛB. λf : A → B. λx : F A. …` built by induction on `F`.
pub struct Strength {
    pub functor_type: Type,
    pub functor: FId,
    /// `⊢ map : ∀A. ∀B. (A → B) → F A → F B`.
    pub map: Term,
    /// `A, B; f : A → B, x : F A ⊢ … : F B`, whose tables give the action.
    open: NatTrans,
}

impl Strength {
    /// `functor_type` has one free variable, `X`, at index 0.
    pub fn derive(model: &Model, functor_type: &Type) -> Result<Self, VerifyError> {
        if !functor_type.is_closed_in(1) || !is_positive(functor_type, 0) {
            return Err(VerifyError::Positivity(print_type_in(functor_type, &["X"])));
        }
        // in the context A, B the variable B is 0 and A is 1
        let body = cov(functor_type, 0, &Term::Var(1), Term::Var(0));
        let fa = at_a(functor_type, 0);
        let f_ty = Type::arrow(Type::Var(1), Type::Var(0));
        let open_j = Judgment::new(2, vec![f_ty.clone(), fa.clone()], body.clone())?;
        let map = Term::ty_lam(
            "A",
            Term::ty_lam("B", Term::lam("f", f_ty, Term::lam("x", fa, body))),
        );
        Judgment::closed(map.clone())?;
        Ok(Self {
            functor_type: functor_type.clone(),
            functor: model.interp_type(functor_type, 1)?,
            map,
            open: model.interp_term(&open_j)?,
        })
    }

    /// `F(0)(f)` for a function `f : a → b` given as a table.
    pub fn map_function(&self, model: &Model, a: u32, b: u32, f: &[u32]) -> Result<Vec<u32>, VerifyError> {
        let rho = [model.point(b), model.point(a)];
        let table = self.open.table(model, &rho)?;
        let fa = model.size(self.functor, &[model.point(a)])?;
        let code = encode_function(f, b);
        Ok((0..fa).map(|x| table[(code * fa + x) as usize]).collect())
    }

    /// `F(l)(m)`, assembled vertexwise; an error when the assembly does not
    /// preserve relations.
    pub fn fmap(&self, model: &Model, m: &CellMorphism) -> Result<CellMorphism, VerifyError> {
        let l = m.level();
        let a = model.intern((**m.source()).clone());
        let b = model.intern((**m.target()).clone());
        let source = model.cell(model.eval(self.functor, l, &[a])?);
        let target = model.cell(model.eval(self.functor, l, &[b])?);
        let comps = (0..1usize << l)
            .map(|w| {
                self.map_function(
                    model,
                    m.source().carrier(w),
                    m.target().carrier(w),
                    m.component(w),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CellMorphism::new(source, target, comps)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::Config;
    use crate::syntax::{parse_type_in, print_term};

    fn strength(text: &str) -> Result<(Model, Strength), VerifyError> {
        let model = Model::new(Config::new(1, 2, true, 1 << 24));
        let t = parse_type_in(text, &["X"]).unwrap();
        let s = Strength::derive(&model, &t)?;
        Ok((model, s))
    }

    #[test]
    fn positivity() {
        let p = |s: &str| is_positive(&parse_type_in(s, &["X"]).unwrap(), 0);
        assert!(p("X"));
        assert!(p("(X -> Unit) -> Unit"));
        assert!(p("forall Y. (X -> Y) -> Y"));
        assert!(!p("X -> X"));
        assert!(!p("X -> Unit"));
        assert!(matches!(strength("X -> X"), Err(VerifyError::Positivity(_))));
    }

    #[test]
    fn map_terms_typecheck() {
        for t in ["X", "Unit", "Unit -> X", "(X -> Unit) -> Unit", "forall Y. (X -> Y) -> (Unit -> Y) -> Y"] {
            let (_, s) = strength(t).unwrap();
            assert!(!print_term(&s.map).is_empty());
        }
    }

    #[test]
    fn identity_functor_maps_functions_to_themselves() {
        let (m, s) = strength("X").unwrap();
        assert_eq!(s.map_function(&m, 2, 2, &[1, 0]).unwrap(), [1, 0]);
        assert_eq!(s.map_function(&m, 2, 1, &[0, 0]).unwrap(), [0, 0]);
    }

    #[test]
    fn maybe_functor() {
        // over a 2-set this is forall Y. Y -> Y -> Y -> Y: three projections
        // and majority, which preserves every relation between sets of size <= 2
        let (m, s) = strength("forall Y. (X -> Y) -> Y -> Y").unwrap();
        let fx = m.size(s.functor, &[m.point(2)]).unwrap();
        assert_eq!(fx, 4);
        let swap = s.map_function(&m, 2, 2, &[1, 0]).unwrap();
        let mut sorted = swap.clone();
        sorted.sort();
        assert_eq!(sorted, [0, 1, 2, 3]);
        assert_eq!(swap.iter().enumerate().filter(|(i, v)| *i as u32 == **v).count(), 2);
        assert_eq!(s.map_function(&m, 2, 2, &[0, 1]).unwrap(), [0, 1, 2, 3]);
    }
}
