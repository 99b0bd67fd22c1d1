use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ast::{Term, Type};
use super::print::print_type_in;

/// A typing failure: the rule that failed, where (a path of child positions
/// from the root of the term) and why.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("type error in rule {rule} at {location}: {message}")]
pub struct TypeError {
    pub rule: &'static str,
    pub location: String,
    pub message: String,
}

/// `Γ; Δ ⊢ t : T` with `Γ` given by its length and `Δ` in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgment {
    pub type_ctx_len: usize,
    pub term_ctx: Vec<Type>,
    pub subject: Term,
    pub ty: Type,
}

impl Judgment {
    /// Typechecks `subject` and records its type.
    pub fn new(type_ctx_len: usize, term_ctx: Vec<Type>, subject: Term) -> Result<Self, TypeError> {
        let ty = typecheck(type_ctx_len, &term_ctx, &subject)?;
        Ok(Self {
            type_ctx_len,
            term_ctx,
            subject,
            ty,
        })
    }

    pub fn closed(subject: Term) -> Result<Self, TypeError> {
        Self::new(0, Vec::new(), subject)
    }
}

struct Checker {
    /// Term variables with the type-context depth at which they were bound.
    terms: Vec<(Type, usize)>,
    depth: usize,
    path: Vec<&'static str>,
}

impl Checker {
    fn error(&self, rule: &'static str, message: String) -> TypeError {
        let location = if self.path.is_empty() {
            String::from("root")
        } else {
            self.path.join(".")
        };
        TypeError {
            rule,
            location,
            message,
        }
    }

    fn show(&self, t: &Type) -> String {
        let names: Vec<String> = (0..self.depth).map(|i| format!("T{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        print_type_in(t, &refs)
    }

    fn within<T>(&mut self, step: &'static str, f: impl FnOnce(&mut Self) -> T) -> T {
        self.path.push(step);
        let r = f(self);
        self.path.pop();
        r
    }

    fn well_scoped(&self, rule: &'static str, t: &Type) -> Result<(), TypeError> {
        if t.is_closed_in(self.depth) {
            Ok(())
        } else {
            Err(self.error(rule, String::from("type mentions a variable out of scope")))
        }
    }

    fn check(&mut self, t: &Term) -> Result<Type, TypeError> {
        match t {
            Term::Var(i) => {
                let n = self.terms.len();
                if *i >= n {
                    return Err(self.error("var", format!("variable #{i} is not bound")));
                }
                let (ty, at) = &self.terms[n - 1 - i];
                Ok(ty.shift((self.depth - at) as isize, 0))
            }
            Term::Unit => Ok(Type::Unit),
            Term::Lam(_, a, b) => {
                self.well_scoped("abs", a)?;
                self.terms.push((a.clone(), self.depth));
                let r = self.within("body", |c| c.check(b));
                self.terms.pop();
                Ok(Type::arrow(a.clone(), r?))
            }
            Term::App(f, a) => {
                let tf = self.within("fun", |c| c.check(f))?;
                let ta = self.within("arg", |c| c.check(a))?;
                match tf {
                    Type::Arrow(dom, cod) if *dom == ta => Ok(*cod),
                    Type::Arrow(dom, _) => Err(self.error(
                        "app",
                        format!(
                            "argument has type {} but the function expects {}",
                            self.show(&ta),
                            self.show(&dom)
                        ),
                    )),
                    other => Err(self.error(
                        "app",
                        format!("applying a term of non-function type {}", self.show(&other)),
                    )),
                }
            }
            Term::TyLam(n, b) => {
                self.depth += 1;
                let r = self.within("body", |c| c.check(b));
                self.depth -= 1;
                Ok(Type::Forall(n.clone(), alloc::boxed::Box::new(r?)))
            }
            Term::TyApp(f, s) => {
                self.well_scoped("tapp", s)?;
                match self.within("fun", |c| c.check(f))? {
                    Type::Forall(_, body) => Ok(body.instantiate(s)),
                    other => Err(self.error(
                        "tapp",
                        format!("instantiating a term of non-polymorphic type {}", self.show(&other)),
                    )),
                }
            }
        }
    }
}

/// The type of `t` under `Γ` (of the given length) and `Δ`.
pub fn typecheck(type_ctx_len: usize, term_ctx: &[Type], t: &Term) -> Result<Type, TypeError> {
    let mut c = Checker {
        terms: Vec::new(),
        depth: type_ctx_len,
        path: Vec::new(),
    };
    for ty in term_ctx {
        c.well_scoped("context", ty)?;
        c.terms.push((ty.clone(), type_ctx_len));
    }
    c.check(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_term, parse_term_in, parse_type, parse_type_in};

    #[test]
    fn polymorphic_identity() {
        let t = parse_term("/\\X. \\x:X. x").unwrap();
        assert_eq!(typecheck(0, &[], &t).unwrap(), parse_type("forall X. X -> X").unwrap());
    }

    #[test]
    fn instantiation() {
        let ty = parse_type_in("T", &["T"]).unwrap();
        let t = parse_term_in("(/\\X. \\x:X. x) [T] u", &["T"], &["u"]).unwrap();
        assert_eq!(typecheck(1, core::slice::from_ref(&ty), &t).unwrap(), ty);
    }

    #[test]
    fn self_application_is_rejected() {
        let t = parse_term_in("\\x:X. x x", &["X"], &[]).unwrap();
        let e = typecheck(1, &[], &t).unwrap_err();
        assert_eq!(e.rule, "app");
        assert_eq!(e.location, "body");
    }

    #[test]
    fn types_under_binders_are_shifted() {
        // x : X ⊢ ΛY. λy:Y. x  :  ∀Y. Y → X
        let x = parse_type_in("X", &["X"]).unwrap();
        let t = parse_term_in("/\\Y. \\y:Y. x", &["X"], &["x"]).unwrap();
        assert_eq!(
            typecheck(1, &[x], &t).unwrap(),
            parse_type_in("forall Y. Y -> X", &["X"]).unwrap()
        );
    }
}
