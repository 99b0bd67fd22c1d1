use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{Term, Type};

fn type_free(t: &Type, depth: usize, out: &mut BTreeSet<usize>) {
    match t {
        Type::Var(i) if *i >= depth => {
            out.insert(i - depth);
        }
        Type::Var(_) | Type::Unit => {}
        Type::Arrow(a, b) => {
            type_free(a, depth, out);
            type_free(b, depth, out);
        }
        Type::Forall(_, b) => type_free(b, depth + 1, out),
    }
}

fn term_free(t: &Term, depth: usize, out: &mut BTreeSet<usize>) {
    match t {
        Term::Var(i) if *i >= depth => {
            out.insert(i - depth);
        }
        Term::Var(_) | Term::Unit => {}
        Term::Lam(_, _, b) => term_free(b, depth + 1, out),
        Term::App(f, a) => {
            term_free(f, depth, out);
            term_free(a, depth, out);
        }
        Term::TyLam(_, b) | Term::TyApp(b, _) => term_free(b, depth, out),
    }
}

fn term_free_types(t: &Term, depth: usize, out: &mut BTreeSet<usize>) {
    match t {
        Term::Var(_) | Term::Unit => {}
        Term::Lam(_, ty, b) => {
            type_free(ty, depth, out);
            term_free_types(b, depth, out);
        }
        Term::App(f, a) => {
            term_free_types(f, depth, out);
            term_free_types(a, depth, out);
        }
        Term::TyLam(_, b) => term_free_types(b, depth + 1, out),
        Term::TyApp(b, ty) => {
            term_free_types(b, depth, out);
            type_free(ty, depth, out);
        }
    }
}

/// The hint, primed until it differs from every outer name the body uses.
fn choose(hint: &str, default: &str, ctx: &[String], free_under_binder: &BTreeSet<usize>) -> String {
    let used: BTreeSet<&str> = free_under_binder
        .iter()
        .filter(|&&i| i >= 1 && i <= ctx.len())
        .map(|&i| ctx[ctx.len() - i].as_str())
        .collect();
    let mut name = if hint.is_empty() { default.to_string() } else { hint.to_string() };
    while used.contains(name.as_str()) {
        name.push('\'');
    }
    name
}

fn lookup(ctx: &[String], i: usize) -> String {
    if i < ctx.len() {
        ctx[ctx.len() - 1 - i].clone()
    } else {
        format!("?{i}")
    }
}

fn ty(t: &Type, ctx: &mut Vec<String>, nested: bool, out: &mut String) {
    match t {
        Type::Var(i) => out.push_str(&lookup(ctx, *i)),
        Type::Unit => out.push_str("Unit"),
        Type::Arrow(a, b) => {
            if nested {
                out.push('(');
            }
            ty(a, ctx, true, out);
            out.push_str(" -> ");
            ty(b, ctx, false, out);
            if nested {
                out.push(')');
            }
        }
        Type::Forall(n, b) => {
            let mut free = BTreeSet::new();
            type_free(b, 0, &mut free);
            let x = choose(n.as_str(), "X", ctx, &free);
            if nested {
                out.push('(');
            }
            out.push_str("forall ");
            out.push_str(&x);
            out.push_str(". ");
            ctx.push(x);
            ty(b, ctx, false, out);
            ctx.pop();
            if nested {
                out.push(')');
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Top,
    Head,
    Arg,
}

struct TermPrinter {
    tys: Vec<String>,
    terms: Vec<String>,
    out: String,
}

impl TermPrinter {
    fn term(&mut self, t: &Term, prec: Prec) {
        match t {
            Term::Var(i) => {
                let s = lookup(&self.terms, *i);
                self.out.push_str(&s);
            }
            Term::Unit => self.out.push_str("unit"),
            Term::Lam(n, a, b) => {
                let mut free = BTreeSet::new();
                term_free(b, 0, &mut free);
                let x = choose(n.as_str(), "x", &self.terms, &free);
                self.open(prec > Prec::Top);
                self.out.push('\\');
                self.out.push_str(&x);
                self.out.push(':');
                ty(a, &mut self.tys, false, &mut self.out);
                self.out.push_str(". ");
                self.terms.push(x);
                self.term(b, Prec::Top);
                self.terms.pop();
                self.close(prec > Prec::Top);
            }
            Term::TyLam(n, b) => {
                let mut free = BTreeSet::new();
                term_free_types(b, 0, &mut free);
                let x = choose(n.as_str(), "X", &self.tys, &free);
                self.open(prec > Prec::Top);
                self.out.push_str("/\\");
                self.out.push_str(&x);
                self.out.push_str(". ");
                self.tys.push(x);
                self.term(b, Prec::Top);
                self.tys.pop();
                self.close(prec > Prec::Top);
            }
            Term::App(f, a) => {
                self.open(prec == Prec::Arg);
                self.term(f, Prec::Head);
                self.out.push(' ');
                self.term(a, Prec::Arg);
                self.close(prec == Prec::Arg);
            }
            Term::TyApp(f, s) => {
                self.open(prec == Prec::Arg);
                self.term(f, Prec::Head);
                self.out.push_str(" [");
                ty(s, &mut self.tys, false, &mut self.out);
                self.out.push(']');
                self.close(prec == Prec::Arg);
            }
        }
    }

    fn open(&mut self, paren: bool) {
        if paren {
            self.out.push('(');
        }
    }

    fn close(&mut self, paren: bool) {
        if paren {
            self.out.push(')');
        }
    }
}

pub fn print_type(t: &Type) -> String {
    print_type_in(t, &[])
}

/// Prints a type over the given type variable names (outermost first).
pub fn print_type_in(t: &Type, tys: &[&str]) -> String {
    let mut ctx: Vec<String> = tys.iter().map(|s| s.to_string()).collect();
    let mut out = String::new();
    ty(t, &mut ctx, false, &mut out);
    out
}

pub fn print_term(t: &Term) -> String {
    print_term_in(t, &[], &[])
}

pub fn print_term_in(t: &Term, tys: &[&str], terms: &[&str]) -> String {
    let mut p = TermPrinter {
        tys: tys.iter().map(|s| s.to_string()).collect(),
        terms: terms.iter().map(|s| s.to_string()).collect(),
        out: String::new(),
    };
    p.term(t, Prec::Top);
    p.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_term, parse_type};

    #[test]
    fn round_trips() {
        for s in [
            "forall X. X -> X",
            "forall X. (X -> X) -> X -> X",
            "forall X. (forall Y. (X -> Y) -> Y) -> Unit",
            "Unit -> Unit -> Unit",
        ] {
            assert_eq!(print_type(&parse_type(s).unwrap()), s);
        }
        for s in [
            "/\\X. \\x:X. x",
            "/\\X. \\f:X -> X. \\x:X. f (f x)",
            "(/\\X. \\x:X. x) [Unit] unit",
            "\\k:Unit -> Unit. k (k unit)",
            "/\\A. \\z:forall X. (A -> X) -> X. z [A] (\\a:A. a)",
        ] {
            assert_eq!(print_term(&parse_term(s).unwrap()), s);
        }
    }

    #[test]
    fn shadowing_binders_are_renamed() {
        // forall X. forall X. X1 -> X0
        let t = Type::forall("X", Type::forall("X", Type::arrow(Type::Var(1), Type::Var(0))));
        assert_eq!(print_type(&t), "forall X. forall X'. X -> X'");
        let t = Type::forall("X", Type::forall("X", Type::Var(0)));
        assert_eq!(print_type(&t), "forall X. forall X. X");
    }
}
