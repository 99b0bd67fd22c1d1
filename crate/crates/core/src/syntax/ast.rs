use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

/// A binder's surface name, kept only for printing. All names compare equal,
/// so structural equality of syntax is α-equivalence.
#[derive(Clone, Debug, Default)]
pub struct Name(pub String);

impl Name {
    pub fn new(s: &str) -> Self {
        Name(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl PartialEq for Name {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Name {}

impl PartialOrd for Name {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Name {
    fn cmp(&self, _: &Self) -> Ordering {
        Ordering::Equal
    }
}

impl Hash for Name {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

/// Types. `Var(0)` is the innermost type variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Type {
    Var(usize),
    Arrow(Box<Type>, Box<Type>),
    Forall(Name, Box<Type>),
    Unit,
}

/// Terms. `Var(0)` is the innermost term variable; type annotations use the
/// type variables in scope at their position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(usize),
    Lam(Name, Type, Box<Term>),
    App(Box<Term>, Box<Term>),
    TyLam(Name, Box<Term>),
    TyApp(Box<Term>, Type),
    Unit,
}

impl Type {
    pub fn arrow(a: Type, b: Type) -> Type {
        Type::Arrow(Box::new(a), Box::new(b))
    }

    pub fn forall(name: &str, body: Type) -> Type {
        Type::Forall(Name::new(name), Box::new(body))
    }

    /// Adds `d` to every variable at or above `cutoff`.
    pub fn shift(&self, d: isize, cutoff: usize) -> Type {
        match self {
            Type::Var(i) if *i >= cutoff => Type::Var((*i as isize + d) as usize),
            Type::Var(i) => Type::Var(*i),
            Type::Arrow(a, b) => Type::arrow(a.shift(d, cutoff), b.shift(d, cutoff)),
            Type::Forall(n, b) => Type::Forall(n.clone(), Box::new(b.shift(d, cutoff + 1))),
            Type::Unit => Type::Unit,
        }
    }

    /// Replaces variable `j` by `s` (no variable is removed).
    pub fn subst(&self, j: usize, s: &Type) -> Type {
        self.subst_at(j, s, 0)
    }

    fn subst_at(&self, j: usize, s: &Type, depth: usize) -> Type {
        match self {
            Type::Var(i) if *i == j + depth => s.shift(depth as isize, 0),
            Type::Var(i) => Type::Var(*i),
            Type::Arrow(a, b) => Type::arrow(a.subst_at(j, s, depth), b.subst_at(j, s, depth)),
            Type::Forall(n, b) => Type::Forall(n.clone(), Box::new(b.subst_at(j, s, depth + 1))),
            Type::Unit => Type::Unit,
        }
    }

    /// `T[S/X]` for the innermost variable `X`, which is removed.
    pub fn instantiate(&self, s: &Type) -> Type {
        self.subst(0, &s.shift(1, 0)).shift(-1, 0)
    }

    pub fn has_free(&self, j: usize) -> bool {
        match self {
            Type::Var(i) => *i == j,
            Type::Arrow(a, b) => a.has_free(j) || b.has_free(j),
            Type::Forall(_, b) => b.has_free(j + 1),
            Type::Unit => false,
        }
    }

    /// Every variable is below `n`.
    pub fn is_closed_in(&self, n: usize) -> bool {
        match self {
            Type::Var(i) => *i < n,
            Type::Arrow(a, b) => a.is_closed_in(n) && b.is_closed_in(n),
            Type::Forall(_, b) => b.is_closed_in(n + 1),
            Type::Unit => true,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Type::Var(_) | Type::Unit => 1,
            Type::Arrow(a, b) => 1 + a.size() + b.size(),
            Type::Forall(_, b) => 1 + b.size(),
        }
    }
}

impl Term {
    pub fn lam(name: &str, ty: Type, body: Term) -> Term {
        Term::Lam(Name::new(name), ty, Box::new(body))
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    pub fn ty_lam(name: &str, body: Term) -> Term {
        Term::TyLam(Name::new(name), Box::new(body))
    }

    pub fn ty_app(t: Term, s: Type) -> Term {
        Term::TyApp(Box::new(t), s)
    }

    /// Shifts term variables at or above `cutoff` by `d`.
    pub fn shift(&self, d: isize, cutoff: usize) -> Term {
        match self {
            Term::Var(i) if *i >= cutoff => Term::Var((*i as isize + d) as usize),
            Term::Var(i) => Term::Var(*i),
            Term::Lam(n, t, b) => Term::Lam(n.clone(), t.clone(), Box::new(b.shift(d, cutoff + 1))),
            Term::App(f, a) => Term::app(f.shift(d, cutoff), a.shift(d, cutoff)),
            Term::TyLam(n, b) => Term::TyLam(n.clone(), Box::new(b.shift(d, cutoff))),
            Term::TyApp(t, s) => Term::ty_app(t.shift(d, cutoff), s.clone()),
            Term::Unit => Term::Unit,
        }
    }

    /// Shifts type variables (in annotations and instantiations) at or above
    /// `cutoff` by `d`.
    pub fn shift_types(&self, d: isize, cutoff: usize) -> Term {
        match self {
            Term::Var(i) => Term::Var(*i),
            Term::Lam(n, t, b) => Term::Lam(
                n.clone(),
                t.shift(d, cutoff),
                Box::new(b.shift_types(d, cutoff)),
            ),
            Term::App(f, a) => Term::app(f.shift_types(d, cutoff), a.shift_types(d, cutoff)),
            Term::TyLam(n, b) => Term::TyLam(n.clone(), Box::new(b.shift_types(d, cutoff + 1))),
            Term::TyApp(t, s) => Term::ty_app(t.shift_types(d, cutoff), s.shift(d, cutoff)),
            Term::Unit => Term::Unit,
        }
    }

    /// Replaces term variable `j` by `s`.
    pub fn subst(&self, j: usize, s: &Term) -> Term {
        self.subst_at(j, s, 0, 0)
    }

    fn subst_at(&self, j: usize, s: &Term, depth: usize, ty_depth: usize) -> Term {
        match self {
            Term::Var(i) if *i == j + depth => s.shift(depth as isize, 0).shift_types(ty_depth as isize, 0),
            Term::Var(i) => Term::Var(*i),
            Term::Lam(n, t, b) => Term::Lam(
                n.clone(),
                t.clone(),
                Box::new(b.subst_at(j, s, depth + 1, ty_depth)),
            ),
            Term::App(f, a) => Term::app(
                f.subst_at(j, s, depth, ty_depth),
                a.subst_at(j, s, depth, ty_depth),
            ),
            Term::TyLam(n, b) => {
                Term::TyLam(n.clone(), Box::new(b.subst_at(j, s, depth, ty_depth + 1)))
            }
            Term::TyApp(t, ty) => Term::ty_app(t.subst_at(j, s, depth, ty_depth), ty.clone()),
            Term::Unit => Term::Unit,
        }
    }

    /// `t[s/x]` for the innermost term variable `x`, which is removed.
    pub fn instantiate(&self, s: &Term) -> Term {
        self.subst(0, &s.shift(1, 0)).shift(-1, 0)
    }

    /// Replaces type variable `j` by `s` throughout.
    pub fn subst_type(&self, j: usize, s: &Type) -> Term {
        match self {
            Term::Var(i) => Term::Var(*i),
            Term::Lam(n, t, b) => Term::Lam(n.clone(), t.subst(j, s), Box::new(b.subst_type(j, s))),
            Term::App(f, a) => Term::app(f.subst_type(j, s), a.subst_type(j, s)),
            Term::TyLam(n, b) => {
                Term::TyLam(n.clone(), Box::new(b.subst_type(j + 1, &s.shift(1, 0))))
            }
            Term::TyApp(t, ty) => Term::ty_app(t.subst_type(j, s), ty.subst(j, s)),
            Term::Unit => Term::Unit,
        }
    }

    /// `t[S/X]` for the innermost type variable `X`, which is removed.
    pub fn instantiate_type(&self, s: &Type) -> Term {
        self.subst_type(0, &s.shift(1, 0)).shift_types(-1, 0)
    }

    pub fn has_free(&self, j: usize) -> bool {
        match self {
            Term::Var(i) => *i == j,
            Term::Lam(_, _, b) => b.has_free(j + 1),
            Term::App(f, a) => f.has_free(j) || a.has_free(j),
            Term::TyLam(_, b) => b.has_free(j),
            Term::TyApp(t, _) => t.has_free(j),
            Term::Unit => false,
        }
    }

    pub fn has_free_type(&self, j: usize) -> bool {
        match self {
            Term::Var(_) | Term::Unit => false,
            Term::Lam(_, t, b) => t.has_free(j) || b.has_free_type(j),
            Term::App(f, a) => f.has_free_type(j) || a.has_free_type(j),
            Term::TyLam(_, b) => b.has_free_type(j + 1),
            Term::TyApp(t, s) => t.has_free_type(j) || s.has_free(j),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Unit => 1,
            Term::Lam(_, t, b) => 1 + t.size() + b.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::TyLam(_, b) => 1 + b.size(),
            Term::TyApp(t, s) => 1 + t.size() + s.size(),
        }
    }
}
