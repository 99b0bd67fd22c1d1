use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use core::cell::RefCell;
use alloc::vec;
use alloc::vec::Vec;

use super::{Strength, VerifyError};
use crate::cube::Level;
use crate::relcube::{apply_function, decode_function, encode_function, CellMorphism, CubeCell};
use crate::semantics::{FId, Model, NatTrans};
use crate::syntax::{Judgment, Term, Type};

/// `Z = ∀X. (F X → X) → X`, with `F` given with `X` at index 0.
pub fn initial_carrier(f: &Type) -> Type {
    Type::forall("X", Type::arrow(Type::arrow(f.clone(), Type::Var(0)), Type::Var(0)))
}

/// `Z' = ∀Y. (∀X. (X → F X) → X → Y) → Y`.
pub fn final_carrier(f: &Type) -> Type {
    Type::forall("Y", Type::arrow(coalgebra_eliminator(f), Type::Var(0)))
}

/// `∀X. (X → F X) → X → Y` with `Y` at index 0.
fn coalgebra_eliminator(f: &Type) -> Type {
    Type::forall(
        "X",
        Type::arrow(
            Type::arrow(Type::Var(0), f.clone()),
            Type::arrow(Type::Var(0), Type::Var(1)),
        ),
    )
}

/// Shared pieces: the functor with its strength and a closed carrier type.
struct Common {
    strength: Strength,
    carrier: FId,
}

impl Common {
    fn carrier_at(&self, model: &Model, level: Level) -> Result<Rc<CubeCell>, VerifyError> {
        Ok(model.cell(model.eval(self.carrier, level, &[])?))
    }

    fn functor_at(&self, model: &Model, c: &CubeCell) -> Result<Rc<CubeCell>, VerifyError> {
        let id = model.intern(c.clone());
        Ok(model.cell(model.eval(self.strength.functor, c.level(), &[id])?))
    }
}

/// Reads `t(k)(x)` off the table of `A; k, x ⊢ t`, vertexwise along `k`.
fn assemble(
    model: &Model,
    nt: &NatTrans,
    k: &CellMorphism,
    carrier_of: impl Fn(usize) -> u32,
    source: Rc<CubeCell>,
    target: Rc<CubeCell>,
) -> Result<CellMorphism, VerifyError> {
    let comps = (0..1usize << k.level())
        .map(|w| {
            let a = carrier_of(w);
            let table = nt.table(model, &[model.point(a)])?;
            let n = source.carrier(w);
            let code = encode_function(k.component(w), k.target().carrier(w));
            Ok((0..n).map(|x| table[(code * n + x) as usize]).collect())
        })
        .collect::<Result<Vec<Vec<u32>>, VerifyError>>()?;
    Ok(CellMorphism::new(source, target, comps)?)
}

/// Instantiations of the uniform families of `∀A. S(A) → T(A) → U(A)` at
/// the vertices of a cell, applied to `k`, kept when they are morphisms.
fn parametric(
    model: &Model,
    family: FId,
    k: &CellMorphism,
    source: &Rc<CubeCell>,
    target: &Rc<CubeCell>,
    vertex_size: impl Fn(usize) -> u32,
) -> Result<Vec<CellMorphism>, VerifyError> {
    let fams = model.families(family, &[])?;
    let mut out: Vec<CellMorphism> = Vec::new();
    for phi in &fams.list {
        let mut comps = Vec::new();
        for w in 0..1usize << k.level() {
            let a = vertex_size(w);
            let slot = fams.slot(a).ok_or(crate::semantics::SemError::OutOfUniverse { size: a })?;
            let (kd, kc) = (k.source().carrier(w), k.target().carrier(w));
            let k_space = function_space(kc, kd);
            let (hd, hc) = (source.carrier(w), target.carrier(w));
            let h_space = function_space(hc, hd);
            let code = apply_function(phi[slot], k_space, h_space, encode_function(k.component(w), kc));
            comps.push(decode_function(code, hd, hc));
        }
        if let Ok(h) = CellMorphism::new(source.clone(), target.clone(), comps) {
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

fn function_space(cod: u32, dom: u32) -> u32 {
    cod.pow(dom)
}

/// The Church-encoded initial algebra `(Z, in)` of a strictly covariant
/// functor, with `fold`.
pub struct ChurchAlgebra {
    common: Common,
    pub carrier_type: Type,
    in_map: NatTrans,
    fold_map: NatTrans,
    /// `A ⊢ (F A → A) → Z → A`.
    fold_family: FId,
    pub in_term: Term,
    pub fold_term: Term,
    structures: RefCell<BTreeMap<Level, CellMorphism>>,
}

impl ChurchAlgebra {
    pub fn build(model: &Model, f: &Type) -> Result<Self, VerifyError> {
        let strength = Strength::derive(model, f)?;
        let z = initial_carrier(f);
        let fz = f.instantiate(&z);
        // x : F Z ⊢ ΛX. λk : F X → X. k (map [Z] [X] (λz : Z. z [X] k) x)
        let fold_inner = Term::lam(
            "z",
            z.clone(),
            Term::app(Term::ty_app(Term::Var(0), Type::Var(0)), Term::Var(1)),
        );
        let mapped = Term::app(
            Term::app(
                Term::ty_app(Term::ty_app(strength.map.clone(), z.clone()), Type::Var(0)),
                fold_inner,
            ),
            Term::Var(1),
        );
        let in_body = Term::ty_lam(
            "X",
            Term::lam("k", Type::arrow(f.clone(), Type::Var(0)), Term::app(Term::Var(0), mapped)),
        );
        let in_j = Judgment::new(0, vec![fz.clone()], in_body.clone())?;
        // A; k : F A → A, z : Z ⊢ z [A] k
        let fold_body = Term::app(Term::ty_app(Term::Var(0), Type::Var(0)), Term::Var(1));
        let k_ty = Type::arrow(f.clone(), Type::Var(0));
        let fold_j = Judgment::new(1, vec![k_ty.clone(), z.clone()], fold_body.clone())?;
        let in_term = Term::lam("x", fz, in_body);
        let fold_term = Term::ty_lam("A", Term::lam("k", k_ty.clone(), Term::lam("z", z.clone(), fold_body)));
        Judgment::closed(in_term.clone())?;
        Judgment::closed(fold_term.clone())?;
        let fold_family = model.interp_type(
            &Type::arrow(k_ty, Type::arrow(z.clone(), Type::Var(0))),
            1,
        )?;
        Ok(Self {
            common: Common {
                carrier: model.interp_type(&z, 0)?,
                strength,
            },
            carrier_type: z,
            in_map: model.interp_term(&in_j)?,
            fold_map: model.interp_term(&fold_j)?,
            fold_family,
            in_term,
            fold_term,
            structures: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn strength(&self) -> &Strength {
        &self.common.strength
    }

    pub fn functor(&self) -> FId {
        self.common.strength.functor
    }

    pub fn carrier(&self) -> FId {
        self.common.carrier
    }

    pub fn carrier_at(&self, model: &Model, level: Level) -> Result<Rc<CubeCell>, VerifyError> {
        self.common.carrier_at(model, level)
    }

    pub fn functor_at(&self, model: &Model, c: &CubeCell) -> Result<Rc<CubeCell>, VerifyError> {
        self.common.functor_at(model, c)
    }

    /// `in : F(l) Z → Z` at level `l`; an error if it does not preserve
    /// relations.
    pub fn structure(&self, model: &Model, level: Level) -> Result<CellMorphism, VerifyError> {
        if let Some(m) = self.structures.borrow().get(&level) {
            return Ok(m.clone());
        }
        let z = self.carrier_at(model, level)?;
        let fz = self.functor_at(model, &z)?;
        let comp = self.in_map.component(model, level, &[])?;
        let m = CellMorphism::new(fz, z, comp.components().to_vec())?;
        self.structures.borrow_mut().insert(level, m.clone());
        Ok(m)
    }

    /// `fold[R, k] : Z → R` for an algebra `k : F(l) R → R`.
    pub fn fold(&self, model: &Model, k: &CellMorphism) -> Result<CellMorphism, VerifyError> {
        let r = k.target().clone();
        let z = self.carrier_at(model, k.level())?;
        let rr = r.clone();
        assemble(model, &self.fold_map, k, |w| rr.carrier(w), z, r)
    }

    /// `k ∘ F(h) = h ∘ in`.
    pub fn is_algebra_morphism(
        &self,
        model: &Model,
        k: &CellMorphism,
        h: &CellMorphism,
    ) -> Result<bool, VerifyError> {
        let fh = self.common.strength.fmap(model, h)?;
        let inn = self.structure(model, h.level())?;
        Ok(k.after(&fh)? == h.after(&inn)?)
    }

    /// Algebra morphisms `Z → R` obtained by instantiating uniform
    /// families of `∀A. (F A → A) → Z → A` at `(R, k)`.
    pub fn parametric_morphisms(
        &self,
        model: &Model,
        k: &CellMorphism,
    ) -> Result<Vec<CellMorphism>, VerifyError> {
        let z = self.carrier_at(model, k.level())?;
        let r = k.target().clone();
        let rr = r.clone();
        let mut out = Vec::new();
        for h in parametric(model, self.fold_family, k, &z, &r, |w| rr.carrier(w))? {
            if self.is_algebra_morphism(model, k, &h)? {
                out.push(h);
            }
        }
        Ok(out)
    }
}

/// The Church-encoded final coalgebra `(Z', out)` with `unfold`.
pub struct ChurchCoalgebra {
    common: Common,
    pub carrier_type: Type,
    out_map: NatTrans,
    unfold_map: NatTrans,
    /// `A ⊢ (A → F A) → A → Z'`.
    unfold_family: FId,
    pub out_term: Term,
    pub unfold_term: Term,
    structures: RefCell<BTreeMap<Level, CellMorphism>>,
}

impl ChurchCoalgebra {
    pub fn build(model: &Model, f: &Type) -> Result<Self, VerifyError> {
        let strength = Strength::derive(model, f)?;
        let zp = final_carrier(f);
        let fzp = f.instantiate(&zp);
        let elim = coalgebra_eliminator(f);
        // A; c : A → F A, a : A ⊢ ΛY. λg. g [A] c a
        let unfold_body = Term::ty_lam(
            "Y",
            Term::lam(
                "g",
                elim.clone(),
                Term::app(Term::app(Term::ty_app(Term::Var(0), Type::Var(1)), Term::Var(2)), Term::Var(1)),
            ),
        );
        let c_ty = Type::arrow(Type::Var(0), f.clone());
        let unfold_j = Judgment::new(1, vec![c_ty.clone(), Type::Var(0)], unfold_body.clone())?;
        // z : Z' ⊢ z [F Z'] (ΛX. λc. λx. map [X] [Z'] (λa. ΛY. λg. g [X] c a) (c x))
        let unfold_c = Term::lam(
            "a",
            Type::Var(0),
            Term::ty_lam(
                "Y",
                Term::lam(
                    "g",
                    elim.clone(),
                    Term::app(Term::app(Term::ty_app(Term::Var(0), Type::Var(1)), Term::Var(3)), Term::Var(1)),
                ),
            ),
        );
        let step = Term::app(
            Term::app(
                Term::ty_app(Term::ty_app(strength.map.clone(), Type::Var(0)), zp.clone()),
                unfold_c,
            ),
            Term::app(Term::Var(1), Term::Var(0)),
        );
        let handler = Term::ty_lam(
            "X",
            Term::lam("c", c_ty.clone(), Term::lam("x", Type::Var(0), step)),
        );
        let out_body = Term::app(Term::ty_app(Term::Var(0), fzp.clone()), handler);
        let out_j = Judgment::new(0, vec![zp.clone()], out_body.clone())?;
        let out_term = Term::lam("z", zp.clone(), out_body);
        let unfold_term = Term::ty_lam(
            "A",
            Term::lam("c", c_ty.clone(), Term::lam("a", Type::Var(0), unfold_body)),
        );
        Judgment::closed(out_term.clone())?;
        Judgment::closed(unfold_term.clone())?;
        let unfold_family = model.interp_type(
            &Type::arrow(c_ty, Type::arrow(Type::Var(0), zp.clone())),
            1,
        )?;
        Ok(Self {
            common: Common {
                carrier: model.interp_type(&zp, 0)?,
                strength,
            },
            carrier_type: zp,
            out_map: model.interp_term(&out_j)?,
            unfold_map: model.interp_term(&unfold_j)?,
            unfold_family,
            out_term,
            unfold_term,
            structures: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn strength(&self) -> &Strength {
        &self.common.strength
    }

    pub fn functor(&self) -> FId {
        self.common.strength.functor
    }

    pub fn carrier(&self) -> FId {
        self.common.carrier
    }

    pub fn carrier_at(&self, model: &Model, level: Level) -> Result<Rc<CubeCell>, VerifyError> {
        self.common.carrier_at(model, level)
    }

    pub fn functor_at(&self, model: &Model, c: &CubeCell) -> Result<Rc<CubeCell>, VerifyError> {
        self.common.functor_at(model, c)
    }

    /// `out : Z' → F(l) Z'` at level `l`.
    pub fn structure(&self, model: &Model, level: Level) -> Result<CellMorphism, VerifyError> {
        if let Some(m) = self.structures.borrow().get(&level) {
            return Ok(m.clone());
        }
        let z = self.carrier_at(model, level)?;
        let fz = self.functor_at(model, &z)?;
        let comp = self.out_map.component(model, level, &[])?;
        let m = CellMorphism::new(z, fz, comp.components().to_vec())?;
        self.structures.borrow_mut().insert(level, m.clone());
        Ok(m)
    }

    /// `unfold[R, c] : R → Z'` for a coalgebra `c : R → F(l) R`.
    pub fn unfold(&self, model: &Model, c: &CellMorphism) -> Result<CellMorphism, VerifyError> {
        let r = c.source().clone();
        let z = self.carrier_at(model, c.level())?;
        let rr = r.clone();
        // the table of unfold is indexed by (c, a), a ranging over R itself
        let comps = (0..1usize << c.level())
            .map(|w| {
                let a = rr.carrier(w);
                let table = self.unfold_map.table(model, &[model.point(a)])?;
                let code = encode_function(c.component(w), c.target().carrier(w));
                Ok((0..a).map(|x| table[(code * a + x) as usize]).collect())
            })
            .collect::<Result<Vec<Vec<u32>>, VerifyError>>()?;
        Ok(CellMorphism::new(r, z, comps)?)
    }

    /// `out ∘ h = F(h) ∘ c`.
    pub fn is_coalgebra_morphism(
        &self,
        model: &Model,
        c: &CellMorphism,
        h: &CellMorphism,
    ) -> Result<bool, VerifyError> {
        let fh = self.common.strength.fmap(model, h)?;
        let out = self.structure(model, h.level())?;
        Ok(out.after(h)? == fh.after(c)?)
    }

    /// Coalgebra morphisms `R → Z'` obtained from uniform families of
    /// `∀A. (A → F A) → A → Z'`.
    pub fn parametric_morphisms(
        &self,
        model: &Model,
        c: &CellMorphism,
    ) -> Result<Vec<CellMorphism>, VerifyError> {
        let z = self.carrier_at(model, c.level())?;
        let r = c.source().clone();
        let rr = r.clone();
        let mut out = Vec::new();
        for h in parametric(model, self.unfold_family, c, &r, &z, |w| rr.carrier(w))? {
            if self.is_coalgebra_morphism(model, c, &h)? {
                out.push(h);
            }
        }
        Ok(out)
    }
}
