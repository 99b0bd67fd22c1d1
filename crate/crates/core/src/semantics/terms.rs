use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::model::{CellId, FId, Model};
use super::SemError;
use crate::cube::Level;
use crate::relcube::{apply_function, encode_function, CellMorphism, FacePattern};
use crate::syntax::{typecheck, Judgment, Term, Type};

/// A term annotated with the interpretations of the types it needs, each at
/// the arity of the type context where it occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Core {
    Var(usize),
    Unit,
    Lam { dom: FId, cod: FId, body: Box<Core> },
    App { fun: Box<Core>, arg: Box<Core>, dom: FId, cod: FId },
    TyLam { body: Box<Core>, quantified: FId },
    TyApp { fun: Box<Core>, quantified: FId, arg: FId },
}

fn elaborate(
    model: &Model,
    depth: usize,
    delta: &mut Vec<Type>,
    t: &Term,
) -> Result<(Core, Type), SemError> {
    let ty = typecheck(depth, delta, t)?;
    let core = match t {
        Term::Var(i) => Core::Var(*i),
        Term::Unit => Core::Unit,
        Term::Lam(_, a, b) => {
            delta.push(a.clone());
            let r = elaborate(model, depth, delta, b);
            delta.pop();
            let (body, cod) = r?;
            Core::Lam {
                dom: model.interp_type(a, depth)?,
                cod: model.interp_type(&cod, depth)?,
                body: Box::new(body),
            }
        }
        Term::App(f, a) => {
            let (fun, fty) = elaborate(model, depth, delta, f)?;
            let (arg, _) = elaborate(model, depth, delta, a)?;
            let Type::Arrow(dom, cod) = fty else {
                unreachable!("typechecked application")
            };
            Core::App {
                fun: Box::new(fun),
                arg: Box::new(arg),
                dom: model.interp_type(&dom, depth)?,
                cod: model.interp_type(&cod, depth)?,
            }
        }
        Term::TyLam(_, b) => {
            let mut shifted: Vec<Type> = delta.iter().map(|d| d.shift(1, 0)).collect();
            let (body, bty) = elaborate(model, depth + 1, &mut shifted, b)?;
            Core::TyLam {
                body: Box::new(body),
                quantified: model.interp_type(&bty, depth + 1)?,
            }
        }
        Term::TyApp(f, s) => {
            let (fun, fty) = elaborate(model, depth, delta, f)?;
            let Type::Forall(_, body) = fty else {
                unreachable!("typechecked instantiation")
            };
            Core::TyApp {
                fun: Box::new(fun),
                quantified: model.interp_type(&body, depth + 1)?,
                arg: model.interp_type(s, depth)?,
            }
        }
    };
    Ok((core, ty))
}

/// `⟦Γ; Δ ⊢ t : T⟧`: a cubical natural transformation `⟦Δ⟧ → ⟦T⟧`, given by
/// its 0-dimensional components; higher components are assembled vertexwise.
pub struct NatTrans {
    pub judgment: Judgment,
    pub arity: usize,
    pub source: FId,
    pub target: FId,
    delta: Vec<FId>,
    core: Core,
    tables: RefCell<BTreeMap<Vec<CellId>, Rc<Vec<u32>>>>,
}

impl Model {
    pub fn interp_term(&self, j: &Judgment) -> Result<NatTrans, SemError> {
        let n = j.type_ctx_len;
        let mut delta = j.term_ctx.clone();
        let (core, ty) = elaborate(self, n, &mut delta, &j.subject)?;
        if ty != j.ty {
            return Err(SemError::Arity("judgment type does not match the term".into()));
        }
        Ok(NatTrans {
            judgment: j.clone(),
            arity: n,
            source: self.interp_context(&j.term_ctx, n)?,
            target: self.interp_type(&j.ty, n)?,
            delta: j
                .term_ctx
                .iter()
                .map(|t| self.interp_type(t, n))
                .collect::<Result<_, _>>()?,
            core,
            tables: RefCell::default(),
        })
    }

    fn run(&self, c: &Core, rho: &[CellId], env: &mut Vec<u32>) -> Result<u32, SemError> {
        Ok(match c {
            Core::Var(i) => env[env.len() - 1 - i],
            Core::Unit => 0,
            Core::Lam { dom, cod, body } => {
                let (a, b) = (self.size(*dom, rho)?, self.size(*cod, rho)?);
                let mut table = Vec::with_capacity(a as usize);
                for x in 0..a {
                    env.push(x);
                    let r = self.run(body, rho, env);
                    env.pop();
                    table.push(r?);
                }
                encode_function(&table, b)
            }
            Core::App { fun, arg, dom, cod } => {
                let f = self.run(fun, rho, env)?;
                let x = self.run(arg, rho, env)?;
                apply_function(f, self.size(*dom, rho)?, self.size(*cod, rho)?, x)
            }
            Core::TyLam { body, quantified } => {
                let fams = self.families(*quantified, rho)?;
                let mut fam = Vec::with_capacity(fams.sizes.len());
                for &n in &fams.sizes {
                    let mut rho2 = vec![self.point(n)];
                    rho2.extend_from_slice(rho);
                    fam.push(self.run(body, &rho2, env)?);
                }
                match fams.index.get(&fam) {
                    Some(&i) => i,
                    None => {
                        return Err(SemError::NotUniform(format!(
                            "family {fam:?} over carriers {:?}",
                            fams.sizes
                        )))
                    }
                }
            }
            Core::TyApp {
                fun,
                quantified,
                arg,
            } => {
                let phi = self.run(fun, rho, env)?;
                let fams = self.families(*quantified, rho)?;
                let n = self.size(*arg, rho)?;
                let Some(slot) = fams.slot(n) else {
                    return Err(SemError::OutOfUniverse { size: n });
                };
                fams.list[phi as usize][slot]
            }
        })
    }
}

impl NatTrans {
    /// The 0-dimensional component at `rho`, as a table on the elements of
    /// `⟦Δ⟧(rho)`.
    pub fn table(&self, model: &Model, rho: &[CellId]) -> Result<Rc<Vec<u32>>, SemError> {
        if let Some(t) = self.tables.borrow().get(rho) {
            return Ok(t.clone());
        }
        let total = model.size(self.source, rho)?;
        let sizes: Vec<u32> = self
            .delta
            .iter()
            .map(|&f| model.size(f, rho))
            .collect::<Result<_, _>>()?;
        let mut table = Vec::with_capacity(total as usize);
        let mut env = vec![0u32; sizes.len()];
        for e in 0..total {
            // right-nested pairs: the first variable is the most significant
            let mut rest = e;
            let mut tail: u32 = sizes.iter().product();
            for (i, &s) in sizes.iter().enumerate() {
                tail /= s.max(1);
                env[i] = rest / tail.max(1);
                rest %= tail.max(1);
            }
            let mut env2 = env.clone();
            table.push(model.run(&self.core, rho, &mut env2)?);
        }
        let t = Rc::new(table);
        self.tables.borrow_mut().insert(rho.to_vec(), t.clone());
        Ok(t)
    }

    /// The element denoted by a closed term with empty `Δ`.
    pub fn value(&self, model: &Model, rho: &[CellId]) -> Result<u32, SemError> {
        Ok(self.table(model, rho)?[0])
    }

    /// The component at level `l` and arguments `X̄`: vertexwise tables,
    /// not checked for preservation.
    pub fn component(
        &self,
        model: &Model,
        level: Level,
        args: &[CellId],
    ) -> Result<CellMorphism, SemError> {
        let source = model.cell(model.eval(self.source, level, args)?);
        let target = model.cell(model.eval(self.target, level, args)?);
        let mut comps = Vec::with_capacity(1 << level);
        for w in 0..1usize << level {
            let rho = model.restrict(&FacePattern::vertex(level, w), args)?;
            comps.push(self.table(model, &rho)?.to_vec());
        }
        Ok(CellMorphism::new_unchecked(source, target, comps)?)
    }
}
