use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::SemError;
use crate::cube::{BoxMorphism, Level};
use crate::relcube::{
    act, enumerate_cells, estimate_cells, exponential_cell, product_cell, terminal, CubeCell,
    FacePattern, Universe,
};
use crate::syntax::Type;

/// The bounded world the interpretation is tabulated over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Config {
    /// Dimension bound `p`.
    pub p: Level,
    pub universe: Universe,
    /// Largest carrier, cell universe or search space that may be built.
    pub budget: u128,
}

impl Config {
    pub fn new(p: Level, max_size: u32, include_empty: bool, budget: u128) -> Self {
        Self {
            p,
            universe: Universe::new(max_size, include_empty),
            budget,
        }
    }

    /// Closed-form bound on the cell universes up to level `p`.
    pub fn universe_estimate(&self) -> u128 {
        (0..=self.p)
            .map(|l| estimate_cells(l, self.universe))
            .fold(0u128, |a, b| a.saturating_add(b))
    }
}

/// An interned cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub u32);

/// An interned cubical functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FId(pub u32);

/// Functor expressions. Argument slot `i` holds the type variable with de
/// Bruijn index `i`, so a quantifier's new variable takes slot 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FNode {
    Proj(usize),
    Terminal,
    Prod(FId, FId),
    Arrow(FId, FId),
    Forall(FId),
    Compose(FId, Vec<FId>),
}

/// The uniform families making up a quantified type at one 0-dimensional
/// argument tuple, in lexicographic order. Entry `j` of a family is its
/// component at the `j`-th carrier size of the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Families {
    pub sizes: Vec<u32>,
    pub list: Vec<Vec<u32>>,
    pub index: BTreeMap<Vec<u32>, u32>,
}

impl Families {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    /// Position of a carrier size in the universe.
    pub fn slot(&self, size: u32) -> Option<usize> {
        self.sizes.iter().position(|&s| s == size)
    }
}

#[derive(Default)]
struct Cells {
    list: Vec<Rc<CubeCell>>,
    ids: BTreeMap<Rc<CubeCell>, CellId>,
}

#[derive(Default)]
struct Functors {
    list: Vec<(FNode, usize)>,
    ids: BTreeMap<(FNode, usize), FId>,
}

pub(super) type Memo<K, V> = RefCell<BTreeMap<K, V>>;

/// The tabulated interpretation: interned cells and functors with memoized
/// evaluation. All state is caches; results never change once computed.
pub struct Model {
    cfg: Config,
    cells: RefCell<Cells>,
    functors: RefCell<Functors>,
    evals: Memo<(FId, Level, Vec<CellId>), CellId>,
    universes: RefCell<BTreeMap<Level, Rc<Vec<CellId>>>>,
    pub(super) families: Memo<(FId, Vec<CellId>), Rc<Families>>,
    actions: RefCell<BTreeMap<(BoxMorphism, CellId), CellId>>,
}

impl Model {
    pub fn new(cfg: Config) -> Self {
        Self {
            cfg,
            cells: RefCell::default(),
            functors: RefCell::default(),
            evals: RefCell::default(),
            universes: RefCell::default(),
            families: RefCell::default(),
            actions: RefCell::default(),
        }
    }

    pub fn config(&self) -> &Config {
        &self.cfg
    }

    pub fn p(&self) -> Level {
        self.cfg.p
    }

    pub fn intern(&self, c: CubeCell) -> CellId {
        let mut cells = self.cells.borrow_mut();
        if let Some(&id) = cells.ids.get(&c) {
            return id;
        }
        let id = CellId(cells.list.len() as u32);
        let rc = Rc::new(c);
        cells.list.push(rc.clone());
        cells.ids.insert(rc, id);
        id
    }

    pub fn cell(&self, id: CellId) -> Rc<CubeCell> {
        self.cells.borrow().list[id.0 as usize].clone()
    }

    pub fn point(&self, size: u32) -> CellId {
        self.intern(CubeCell::point(size))
    }

    /// Number of interned cells.
    pub fn cell_count(&self) -> usize {
        self.cells.borrow().list.len()
    }

    pub fn functor(&self, node: FNode, arity: usize) -> FId {
        let mut fs = self.functors.borrow_mut();
        let key = (node, arity);
        if let Some(&id) = fs.ids.get(&key) {
            return id;
        }
        let id = FId(fs.list.len() as u32);
        fs.list.push(key.clone());
        fs.ids.insert(key, id);
        id
    }

    pub fn node(&self, f: FId) -> FNode {
        self.functors.borrow().list[f.0 as usize].0.clone()
    }

    pub fn arity(&self, f: FId) -> usize {
        self.functors.borrow().list[f.0 as usize].1
    }

    pub fn proj(&self, i: usize, arity: usize) -> FId {
        self.functor(FNode::Proj(i), arity)
    }

    pub fn terminal(&self, arity: usize) -> FId {
        self.functor(FNode::Terminal, arity)
    }

    pub fn prod(&self, a: FId, b: FId) -> FId {
        let n = self.arity(a);
        self.functor(FNode::Prod(a, b), n)
    }

    pub fn arrow(&self, a: FId, b: FId) -> FId {
        let n = self.arity(a);
        self.functor(FNode::Arrow(a, b), n)
    }

    pub fn forall(&self, body: FId) -> FId {
        let n = self.arity(body);
        self.functor(FNode::Forall(body), n - 1)
    }

    /// `outer ∘ ⟨inners⟩`; the result has the inners' arity.
    pub fn compose(&self, outer: FId, inners: Vec<FId>, arity: usize) -> Result<FId, SemError> {
        if inners.len() != self.arity(outer) || inners.iter().any(|&g| self.arity(g) != arity) {
            return Err(SemError::Arity(format!(
                "composing a functor of arity {} with {} functors",
                self.arity(outer),
                inners.len()
            )));
        }
        Ok(self.functor(FNode::Compose(outer, inners), arity))
    }

    /// The identity context morphism `n → n`.
    pub fn projections(&self, n: usize) -> Vec<FId> {
        (0..n).map(|i| self.proj(i, n)).collect()
    }

    /// `F` viewed in a context with `by` extra innermost variables.
    pub fn weaken(&self, f: FId, by: usize) -> FId {
        let n = self.arity(f);
        let inners = (0..n).map(|i| self.proj(i + by, n + by)).collect();
        self.functor(FNode::Compose(f, inners), n + by)
    }

    /// `⟦Γ ⊢ T⟧` for `|Γ| = n`.
    pub fn interp_type(&self, t: &Type, n: usize) -> Result<FId, SemError> {
        if !t.is_closed_in(n) {
            return Err(SemError::Arity(format!("type is not well scoped in {n} variables")));
        }
        Ok(self.interp_type_unchecked(t, n))
    }

    fn interp_type_unchecked(&self, t: &Type, n: usize) -> FId {
        match t {
            Type::Var(i) => self.proj(*i, n),
            Type::Unit => self.terminal(n),
            Type::Arrow(a, b) => {
                let a = self.interp_type_unchecked(a, n);
                let b = self.interp_type_unchecked(b, n);
                self.arrow(a, b)
            }
            Type::Forall(_, b) => {
                let b = self.interp_type_unchecked(b, n + 1);
                self.forall(b)
            }
        }
    }

    /// `⟦Δ⟧` as the right-nested product `T₁ × (T₂ × (… × (Tₖ × 1)))`.
    pub fn interp_context(&self, delta: &[Type], n: usize) -> Result<FId, SemError> {
        let mut acc = self.terminal(n);
        for t in delta.iter().rev() {
            let f = self.interp_type(t, n)?;
            acc = self.prod(f, acc);
        }
        Ok(acc)
    }

    /// All cells of a level in the universe.
    pub fn universe(&self, level: Level) -> Result<Rc<Vec<CellId>>, SemError> {
        if let Some(u) = self.universes.borrow().get(&level) {
            return Ok(u.clone());
        }
        let cells = enumerate_cells(level, self.cfg.universe, self.cfg.budget)?;
        let ids = Rc::new(cells.into_iter().map(|c| self.intern(c)).collect::<Vec<_>>());
        self.universes.borrow_mut().insert(level, ids.clone());
        Ok(ids)
    }

    /// Every tuple of `n` cells of a level.
    pub fn arg_tuples(&self, level: Level, n: usize) -> Result<Vec<Vec<CellId>>, SemError> {
        let u = self.universe(level)?;
        let count = (u.len() as u128).saturating_pow(n as u32);
        if count > self.cfg.budget {
            return Err(SemError::Budget {
                estimate: count,
                budget: self.cfg.budget,
            });
        }
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| {
                    u.iter().map(move |&c| {
                        let mut t2 = t.clone();
                        t2.push(c);
                        t2
                    })
                })
                .collect();
        }
        Ok(out)
    }

    pub fn act(&self, h: &BoxMorphism, c: CellId) -> Result<CellId, SemError> {
        let key = (h.clone(), c);
        if let Some(&r) = self.actions.borrow().get(&key) {
            return Ok(r);
        }
        let r = self.intern(act(h, &self.cell(c))?);
        self.actions.borrow_mut().insert(key, r);
        Ok(r)
    }

    pub fn act_all(&self, h: &BoxMorphism, args: &[CellId]) -> Result<Vec<CellId>, SemError> {
        args.iter().map(|&c| self.act(h, c)).collect()
    }

    /// Restriction of every argument to the face `u`.
    pub fn restrict(&self, u: &FacePattern, args: &[CellId]) -> Result<Vec<CellId>, SemError> {
        self.act_all(&u.restriction(), args)
    }

    /// The fully degenerate `m`-cell on a 0-cell.
    pub fn constant(&self, c: CellId, m: Level) -> Result<CellId, SemError> {
        let h = BoxMorphism::new(m, Vec::new()).expect("empty assignment");
        self.act(&h, c)
    }

    fn bounded(&self, c: CubeCell) -> Result<CellId, SemError> {
        if let Some(&n) = c.carriers().iter().max() {
            if n as u128 > self.cfg.budget {
                return Err(SemError::Budget {
                    estimate: n as u128,
                    budget: self.cfg.budget,
                });
            }
        }
        Ok(self.intern(c))
    }

    /// `F(l)(X̄)`.
    pub fn eval(&self, f: FId, level: Level, args: &[CellId]) -> Result<CellId, SemError> {
        debug_assert_eq!(args.len(), self.arity(f));
        let key = (f, level, args.to_vec());
        if let Some(&c) = self.evals.borrow().get(&key) {
            return Ok(c);
        }
        let r = match self.node(f) {
            FNode::Proj(i) => args[i],
            FNode::Terminal => self.intern(terminal(level)),
            FNode::Prod(a, b) => {
                let (x, y) = (self.eval(a, level, args)?, self.eval(b, level, args)?);
                let c = product_cell(&self.cell(x), &self.cell(y))?;
                self.bounded(c)?
            }
            FNode::Arrow(a, b) => {
                let (x, y) = (self.eval(a, level, args)?, self.eval(b, level, args)?);
                let (cx, cy) = (self.cell(x), self.cell(y));
                // the product of the function-set sizes bounds the top relation
                let mut estimate: u128 = 1;
                for (&n, &m) in cx.carriers().iter().zip(cy.carriers()) {
                    let size = (m as u128).checked_pow(n).unwrap_or(u128::MAX);
                    estimate = estimate.saturating_mul(size.max(1));
                    if size > self.cfg.budget || estimate > self.cfg.budget {
                        return Err(SemError::Budget {
                            estimate,
                            budget: self.cfg.budget,
                        });
                    }
                }
                let c = exponential_cell(&cx, &cy)?;
                self.bounded(c)?
            }
            FNode::Forall(body) => self.forall_cell(body, level, args)?,
            FNode::Compose(outer, inners) => {
                let inner: Vec<CellId> = inners
                    .iter()
                    .map(|&g| self.eval(g, level, args))
                    .collect::<Result<_, _>>()?;
                self.eval(outer, level, &inner)?
            }
        };
        self.evals.borrow_mut().insert(key, r);
        Ok(r)
    }

    /// The carrier size of a 0-dimensional value.
    pub fn size(&self, f: FId, rho: &[CellId]) -> Result<u32, SemError> {
        Ok(self.cell(self.eval(f, 0, rho)?).size())
    }

    /// A short description of a functor, for reports.
    pub fn describe(&self, f: FId) -> String {
        match self.node(f) {
            FNode::Proj(i) => format!("X{i}"),
            FNode::Terminal => String::from("1"),
            FNode::Prod(a, b) => format!("({} × {})", self.describe(a), self.describe(b)),
            FNode::Arrow(a, b) => format!("({} ⇒ {})", self.describe(a), self.describe(b)),
            FNode::Forall(b) => format!("∀{}", self.describe(b)),
            FNode::Compose(o, is) => {
                let parts: Vec<String> = is.iter().map(|&g| self.describe(g)).collect();
                format!("{}∘⟨{}⟩", self.describe(o), parts.join(", "))
            }
        }
    }
}
