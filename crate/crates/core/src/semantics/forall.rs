use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use super::model::{CellId, FId, FNode, Families, Model};
use super::SemError;
use crate::cube::Level;
use crate::relcube::{apply_function, CellBuilder, CubeCell, FacePattern, TupleSet};

/// A uniformity requirement: the instantiation of a family tuple at the
/// vertices of an `m`-cell `S` (read through `slots`) must lie in `top`.
struct Constraint {
    slots: Vec<usize>,
    top: Top,
}

/// The top relation of a cell, or of an exponential cell that is never
/// built: a tuple of functions is related when at every face it maps the
/// related tuples of the domain into the codomain.
enum Top {
    Set(TupleSet),
    Arrow { dom: Rc<CubeCell>, cod: Rc<CubeCell> },
}

impl Top {
    fn contains(&self, t: &[u32]) -> bool {
        match self {
            Top::Set(s) => s.contains(t),
            Top::Arrow { dom, cod } => {
                let mut img = Vec::new();
                FacePattern::relational(dom.level()).iter().all(|v| {
                    let vs = v.vertices();
                    let target = cod.pred(v);
                    dom.pred(v).iter().all(|ta| {
                        img.clear();
                        img.extend(vs.iter().zip(ta).map(|(&w, &x)| {
                            apply_function(t[w], dom.carrier(w), cod.carrier(w), x)
                        }));
                        target.contains(&img)
                    })
                })
            }
        }
    }
}

impl Model {
    fn slots_of(&self, s: &CubeCell, sizes: &[u32]) -> Vec<usize> {
        s.carriers()
            .iter()
            .map(|n| sizes.iter().position(|x| x == n).expect("universe carrier"))
            .collect()
    }

    /// Constraints for `body` at the `m`-dimensional arguments `args`, one
    /// per `m`-cell of the universe placed in the quantified slot.
    fn constraints(
        &self,
        body: FId,
        m: Level,
        args: &[CellId],
        sizes: &[u32],
    ) -> Result<Vec<Constraint>, SemError> {
        let mut out = Vec::new();
        for &s in self.universe(m)?.iter() {
            let mut full = vec![s];
            full.extend_from_slice(args);
            let top = match self.node(body) {
                FNode::Arrow(a, b) if m > 0 => Top::Arrow {
                    dom: self.cell(self.eval(a, m, &full)?),
                    cod: self.cell(self.eval(b, m, &full)?),
                },
                _ => Top::Set(self.cell(self.eval(body, m, &full)?).top().clone()),
            };
            out.push(Constraint {
                slots: self.slots_of(&self.cell(s), sizes),
                top,
            });
        }
        Ok(out)
    }

    /// The uniform families of `∀X. body` at the 0-dimensional arguments
    /// `rho`: one element of `body(A, rho)` per carrier `A`, such that for
    /// every `m ≤ p` and every `m`-cell `S` the instantiation at the vertices
    /// of `S` is related in `body(S, constant rho)`.
    pub fn families(&self, body: FId, rho: &[CellId]) -> Result<Rc<Families>, SemError> {
        let key = (body, rho.to_vec());
        if let Some(f) = self.families.borrow().get(&key) {
            return Ok(f.clone());
        }
        let sizes: Vec<u32> = self.config().universe.sizes().collect();
        let mut doms = Vec::with_capacity(sizes.len());
        for &n in &sizes {
            let mut full = vec![self.point(n)];
            full.extend_from_slice(rho);
            doms.push(self.size(body, &full)?);
        }
        let space = doms
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
        if space > self.config().budget {
            return Err(SemError::Budget {
                estimate: space,
                budget: self.config().budget,
            });
        }
        // constraints become checkable once their largest slot is assigned
        let mut ready: Vec<Vec<Constraint>> = (0..sizes.len()).map(|_| Vec::new()).collect();
        for m in 1..=self.p() {
            let lifted: Vec<CellId> = rho
                .iter()
                .map(|&c| self.constant(c, m))
                .collect::<Result<_, _>>()?;
            for c in self.constraints(body, m, &lifted, &sizes)? {
                if let Some(&last) = c.slots.iter().max() {
                    ready[last].push(c);
                }
            }
        }
        let mut list = Vec::new();
        let mut fam = vec![0u32; sizes.len()];
        search(&doms, &ready, 0, &mut fam, &mut list);
        let index: BTreeMap<Vec<u32>, u32> = list
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i as u32))
            .collect();
        let fams = Rc::new(Families { sizes, list, index });
        self.families.borrow_mut().insert(key, fams.clone());
        Ok(fams)
    }

    /// `(∀ body)(l)(X̄)`: the families at each vertex, related at a pattern
    /// `u` with `m` free coordinates when every instantiation at an `m`-cell
    /// is related by `body` over the face `u` of `X̄`.
    pub(super) fn forall_cell(
        &self,
        body: FId,
        level: Level,
        args: &[CellId],
    ) -> Result<CellId, SemError> {
        if level == 0 {
            let n = self.families(body, args)?.len();
            return Ok(self.point(n as u32));
        }
        let mut fams = Vec::with_capacity(1 << level);
        for w in 0..1usize << level {
            let rho = self.restrict(&FacePattern::vertex(level, w), args)?;
            fams.push(self.families(body, &rho)?);
        }
        let sizes = fams[0].sizes.clone();
        let carriers = fams.iter().map(|f| f.len() as u32).collect();
        let mut b = CellBuilder::new(level, carriers);
        for u in FacePattern::relational(level) {
            let m = u.star_count();
            let face_args = self.restrict(&u, args)?;
            let cons = self.constraints(body, m, &face_args, &sizes)?;
            let vs = u.vertices();
            let mut inst = vec![0u32; vs.len()];
            let rows: Vec<Vec<u32>> = b
                .coherent_candidates(&u)
                .into_iter()
                .filter(|t| {
                    cons.iter().all(|c| {
                        for (a, slot) in c.slots.iter().enumerate() {
                            inst[a] = fams[vs[a]].list[t[a] as usize][*slot];
                        }
                        c.top.contains(&inst)
                    })
                })
                .collect();
            b.set(&u, TupleSet::from_tuples(vs.len(), rows));
        }
        Ok(self.intern(b.finish()))
    }
}

fn search(
    doms: &[u32],
    ready: &[Vec<Constraint>],
    j: usize,
    fam: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if j == doms.len() {
        out.push(fam.clone());
        return;
    }
    let mut inst = Vec::new();
    for x in 0..doms[j] {
        fam[j] = x;
        let ok = ready[j].iter().all(|c| {
            inst.clear();
            inst.extend(c.slots.iter().map(|&s| fam[s]));
            c.top.contains(&inst)
        });
        if ok {
            search(doms, ready, j + 1, fam, out);
        }
    }
}
