use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::pattern::{FacePattern, Pat};
use super::tuples::TupleSet;
use super::RelError;
use crate::cube::{Level, Star};

/// An `l`-dimensional finite relation: a carrier `{0..n-1}` at each of the
/// `2^l` vertices and, at each face pattern with free coordinates, a set of
/// tuples over the pattern's vertices. Every tuple restricts into the
/// relations of the pattern's faces (coherence).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeCell {
    level: Level,
    carriers: Vec<u32>,
    /// Indexed by [`FacePattern::index`]; vertex slots hold an empty set.
    preds: Vec<TupleSet>,
}

impl CubeCell {
    /// Builds a cell and checks coherence and element ranges. Patterns
    /// missing from `preds` get the empty relation.
    pub fn new(
        level: Level,
        carriers: Vec<u32>,
        preds: BTreeMap<FacePattern, Vec<Vec<u32>>>,
    ) -> Result<Self, RelError> {
        if carriers.len() != 1 << level {
            return Err(RelError::Malformed(format!(
                "level {level} needs {} vertex carriers, got {}",
                1usize << level,
                carriers.len()
            )));
        }
        let mut b = CellBuilder::new(level, carriers);
        for u in FacePattern::relational(level) {
            b.set(&u, TupleSet::empty(1 << u.star_count()));
        }
        for (u, tuples) in preds {
            if u.level() != level || u.is_vertex() {
                return Err(RelError::Malformed(format!(
                    "pattern {u} is not a relational pattern at level {level}"
                )));
            }
            let width = 1 << u.star_count();
            if let Some(t) = tuples.iter().find(|t| t.len() != width) {
                return Err(RelError::Malformed(format!(
                    "tuple {t:?} at {u} must have {width} entries"
                )));
            }
            b.set(&u, TupleSet::from_tuples(width, tuples));
        }
        let cell = b.finish();
        cell.check_coherent()?;
        Ok(cell)
    }

    /// A 0-cell: just a carrier of the given size.
    pub fn point(size: u32) -> Self {
        Self {
            level: 0,
            carriers: vec![size],
            preds: vec![TupleSet::empty(0)],
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn carriers(&self) -> &[u32] {
        &self.carriers
    }

    pub fn carrier(&self, vertex: usize) -> u32 {
        self.carriers[vertex]
    }

    /// The carrier of a 0-cell.
    pub fn size(&self) -> u32 {
        debug_assert_eq!(self.level, 0);
        self.carriers[0]
    }

    pub fn pred(&self, u: &FacePattern) -> &TupleSet {
        &self.preds[u.index()]
    }

    /// The relation at the all-free pattern (for `l ≥ 1`).
    pub fn top(&self) -> &TupleSet {
        self.pred(&FacePattern::all_stars(self.level))
    }

    /// Tuples at a pattern; a vertex pattern yields its elements as 1-tuples.
    pub fn tuples_at(&self, u: &FacePattern) -> Vec<Vec<u32>> {
        if u.is_vertex() {
            (0..self.carriers[u.vertex_index()]).map(|e| vec![e]).collect()
        } else {
            self.pred(u).iter().map(|t| t.to_vec()).collect()
        }
    }

    pub fn holds(&self, u: &FacePattern, t: &[u32]) -> bool {
        if u.is_vertex() {
            t.len() == 1 && t[0] < self.carriers[u.vertex_index()]
        } else {
            self.pred(u).contains(t)
        }
    }

    pub fn is_coherent(&self) -> bool {
        self.check_coherent().is_ok()
    }

    pub fn check_coherent(&self) -> Result<(), RelError> {
        for u in FacePattern::relational(self.level) {
            let stars = u.stars();
            for t in self.pred(&u).iter() {
                for (j, &s) in stars.iter().enumerate() {
                    for side in Star::BOTH {
                        let face = u.with(s, Pat::from_star(side));
                        let sub: Vec<u32> =
                            u.face_positions(j, side).iter().map(|&i| t[i]).collect();
                        if !self.holds(&face, &sub) {
                            return Err(RelError::Incoherent {
                                pattern: u.to_text(),
                                tuple: t.to_vec(),
                                face: face.to_text(),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Largest vertex carrier.
    pub fn max_carrier(&self) -> u32 {
        self.carriers.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn from_parts(level: Level, carriers: Vec<u32>, preds: Vec<TupleSet>) -> Self {
        Self {
            level,
            carriers,
            preds,
        }
    }
}

/// Incremental construction of a cell, pattern by pattern in face order.
#[derive(Clone)]
pub(crate) struct CellBuilder {
    level: Level,
    carriers: Vec<u32>,
    preds: Vec<Option<TupleSet>>,
}

impl CellBuilder {
    pub fn new(level: Level, carriers: Vec<u32>) -> Self {
        let n = 3usize.pow(level as u32);
        let mut preds = vec![None; n];
        for u in FacePattern::all(level).filter(|u| u.is_vertex()) {
            preds[u.index()] = Some(TupleSet::empty(0));
        }
        Self {
            level,
            carriers,
            preds,
        }
    }

    pub fn carrier(&self, vertex: usize) -> u32 {
        self.carriers[vertex]
    }

    pub fn set(&mut self, u: &FacePattern, ts: TupleSet) {
        self.preds[u.index()] = Some(ts);
    }

    pub fn pred(&self, u: &FacePattern) -> &TupleSet {
        self.preds[u.index()].as_ref().expect("face built first")
    }

    fn holds(&self, u: &FacePattern, t: &[u32]) -> bool {
        if u.is_vertex() {
            t[0] < self.carriers[u.vertex_index()]
        } else {
            self.pred(u).contains(t)
        }
    }

    fn tuples_at(&self, u: &FacePattern) -> Vec<Vec<u32>> {
        if u.is_vertex() {
            (0..self.carriers[u.vertex_index()]).map(|e| vec![e]).collect()
        } else {
            self.pred(u).iter().map(|t| t.to_vec()).collect()
        }
    }

    /// All tuples at `u` whose every face already holds: the join of the two
    /// faces along the first free coordinate, filtered by the other faces.
    pub fn coherent_candidates(&self, u: &FacePattern) -> Vec<Vec<u32>> {
        let stars = u.stars();
        let first = stars[0];
        let lower = self.tuples_at(&u.with(first, Pat::Bot));
        let upper = self.tuples_at(&u.with(first, Pat::Top));
        let checks: Vec<(FacePattern, Vec<usize>)> = stars
            .iter()
            .enumerate()
            .skip(1)
            .flat_map(|(j, &s)| {
                Star::BOTH
                    .into_iter()
                    .map(move |side| (u.with(s, Pat::from_star(side)), u.face_positions(j, side)))
            })
            .collect();
        let mut out = Vec::new();
        let mut sub = Vec::new();
        for lo in &lower {
            for hi in &upper {
                let mut t = lo.clone();
                t.extend_from_slice(hi);
                let ok = checks.iter().all(|(face, pos)| {
                    sub.clear();
                    sub.extend(pos.iter().map(|&i| t[i]));
                    self.holds(face, &sub)
                });
                if ok {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn finish(self) -> CubeCell {
        CubeCell {
            level: self.level,
            carriers: self.carriers,
            preds: self
                .preds
                .into_iter()
                .map(|p| p.expect("every pattern built"))
                .collect(),
        }
    }
}

/// A morphism of `Rel(l)`: one function per vertex, preserving every relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellMorphism {
    source: Rc<CubeCell>,
    target: Rc<CubeCell>,
    components: Vec<Vec<u32>>,
}

impl CellMorphism {
    pub fn new(
        source: Rc<CubeCell>,
        target: Rc<CubeCell>,
        components: Vec<Vec<u32>>,
    ) -> Result<Self, RelError> {
        let m = Self::new_unchecked(source, target, components)?;
        m.check_preserves()?;
        Ok(m)
    }

    /// Checks shapes and ranges but not preservation of relations.
    pub fn new_unchecked(
        source: Rc<CubeCell>,
        target: Rc<CubeCell>,
        components: Vec<Vec<u32>>,
    ) -> Result<Self, RelError> {
        if source.level() != target.level() {
            return Err(RelError::LevelMismatch {
                expected: source.level(),
                found: target.level(),
            });
        }
        if components.len() != source.carriers().len() {
            return Err(RelError::Malformed(String::from("one component per vertex")));
        }
        for (v, c) in components.iter().enumerate() {
            if c.len() != source.carrier(v) as usize
                || c.iter().any(|&y| y >= target.carrier(v))
            {
                return Err(RelError::Malformed(format!(
                    "component at vertex {v} is not a function {} -> {}",
                    source.carrier(v),
                    target.carrier(v)
                )));
            }
        }
        Ok(Self {
            source,
            target,
            components,
        })
    }

    pub(crate) fn from_parts(
        source: Rc<CubeCell>,
        target: Rc<CubeCell>,
        components: Vec<Vec<u32>>,
    ) -> Self {
        Self {
            source,
            target,
            components,
        }
    }

    pub fn identity(cell: Rc<CubeCell>) -> Self {
        let components = cell.carriers().iter().map(|&n| (0..n).collect()).collect();
        Self {
            source: cell.clone(),
            target: cell,
            components,
        }
    }

    pub fn source(&self) -> &Rc<CubeCell> {
        &self.source
    }

    pub fn target(&self) -> &Rc<CubeCell> {
        &self.target
    }

    pub fn level(&self) -> Level {
        self.source.level()
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component(&self, vertex: usize) -> &[u32] {
        &self.components[vertex]
    }

    pub fn map_tuple(&self, u: &FacePattern, t: &[u32]) -> Vec<u32> {
        u.vertices()
            .iter()
            .zip(t)
            .map(|(&v, &x)| self.components[v][x as usize])
            .collect()
    }

    pub fn check_preserves(&self) -> Result<(), RelError> {
        for u in FacePattern::relational(self.level()) {
            let vs = u.vertices();
            let target = self.target.pred(&u);
            let mut img = Vec::with_capacity(vs.len());
            for t in self.source.pred(&u).iter() {
                img.clear();
                img.extend(vs.iter().zip(t).map(|(&v, &x)| self.components[v][x as usize]));
                if !target.contains(&img) {
                    return Err(RelError::NotAMorphism {
                        pattern: u.to_text(),
                        tuple: t.to_vec(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn preserves(&self) -> bool {
        self.check_preserves().is_ok()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CellMorphism) -> Result<CellMorphism, RelError> {
        if first.target != self.source {
            return Err(RelError::Malformed(String::from(
                "composite of morphisms whose cells do not match",
            )));
        }
        let components = first
            .components
            .iter()
            .zip(&self.components)
            .map(|(f, g)| f.iter().map(|&x| g[x as usize]).collect())
            .collect();
        Ok(Self {
            source: first.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .components
                .iter()
                .all(|c| c.iter().enumerate().all(|(i, &y)| y as usize == i))
    }

    /// Every component is the identity function (source and target may differ
    /// in their relations).
    pub fn is_vertex_identity(&self) -> bool {
        self.source.carriers() == self.target.carriers()
            && self
                .components
                .iter()
                .all(|c| c.iter().enumerate().all(|(i, &y)| y as usize == i))
    }
}

/// An isomorphism of `Rel(l)` in the good class: every vertex component is an
/// identity. Both directions preserve relations, so source and target agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodIso {
    forward: CellMorphism,
    backward: CellMorphism,
}

impl GoodIso {
    /// The vertex-identity isomorphism between two cells, if there is one.
    pub fn between(a: &Rc<CubeCell>, b: &Rc<CubeCell>) -> Option<GoodIso> {
        if a.level() != b.level() || a.carriers() != b.carriers() {
            return None;
        }
        let id: Vec<Vec<u32>> = a.carriers().iter().map(|&n| (0..n).collect()).collect();
        let forward = CellMorphism::new(a.clone(), b.clone(), id.clone()).ok()?;
        let backward = CellMorphism::new(b.clone(), a.clone(), id).ok()?;
        Some(GoodIso { forward, backward })
    }

    pub fn identity(cell: Rc<CubeCell>) -> GoodIso {
        GoodIso {
            forward: CellMorphism::identity(cell.clone()),
            backward: CellMorphism::identity(cell),
        }
    }

    /// Accepts a morphism as good if it is a vertex identity with a
    /// relation-preserving inverse.
    pub fn from_morphism(m: &CellMorphism) -> Option<GoodIso> {
        if !m.is_vertex_identity() || !m.preserves() {
            return None;
        }
        GoodIso::between(m.source(), m.target())
    }

    pub fn forward(&self) -> &CellMorphism {
        &self.forward
    }

    pub fn backward(&self) -> &CellMorphism {
        &self.backward
    }

    pub fn level(&self) -> Level {
        self.forward.level()
    }

    pub fn inverse(&self) -> GoodIso {
        GoodIso {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GoodIso) -> Result<GoodIso, RelError> {
        Ok(GoodIso {
            forward: self.forward.after(&first.forward)?,
            backward: first.backward.after(&self.backward)?,
        })
    }

    /// Checks the defining properties: vertex identities, mutually inverse,
    /// relation preserving both ways.
    pub fn is_valid(&self) -> bool {
        self.forward.is_vertex_identity()
            && self.backward.is_vertex_identity()
            && self.forward.preserves()
            && self.backward.preserves()
            && self.forward.source() == self.backward.target()
            && self.forward.target() == self.backward.source()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn rel(a: u32, b: u32, pairs: &[[u32; 2]]) -> CubeCell {
        let mut preds = BTreeMap::new();
        preds.insert(
            FacePattern::all_stars(1),
            pairs.iter().map(|p| p.to_vec()).collect(),
        );
        CubeCell::new(1, vec![a, b], preds).unwrap()
    }

    #[test]
    fn coherence_is_checked() {
        let mut preds = BTreeMap::new();
        preds.insert(FacePattern::all_stars(1), vec![vec![0, 2]]);
        assert!(matches!(
            CubeCell::new(1, vec![1, 2], preds),
            Err(RelError::Incoherent { .. })
        ));
        let c = rel(2, 2, &[[0, 1], [1, 0]]);
        assert!(c.is_coherent());
        assert_eq!(c.top().len(), 2);
    }

    #[test]
    fn two_cell_coherence_uses_every_face() {
        let mut preds = BTreeMap::new();
        // all four edges empty but a square present
        preds.insert(FacePattern::all_stars(2), vec![vec![0, 0, 0, 0]]);
        assert!(CubeCell::new(2, vec![1; 4], preds).is_err());
    }

    #[test]
    fn morphisms_must_preserve() {
        let a = Rc::new(rel(2, 2, &[[0, 0], [1, 1]]));
        let b = Rc::new(rel(2, 2, &[[0, 0]]));
        assert!(CellMorphism::new(a.clone(), b.clone(), vec![vec![0, 0], vec![0, 0]]).is_ok());
        assert!(matches!(
            CellMorphism::new(a.clone(), b.clone(), vec![vec![0, 1], vec![0, 1]]),
            Err(RelError::NotAMorphism { .. })
        ));
        assert!(GoodIso::between(&a, &b).is_none());
        let same = Rc::new(rel(2, 2, &[[1, 1], [0, 0]]));
        let iso = GoodIso::between(&a, &same).unwrap();
        assert!(iso.is_valid());
        assert!(iso.after(&iso.inverse()).unwrap().forward().is_identity());
    }
}
