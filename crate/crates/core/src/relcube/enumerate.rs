use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use super::cell::{CellBuilder, CellMorphism, CubeCell};
use super::pattern::FacePattern;
use super::tuples::TupleSet;
use super::RelError;
use crate::cube::Level;

/// The bounded universe of carriers `{0..n-1}` with `n ≤ max_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    pub max_size: u32,
    pub include_empty: bool,
}

impl Universe {
    pub fn new(max_size: u32, include_empty: bool) -> Self {
        Self {
            max_size,
            include_empty,
        }
    }

    pub fn sizes(&self) -> impl Iterator<Item = u32> {
        let lo = if self.include_empty { 0 } else { 1.min(self.max_size) };
        lo..=self.max_size
    }

    pub fn contains(&self, n: u32) -> bool {
        n <= self.max_size && (self.include_empty || n > 0 || self.max_size == 0)
    }
}

/// Closed-form upper bound on the number of `l`-cells in the universe:
/// carrier choices times every subset of every tuple space.
pub fn estimate_cells(level: Level, universe: Universe) -> u128 {
    let choices = universe.sizes().count() as u128;
    let mut total = choices.saturating_pow(1 << level);
    let n = universe.max_size as u128;
    for u in FacePattern::relational(level) {
        let bits = n.saturating_pow(1 << u.star_count());
        if bits >= 127 {
            return u128::MAX;
        }
        total = total.saturating_mul(1u128 << bits);
    }
    total
}

/// All `l`-cells with carriers in the universe, in a fixed order: carrier
/// vectors lexicographically, then relations pattern by pattern, each as a
/// subset of its coherent candidates in binary counting order.
pub fn enumerate_cells(
    level: Level,
    universe: Universe,
    budget: u128,
) -> Result<Vec<CubeCell>, RelError> {
    let estimate = estimate_cells(level, universe);
    if estimate > budget {
        return Err(RelError::BudgetExceeded { estimate, budget });
    }
    let sizes: Vec<u32> = universe.sizes().collect();
    let patterns = FacePattern::relational(level);
    let nv = 1usize << level;
    let mut out = Vec::new();
    if sizes.is_empty() {
        return Ok(out);
    }
    let mut idx = vec![0usize; nv];
    loop {
        let carriers: Vec<u32> = idx.iter().map(|&i| sizes[i]).collect();
        fill(CellBuilder::new(level, carriers), &patterns, &mut out)?;
        let mut pos = nv;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < sizes.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn fill(b: CellBuilder, patterns: &[FacePattern], out: &mut Vec<CubeCell>) -> Result<(), RelError> {
    let Some((u, rest)) = patterns.split_first() else {
        out.push(b.finish());
        return Ok(());
    };
    let cands = b.coherent_candidates(u);
    if cands.len() > 24 {
        return Err(RelError::TooLarge(format!(
            "{} candidate tuples at {u}",
            cands.len()
        )));
    }
    let width = 1 << u.star_count();
    for mask in 0u32..1 << cands.len() {
        let rows = cands
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, t)| t);
        let mut next = b.clone();
        next.set(u, TupleSet::from_tuples(width, rows));
        fill(next, rest, out)?;
    }
    Ok(())
}

/// Calls `visit` with the components of every morphism `a → b`, in
/// lexicographic order of component tables, until it returns `false`.
/// Returns whether the enumeration ran to completion.
pub fn for_each_morphism<F>(a: &CubeCell, b: &CubeCell, mut visit: F) -> bool
where
    F: FnMut(&[Vec<u32>]) -> bool,
{
    if a.level() != b.level() {
        return true;
    }
    let level = a.level();
    let nv = 1usize << level;
    // patterns grouped by the last vertex they mention
    let mut ready: Vec<Vec<(FacePattern, Vec<usize>)>> = vec![Vec::new(); nv];
    for u in FacePattern::relational(level) {
        let vs = u.vertices();
        let last = *vs.iter().max().expect("nonempty");
        ready[last].push((u, vs));
    }
    let mut comps: Vec<Vec<u32>> = (0..nv).map(|v| vec![0; a.carrier(v) as usize]).collect();
    go(a, b, &ready, 0, &mut comps, &mut visit)
}

fn go<F>(
    a: &CubeCell,
    b: &CubeCell,
    ready: &[Vec<(FacePattern, Vec<usize>)>],
    v: usize,
    comps: &mut Vec<Vec<u32>>,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[Vec<u32>]) -> bool,
{
    if v == comps.len() {
        return visit(comps);
    }
    let (n, m) = (a.carrier(v), b.carrier(v));
    if n > 0 && m == 0 {
        return true;
    }
    for x in comps[v].iter_mut() {
        *x = 0;
    }
    loop {
        let ok = ready[v].iter().all(|(u, vs)| {
            let target = b.pred(u);
            let mut img = Vec::with_capacity(vs.len());
            a.pred(u).iter().all(|t| {
                img.clear();
                img.extend(vs.iter().zip(t).map(|(&w, &x)| comps[w][x as usize]));
                target.contains(&img)
            })
        });
        if ok && !go(a, b, ready, v + 1, comps, visit) {
            return false;
        }
        // next function table at vertex v
        let c = &mut comps[v];
        let mut pos = c.len();
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            c[pos] += 1;
            if c[pos] < m {
                break;
            }
            c[pos] = 0;
        }
    }
}

/// Every morphism between two cells.
pub fn enumerate_morphisms_between(a: &Rc<CubeCell>, b: &Rc<CubeCell>) -> Vec<CellMorphism> {
    let mut out = Vec::new();
    for_each_morphism(a, b, |c| {
        out.push(CellMorphism::from_parts(a.clone(), b.clone(), c.to_vec()));
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcube::degenerate;

    #[test]
    fn small_universes_have_the_expected_sizes() {
        let u2 = Universe::new(2, true);
        assert_eq!(enumerate_cells(0, u2, 1000).unwrap().len(), 3);
        assert_eq!(enumerate_cells(1, Universe::new(1, true), 1000).unwrap().len(), 5);
        assert_eq!(enumerate_cells(1, u2, 1000).unwrap().len(), 31);
        let empty_only = enumerate_cells(2, Universe::new(0, true), 1000).unwrap();
        assert_eq!(empty_only.len(), 1);
        assert!(empty_only[0].carriers().iter().all(|&n| n == 0));
        assert!(matches!(
            enumerate_cells(2, u2, 1_000_000),
            Err(RelError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumerated_cells_are_coherent_and_distinct() {
        let cells = enumerate_cells(2, Universe::new(1, true), 10_000).unwrap();
        let mut sorted = cells.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), cells.len());
        assert!(cells.iter().all(|c| c.is_coherent()));
    }

    #[test]
    fn morphisms_into_equality() {
        // morphisms Eq(2) → Eq(2) are pairs of equal functions
        let eq = Rc::new(degenerate(&CubeCell::point(2), 0).unwrap());
        assert_eq!(enumerate_morphisms_between(&eq, &eq).len(), 4);
        let e = Rc::new(CubeCell::point(0));
        let one = Rc::new(CubeCell::point(1));
        assert_eq!(enumerate_morphisms_between(&e, &one).len(), 1);
        assert_eq!(enumerate_morphisms_between(&one, &e).len(), 0);
    }
}
