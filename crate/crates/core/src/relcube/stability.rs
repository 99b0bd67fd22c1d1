//! Executable stability of the cartesian closed structure, functoriality of
//! the cube action, closure of good isomorphisms, and the universal
//! properties of the chosen (op)cartesian lifts.

use alloc::format;
use alloc::rc::Rc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    act, act_morphism, degenerate, enumerate_cells, enumerate_morphisms_between, exponential,
    factor_through_cartesian, opreindex, pair, product, reindex, terminal, CellBuilder,
    CellMorphism, CubeCell, FacePattern, GoodIso, TupleSet, Universe,
};
use crate::cube::{compose, generators, BoxMorphism, Level};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityConfig {
    pub p: Level,
    pub universe: Universe,
    pub budget: u128,
    pub seed: u64,
    /// Random cells added at a level too large to enumerate.
    pub samples: usize,
}

/// The cells a check ranges over at one level.
#[derive(Clone, Debug)]
pub struct CellSample {
    pub cells: Vec<Rc<CubeCell>>,
    pub exhaustive: bool,
}

/// All cells of the level when the universe fits the budget; otherwise the
/// degenerate images of the level below plus seeded random cells.
pub fn sample_cells(level: Level, cfg: &StabilityConfig) -> CellSample {
    if let Ok(cells) = enumerate_cells(level, cfg.universe, cfg.budget) {
        return CellSample {
            cells: cells.into_iter().map(Rc::new).collect(),
            exhaustive: true,
        };
    }
    let below = sample_cells(level - 1, cfg);
    let mut cells: Vec<CubeCell> = Vec::new();
    for c in &below.cells {
        for k in 0..level {
            cells.push(degenerate(c, k).expect("degeneracy in range"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ level as u64);
    for _ in 0..cfg.samples {
        cells.push(random_cell(level, cfg.universe, &mut rng));
    }
    cells.sort();
    cells.dedup();
    CellSample {
        cells: cells.into_iter().map(Rc::new).collect(),
        exhaustive: false,
    }
}

/// A coherent cell with uniformly chosen carriers, each coherent candidate
/// tuple kept with probability one half.
pub fn random_cell<R: Rng>(level: Level, universe: Universe, rng: &mut R) -> CubeCell {
    let sizes: Vec<u32> = universe.sizes().collect();
    let carriers = (0..1usize << level)
        .map(|_| sizes[rng.random_range(0..sizes.len())])
        .collect();
    let mut b = CellBuilder::new(level, carriers);
    for u in FacePattern::relational(level) {
        let rows: Vec<Vec<u32>> = b
            .coherent_candidates(&u)
            .into_iter()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        b.set(&u, TupleSet::from_tuples(1 << u.star_count(), rows));
    }
    b.finish()
}

fn is_face(h: &BoxMorphism) -> bool {
    h.target() + 1 == h.source()
}

fn generators_from(p: Level, level: Level) -> impl Iterator<Item = BoxMorphism> {
    generators(p).into_iter().filter(move |h| h.source() == level)
}

fn sample_note(level: Level, s: &CellSample) -> Option<alloc::string::String> {
    (!s.exhaustive).then(|| {
        format!(
            "level {level}: {} cells (degenerate images and seeded samples)",
            s.cells.len()
        )
    })
}

/// Stability of terminal objects, products and exponentials under the cube
/// action, plus functoriality of the action and closure of good isos.
pub fn check_stability(cfg: &StabilityConfig) -> Vec<Check> {
    let samples: Vec<CellSample> = (0..=cfg.p).map(|l| sample_cells(l, cfg)).collect();
    let mut functorial = Check::new("act is functorial");
    let mut term = Check::new("terminal is stable");
    let mut prod_face = Check::new("products commute with faces");
    let mut prod_degen = Check::new("products commute with degeneracies up to good iso");
    let mut exp_face = Check::new("exponentials commute with faces");
    let mut exp_degen = Check::new("exponentials commute with degeneracies up to good iso");
    let mut good = Check::new("good isos are closed");

    for (level, sample) in samples.iter().enumerate() {
        let gens: Vec<BoxMorphism> = generators_from(cfg.p, level).collect();
        for h in &gens {
            let t = act(h, &terminal(level)).expect("levels match");
            let target = Rc::new(terminal(h.target()));
            let ok = if is_face(h) {
                t == *target
            } else {
                GoodIso::between(&Rc::new(t), &target).is_some_and(|i| i.is_valid())
            };
            term.case(ok, || format!("{h} on the terminal {level}-cell"));
        }
        for c in &sample.cells {
            let id = BoxMorphism::identity(level);
            functorial.case(act(&id, c).as_ref() == Ok(&**c), || {
                format!("identity on {c:?}")
            });
            let idm = CellMorphism::identity(c.clone());
            for f in &gens {
                let fc = act(f, c).expect("levels match");
                functorial.case(
                    act_morphism(f, &idm).is_ok_and(|m| m.is_identity()),
                    || format!("{f} on the identity of {c:?}"),
                );
                for g in generators_from(cfg.p, f.target()) {
                    let gf = compose(&g, f).expect("levels chain");
                    let ok = act(&gf, c).ok() == act(&g, &fc).ok();
                    functorial.case(ok, || format!("{g} after {f} on {c:?}"));
                }
                let iso = GoodIso::identity(c.clone());
                let moved = act_morphism(f, iso.forward()).expect("levels match");
                good.case(
                    GoodIso::from_morphism(&moved).is_some_and(|i| i.is_valid()),
                    || format!("{f} applied to the identity iso on {c:?}"),
                );
            }
            let iso = GoodIso::identity(c.clone());
            good.case(
                iso.is_valid()
                    && iso.inverse().is_valid()
                    && iso.after(&iso).is_ok_and(|i| i.is_valid()),
                || format!("identity iso on {c:?}"),
            );
        }
        for a in &sample.cells {
            for b in &sample.cells {
                check_pair(a, b, &gens, &mut prod_face, &mut prod_degen, &mut exp_face, &mut exp_degen);
            }
        }
    }
    let notes: Vec<_> = samples
        .iter()
        .enumerate()
        .filter_map(|(l, s)| sample_note(l, s))
        .collect();
    let mut out = alloc::vec![functorial, term, prod_face, prod_degen, exp_face, exp_degen, good];
    for c in &mut out {
        c.notes.extend(notes.iter().cloned());
    }
    out
}

fn check_pair(
    a: &Rc<CubeCell>,
    b: &Rc<CubeCell>,
    gens: &[BoxMorphism],
    prod_face: &mut Check,
    prod_degen: &mut Check,
    exp_face: &mut Check,
    exp_degen: &mut Check,
) {
    let p = product(a, b).expect("small carriers");
    let e = exponential(a, b).expect("small carriers");
    for h in gens {
        let ha = Rc::new(act(h, a).expect("levels match"));
        let hb = Rc::new(act(h, b).expect("levels match"));
        let hp = product(&ha, &hb).expect("small carriers");
        let he = exponential(&ha, &hb).expect("small carriers");
        let moved_cell = Rc::new(act(h, &p.cell).expect("levels match"));
        let moved_fst = act_morphism(h, &p.fst).expect("levels match");
        let moved_snd = act_morphism(h, &p.snd).expect("levels match");
        let moved_exp = Rc::new(act(h, &e.cell).expect("levels match"));
        let moved_eval = act_morphism(h, &e.eval).expect("levels match");
        let what = || format!("{h} on ({a:?}, {b:?})");
        if is_face(h) {
            prod_face.case(
                moved_cell == hp.cell && moved_fst == hp.fst && moved_snd == hp.snd,
                what,
            );
            exp_face.case(moved_exp == he.cell && moved_eval == he.eval, what);
            continue;
        }
        // ε : h(A × B) ≅ hA × hB with the projection triangles
        let triangles = GoodIso::between(&moved_cell, &hp.cell).is_some_and(|eps| {
            eps.is_valid()
                && hp.fst.after(eps.forward()).as_ref() == Ok(&moved_fst)
                && hp.snd.after(eps.forward()).as_ref() == Ok(&moved_snd)
        });
        prod_degen.case(triangles, what);
        // υ : h(A ⇒ B) ≅ hA ⇒ hB with eval' ∘ (υ × id) ∘ ε = h(eval)
        let square = (|| {
            let ups = GoodIso::between(&moved_exp, &he.cell)?;
            let mid = product(&moved_exp, &ha).ok()?;
            let eps = GoodIso::between(moved_eval.source(), &mid.cell)?;
            let ups_fst = ups.forward().after(&mid.fst).ok()?;
            let ups_times_id = pair(&he.product, &ups_fst, &mid.snd).ok()?;
            let lhs = he.eval.after(&ups_times_id).ok()?.after(eps.forward()).ok()?;
            Some(ups.is_valid() && eps.is_valid() && ups_times_id.preserves() && lhs == moved_eval)
        })()
        .unwrap_or(false);
        exp_degen.case(square, what);
    }
}

/// Universal properties and split functoriality of the chosen cartesian and
/// opcartesian lifts, for each base level `l < p` (over the restriction of an
/// `(l+1)`-cell to its two faces at coordinate `k`).
pub fn check_lifts(cfg: &StabilityConfig) -> Vec<Check> {
    let mut cart = Check::new("reindexing gives cartesian lifts");
    let mut opcart = Check::new("opreindexing gives opcartesian lifts");
    let mut split = Check::new("lifts are split");
    let mut notes = Vec::new();
    for l in 0..cfg.p {
        let mut lcfg = *cfg;
        while enumerate_cells(l + 1, lcfg.universe, lcfg.budget).is_err() && lcfg.universe.max_size > 0 {
            lcfg.universe.max_size -= 1;
        }
        if lcfg.universe != cfg.universe {
            notes.push(format!(
                "base level {l}: carriers up to {} so that {}-cells can be enumerated",
                lcfg.universe.max_size,
                l + 1
            ));
        }
        let base: Vec<Rc<CubeCell>> = enumerate_cells(l, lcfg.universe, lcfg.budget)
            .unwrap_or_default()
            .into_iter()
            .map(Rc::new)
            .collect();
        let tops: Vec<Rc<CubeCell>> = enumerate_cells(l + 1, lcfg.universe, lcfg.budget)
            .unwrap_or_default()
            .into_iter()
            .map(Rc::new)
            .collect();
        for k in 0..=l {
            lifts_at(k, &base, &tops, &mut cart, &mut opcart, &mut split);
        }
    }
    let mut out = alloc::vec![cart, opcart, split];
    for c in &mut out {
        c.notes.extend(notes.iter().cloned());
    }
    out
}

fn faces_at(c: &CubeCell, k: usize) -> (Rc<CubeCell>, Rc<CubeCell>) {
    use crate::cube::Star;
    (
        Rc::new(super::face_of(c, k, Star::Bot).expect("k in range")),
        Rc::new(super::face_of(c, k, Star::Top).expect("k in range")),
    )
}

fn lifts_at(
    k: usize,
    base: &[Rc<CubeCell>],
    tops: &[Rc<CubeCell>],
    cart: &mut Check,
    opcart: &mut Check,
    split: &mut Check,
) {
    let top_faces: Vec<(Rc<CubeCell>, Rc<CubeCell>)> = tops.iter().map(|c| faces_at(c, k)).collect();
    for (c, (c0, c1)) in tops.iter().zip(&top_faces) {
        let id0 = CellMorphism::identity(c0.clone());
        let id1 = CellMorphism::identity(c1.clone());
        split.case(
            reindex(&id0, &id1, c, k).is_ok_and(|x| x.cell == *c)
                && opreindex(&id0, &id1, c, k).is_ok_and(|x| x.cell == *c),
            || format!("identity lifts of {c:?}"),
        );
        // cartesian: morphisms into the faces of c
        for a0 in base {
            let into0 = enumerate_morphisms_between(a0, c0);
            for a1 in base {
                let into1 = enumerate_morphisms_between(a1, c1);
                for f0 in &into0 {
                    for f1 in &into1 {
                        let lift = reindex(f0, f1, c, k).expect("faces match");
                        let (l0, l1) = faces_at(&lift.cell, k);
                        cart.case(
                            lift.cell.is_coherent()
                                && lift.morphism.preserves()
                                && l0 == *a0
                                && l1 == *a1,
                            || format!("lift of {c:?} along {f0:?}, {f1:?}"),
                        );
                        for (x, (x0, x1)) in tops.iter().zip(&top_faces) {
                            for v0 in enumerate_morphisms_between(x0, a0) {
                                for v1 in enumerate_morphisms_between(x1, a1) {
                                    let m0 = f0.after(&v0).expect("chain");
                                    let m1 = f1.after(&v1).expect("chain");
                                    let comps = over(&lift.cell, k, &m0, &m1);
                                    let Ok(m) = CellMorphism::new(x.clone(), c.clone(), comps) else {
                                        continue;
                                    };
                                    cart.case(
                                        factor_through_cartesian(&lift, &v0, &v1, &m, k).is_some(),
                                        || format!("no factorization of {m:?}"),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        // opcartesian: morphisms out of the faces of c
        for b0 in base {
            let from0 = enumerate_morphisms_between(c0, b0);
            for b1 in base {
                let from1 = enumerate_morphisms_between(c1, b1);
                for g0 in &from0 {
                    for g1 in &from1 {
                        let lift = opreindex(g0, g1, c, k).expect("faces match");
                        let (l0, l1) = faces_at(&lift.cell, k);
                        opcart.case(
                            lift.cell.is_coherent()
                                && lift.morphism.preserves()
                                && l0 == *b0
                                && l1 == *b1,
                            || format!("lift of {c:?} along {g0:?}, {g1:?}"),
                        );
                        for (y, (y0, y1)) in tops.iter().zip(&top_faces) {
                            for w0 in enumerate_morphisms_between(b0, y0) {
                                for w1 in enumerate_morphisms_between(b1, y1) {
                                    let m0 = w0.after(g0).expect("chain");
                                    let m1 = w1.after(g1).expect("chain");
                                    let comps = over(c, k, &m0, &m1);
                                    if CellMorphism::new(c.clone(), y.clone(), comps).is_err() {
                                        continue;
                                    }
                                    let fac = over(&lift.cell, k, &w0, &w1);
                                    opcart.case(
                                        CellMorphism::new(lift.cell.clone(), y.clone(), fac).is_ok(),
                                        || format!("no factorization through {:?}", lift.cell),
                                    );
                                }
                            }
                        }
                        // (w ∘ g)_! = w_! ∘ g_! on the same data, w ranging over identities
                        // and the faces' endomorphisms
                        for w0 in enumerate_morphisms_between(b0, b0).iter().take(3) {
                            for w1 in enumerate_morphisms_between(b1, b1).iter().take(3) {
                                let once = opreindex(
                                    &w0.after(g0).expect("chain"),
                                    &w1.after(g1).expect("chain"),
                                    c,
                                    k,
                                )
                                .expect("faces match");
                                let twice = opreindex(w0, w1, &lift.cell, k).expect("faces match");
                                split.case(once.cell == twice.cell, || {
                                    format!("opreindexing {c:?} in two steps")
                                });
                            }
                        }
                    }
                }
            }
        }
        // (f ∘ v)^* = v^* ∘ f^* for endomorphisms of the faces
        let ends0 = enumerate_morphisms_between(c0, c0);
        let ends1 = enumerate_morphisms_between(c1, c1);
        for f0 in ends0.iter().take(4) {
            for f1 in ends1.iter().take(4) {
                let first = reindex(f0, f1, c, k).expect("faces match");
                for v0 in ends0.iter().take(4) {
                    for v1 in ends1.iter().take(4) {
                        let twice = reindex(v0, v1, &first.cell, k).expect("faces match");
                        let once = reindex(
                            &f0.after(v0).expect("chain"),
                            &f1.after(v1).expect("chain"),
                            c,
                            k,
                        )
                        .expect("faces match");
                        split.case(
                            once.cell == twice.cell
                                && first.morphism.after(&twice.morphism).ok() == Some(once.morphism.clone()),
                            || format!("reindexing {c:?} in two steps"),
                        );
                    }
                }
            }
        }
    }
}

/// Components on an `l`-cell given per face at coordinate `k`.
fn over(cell: &CubeCell, k: usize, lower: &CellMorphism, upper: &CellMorphism) -> Vec<Vec<u32>> {
    let level = cell.level();
    (0..1usize << level)
        .map(|w| {
            let v = FacePattern::vertex(level, w);
            let fv = v.without(k).vertex_index();
            if v.get(k) == super::Pat::Top {
                upper.component(fv).to_vec()
            } else {
                lower.component(fv).to_vec()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: Level, n: u32) -> StabilityConfig {
        StabilityConfig {
            p,
            universe: Universe::new(n, true),
            budget: 1_000_000,
            seed: 7,
            samples: 16,
        }
    }

    #[test]
    fn stable_at_dimension_one() {
        for c in check_stability(&cfg(1, 2)).iter().chain(&check_lifts(&cfg(1, 2))) {
            assert!(c.passed(), "{c:?}");
            assert!(c.cases > 0, "{}", c.name);
        }
    }

    #[test]
    fn stable_at_dimension_two() {
        for c in check_stability(&cfg(2, 1)).iter().chain(&check_lifts(&cfg(2, 1))) {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn level_two_falls_back_to_samples() {
        let s = sample_cells(2, &cfg(2, 2));
        assert!(!s.exhaustive);
        assert!(s.cells.iter().all(|c| c.is_coherent()));
        assert_eq!(sample_cells(1, &cfg(2, 2)).cells.len(), 31);
    }
}
