//! The graph and algebra suites as lists of checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;

use super::graph::vertical;
use super::{graph, graph_morphism, graph_via_opreindex, is_positive, ChurchAlgebra, ChurchCoalgebra, Strength, VerifyError};
use crate::cube::{face, Level, Star};
use crate::relcube::{
    act_morphism, decode_function, degenerate, enumerate_morphisms_between, face_of, for_each_morphism,
    terminal, CellMorphism, CubeCell, FacePattern, TupleSet,
};
use crate::report::Check;
use crate::semantics::Model;
use crate::syntax::Type;

/// A functor `X ⊢ F X` of the corpus.
#[derive(Clone, Debug)]
pub struct FunctorCase {
    pub name: String,
    pub functor: Type,
}

/// An algebra case with the expected sizes of the initial and final
/// carriers at level 0, when known for the configuration.
#[derive(Clone, Debug)]
pub struct AlgebraCase {
    pub name: String,
    pub functor: Type,
    pub initial_size: Option<u32>,
    pub final_size: Option<u32>,
}

pub fn show(m: &CellMorphism) -> String {
    format!("{:?} -> {:?} by {:?}", m.source().carriers(), m.target().carriers(), m.components())
}

/// Every morphism between cells of the universe at a level.
pub fn all_morphisms(model: &Model, level: Level) -> Result<Vec<CellMorphism>, VerifyError> {
    let cells = cells(model, level)?;
    let mut out = Vec::new();
    for a in &cells {
        for b in &cells {
            out.extend(enumerate_morphisms_between(a, b));
            if out.len() as u128 > model.config().budget {
                return Err(crate::semantics::SemError::Budget {
                    estimate: out.len() as u128,
                    budget: model.config().budget,
                }
                .into());
            }
        }
    }
    Ok(out)
}

fn cells(model: &Model, level: Level) -> Result<Vec<Rc<CubeCell>>, VerifyError> {
    Ok(model.universe(level)?.iter().map(|&c| model.cell(c)).collect())
}

/// Non-budget errors become failures of `c`; budget errors propagate.
fn outcome<T>(c: &mut Check, r: Result<T, VerifyError>, what: impl FnOnce() -> String) -> Result<Option<T>, VerifyError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_budget() => Err(e),
        Err(e) => {
            c.fail(format!("{}: {e}", what()));
            Ok(None)
        }
    }
}

/// The graph suite: graphs against their opcartesian description, fullness
/// by counting, the Graph Lemma and the strength laws for every functor.
pub fn graph_checks(model: &Model, functors: &[FunctorCase]) -> Result<Vec<Check>, VerifyError> {
    let p = model.p();
    let mut opc = Check::new("graph agrees with the opcartesian description");
    let mut ids = Check::new("graph of an identity is degenerate");
    let mut rel = Check::new("graph of a function is its relation");
    let mut full = Check::new("graph functor is full and faithful");
    let mut morphs = Vec::new();
    for l in 0..p {
        morphs.push(all_morphisms(model, l)?);
    }
    for (l, ms) in morphs.iter().enumerate() {
        for f in ms {
            for k in 0..=l {
                let g = graph(f, k, p)?;
                let h = graph_via_opreindex(f, k, p)?;
                opc.case(*g.cell == *h, || format!("{} in direction {k}", show(f)));
                let faces_ok = face_of(&g.cell, k, Star::Bot)? == **f.source()
                    && face_of(&g.cell, k, Star::Top)? == **f.target();
                opc.case(faces_ok, || format!("faces of the graph of {}", show(f)));
                if f.source() == f.target() && f.is_identity() {
                    ids.case(*g.cell == degenerate(f.source(), k)?, || show(f));
                }
                if l == 0 {
                    let table = f.component(0);
                    let oracle = TupleSet::from_tuples(
                        2,
                        (0..f.source().carrier(0)).map(|x| [x, table[x as usize]]),
                    );
                    rel.case(*g.cell.pred(&FacePattern::all_stars(1)) == oracle, || show(f));
                }
            }
        }
        fullness(model, l, ms, &mut full)?;
    }
    let mut out = alloc::vec![opc, ids, rel, full];
    for case in functors {
        out.extend(functor_checks(model, case, &morphs)?);
    }
    Ok(out)
}

fn hom_counts(cells: &[Rc<CubeCell>]) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for (i, a) in cells.iter().enumerate() {
        for (j, b) in cells.iter().enumerate() {
            let mut n = 0;
            for_each_morphism(a, b, |_| {
                n += 1;
                true
            });
            out.insert((i, j), n);
        }
    }
    out
}

/// Whether `d(l,k)` is full on the universe: it adds no morphisms between
/// degenerate cells.
fn degeneracy_full(model: &Model, level: Level) -> Result<Option<String>, VerifyError> {
    let cells = cells(model, level)?;
    let counts = hom_counts(&cells);
    for k in 0..=level {
        let degenerated = cells
            .iter()
            .map(|c| Ok(Rc::new(degenerate(c, k)?)))
            .collect::<Result<Vec<_>, VerifyError>>()?;
        let dcounts = hom_counts(&degenerated);
        for (key, n) in &counts {
            if dcounts[key] != *n {
                return Ok(Some(format!(
                    "{} morphisms {:?} -> {:?} but {} between their degenerate cells in direction {k}",
                    n,
                    cells[key.0].carriers(),
                    cells[key.1].carriers(),
                    dcounts[key]
                )));
            }
        }
    }
    Ok(None)
}

/// Most objects of an arrow category compared pairwise.
const FULLNESS_OBJECTS: usize = 64;

fn fullness(model: &Model, level: Level, ms: &[CellMorphism], c: &mut Check) -> Result<(), VerifyError> {
    if ms.len() > FULLNESS_OBJECTS {
        c.add_note(format!(
            "level {level}: {} arrows exceed the {FULLNESS_OBJECTS} compared pairwise; not checked",
            ms.len()
        ));
        return Ok(());
    }
    let hypothesis = degeneracy_full(model, level)?;
    match &hypothesis {
        None => c.add_note(format!("level {level}: degeneracy is full")),
        Some(why) => c.add_note(format!("level {level}: degeneracy is not full ({why})")),
    }
    for k in 0..=level {
        let graphs = ms
            .iter()
            .map(|f| graph(f, k, model.p()))
            .collect::<Result<Vec<_>, _>>()?;
        for (f, gf) in ms.iter().zip(&graphs) {
            for (g, gg) in ms.iter().zip(&graphs) {
                let alphas = enumerate_morphisms_between(f.source(), g.source());
                let betas = enumerate_morphisms_between(f.target(), g.target());
                let mut squares = 0u64;
                let mut images = Vec::new();
                for alpha in &alphas {
                    for beta in &betas {
                        let commutes = g.after(alpha)? == beta.after(f)?;
                        let induced = graph_morphism(gf, gg, alpha, beta)?;
                        c.case(commutes == induced.is_some(), || {
                            format!("square {} / {} over {} and {}", show(alpha), show(beta), show(f), show(g))
                        });
                        if let Some(m) = induced {
                            squares += 1;
                            images.push(m.components().to_vec());
                        }
                    }
                }
                images.sort();
                images.dedup();
                c.case(images.len() as u64 == squares, || {
                    format!("distinct squares from {} to {} induce equal morphisms", show(f), show(g))
                });
                if hypothesis.is_none() {
                    let mut homs = 0u64;
                    for_each_morphism(&gf.cell, &gg.cell, |_| {
                        homs += 1;
                        true
                    });
                    c.case(homs == squares, || {
                        format!("{homs} morphisms between the graphs of {} and {} but {squares} squares", show(f), show(g))
                    });
                }
            }
        }
    }
    Ok(())
}

fn functor_checks(model: &Model, case: &FunctorCase, morphs: &[Vec<CellMorphism>]) -> Result<Vec<Check>, VerifyError> {
    let lemma_name = format!("graph lemma: {}", case.name);
    let laws_name = format!("strength laws: {}", case.name);
    if !is_positive(&case.functor, 0) {
        let why = "the variable occurs negatively, so the functor has no action on morphisms";
        return Ok(alloc::vec![Check::skipped(lemma_name, why), Check::skipped(laws_name, why)]);
    }
    let p = model.p();
    let s = Strength::derive(model, &case.functor)?;
    let mut lemma = Check::new(lemma_name);
    for (l, ms) in morphs.iter().enumerate() {
        for f in ms {
            let Some(ff) = outcome(&mut lemma, s.fmap(model, f), || format!("F on {}", show(f)))? else {
                continue;
            };
            for k in 0..=l {
                let left = graph(&ff, k, p)?.cell;
                let gf = graph(f, k, p)?;
                let right = model.cell(model.eval(s.functor, l + 1, &[model.intern((*gf.cell).clone())])?);
                let phi = vertical(&left, &right);
                let psi = vertical(&right, &left);
                if lemma.case(phi.is_some() && psi.is_some(), || {
                    format!(
                        "{} in direction {k}: phi {}, psi {}",
                        show(f),
                        if phi.is_some() { "found" } else { "missing" },
                        if psi.is_some() { "found" } else { "missing" }
                    )
                }) {
                    lemma.witness(|| format!("{} in direction {k}: phi and psi are vertex identities", show(f)));
                }
            }
        }
    }
    let mut laws = Check::new(laws_name);
    let sizes: Vec<u32> = model.config().universe.sizes().collect();
    for &a in &sizes {
        let id: Vec<u32> = (0..a).collect();
        laws.case(s.map_function(model, a, a, &id)? == (0..model.size(s.functor, &[model.point(a)])?).collect::<Vec<_>>(), || {
            format!("identity on {a}")
        });
        for &b in &sizes {
            for &c in &sizes {
                for fc in 0..b.pow(a) {
                    let f = decode_function(fc, a, b);
                    let mf = s.map_function(model, a, b, &f)?;
                    for gc in 0..c.pow(b) {
                        let g = decode_function(gc, b, c);
                        let gf: Vec<u32> = f.iter().map(|&x| g[x as usize]).collect();
                        let mg = s.map_function(model, b, c, &g)?;
                        let lhs = s.map_function(model, a, c, &gf)?;
                        let rhs: Vec<u32> = mf.iter().map(|&x| mg[x as usize]).collect();
                        laws.case(lhs == rhs, || format!("composition {f:?} then {g:?}"));
                    }
                }
            }
        }
    }
    for l in 0..=p {
        let extra;
        let ms = if l < morphs.len() {
            &morphs[l]
        } else {
            extra = all_morphisms(model, l)?;
            &extra
        };
        for m in ms {
            let Some(fm) = outcome(&mut laws, s.fmap(model, m), || format!("F on {} preserves relations", show(m)))? else {
                continue;
            };
            laws.case(true, String::new);
            if l > 0 {
                for k in 0..l {
                    for side in Star::BOTH {
                        let h = face(l - 1, k, side)?;
                        let lhs = act_morphism(&h, &fm)?;
                        let rhs = s.fmap(model, &act_morphism(&h, m)?)?;
                        laws.case(lhs == rhs, || format!("face {h} of F on {}", show(m)));
                    }
                }
            }
        }
    }
    Ok(alloc::vec![lemma, laws])
}

/// Diagnostics for the hypotheses of the initial-algebra theorem: fullness
/// of degeneracies and well-pointedness of each level.
pub fn hypotheses(model: &Model) -> Result<Vec<String>, VerifyError> {
    let mut out = Vec::new();
    for l in 0..model.p() {
        match degeneracy_full(model, l)? {
            None => out.push(format!("degeneracies at level {l} are full")),
            Some(why) => out.push(format!("degeneracies at level {l} are not full: {why}")),
        }
    }
    for l in 0..=model.p() {
        match well_pointed(model, l)? {
            None => out.push(format!("level {l} is well-pointed")),
            Some(why) => out.push(format!("level {l} is not well-pointed: {why}")),
        }
    }
    Ok(out)
}

fn well_pointed(model: &Model, level: Level) -> Result<Option<String>, VerifyError> {
    let one = Rc::new(terminal(level));
    for a in cells(model, level)? {
        let points = enumerate_morphisms_between(&one, &a);
        for b in cells(model, level)? {
            let ms = enumerate_morphisms_between(&a, &b);
            for (i, f) in ms.iter().enumerate() {
                for g in &ms[i + 1..] {
                    let mut separated = false;
                    for x in &points {
                        if f.after(x)? != g.after(x)? {
                            separated = true;
                            break;
                        }
                    }
                    if !separated {
                        return Ok(Some(format!("no point separates {} and {}", show(f), show(g))));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The algebra suite for each case: carrier sizes, the structure maps,
/// existence and uniqueness of fold and unfold over every algebra and
/// coalgebra of the universe.
pub fn algebra_checks(model: &Model, cases: &[AlgebraCase]) -> Result<Vec<Check>, VerifyError> {
    let diagnostics = hypotheses(model)?;
    let mut out = Vec::new();
    for case in cases {
        out.extend(initial_checks(model, case, &diagnostics)?);
        out.extend(final_checks(model, case)?);
    }
    Ok(out)
}

fn initial_checks(model: &Model, case: &AlgebraCase, diagnostics: &[String]) -> Result<Vec<Check>, VerifyError> {
    let name = &case.name;
    let mut size = Check::new(format!("initial carrier size: {name}"));
    let alg = match ChurchAlgebra::build(model, &case.functor) {
        Ok(a) => a,
        Err(e) if e.is_budget() => return Err(e),
        Err(e) => {
            size.fail(format!("{e}"));
            return Ok(alloc::vec![size]);
        }
    };
    let z = model.size(alg.carrier(), &[])?;
    match case.initial_size {
        Some(e) => {
            size.case(z == e, || format!("expected {e}, found {z}"));
        }
        None => size.add_note("no expected size for this configuration"),
    }
    size.witness(|| format!("|Z| = {z}"));
    let mut structure = Check::new(format!("in is an algebra: {name}"));
    let mut exists = Check::new(format!("fold is an algebra morphism: {name}"));
    let mut raw = Check::new(format!("fold is unique among all morphisms: {name}"));
    let mut param = Check::new(format!("fold is unique among parametric morphisms: {name}"));
    let mut own = Check::new(format!("fold of in is the identity: {name}"));
    for l in 0..=model.p() {
        let Some(inn) = outcome(&mut structure, alg.structure(model, l), || format!("in at level {l}"))? else {
            continue;
        };
        structure.case(true, String::new);
        if let Some(h) = outcome(&mut own, alg.fold(model, &inn), || format!("fold of in at level {l}"))? {
            own.case(h.is_identity(), || format!("level {l}: {}", show(&h)));
        }
        let zl = alg.carrier_at(model, l)?;
        for r in cells(model, l)? {
            let fr = alg.functor_at(model, &r)?;
            for k in enumerate_morphisms_between(&fr, &r) {
                let fold = outcome(&mut exists, alg.fold(model, &k), || format!("fold for {}", show(&k)))?;
                if let Some(fold) = &fold {
                    let ok = alg.is_algebra_morphism(model, &k, fold)?;
                    exists.case(ok, || format!("square for {}", show(&k)));
                }
                let mut all = Vec::new();
                for h in enumerate_morphisms_between(&zl, &r) {
                    if alg.is_algebra_morphism(model, &k, &h)? {
                        all.push(h);
                    }
                }
                raw.case(all.len() == 1, || {
                    format!("{} algebra morphisms into {}", all.len(), show(&k))
                });
                let ps = alg.parametric_morphisms(model, &k)?;
                let agrees = match &fold {
                    Some(f) => ps.len() == 1 && ps[0] == *f,
                    None => false,
                };
                param.case(agrees, || format!("{} parametric algebra morphisms into {}", ps.len(), show(&k)));
            }
        }
    }
    if !raw.passed() && param.passed() {
        raw.add_note("uniqueness fails among all morphisms but holds among parametric ones");
    }
    for d in diagnostics {
        raw.add_note(d.clone());
    }
    Ok(alloc::vec![size, structure, exists, raw, param, own])
}

fn final_checks(model: &Model, case: &AlgebraCase) -> Result<Vec<Check>, VerifyError> {
    let name = &case.name;
    let mut size = Check::new(format!("final carrier size: {name}"));
    let co = match ChurchCoalgebra::build(model, &case.functor) {
        Ok(a) => a,
        Err(e) if e.is_budget() => return Err(e),
        Err(e) => {
            size.fail(format!("{e}"));
            return Ok(alloc::vec![size]);
        }
    };
    let z = model.size(co.carrier(), &[])?;
    match case.final_size {
        Some(e) => {
            size.case(z == e, || format!("expected {e}, found {z}"));
        }
        None => size.add_note("no expected size for this configuration"),
    }
    size.witness(|| format!("|Z'| = {z}"));
    let mut structure = Check::new(format!("out is a coalgebra: {name}"));
    let mut exists = Check::new(format!("unfold is a coalgebra morphism: {name}"));
    let mut raw = Check::new(format!("unfold is unique among all morphisms: {name}"));
    let mut param = Check::new(format!("unfold is unique among parametric morphisms: {name}"));
    let mut own = Check::new(format!("unfold of out is the identity: {name}"));
    for l in 0..=model.p() {
        let Some(out) = outcome(&mut structure, co.structure(model, l), || format!("out at level {l}"))? else {
            continue;
        };
        structure.case(true, String::new);
        if let Some(h) = outcome(&mut own, co.unfold(model, &out), || format!("unfold of out at level {l}"))? {
            own.case(h.is_identity(), || format!("level {l}: {}", show(&h)));
        }
        let zl = co.carrier_at(model, l)?;
        for r in cells(model, l)? {
            let fr = co.functor_at(model, &r)?;
            for c in enumerate_morphisms_between(&r, &fr) {
                let unfold = outcome(&mut exists, co.unfold(model, &c), || format!("unfold for {}", show(&c)))?;
                if let Some(u) = &unfold {
                    let ok = co.is_coalgebra_morphism(model, &c, u)?;
                    exists.case(ok, || format!("square for {}", show(&c)));
                }
                let mut all = 0;
                for h in enumerate_morphisms_between(&r, &zl) {
                    if co.is_coalgebra_morphism(model, &c, &h)? {
                        all += 1;
                    }
                }
                raw.case(all == 1, || format!("{all} coalgebra morphisms from {}", show(&c)));
                let ps = co.parametric_morphisms(model, &c)?;
                let agrees = match &unfold {
                    Some(u) => ps.len() == 1 && ps[0] == *u,
                    None => false,
                };
                param.case(agrees, || format!("{} parametric coalgebra morphisms from {}", ps.len(), show(&c)));
            }
        }
    }
    if !raw.passed() && param.passed() {
        raw.add_note("uniqueness fails among all morphisms but holds among parametric ones");
    }
    Ok(alloc::vec![size, structure, exists, raw, param, own])
}
