//! Executable forms of the model's laws over the tabulated universe.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::model::{CellId, FId, Model};
use super::terms::NatTrans;
use super::SemError;
use crate::cube::{degeneracy, face, Level, Star};
use crate::relcube::{
    act_morphism, apply_function, decode_function, encode_function, CellMorphism, FacePattern,
    GoodIso,
};
use crate::report::Check;
use crate::syntax::{Judgment, Type};

fn faces(level: Level) -> Vec<crate::cube::BoxMorphism> {
    let mut out = Vec::new();
    if level > 0 {
        for k in 0..level {
            for s in Star::BOTH {
                out.push(face(level - 1, k, s).expect("k < level"));
            }
        }
    }
    out
}

fn degeneracies(level: Level) -> Vec<crate::cube::BoxMorphism> {
    (0..=level)
        .map(|k| degeneracy(level, k).expect("k <= level"))
        .collect()
}

fn record_err(c: &mut Check, r: Result<(), SemError>) -> Result<(), SemError> {
    match r {
        Err(e) if e.is_budget() => Err(e),
        Err(e) => {
            c.fail(format!("{e}"));
            Ok(())
        }
        Ok(()) => Ok(()),
    }
}

/// `F(l)` commutes with every face map on the nose.
pub fn face_preservation(model: &Model, f: FId, c: &mut Check) -> Result<(), SemError> {
    let n = model.arity(f);
    for l in 1..=model.p() {
        for args in model.arg_tuples(l, n)? {
            let here = model.eval(f, l, &args)?;
            for h in faces(l) {
                let lhs = model.act(&h, here)?;
                let rhs = model.eval(f, l - 1, &model.act_all(&h, &args)?)?;
                c.case(lhs == rhs, || {
                    format!("{} at level {l}, face {h}", model.describe(f))
                });
            }
        }
    }
    Ok(())
}

/// `F(l)` commutes with every degeneracy up to a vertex-identity good iso
/// (the identity extension property).
pub fn degeneracy_preservation(model: &Model, f: FId, c: &mut Check) -> Result<(), SemError> {
    let n = model.arity(f);
    for l in 0..model.p() {
        for args in model.arg_tuples(l, n)? {
            let here = model.eval(f, l, &args)?;
            for h in degeneracies(l) {
                let lhs = model.cell(model.act(&h, here)?);
                let rhs = model.cell(model.eval(f, l + 1, &model.act_all(&h, &args)?)?);
                let ok = GoodIso::between(&lhs, &rhs).is_some_and(|e| e.is_valid());
                c.case(ok, || {
                    let pattern = first_difference(&lhs, &rhs);
                    format!(
                        "{} at level {l}, degeneracy {h}: {pattern}",
                        model.describe(f)
                    )
                });
            }
        }
    }
    Ok(())
}

/// Where two cells of one level first differ.
fn first_difference(a: &crate::relcube::CubeCell, b: &crate::relcube::CubeCell) -> String {
    if a.carriers() != b.carriers() {
        return format!("vertex carriers {:?} vs {:?}", a.carriers(), b.carriers());
    }
    for u in FacePattern::relational(a.level()) {
        if a.pred(&u) != b.pred(&u) {
            return format!("relation at {u}: {:?} vs {:?}", a.pred(&u), b.pred(&u));
        }
    }
    String::from("equal")
}

/// Two functors of the same arity agree at every level and argument tuple.
pub fn tablewise_equal(model: &Model, f: FId, g: FId, c: &mut Check, what: &str) -> Result<(), SemError> {
    let n = model.arity(f);
    if model.arity(g) != n {
        c.fail(format!("{what}: arities differ"));
        return Ok(());
    }
    for l in 0..=model.p() {
        for args in model.arg_tuples(l, n)? {
            let ok = model.eval(f, l, &args)? == model.eval(g, l, &args)?;
            c.case(ok, || format!("{what} at level {l}, arguments {args:?}"));
        }
    }
    Ok(())
}

/// `⟦T[S/X]⟧ = ⟦T⟧ ∘ ⟨⟦S⟧, X₁, …⟩` for `Γ, X ⊢ T` and `Γ ⊢ S`.
pub fn substitution_lemma(
    model: &Model,
    t: &Type,
    s: &Type,
    n: usize,
    c: &mut Check,
) -> Result<(), SemError> {
    let direct = model.interp_type(&t.instantiate(s), n)?;
    let tf = model.interp_type(t, n + 1)?;
    let mut inners = vec![model.interp_type(s, n)?];
    inners.extend(model.projections(n));
    let composed = model.compose(tf, inners, n)?;
    tablewise_equal(model, direct, composed, c, "substitution")
}

/// Two judgments with the same contexts and type denote equal tables.
pub fn same_denotation(
    model: &Model,
    a: &Judgment,
    b: &Judgment,
    c: &mut Check,
) -> Result<(), SemError> {
    if a.type_ctx_len != b.type_ctx_len || a.term_ctx != b.term_ctx || a.ty != b.ty {
        c.fail("judgments differ in context or type");
        return Ok(());
    }
    let (na, nb) = (model.interp_term(a)?, model.interp_term(b)?);
    for rho in model.arg_tuples(0, a.type_ctx_len)? {
        let ok = na.table(model, &rho)? == nb.table(model, &rho)?;
        c.case(ok, || format!("tables differ at {rho:?}"));
    }
    Ok(())
}

/// Components of an interpreted term preserve relations at every level,
/// commute with faces on the nose and with degeneracies through the
/// identity good isos.
pub fn naturality(model: &Model, nt: &NatTrans, c: &mut Check) -> Result<(), SemError> {
    for l in 0..=model.p() {
        for args in model.arg_tuples(l, nt.arity)? {
            let comp = nt.component(model, l, &args)?;
            c.case(comp.preserves(), || {
                format!("component at level {l}, arguments {args:?} is not a morphism")
            });
            for h in faces(l) {
                let lhs = act_morphism(&h, &comp)?;
                let rhs = nt.component(model, l - 1, &model.act_all(&h, &args)?)?;
                c.case(lhs == rhs, || format!("face {h} at level {l}"));
            }
            if l < model.p() {
                for h in degeneracies(l) {
                    let lhs = act_morphism(&h, &comp)?;
                    let rhs = nt.component(model, l + 1, &model.act_all(&h, &args)?)?;
                    let ok = (|| {
                        let e_src = GoodIso::between(lhs.source(), rhs.source())?;
                        let e_tgt = GoodIso::between(lhs.target(), rhs.target())?;
                        let around = e_tgt.forward().after(&lhs).ok()?;
                        let via = rhs.after(e_src.forward()).ok()?;
                        Some(around == via)
                    })()
                    .unwrap_or(false);
                    c.case(ok, || format!("degeneracy {h} at level {l}"));
                }
            }
        }
    }
    Ok(())
}

/// A natural transformation in a fiber, as its 0-dimensional component
/// tables in the order of [`Model::arg_tuples`] at level 0.
pub type Family = Vec<Vec<u32>>;


/// A cell, its image and the argument tuple each vertex reads.
type Constraint = (Rc<crate::relcube::CubeCell>, Rc<crate::relcube::CubeCell>, Vec<usize>);

/// Every natural transformation `F ⇒ G` between functors of one arity:
/// level-0 component tables whose vertexwise assemblies preserve relations at
/// every level and argument tuple.
pub fn homset(model: &Model, f: FId, g: FId) -> Result<Vec<Family>, SemError> {
    let n = model.arity(f);
    let rhos = model.arg_tuples(0, n)?;
    let index = |rho: &[CellId]| rhos.iter().position(|r| r == rho).expect("universe tuple");
    let dims: Vec<(u32, u32)> = rhos
        .iter()
        .map(|r| Ok((model.size(f, r)?, model.size(g, r)?)))
        .collect::<Result<_, SemError>>()?;
    for &(a, b) in &dims {
        let count = (b as u128).checked_pow(a).unwrap_or(u128::MAX);
        if count > model.config().budget {
            return Err(SemError::Budget {
                estimate: count,
                budget: model.config().budget,
            });
        }
    }
    // each constraint: the cells and which ρ each vertex reads
    let mut ready: Vec<Vec<Constraint>> =
        vec![Vec::new(); rhos.len()];
    for l in 1..=model.p() {
        for args in model.arg_tuples(l, n)? {
            let src = model.cell(model.eval(f, l, &args)?);
            let tgt = model.cell(model.eval(g, l, &args)?);
            let mut at = Vec::new();
            for w in 0..1usize << l {
                at.push(index(&model.restrict(&FacePattern::vertex(l, w), &args)?));
            }
            let last = *at.iter().max().expect("vertices");
            ready[last].push((src, tgt, at));
        }
    }
    let mut out = Vec::new();
    let mut cur: Family = dims.iter().map(|&(a, _)| vec![0; a as usize]).collect();
    homset_search(&dims, &ready, 0, &mut cur, &mut out);
    Ok(out)
}

type Ready = Vec<Vec<(Rc<crate::relcube::CubeCell>, Rc<crate::relcube::CubeCell>, Vec<usize>)>>;

fn homset_search(dims: &[(u32, u32)], ready: &Ready, j: usize, cur: &mut Family, out: &mut Vec<Family>) {
    if j == dims.len() {
        out.push(cur.clone());
        return;
    }
    let (a, b) = dims[j];
    let total = (b as u64).pow(a);
    for code in 0..total {
        cur[j] = decode_function(code as u32, a, b);
        let ok = ready[j].iter().all(|(src, tgt, at)| {
            let comps = at.iter().map(|&i| cur[i].clone()).collect();
            CellMorphism::new(src.clone(), tgt.clone(), comps).is_ok()
        });
        if ok {
            homset_search(dims, ready, j + 1, cur, out);
        }
    }
}

/// Fiberwise cartesian closure: `hom(H × F, G) ≅ hom(H, F ⇒ G)` by currying,
/// and `hom(H, F × G) ≅ hom(H, F) × hom(H, G)` by pairing.
pub fn fiber_ccc(model: &Model, h: FId, f: FId, g: FId, c: &mut Check) -> Result<(), SemError> {
    let n = model.arity(h);
    let rhos = model.arg_tuples(0, n)?;
    let hf = model.prod(h, f);
    let fg = model.arrow(f, g);
    let left = homset(model, hf, g)?;
    let right: BTreeSet<Family> = homset(model, h, fg)?.into_iter().collect();
    c.case(left.len() == right.len(), || {
        format!("currying: {} vs {} transformations", left.len(), right.len())
    });
    let mut image = BTreeSet::new();
    for eta in &left {
        let mut curried = Vec::new();
        for (rho, table) in rhos.iter().zip(eta) {
            let (sh, sf, sg) = (model.size(h, rho)?, model.size(f, rho)?, model.size(g, rho)?);
            curried.push(
                (0..sh)
                    .map(|z| {
                        let row: Vec<u32> =
                            (0..sf).map(|x| table[(z * sf + x) as usize]).collect();
                        encode_function(&row, sg)
                    })
                    .collect::<Vec<u32>>(),
            );
        }
        image.insert(curried);
    }
    c.case(image == right, || String::from("currying is not onto the exponential hom-set"));
    let pf = model.prod(f, g);
    let pairs = homset(model, h, pf)?.len();
    let (hf_count, hg_count) = (homset(model, h, f)?.len(), homset(model, h, g)?.len());
    c.case(pairs == hf_count * hg_count, || {
        format!("pairing: {pairs} vs {hf_count} × {hg_count}")
    });
    let term = model.terminal(n);
    c.case(homset(model, h, term)?.len() == 1, || String::from("terminal hom-set is not a singleton"));
    Ok(())
}

/// The unit `G → ∀(G weakened)` at `ρ`: constant families.
pub fn unit_table(model: &Model, g: FId, rho: &[CellId]) -> Result<Vec<u32>, SemError> {
    let wg = model.weaken(g, 1);
    let fams = model.families(wg, rho)?;
    let size = model.size(g, rho)?;
    (0..size)
        .map(|x| {
            let fam = vec![x; fams.sizes.len()];
            fams.index
                .get(&fam)
                .copied()
                .ok_or_else(|| SemError::NotUniform(format!("constant family {fam:?}")))
        })
        .collect()
}

/// The counit `(∀F) weakened → F` at `A :: ρ`: instantiation at `A`.
pub fn counit_table(model: &Model, f: FId, a: CellId, rho: &[CellId]) -> Result<Vec<u32>, SemError> {
    let fams = model.families(f, rho)?;
    let slot = fams
        .slot(model.cell(a).size())
        .ok_or(SemError::OutOfUniverse { size: model.cell(a).size() })?;
    Ok(fams.list.iter().map(|phi| phi[slot]).collect())
}

/// `hom(G weakened, F) ≅ hom(G, ∀F)` for `G` of arity `n` and `F` of arity
/// `n + 1`, counted both ways and matched by the transpose.
pub fn forall_adjunction(model: &Model, g: FId, f: FId, c: &mut Check) -> Result<(), SemError> {
    let n = model.arity(g);
    let wg = model.weaken(g, 1);
    let all = model.forall(f);
    let left = homset(model, wg, f)?;
    let right: BTreeSet<Family> = homset(model, g, all)?.into_iter().collect();
    c.case(left.len() == right.len(), || {
        format!("∀-adjunction: {} vs {} transformations", left.len(), right.len())
    });
    let outer = model.arg_tuples(0, n + 1)?;
    let inner = model.arg_tuples(0, n)?;
    let mut image = BTreeSet::new();
    for eta in &left {
        let mut transposed = Vec::new();
        for rho in &inner {
            let fams = model.families(f, rho)?;
            let size = model.size(g, rho)?;
            let mut row = Vec::new();
            for x in 0..size {
                let fam: Vec<u32> = fams
                    .sizes
                    .iter()
                    .map(|&s| {
                        let mut full = vec![model.point(s)];
                        full.extend_from_slice(rho);
                        let i = outer.iter().position(|r| *r == full).expect("universe tuple");
                        eta[i][x as usize]
                    })
                    .collect();
                match fams.index.get(&fam) {
                    Some(&k) => row.push(k),
                    None => {
                        c.fail(format!("transpose of {eta:?} is not uniform"));
                        return Ok(());
                    }
                }
            }
            transposed.push(row);
        }
        image.insert(transposed);
    }
    c.case(image == right, || String::from("transpose is not onto hom(G, ∀F)"));
    Ok(())
}

/// The split simple-product equalities for `F` of arity `m + 1` along a
/// context morphism `f : n → m`: `f*(∀F) = ∀((f×1)*F)`, reindexed units
/// and reindexed counits agree with the units and counits of the reindexed
/// functors.
pub fn split_products(
    model: &Model,
    f: FId,
    along: &[FId],
    n: usize,
    c: &mut Check,
) -> Result<(), SemError> {
    let m = model.arity(f) - 1;
    if along.len() != m {
        c.fail("context morphism has the wrong length");
        return Ok(());
    }
    let mut lifted = vec![model.proj(0, n + 1)];
    lifted.extend(along.iter().map(|&a| model.weaken(a, 1)));
    let reindexed_body = model.compose(f, lifted, n + 1)?;
    let lhs = model.compose(model.forall(f), along.to_vec(), n)?;
    let rhs = model.forall(reindexed_body);
    tablewise_equal(model, lhs, rhs, c, "∀ commutes with reindexing")?;
    for rho in model.arg_tuples(0, n)? {
        let moved: Vec<CellId> = along
            .iter()
            .map(|&a| model.eval(a, 0, &rho))
            .collect::<Result<_, _>>()?;
        // units: η_{∀F}(f ρ) against η_{(∀F)∘f}(ρ)
        let g = model.forall(f);
        let g_f = lhs;
        let ok = unit_table(model, g, &moved)? == unit_table(model, g_f, &rho)?;
        c.case(ok, || format!("unit at {rho:?}"));
        // counits at A :: ρ
        for a in model.arg_tuples(0, 1)? {
            let ok = counit_table(model, f, a[0], &moved)?
                == counit_table(model, reindexed_body, a[0], &rho)?;
            c.case(ok, || format!("counit at {a:?} :: {rho:?}"));
        }
    }
    Ok(())
}

/// The tables of a functor: `(level, arguments, value)` over the universe.
pub fn tabulate(model: &Model, f: FId) -> Result<Vec<(Level, Vec<CellId>, CellId)>, SemError> {
    let mut out = Vec::new();
    for l in 0..=model.p() {
        for args in model.arg_tuples(l, model.arity(f))? {
            let v = model.eval(f, l, &args)?;
            out.push((l, args, v));
        }
    }
    Ok(out)
}

/// Checks that a function code applied through the eval morphism agrees with
/// decoding (used by the generic-object and CCC checks).
pub fn apply(model: &Model, dom: FId, cod: FId, rho: &[CellId], f: u32, x: u32) -> Result<u32, SemError> {
    Ok(apply_function(f, model.size(dom, rho)?, model.size(cod, rho)?, x))
}

/// Runs `body`, turning non-budget errors into failures of `c`.
pub fn guarded<F>(c: &mut Check, body: F) -> Result<(), SemError>
where
    F: FnOnce(&mut Check) -> Result<(), SemError>,
{
    let r = body(c);
    record_err(c, r)
}
