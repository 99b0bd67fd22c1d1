//! The named check suites run by the command line.

pub mod corpus;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{
    canonical_words, check_presentation, closure, criterion_morphisms, is_in_box_p, normal_form,
    BoxMorphism, Level,
};
use crate::relcube::stability::{check_lifts, check_stability, StabilityConfig};
use crate::relcube::Universe;
use crate::report::{Check, SuiteReport};
use crate::semantics::laws::{
    degeneracy_preservation, face_preservation, fiber_ccc, forall_adjunction, naturality,
    same_denotation, split_products, substitution_lemma, tablewise_equal,
};
use crate::semantics::{Config, FId, FNode, Model, SemError};
use crate::syntax::{parse_term_in, parse_type_in, Judgment, Type};
use crate::verify::checks::{algebra_checks, graph_checks, AlgebraCase, FunctorCase};
use crate::verify::VerifyError;

/// Suite names accepted by [`run`], in the order `all` runs them.
pub const SUITES: &[&str] = &["cube", "stability", "lambda2", "iel", "graph", "algebra"];

/// Parameters shared by every suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub p: Level,
    pub size: u32,
    pub include_empty: bool,
    pub budget: u128,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            p: 1,
            size: 2,
            include_empty: true,
            budget: 10_000_000,
            seed: 0,
        }
    }
}

impl SuiteConfig {
    pub fn model_config(&self) -> Config {
        Config::new(self.p, self.size, self.include_empty, self.budget)
    }

    /// The configuration the frozen cardinalities refer to.
    pub fn has_expected_sizes(&self) -> bool {
        self.size == 2 && self.include_empty
    }

    /// The dimension-2 configuration added to the IEL and graph suites when
    /// the main one has `p = 1`.
    fn second_pass(&self) -> Option<SuiteConfig> {
        (self.p < 2).then(|| SuiteConfig {
            p: 2,
            size: self.size.min(1),
            ..*self
        })
    }

    fn tag(&self) -> String {
        let empty = if self.include_empty { "" } else { ", no empty" };
        format!("[p={}, N={}{empty}]", self.p, self.size)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    Unknown(String),
    #[error("suite {suite}: {message}")]
    Budget { suite: String, message: String },
    #[error("suite {suite}: {message}")]
    Internal { suite: String, message: String },
}

impl SuiteError {
    fn from_verify(suite: &str, e: VerifyError) -> Self {
        if e.is_budget() {
            SuiteError::Budget {
                suite: suite.to_string(),
                message: e.to_string(),
            }
        } else {
            SuiteError::Internal {
                suite: suite.to_string(),
                message: e.to_string(),
            }
        }
    }

    fn from_sem(suite: &str, e: SemError) -> Self {
        Self::from_verify(suite, VerifyError::Sem(e))
    }
}

/// Runs one suite; `all` is handled by [`run_all`].
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    match name {
        "cube" => Ok(cube_suite(cfg)),
        "stability" => Ok(stability_suite(cfg)),
        "lambda2" => lambda2_suite(cfg).map_err(|e| SuiteError::from_sem(name, e)),
        "iel" => iel_suite(cfg).map_err(|e| SuiteError::from_sem(name, e)),
        "graph" => graph_suite(cfg).map_err(|e| SuiteError::from_verify(name, e)),
        "algebra" => algebra_suite(cfg).map_err(|e| SuiteError::from_verify(name, e)),
        other => Err(SuiteError::Unknown(other.to_string())),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<SuiteReport>, SuiteError> {
    SUITES.iter().map(|s| run(s, cfg)).collect()
}

fn ty(text: &str, names: &[&str]) -> Type {
    parse_type_in(text, names).unwrap_or_else(|e| panic!("corpus type `{text}`: {e}"))
}

fn judgment(tys: &[&str], terms: &[(&str, &str)], text: &str) -> Judgment {
    let ctx: Vec<Type> = terms.iter().map(|(_, t)| ty(t, tys)).collect();
    let names: Vec<&str> = terms.iter().map(|(n, _)| *n).collect();
    let t = parse_term_in(text, tys, &names).unwrap_or_else(|e| panic!("corpus term `{text}`: {e}"));
    Judgment::new(tys.len(), ctx, t).unwrap_or_else(|e| panic!("corpus term `{text}`: {e}"))
}

// ---------------------------------------------------------------- cube

fn cube_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("cube");
    for p in 1..=cfg.p.max(4) {
        let mut c = Check::new(format!("presentation relations hold in box_{p}"));
        let r = check_presentation(p, 4);
        c.cases = r.total() as u64;
        for v in &r.violations {
            c.case(false, || format!("{}: {} gives {} and {}", v.family.name(), v.instance, v.lhs, v.rhs));
        }
        report.push(c);
    }
    for p in 1..=cfg.p.max(3) {
        report.push(factorization(p));
    }
    report
}

fn factorization(p: Level) -> Check {
    let mut c = Check::new(format!("canonical factorization in box_{p}"));
    let all = closure(p);
    for m in &all {
        match normal_form(m) {
            Ok(w) => {
                c.case(w.is_canonical() && w.max_level() <= p, || format!("normal form of {m} is {w:?}"));
                c.case(w.compose().ok().as_ref() == Some(m), || format!("normal form of {m} composes wrongly"));
            }
            Err(e) => c.fail(format!("no normal form for {m}: {e}")),
        }
    }
    // every canonical word within the levels names a distinct morphism
    let mut seen: Vec<BoxMorphism> = Vec::new();
    for l1 in 0..=p {
        for w in canonical_words(l1, p) {
            match w.compose() {
                Ok(m) => seen.push(m),
                Err(e) => c.fail(format!("canonical word {w:?} does not compose: {e}")),
            }
        }
    }
    let words = seen.len();
    seen.sort();
    seen.dedup();
    c.case(seen.len() == words, || format!("{} canonical words name only {} morphisms", words, seen.len()));
    c.case(seen.len() == all.len() && seen.iter().all(|m| all.contains(m)), || {
        format!("{} canonical words against {} morphisms in the closure", seen.len(), all.len())
    });
    let mut criterion = 0;
    for l1 in 0..=p {
        for l2 in 0..=p {
            for m in criterion_morphisms(l1, l2) {
                criterion += 1;
                c.case(all.contains(&m) && is_in_box_p(&m, p), || format!("{m} is missing from the closure"));
            }
        }
    }
    c.case(criterion == all.len(), || format!("{criterion} criterion morphisms against {}", all.len()));
    c.add_note(format!("{} morphisms", all.len()));
    c
}

// ---------------------------------------------------------------- stability

fn stability_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("stability");
    let scfg = StabilityConfig {
        p: cfg.p.max(2),
        universe: Universe::new(cfg.size, cfg.include_empty),
        budget: cfg.budget,
        seed: cfg.seed,
        samples: 64,
    };
    for c in check_stability(&scfg) {
        report.push(c);
    }
    for c in check_lifts(&scfg) {
        report.push(c);
    }
    report
}

// ---------------------------------------------------------------- lambda2

fn lambda2_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SemError> {
    let model = Model::new(cfg.model_config());
    let m = &model;
    let mut report = SuiteReport::new("lambda2");
    let xy = ["X", "Y"];

    // split reindexing
    let mut c = Check::new("reindexing is split functorial");
    let outer: Vec<FId> = ["X -> Y", "forall Z. Y -> Z -> Z", "Y", "(Y -> X) -> Unit"]
        .iter()
        .map(|t| m.interp_type(&ty(t, &xy), 2))
        .collect::<Result<_, _>>()?;
    let unary = |t: &str| m.interp_type(&ty(t, &["X"]), 1);
    let mids: Vec<Vec<FId>> = vec![
        vec![unary("X")?, unary("X -> X")?],
        vec![unary("Unit")?, unary("forall Y. Y -> X")?],
        vec![unary("X -> Unit")?, unary("X")?],
    ];
    let inners: Vec<FId> = ["X", "Unit", "Unit -> X", "forall Y. (X -> Y) -> Y"]
        .iter()
        .map(|t| unary(t))
        .collect::<Result<_, _>>()?;
    for &g in &outer {
        let ident = m.compose(g, m.projections(2), 2)?;
        tablewise_equal(m, ident, g, &mut c, "reindexing along the identity")?;
        for mid in &mids {
            let gm = m.compose(g, mid.clone(), 1)?;
            for &h in &inners {
                let lhs = m.compose(gm, vec![h], 1)?;
                let mh: Vec<FId> = mid.iter().map(|&x| m.compose(x, vec![h], 1)).collect::<Result<_, _>>()?;
                let rhs = m.compose(g, mh, 1)?;
                tablewise_equal(m, lhs, rhs, &mut c, "reindexing along a composite")?;
            }
        }
    }
    report.push(c);

    // generic object
    let mut c = Check::new("generic object classifies every functor");
    let omega = m.proj(0, 1);
    for t in corpus::OPEN_TYPES {
        let f = unary(t)?;
        let classified = m.compose(omega, vec![f], 1)?;
        tablewise_equal(m, classified, f, &mut c, t)?;
    }
    for t in corpus::CLOSED_TYPES {
        let f = m.interp_type(&ty(t, &[]), 0)?;
        let classified = m.compose(omega, vec![f], 0)?;
        tablewise_equal(m, classified, f, &mut c, t)?;
    }
    report.push(c);

    // fibrewise cartesian closure
    let mut c = Check::new("fibers are cartesian closed");
    let triples: &[(&[&str], [&str; 3])] = &[
        (&[], ["Unit", "Unit -> Unit", "forall X. X -> X -> X"]),
        (&[], ["forall X. X -> X -> X", "forall X. X -> X -> X", "forall X. X -> X -> X"]),
        (&["X"], ["X", "X", "X"]),
        (&["X"], ["Unit", "X", "X"]),
        (&["X"], ["X", "Unit", "X"]),
        (&["X"], ["X", "X", "Unit"]),
        (&["X"], ["X -> X", "X", "X"]),
        (&["X", "Y"], ["X", "Y", "X"]),
    ];
    for (names, [h, f, g]) in triples {
        let n = names.len();
        let [h, f, g] = [h, f, g].map(|t| m.interp_type(&ty(t, names), n));
        fiber_ccc(m, h?, f?, g?, &mut c)?;
    }
    report.push(c);

    // ∀ as right adjoint to weakening
    let mut c = Check::new("forall is right adjoint to weakening");
    let pairs: &[(&[&str], &str, &str)] = &[
        (&[], "Unit", "X -> X"),
        (&[], "Unit", "X"),
        (&[], "Unit", "(X -> X) -> X"),
        (&[], "forall X. X -> X -> X", "X -> X -> X"),
        (&["X"], "X", "Y -> X"),
        (&["X"], "X", "X -> Y -> Y"),
        (&["X"], "X -> X", "Y -> Y"),
    ];
    for (names, g, f) in pairs {
        let n = names.len();
        let mut wider = names.to_vec();
        wider.push(if n == 0 { "X" } else { "Y" });
        let g = m.interp_type(&ty(g, names), n)?;
        let f = m.interp_type(&ty(f, &wider), n + 1)?;
        forall_adjunction(m, g, f, &mut c)?;
    }
    report.push(c);

    // split simple products
    let mut c = Check::new("simple products are split");
    let cases: &[(corpus::Names, &str, corpus::Names, corpus::Names)] = &[
        // (names of F without the bound variable, F, context morphism, its context)
        (&["X"], "Y -> X", &["Z -> Z"], &["Z"]),
        (&["X"], "(Y -> X) -> Y", &["Unit"], &[]),
        (&["X"], "X -> Y -> Y", &["forall W. W -> Z"], &["Z"]),
        (&[], "Y -> Y", &[], &["Z"]),
    ];
    for (names, f, along, ctx) in cases {
        let mut wider = names.to_vec();
        wider.push("Y");
        let f = m.interp_type(&ty(f, &wider), wider.len())?;
        let along: Vec<FId> = along
            .iter()
            .map(|a| m.interp_type(&ty(a, ctx), ctx.len()))
            .collect::<Result<_, _>>()?;
        split_products(m, f, &along, ctx.len(), &mut c)?;
    }
    report.push(c);

    // substitution
    let mut c = Check::new("substitution lemma");
    for (ctx, t, s) in corpus::SUBSTITUTIONS {
        let mut wider = ctx.to_vec();
        wider.push("X");
        substitution_lemma(m, &ty(t, &wider), &ty(s, ctx), ctx.len(), &mut c)?;
    }
    c.add_note(format!("{} pairs", corpus::SUBSTITUTIONS.len()));
    report.push(c);

    // βη
    let mut c = Check::new("beta-eta equal terms denote equal tables");
    for (tys, terms, s, t) in corpus::BETA_ETA {
        let (a, b) = (judgment(tys, terms, s), judgment(tys, terms, t));
        same_denotation(m, &a, &b, &mut c)?;
    }
    c.add_note(format!("{} pairs", corpus::BETA_ETA.len()));
    report.push(c);

    // naturality
    let mut c = Check::new("interpreted terms are natural and preserve faces");
    for (tys, terms, t) in corpus::TERMS {
        let nt = m.interp_term(&judgment(tys, terms, t))?;
        naturality(m, &nt, &mut c)?;
    }
    c.add_note(format!("{} terms", corpus::TERMS.len()));
    report.push(c);

    // interpreted types preserve faces
    let mut c = Check::new("interpreted types commute with faces");
    for t in corpus::OPEN_TYPES {
        face_preservation(m, unary(t)?, &mut c)?;
    }
    report.push(c);

    // free theorems
    for (t, expected) in corpus::FREE_THEOREMS {
        let mut c = Check::new(format!("free theorem count: {t}"));
        let n = m.size(m.interp_type(&ty(t, &[]), 0)?, &[])?;
        if cfg.has_expected_sizes() {
            c.case(n == *expected, || format!("expected {expected}, found {n}"));
        } else {
            c.add_note("no expected count for this configuration");
        }
        c.witness(|| format!("{n} elements"));
        report.push(c);
    }
    Ok(report)
}

// ---------------------------------------------------------------- iel

fn iel_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SemError> {
    let mut configs = vec![*cfg];
    configs.extend(cfg.second_pass());
    let models: Vec<(String, Model)> = configs
        .iter()
        .map(|c| (c.tag(), Model::new(c.model_config())))
        .collect();
    let mut report = SuiteReport::new("iel");
    let cases = corpus::CLOSED_TYPES
        .iter()
        .map(|t| (*t, ty(t, &[]), 0))
        .chain(corpus::OPEN_TYPES.iter().map(|t| (*t, ty(t, &["X"]), 1)));
    for (text, t, n) in cases {
        let mut c = Check::new(format!("identity extension: {text}"));
        for (tag, m) in &models {
            let f = m.interp_type(&t, n)?;
            degeneracy_preservation(m, f, &mut c)?;
            face_preservation(m, f, &mut c)?;
            c.add_note(tag.clone());
        }
        report.push(c);
    }
    Ok(report)
}

// ---------------------------------------------------------------- graph

fn graph_suite(cfg: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    let cases: Vec<FunctorCase> = corpus::GRAPH_FUNCTORS
        .iter()
        .map(|t| FunctorCase {
            name: t.to_string(),
            functor: ty(t, &["X"]),
        })
        .collect();
    let mut report = SuiteReport::new("graph");
    let mut configs = vec![(*cfg, false)];
    configs.extend(cfg.second_pass().map(|c| (c, true)));
    for (c, tagged) in configs {
        let model = Model::new(c.model_config());
        for mut check in graph_checks(&model, &cases)? {
            if tagged {
                check.name = format!("{} {}", check.name, c.tag());
            }
            report.push(check);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------- algebra

fn algebra_suite(cfg: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    let model = Model::new(cfg.model_config());
    let expected = cfg.has_expected_sizes();
    let cases: Vec<AlgebraCase> = corpus::ALGEBRAS
        .iter()
        .map(|(name, f, z, zf)| AlgebraCase {
            name: name.to_string(),
            functor: ty(f, &["X"]),
            initial_size: expected.then_some(*z),
            final_size: expected.then_some(*zf),
        })
        .collect();
    let mut report = SuiteReport::new("algebra");
    for c in algebra_checks(&model, &cases)? {
        report.push(c);
    }
    Ok(report)
}

/// Elements of a closed type at level 0, rendered for display.
pub fn elements(model: &Model, t: &Type) -> Result<Vec<String>, SemError> {
    let f = model.interp_type(t, 0)?;
    let n = model.size(f, &[])?;
    (0..n).map(|e| render(model, f, &[], e)).collect()
}

/// Renders element `e` of `f` at the level-0 arguments `rho`: functions as
/// their value lists, polymorphic values as their instantiations by carrier
/// size.
pub fn render(model: &Model, f: FId, rho: &[crate::semantics::CellId], e: u32) -> Result<String, SemError> {
    Ok(match model.node(f) {
        FNode::Arrow(a, b) => {
            let na = model.size(a, rho)?;
            let nb = model.size(b, rho)?;
            let mut code = e as u64;
            let mut digits = vec![0u32; na as usize];
            for d in digits.iter_mut().rev() {
                *d = (code % nb.max(1) as u64) as u32;
                code /= nb.max(1) as u64;
            }
            let parts: Vec<String> = digits
                .iter()
                .map(|&d| render(model, b, rho, d))
                .collect::<Result<_, _>>()?;
            format!("[{}]", parts.join(", "))
        }
        FNode::Forall(body) => {
            let fams = model.families(body, rho)?;
            let phi = &fams.list[e as usize];
            let mut parts = Vec::new();
            for (i, &s) in fams.sizes.iter().enumerate() {
                let mut full = vec![model.point(s)];
                full.extend_from_slice(rho);
                parts.push(format!("{s}: {}", render(model, body, &full, phi[i])?));
            }
            format!("{{{}}}", parts.join(", "))
        }
        FNode::Compose(outer, inners) => {
            let args: Vec<_> = inners
                .iter()
                .map(|&i| model.eval(i, 0, rho))
                .collect::<Result<_, _>>()?;
            render(model, outer, &args, e)?
        }
        _ => e.to_string(),
    })
}
