//! The cube category `□` and its subcategories `□_p`.
//!
//! A morphism `l₁ → l₂` of `□` is a function from `{0..l₁-1}` to
//! `{0..l₂-1} + {⊥, ⊤}`; composition propagates the two error values. The
//! subcategory `□_p` is generated by face maps and degeneracies at levels
//! below `p`. Its morphisms are exactly the partial maps whose defined part is
//! strictly increasing (checked exhaustively against generator closure in the
//! test suite), which is what [`is_in_box_p`] decides.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Levels are identified with the finite sets `{0..l-1}`.
pub type Level = usize;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CubeError {
    #[error("index {index} out of range at level {level}")]
    IndexOutOfRange { level: Level, index: usize },
    #[error("cannot compose: {outer} has source {outer_source} but {inner} has target {inner_target}")]
    LevelMismatch {
        outer: String,
        outer_source: Level,
        inner: String,
        inner_target: Level,
    },
    #[error("{0} is not a morphism of the generated cube category")]
    NotInBoxP(String),
    #[error("malformed morphism: {0}")]
    Malformed(String),
}

/// One of the two error values `⊥`, `⊤`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Star {
    Bot,
    Top,
}

impl Star {
    pub const BOTH: [Star; 2] = [Star::Bot, Star::Top];

    pub fn symbol(self) -> char {
        match self {
            Star::Bot => 'B',
            Star::Top => 'T',
        }
    }
}

/// An entry of a morphism's assignment. The derived order `B < T < 0 < 1 < …`
/// is the serialization order of hom-set listings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Bot,
    Top,
    Index(usize),
}

impl Entry {
    pub fn error(star: Star) -> Self {
        match star {
            Star::Bot => Entry::Bot,
            Star::Top => Entry::Top,
        }
    }

    pub fn as_error(self) -> Option<Star> {
        match self {
            Entry::Bot => Some(Star::Bot),
            Entry::Top => Some(Star::Top),
            Entry::Index(_) => None,
        }
    }

    pub fn as_index(self) -> Option<usize> {
        match self {
            Entry::Index(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Bot => f.write_str("B"),
            Entry::Top => f.write_str("T"),
            Entry::Index(i) => write!(f, "{i}"),
        }
    }
}

/// A morphism of `□`. The source level is the length of the assignment.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxMorphism {
    target: Level,
    assignment: Vec<Entry>,
}

impl BoxMorphism {
    pub fn new(target: Level, assignment: Vec<Entry>) -> Result<Self, CubeError> {
        for e in &assignment {
            if let Entry::Index(i) = *e {
                if i >= target {
                    return Err(CubeError::IndexOutOfRange {
                        level: target,
                        index: i,
                    });
                }
            }
        }
        Ok(Self { target, assignment })
    }

    pub fn identity(level: Level) -> Self {
        Self {
            target: level,
            assignment: (0..level).map(Entry::Index).collect(),
        }
    }

    pub fn source(&self) -> Level {
        self.assignment.len()
    }

    pub fn target(&self) -> Level {
        self.target
    }

    pub fn assignment(&self) -> &[Entry] {
        &self.assignment
    }

    pub fn get(&self, i: usize) -> Entry {
        self.assignment[i]
    }

    pub fn is_identity(&self) -> bool {
        self.source() == self.target
            && self
                .assignment
                .iter()
                .enumerate()
                .all(|(i, e)| *e == Entry::Index(i))
    }

    /// Target coordinates that lie in the image of the defined part.
    pub fn image(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment.iter().filter_map(|e| e.as_index())
    }

    /// True iff the defined part, read in source order, is strictly increasing.
    pub fn is_strictly_increasing(&self) -> bool {
        let mut last: Option<usize> = None;
        for j in self.image() {
            if let Some(prev) = last {
                if j <= prev {
                    return false;
                }
            }
            last = Some(j);
        }
        true
    }

    /// True iff the defined part is injective.
    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.image().all(|j| seen.insert(j))
    }
}

impl fmt::Display for BoxMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} [", self.source(), self.target)?;
        for (i, e) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Parses the textual syntax `2->1 [T,0]`.
impl FromStr for BoxMorphism {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CubeError::Malformed(String::from(s.trim()));
        let (levels, rest) = s.split_once('[').ok_or_else(bad)?;
        let body = rest.trim().strip_suffix(']').ok_or_else(bad)?;
        let (src, tgt) = levels.split_once("->").ok_or_else(bad)?;
        let source: usize = src.trim().parse().map_err(|_| bad())?;
        let target: usize = tgt.trim().parse().map_err(|_| bad())?;
        let mut assignment = Vec::new();
        if !body.trim().is_empty() {
            for tok in body.split(',') {
                let e = match tok.trim() {
                    "B" => Entry::Bot,
                    "T" => Entry::Top,
                    t => Entry::Index(t.parse().map_err(|_| bad())?),
                };
                assignment.push(e);
            }
        }
        if assignment.len() != source {
            return Err(bad());
        }
        BoxMorphism::new(target, assignment)
    }
}

/// The face map `f_⋆(l,k) : l+1 → l`.
pub fn face(level: Level, k: usize, star: Star) -> Result<BoxMorphism, CubeError> {
    if k > level {
        return Err(CubeError::IndexOutOfRange { level, index: k });
    }
    let assignment = (0..=level)
        .map(|i| match i.cmp(&k) {
            core::cmp::Ordering::Less => Entry::Index(i),
            core::cmp::Ordering::Equal => Entry::error(star),
            core::cmp::Ordering::Greater => Entry::Index(i - 1),
        })
        .collect();
    Ok(BoxMorphism {
        target: level,
        assignment,
    })
}

/// The degeneracy `d(l,k) : l → l+1`.
pub fn degeneracy(level: Level, k: usize) -> Result<BoxMorphism, CubeError> {
    if k > level {
        return Err(CubeError::IndexOutOfRange { level, index: k });
    }
    let assignment = (0..level)
        .map(|i| if i < k { Entry::Index(i) } else { Entry::Index(i + 1) })
        .collect();
    Ok(BoxMorphism {
        target: level + 1,
        assignment,
    })
}

/// `g ∘ f`: apply `f` first; error values of `f` are propagated.
pub fn compose(g: &BoxMorphism, f: &BoxMorphism) -> Result<BoxMorphism, CubeError> {
    if f.target != g.source() {
        return Err(CubeError::LevelMismatch {
            outer: format!("{g}"),
            outer_source: g.source(),
            inner: format!("{f}"),
            inner_target: f.target,
        });
    }
    let assignment = f
        .assignment
        .iter()
        .map(|e| match *e {
            Entry::Index(j) => g.assignment[j],
            err => err,
        })
        .collect();
    Ok(BoxMorphism {
        target: g.target,
        assignment,
    })
}

/// Membership in `□_p`: both levels at most `p` and strictly increasing
/// defined part.
pub fn is_in_box_p(m: &BoxMorphism, p: Level) -> bool {
    m.source() <= p && m.target() <= p && m.is_strictly_increasing()
}

/// A generator occurrence `f_⋆(level, index)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceGen {
    pub level: Level,
    pub index: usize,
    pub star: Star,
}

/// A generator occurrence `d(level, index)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegenGen {
    pub level: Level,
    pub index: usize,
}

/// A word of generators: the faces are applied first, in order, followed by
/// the degeneracies, in order (application order, i.e. right to left when
/// written as a composite).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorWord {
    pub source: Level,
    pub faces: Vec<FaceGen>,
    pub degeneracies: Vec<DegenGen>,
}

impl GeneratorWord {
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty() && self.degeneracies.is_empty()
    }

    /// Composes the word; fails if consecutive levels do not chain.
    pub fn compose(&self) -> Result<BoxMorphism, CubeError> {
        let mut acc = BoxMorphism::identity(self.source);
        for g in &self.faces {
            acc = compose(&face(g.level, g.index, g.star)?, &acc)?;
        }
        for g in &self.degeneracies {
            acc = compose(&degeneracy(g.level, g.index)?, &acc)?;
        }
        Ok(acc)
    }

    /// Face indices strictly decrease and degeneracy indices never increase,
    /// in application order.
    pub fn is_canonical(&self) -> bool {
        self.faces.windows(2).all(|w| w[0].index > w[1].index)
            && self.degeneracies.windows(2).all(|w| w[0].index >= w[1].index)
    }

    /// Largest level touched by the word, which bounds the `p` it needs.
    pub fn max_level(&self) -> Level {
        let mut level = self.source;
        let mut max = level;
        for _ in &self.faces {
            level -= 1;
        }
        for _ in &self.degeneracies {
            level += 1;
            max = max.max(level);
        }
        max
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "id_{}", self.source);
        }
        let mut parts: Vec<String> = Vec::new();
        for g in &self.faces {
            parts.push(format!("f{}({},{})", g.star.symbol(), g.level, g.index));
        }
        for g in &self.degeneracies {
            parts.push(format!("d({},{})", g.level, g.index));
        }
        // written right to left, as a composite
        parts.reverse();
        f.write_str(&parts.join(" . "))
    }
}

/// Canonical factorization: faces removing the error positions from the
/// highest down, then degeneracies inserting the missing target coordinates.
pub fn normal_form(m: &BoxMorphism) -> Result<GeneratorWord, CubeError> {
    if !m.is_strictly_increasing() {
        return Err(CubeError::NotInBoxP(format!("{m}")));
    }
    let mut faces = Vec::new();
    let mut level = m.source();
    for (i, e) in m.assignment.iter().enumerate().rev() {
        if let Some(star) = e.as_error() {
            level -= 1;
            faces.push(FaceGen {
                level,
                index: i,
                star,
            });
        }
    }
    let image: BTreeSet<usize> = m.image().collect();
    let missing: Vec<usize> = (0..m.target).filter(|j| !image.contains(j)).collect();
    let r = missing.len();
    let mut degeneracies = Vec::with_capacity(r);
    // Inserting the gaps from the highest down keeps every later insertion
    // below the earlier ones, so step j lands at missing[r-1-j] - (r-1-j)
    // before the remaining shifts.
    for j in 0..r {
        let pos = missing[r - 1 - j];
        degeneracies.push(DegenGen {
            level,
            index: pos - (r - 1 - j),
        });
        level += 1;
    }
    Ok(GeneratorWord {
        source: m.source(),
        faces,
        degeneracies,
    })
}

/// All generators of `□_p`.
pub fn generators(p: Level) -> Vec<BoxMorphism> {
    let mut out = Vec::new();
    for l in 0..p {
        for k in 0..=l {
            for star in Star::BOTH {
                out.push(face(l, k, star).expect("k <= l"));
            }
            out.push(degeneracy(l, k).expect("k <= l"));
        }
    }
    out
}

/// Every morphism of `□_p`, computed as the closure of the identities under
/// post-composition with generators.
pub fn closure(p: Level) -> BTreeSet<BoxMorphism> {
    let gens = generators(p);
    let mut by_source: BTreeMap<Level, Vec<&BoxMorphism>> = BTreeMap::new();
    for g in &gens {
        by_source.entry(g.source()).or_default().push(g);
    }
    let mut seen: BTreeSet<BoxMorphism> = (0..=p).map(BoxMorphism::identity).collect();
    let mut queue: VecDeque<BoxMorphism> = seen.iter().cloned().collect();
    while let Some(m) = queue.pop_front() {
        if let Some(gs) = by_source.get(&m.target()) {
            for g in gs {
                let c = compose(g, &m).expect("levels chain");
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    seen
}

/// The hom-set `□_p(l₁, l₂)` by generator closure, in serialization order.
pub fn enumerate_morphisms(l1: Level, l2: Level, p: Level) -> Vec<BoxMorphism> {
    if l1 > p || l2 > p {
        return Vec::new();
    }
    closure(p)
        .into_iter()
        .filter(|m| m.source() == l1 && m.target() == l2)
        .collect()
}

/// The hom-set `l₁ → l₂` selected directly by the strict-increase criterion.
pub fn criterion_morphisms(l1: Level, l2: Level) -> Vec<BoxMorphism> {
    // every function l1 -> l2 + 2, filtered
    let options = l2 + 2;
    let total = options.checked_pow(l1 as u32).unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut assignment = Vec::with_capacity(l1);
        for _ in 0..l1 {
            let d = code % options;
            code /= options;
            assignment.push(match d {
                0 => Entry::Bot,
                1 => Entry::Top,
                j => Entry::Index(j - 2),
            });
        }
        let m = BoxMorphism {
            target: l2,
            assignment,
        };
        if m.is_strictly_increasing() {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Every canonical word from `l₁` whose levels stay within `[0, p]`, found by
/// brute-force search over generator sequences (no use of [`normal_form`]).
pub fn canonical_words(l1: Level, p: Level) -> Vec<GeneratorWord> {
    fn degens(
        source: Level,
        faces: &[FaceGen],
        level: Level,
        p: Level,
        prev: Option<usize>,
        acc: &mut Vec<DegenGen>,
        out: &mut Vec<GeneratorWord>,
    ) {
        out.push(GeneratorWord {
            source,
            faces: faces.to_vec(),
            degeneracies: acc.clone(),
        });
        if level >= p {
            return;
        }
        let hi = prev.map_or(level, |k| k.min(level));
        for k in 0..=hi {
            acc.push(DegenGen { level, index: k });
            degens(source, faces, level + 1, p, Some(k), acc, out);
            acc.pop();
        }
    }
    fn faces_rec(
        source: Level,
        level: Level,
        p: Level,
        prev: Option<usize>,
        acc: &mut Vec<FaceGen>,
        out: &mut Vec<GeneratorWord>,
    ) {
        degens(source, acc, level, p, None, &mut Vec::new(), out);
        if level == 0 {
            return;
        }
        let l = level - 1;
        if l >= p {
            return;
        }
        for k in 0..=l {
            if prev.is_some_and(|pk| k >= pk) {
                continue;
            }
            for star in Star::BOTH {
                acc.push(FaceGen {
                    level: l,
                    index: k,
                    star,
                });
                faces_rec(source, l, p, Some(k), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if l1 <= p {
        faces_rec(l1, l1, p, None, &mut Vec::new(), &mut out);
    }
    out
}

/// The five relation families of the presentation of `□_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationFamily {
    /// `f_⋆(l,k) ∘ d(l,k) = 1_l`
    FaceAfterSameDegeneracy,
    /// `f_⋆(l,j) ∘ d(l,k) = d(l-1,k) ∘ f_⋆(l-1,j-1)`, `k < j`
    FaceAboveDegeneracy,
    /// `f_⋆(l,j) ∘ d(l,k) = d(l-1,k-1) ∘ f_⋆(l-1,j)`, `j < k`
    FaceBelowDegeneracy,
    /// `d(l+1,j) ∘ d(l,k) = d(l+1,k) ∘ d(l,j-1)`, `k < j`
    DegeneracyExchange,
    /// `f_⋆₂(l,j) ∘ f_⋆₁(l+1,k) = f_⋆₁(l,k) ∘ f_⋆₂(l+1,j+1)`, `k ≤ j`
    FaceExchange,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 5] = [
        RelationFamily::FaceAfterSameDegeneracy,
        RelationFamily::FaceAboveDegeneracy,
        RelationFamily::FaceBelowDegeneracy,
        RelationFamily::DegeneracyExchange,
        RelationFamily::FaceExchange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationFamily::FaceAfterSameDegeneracy => "f(l,k).d(l,k) = id",
            RelationFamily::FaceAboveDegeneracy => "f(l,j).d(l,k) = d(l-1,k).f(l-1,j-1) [k<j]",
            RelationFamily::FaceBelowDegeneracy => "f(l,j).d(l,k) = d(l-1,k-1).f(l-1,j) [j<k]",
            RelationFamily::DegeneracyExchange => "d(l+1,j).d(l,k) = d(l+1,k).d(l,j-1) [k<j]",
            RelationFamily::FaceExchange => "f(l,j).f(l+1,k) = f(l,k).f(l+1,j+1) [k<=j]",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationViolation {
    pub family: RelationFamily,
    pub instance: String,
    pub lhs: BoxMorphism,
    pub rhs: BoxMorphism,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PresentationReport {
    /// Number of instances checked per family, in [`RelationFamily::ALL`] order.
    pub checked: [usize; 5],
    pub violations: Vec<PresentationViolation>,
}

impl PresentationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total(&self) -> usize {
        self.checked.iter().sum()
    }

    pub fn failed_families(&self) -> BTreeSet<RelationFamily> {
        self.violations.iter().map(|v| v.family).collect()
    }
}

/// Checks every instance of the five relation families whose levels are at
/// most `l_max` and whose generators live in `□_p`.
pub fn check_presentation(p: Level, l_max: Level) -> PresentationReport {
    check_presentation_with(p, l_max, |g, f| compose(g, f).expect("levels chain"))
}

/// [`check_presentation`] with a caller-supplied composition, so that faulty
/// compositions can be shown to be caught.
pub fn check_presentation_with<C>(p: Level, l_max: Level, comp: C) -> PresentationReport
where
    C: Fn(&BoxMorphism, &BoxMorphism) -> BoxMorphism,
{
    use RelationFamily::*;
    let f = |l, k, s| face(l, k, s).expect("index in range");
    let d = |l, k| degeneracy(l, k).expect("index in range");
    let mut report = PresentationReport::default();
    let record = |report: &mut PresentationReport,
                      fam: RelationFamily,
                      instance: String,
                      lhs: BoxMorphism,
                      rhs: BoxMorphism| {
        let idx = RelationFamily::ALL.iter().position(|x| *x == fam).unwrap();
        report.checked[idx] += 1;
        if lhs != rhs {
            report.violations.push(PresentationViolation {
                family: fam,
                instance,
                lhs,
                rhs,
            });
        }
    };
    for l in 0..p {
        for star in Star::BOTH {
            let s = star.symbol();
            // levels l, l+1
            if l < l_max {
                for k in 0..=l {
                    let lhs = comp(&f(l, k, star), &d(l, k));
                    record(
                        &mut report,
                        FaceAfterSameDegeneracy,
                        format!("l={l} k={k} star={s}"),
                        lhs,
                        BoxMorphism::identity(l),
                    );
                }
            }
            // levels l-1, l, l+1
            if l >= 1 && l < l_max {
                for j in 0..=l {
                    for k in 0..=l {
                        if k < j {
                            let lhs = comp(&f(l, j, star), &d(l, k));
                            let rhs = comp(&d(l - 1, k), &f(l - 1, j - 1, star));
                            record(
                                &mut report,
                                FaceAboveDegeneracy,
                                format!("l={l} j={j} k={k} star={s}"),
                                lhs,
                                rhs,
                            );
                        } else if j < k {
                            let lhs = comp(&f(l, j, star), &d(l, k));
                            let rhs = comp(&d(l - 1, k - 1), &f(l - 1, j, star));
                            record(
                                &mut report,
                                FaceBelowDegeneracy,
                                format!("l={l} j={j} k={k} star={s}"),
                                lhs,
                                rhs,
                            );
                        }
                    }
                }
            }
        }
        // levels l, l+1, l+2
        if l + 1 < p && l + 2 <= l_max {
            for j in 0..=l + 1 {
                for k in 0..j {
                    let lhs = comp(&d(l + 1, j), &d(l, k));
                    let rhs = comp(&d(l + 1, k), &d(l, j - 1));
                    record(
                        &mut report,
                        DegeneracyExchange,
                        format!("l={l} j={j} k={k}"),
                        lhs,
                        rhs,
                    );
                }
            }
            for j in 0..=l {
                for k in 0..=j {
                    for s1 in Star::BOTH {
                        for s2 in Star::BOTH {
                            let lhs = comp(&f(l, j, s2), &f(l + 1, k, s1));
                            let rhs = comp(&f(l, k, s1), &f(l + 1, j + 1, s2));
                            record(
                                &mut report,
                                FaceExchange,
                                format!(
                                    "l={l} j={j} k={k} star1={} star2={}",
                                    s1.symbol(),
                                    s2.symbol()
                                ),
                                lhs,
                                rhs,
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> BoxMorphism {
        s.parse().unwrap()
    }

    #[test]
    fn face_formula_examples() {
        assert_eq!(face(0, 0, Star::Bot).unwrap(), m("1->0 [B]"));
        assert_eq!(face(1, 0, Star::Top).unwrap(), m("2->1 [T,0]"));
        assert_eq!(face(1, 1, Star::Bot).unwrap(), m("2->1 [0,B]"));
        assert!(face(1, 2, Star::Bot).is_err());
    }

    #[test]
    fn degeneracy_formula_examples() {
        assert_eq!(degeneracy(0, 0).unwrap(), m("0->1 []"));
        assert_eq!(degeneracy(1, 0).unwrap(), m("1->2 [1]"));
        assert_eq!(degeneracy(1, 1).unwrap(), m("1->2 [0]"));
        assert!(matches!(
            degeneracy(0, 1),
            Err(CubeError::IndexOutOfRange { level: 0, index: 1 })
        ));
    }

    #[test]
    fn compose_examples() {
        let c = compose(&face(0, 0, Star::Top).unwrap(), &degeneracy(0, 0).unwrap()).unwrap();
        assert_eq!(c, BoxMorphism::identity(0));
        let f = face(1, 0, Star::Bot).unwrap();
        assert_eq!(compose(&BoxMorphism::identity(1), &f).unwrap(), f);
        // [0,T] then [1]: 0 -> 0 -> 1, 1 -> T
        let c = compose(&degeneracy(1, 0).unwrap(), &face(1, 1, Star::Top).unwrap()).unwrap();
        assert_eq!(c, m("2->2 [1,T]"));
        assert!(compose(&face(0, 0, Star::Top).unwrap(), &face(0, 0, Star::Top).unwrap()).is_err());
    }

    #[test]
    fn textual_syntax_round_trips() {
        for s in ["2->1 [T,0]", "0->1 []", "3->2 [0,B,1]"] {
            assert_eq!(format!("{}", m(s)), s);
        }
        assert!("2->1 [T]".parse::<BoxMorphism>().is_err());
        assert!("2->1 [T,1]".parse::<BoxMorphism>().is_err());
        assert!("garbage".parse::<BoxMorphism>().is_err());
    }

    #[test]
    fn presentation_small_cases() {
        let r = check_presentation(1, 1);
        assert!(r.holds());
        assert!(r.checked[0] > 0);
        assert_eq!(&r.checked[1..], &[0, 0, 0, 0]);
        let r = check_presentation(3, 3);
        assert!(r.holds(), "{:?}", r.violations);
        assert!(r.checked.iter().all(|c| *c > 0));
    }

    #[test]
    fn presentation_catches_a_composition_that_drops_errors() {
        // errors of the inner map are replaced by the outer map's first entry
        let faulty = |g: &BoxMorphism, f: &BoxMorphism| {
            let assignment = f
                .assignment()
                .iter()
                .map(|e| match *e {
                    Entry::Index(j) => g.get(j),
                    err => g.assignment().first().copied().unwrap_or(err),
                })
                .collect();
            BoxMorphism::new(g.target(), assignment).unwrap()
        };
        let r = check_presentation_with(3, 3, faulty);
        let failed = r.failed_families();
        assert!(!failed.contains(&RelationFamily::FaceAfterSameDegeneracy));
        assert!(failed.contains(&RelationFamily::FaceAboveDegeneracy));
        assert!(failed.contains(&RelationFamily::FaceExchange));
    }

    #[test]
    fn presentation_catches_an_off_by_one_composition() {
        let faulty = |g: &BoxMorphism, f: &BoxMorphism| {
            let assignment = f
                .assignment()
                .iter()
                .map(|e| match *e {
                    Entry::Index(j) => g.get(g.source() - 1 - j),
                    err => err,
                })
                .collect();
            BoxMorphism::new(g.target(), assignment).unwrap()
        };
        let r = check_presentation_with(2, 2, faulty);
        assert!(r
            .failed_families()
            .contains(&RelationFamily::FaceAfterSameDegeneracy));
    }

    #[test]
    fn normal_form_examples() {
        assert!(normal_form(&BoxMorphism::identity(3)).unwrap().is_empty());
        let w = normal_form(&m("2->1 [T,0]")).unwrap();
        assert_eq!(
            w.faces,
            [FaceGen {
                level: 1,
                index: 0,
                star: Star::Top
            }]
        );
        assert!(w.degeneracies.is_empty());
        let w = normal_form(&m("2->2 [1,T]")).unwrap();
        assert_eq!(
            w.faces,
            [FaceGen {
                level: 1,
                index: 1,
                star: Star::Top
            }]
        );
        assert_eq!(w.degeneracies, [DegenGen { level: 1, index: 0 }]);
        assert!(matches!(
            normal_form(&m("2->2 [1,0]")),
            Err(CubeError::NotInBoxP(_))
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_box_p(&BoxMorphism::identity(2), 2));
        assert!(!is_in_box_p(&m("2->2 [1,0]"), 3));
        let bt = m("2->0 [B,T]");
        assert!(is_in_box_p(&bt, 2));
        let via = compose(&face(0, 0, Star::Top).unwrap(), &face(1, 0, Star::Bot).unwrap()).unwrap();
        assert_eq!(via, bt);
        assert!(!is_in_box_p(&BoxMorphism::identity(3), 2));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_morphisms(0, 0, 2), [BoxMorphism::identity(0)]);
        assert_eq!(enumerate_morphisms(1, 0, 1), [m("1->0 [B]"), m("1->0 [T]")]);
        assert_eq!(enumerate_morphisms(1, 1, 2), criterion_morphisms(1, 1));
        assert_eq!(enumerate_morphisms(1, 1, 2).len(), 3);
    }

    #[test]
    fn canonical_words_are_unique_per_morphism() {
        for p in 0..=3 {
            let mut by_morphism: BTreeMap<BoxMorphism, usize> = BTreeMap::new();
            for l1 in 0..=p {
                for w in canonical_words(l1, p) {
                    assert!(w.is_canonical());
                    *by_morphism.entry(w.compose().unwrap()).or_default() += 1;
                }
            }
            let all = closure(p);
            assert_eq!(by_morphism.keys().cloned().collect::<BTreeSet<_>>(), all);
            assert!(by_morphism.values().all(|c| *c == 1));
        }
    }
}
