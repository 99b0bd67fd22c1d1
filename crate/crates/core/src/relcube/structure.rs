use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use super::cell::{CellBuilder, CellMorphism, CubeCell};
use super::pattern::FacePattern;
use super::tuples::TupleSet;
use super::RelError;
use crate::cube::Level;

/// The terminal `l`-cell: singletons everywhere and full relations.
pub fn terminal(level: Level) -> CubeCell {
    let mut preds = vec![TupleSet::empty(0); 3usize.pow(level as u32)];
    for u in FacePattern::relational(level) {
        let w = 1 << u.star_count();
        preds[u.index()] = TupleSet::from_tuples(w, [vec![0; w]]);
    }
    CubeCell::from_parts(level, vec![1; 1 << level], preds)
}

/// The unique morphism into the terminal cell.
pub fn terminal_morphism(c: Rc<CubeCell>) -> CellMorphism {
    let t = Rc::new(terminal(c.level()));
    let components = c.carriers().iter().map(|&n| vec![0; n as usize]).collect();
    CellMorphism::from_parts(c, t, components)
}

fn same_level(a: &CubeCell, b: &CubeCell) -> Result<(), RelError> {
    if a.level() != b.level() {
        return Err(RelError::LevelMismatch {
            expected: a.level(),
            found: b.level(),
        });
    }
    Ok(())
}

/// The product cell. A pair `(x, y)` is encoded as `x·|B_w| + y`.
pub fn product_cell(a: &CubeCell, b: &CubeCell) -> Result<CubeCell, RelError> {
    same_level(a, b)?;
    let l = a.level();
    let carriers = a
        .carriers()
        .iter()
        .zip(b.carriers())
        .map(|(&x, &y)| {
            x.checked_mul(y)
                .ok_or_else(|| RelError::TooLarge(format!("{x} × {y}")))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    let mut preds = vec![TupleSet::empty(0); 3usize.pow(l as u32)];
    for u in FacePattern::relational(l) {
        let vs = u.vertices();
        let width = vs.len();
        let (ra, rb) = (a.pred(&u), b.pred(&u));
        let mut rows = Vec::with_capacity(ra.len() * rb.len());
        for ta in ra.iter() {
            for tb in rb.iter() {
                rows.push(
                    vs.iter()
                        .enumerate()
                        .map(|(i, &v)| ta[i] * b.carrier(v) + tb[i])
                        .collect::<Vec<u32>>(),
                );
            }
        }
        preds[u.index()] = TupleSet::from_tuples(width, rows);
    }
    Ok(CubeCell::from_parts(l, carriers, preds))
}

/// A chosen product with its projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub cell: Rc<CubeCell>,
    pub fst: CellMorphism,
    pub snd: CellMorphism,
}

pub fn product(a: &Rc<CubeCell>, b: &Rc<CubeCell>) -> Result<Product, RelError> {
    let cell = Rc::new(product_cell(a, b)?);
    let mut fst = Vec::new();
    let mut snd = Vec::new();
    for (&x, &y) in a.carriers().iter().zip(b.carriers()) {
        fst.push((0..x * y).map(|z| z / y).collect());
        snd.push((0..x * y).map(|z| z % y).collect());
    }
    Ok(Product {
        fst: CellMorphism::from_parts(cell.clone(), a.clone(), fst),
        snd: CellMorphism::from_parts(cell.clone(), b.clone(), snd),
        cell,
    })
}

/// `⟨f, g⟩ : C → A × B`.
pub fn pair(prod: &Product, f: &CellMorphism, g: &CellMorphism) -> Result<CellMorphism, RelError> {
    if f.source() != g.source()
        || f.target() != prod.fst.target()
        || g.target() != prod.snd.target()
    {
        return Err(RelError::Malformed("pairing of mismatched morphisms".into()));
    }
    let b = prod.snd.target();
    let components = f
        .components()
        .iter()
        .zip(g.components())
        .enumerate()
        .map(|(v, (cf, cg))| {
            cf.iter()
                .zip(cg)
                .map(|(&x, &y)| x * b.carrier(v) + y)
                .collect()
        })
        .collect();
    Ok(CellMorphism::from_parts(
        f.source().clone(),
        prod.cell.clone(),
        components,
    ))
}

/// `|cod|^|dom|`, if it fits.
pub fn function_space_size(dom: u32, cod: u32) -> Option<u32> {
    cod.checked_pow(dom)
}

/// Functions `dom → cod` are numbered by reading their table as a base-`cod`
/// numeral, first argument most significant; numeric order is table order.
pub fn encode_function(table: &[u32], cod: u32) -> u32 {
    table.iter().fold(0, |acc, &y| acc * cod + y)
}

pub fn decode_function(code: u32, dom: u32, cod: u32) -> Vec<u32> {
    let mut out = vec![0; dom as usize];
    let mut c = code;
    for slot in out.iter_mut().rev() {
        *slot = c % cod;
        c /= cod;
    }
    out
}

pub fn apply_function(code: u32, dom: u32, cod: u32, x: u32) -> u32 {
    (code / cod.pow(dom - 1 - x)) % cod
}

/// The exponential cell: full function sets at the vertices; a tuple of
/// functions is related at `u` when it maps every related tuple of `a` at `u`
/// (and, through coherence, at every face of `u`) into `b`.
pub fn exponential_cell(a: &CubeCell, b: &CubeCell) -> Result<CubeCell, RelError> {
    same_level(a, b)?;
    let l = a.level();
    let carriers = a
        .carriers()
        .iter()
        .zip(b.carriers())
        .map(|(&x, &y)| {
            function_space_size(x, y).ok_or_else(|| RelError::TooLarge(format!("{y}^{x}")))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    let mut builder = CellBuilder::new(l, carriers);
    for u in FacePattern::relational(l) {
        let ts = if u.star_count() == 1 {
            edge_relation(&builder, a, b, &u)
        } else {
            let vs = u.vertices();
            let (ra, rb) = (a.pred(&u), b.pred(&u));
            let mut img = Vec::with_capacity(vs.len());
            let rows = builder.coherent_candidates(&u).into_iter().filter(|fs| {
                ra.iter().all(|t| {
                    img.clear();
                    img.extend(vs.iter().enumerate().map(|(i, &v)| {
                        apply_function(fs[i], a.carrier(v), b.carrier(v), t[i])
                    }));
                    rb.contains(&img)
                })
            });
            TupleSet::from_tuples(vs.len(), rows.collect::<Vec<_>>())
        };
        builder.set(&u, ts);
    }
    Ok(builder.finish())
}

/// One free coordinate: for each function on the lower vertex, the related
/// functions on the upper vertex are exactly the tables whose every entry is
/// allowed by all related arguments.
fn edge_relation(builder: &CellBuilder, a: &CubeCell, b: &CubeCell, u: &FacePattern) -> TupleSet {
    let vs = u.vertices();
    let (a0, a1) = (a.carrier(vs[0]), a.carrier(vs[1]));
    let (b0, b1) = (b.carrier(vs[0]), b.carrier(vs[1]));
    let mut related_b = vec![false; (b0 * b1) as usize];
    for t in b.pred(u).iter() {
        related_b[(t[0] * b1 + t[1]) as usize] = true;
    }
    let mut lower_args: Vec<Vec<u32>> = vec![Vec::new(); a1 as usize];
    for t in a.pred(u).iter() {
        lower_args[t[1] as usize].push(t[0]);
    }
    let mut rows = Vec::new();
    for f in 0..builder.carrier(vs[0]) {
        let ftab = decode_function(f, a0, b0);
        let allowed: Vec<Vec<u32>> = lower_args
            .iter()
            .map(|xs| {
                (0..b1)
                    .filter(|&y| xs.iter().all(|&x| related_b[(ftab[x as usize] * b1 + y) as usize]))
                    .collect()
            })
            .collect();
        if allowed.iter().any(|s| s.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; allowed.len()];
        loop {
            let g = idx
                .iter()
                .zip(&allowed)
                .fold(0, |acc, (&i, s)| acc * b1 + s[i]);
            rows.push([f, g]);
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < allowed[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    TupleSet::from_tuples(2, rows)
}

/// A chosen exponential with its evaluation morphism `(A ⇒ B) × A → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponential {
    pub cell: Rc<CubeCell>,
    pub domain: Rc<CubeCell>,
    pub codomain: Rc<CubeCell>,
    pub product: Product,
    pub eval: CellMorphism,
}

pub fn exponential(a: &Rc<CubeCell>, b: &Rc<CubeCell>) -> Result<Exponential, RelError> {
    let cell = Rc::new(exponential_cell(a, b)?);
    let prod = product(&cell, a)?;
    let components = (0..a.carriers().len())
        .map(|v| {
            let (x, y) = (a.carrier(v), b.carrier(v));
            (0..prod.cell.carrier(v))
                .map(|z| apply_function(z / x, x, y, z % x))
                .collect()
        })
        .collect();
    let eval = CellMorphism::from_parts(prod.cell.clone(), b.clone(), components);
    Ok(Exponential {
        cell,
        domain: a.clone(),
        codomain: b.clone(),
        product: prod,
        eval,
    })
}

/// The transpose `C → (A ⇒ B)` of a morphism `C × A → B`.
pub fn curry(
    exp: &Exponential,
    c: &Rc<CubeCell>,
    m: &CellMorphism,
) -> Result<CellMorphism, RelError> {
    let ca = product_cell(c, &exp.domain)?;
    if **m.source() != ca || m.target() != &exp.codomain {
        return Err(RelError::Malformed("curry of a mismatched morphism".into()));
    }
    let components = (0..c.carriers().len())
        .map(|v| {
            let (x, y) = (exp.domain.carrier(v), exp.codomain.carrier(v));
            let comp = m.component(v);
            (0..c.carrier(v))
                .map(|z| {
                    let table: Vec<u32> = (0..x).map(|a| comp[(z * x + a) as usize]).collect();
                    encode_function(&table, y)
                })
                .collect()
        })
        .collect();
    CellMorphism::new(c.clone(), exp.cell.clone(), components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcube::{degenerate, enumerate_morphisms_between};
    use alloc::collections::BTreeMap;

    fn rel(a: u32, b: u32, pairs: &[[u32; 2]]) -> Rc<CubeCell> {
        let mut preds = BTreeMap::new();
        preds.insert(
            FacePattern::all_stars(1),
            pairs.iter().map(|p| p.to_vec()).collect(),
        );
        Rc::new(CubeCell::new(1, vec![a, b], preds).unwrap())
    }

    #[test]
    fn function_codes() {
        assert_eq!(function_space_size(0, 0), Some(1));
        assert_eq!(function_space_size(2, 0), Some(0));
        let t = [2, 0, 1];
        let c = encode_function(&t, 3);
        assert_eq!(decode_function(c, 3, 3), t);
        assert_eq!(apply_function(c, 3, 3, 0), 2);
        assert_eq!(apply_function(c, 3, 3, 2), 1);
    }

    #[test]
    fn product_sizes_and_pairing() {
        let a = Rc::new(CubeCell::point(2));
        let b = Rc::new(CubeCell::point(3));
        let p = product(&a, &b).unwrap();
        assert_eq!(p.cell.size(), 6);
        let back = pair(&p, &p.fst, &p.snd).unwrap();
        assert!(back.is_identity());
    }

    #[test]
    fn terminal_cells_are_coherent() {
        for l in 0..4 {
            assert!(terminal(l).is_coherent());
        }
    }

    #[test]
    fn exponential_of_equalities_is_equality() {
        let eq_a = Rc::new(degenerate(&CubeCell::point(2), 0).unwrap());
        let eq_b = Rc::new(degenerate(&CubeCell::point(3), 0).unwrap());
        let e = exponential(&eq_a, &eq_b).unwrap();
        let funcs = degenerate(&CubeCell::point(9), 0).unwrap();
        assert_eq!(*e.cell, funcs);
        assert!(e.eval.preserves());
    }

    #[test]
    fn exponential_of_terminal_domain() {
        let e = exponential_cell(&terminal(0), &CubeCell::point(3)).unwrap();
        assert_eq!(e, CubeCell::point(3));
    }

    #[test]
    fn currying_is_a_bijection() {
        let a = rel(2, 1, &[[0, 0]]);
        let b = rel(2, 2, &[[0, 1], [1, 1]]);
        let c = rel(1, 2, &[[0, 1]]);
        let e = exponential(&a, &b).unwrap();
        let ca = Rc::new(product_cell(&c, &a).unwrap());
        let left = enumerate_morphisms_between(&ca, &b);
        let right = enumerate_morphisms_between(&c, &e.cell);
        assert_eq!(left.len(), right.len());
        let curried: alloc::collections::BTreeSet<_> = left
            .iter()
            .map(|m| curry(&e, &c, m).unwrap().components().to_vec())
            .collect();
        assert_eq!(curried.len(), right.len());
    }
}
