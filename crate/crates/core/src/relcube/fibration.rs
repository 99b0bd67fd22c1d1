use alloc::format;
use alloc::rc::Rc;
use alloc::vec::Vec;

use super::act::face_of;
use super::cell::{CellBuilder, CellMorphism, CubeCell};
use super::pattern::{FacePattern, Pat};
use super::tuples::TupleSet;
use super::RelError;
use crate::cube::{Level, Star};

/// A chosen lift: the new cell and the (op)cartesian morphism relating it to
/// the cell it was lifted from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub cell: Rc<CubeCell>,
    pub morphism: CellMorphism,
}

/// Which side of coordinate `k` a vertex of an `l`-cube lies on, and its
/// index in that face.
fn split_vertex(level: Level, k: usize, w: usize) -> (Star, usize) {
    let v = FacePattern::vertex(level, w);
    let side = if v.get(k) == Pat::Top { Star::Top } else { Star::Bot };
    (side, v.without(k).vertex_index())
}

fn pick<T>(side: Star, bot: T, top: T) -> T {
    match side {
        Star::Bot => bot,
        Star::Top => top,
    }
}

fn check_faces(
    c: &CubeCell,
    k: usize,
    bot: &CubeCell,
    top: &CubeCell,
    what: &str,
) -> Result<(), RelError> {
    if c.level() == 0 || k >= c.level() {
        return Err(RelError::FaceMismatch(format!(
            "coordinate {k} of a {}-cell",
            c.level()
        )));
    }
    if face_of(c, k, Star::Bot)? != *bot || face_of(c, k, Star::Top)? != *top {
        return Err(RelError::FaceMismatch(format!(
            "the faces at coordinate {k} are not the {what} of the given morphisms"
        )));
    }
    Ok(())
}

fn components_over(level: Level, k: usize, lower: &CellMorphism, upper: &CellMorphism) -> Vec<Vec<u32>> {
    (0..1usize << level)
        .map(|w| {
            let (side, fv) = split_vertex(level, k, w);
            pick(side, lower, upper).component(fv).to_vec()
        })
        .collect()
}

/// The cartesian lift of `c` along the pair `(lower, upper)` for the
/// fibration restricting to the two faces at coordinate `k`: relations at
/// patterns free in `k` are inverse images.
pub fn reindex(
    lower: &CellMorphism,
    upper: &CellMorphism,
    c: &Rc<CubeCell>,
    k: usize,
) -> Result<Lift, RelError> {
    check_faces(c, k, lower.target(), upper.target(), "targets")?;
    let level = c.level();
    let carriers = (0..1usize << level)
        .map(|w| {
            let (side, fv) = split_vertex(level, k, w);
            pick(side, lower, upper).source().carrier(fv)
        })
        .collect();
    let components = components_over(level, k, lower, upper);
    let mut b = CellBuilder::new(level, carriers);
    for u in FacePattern::relational(level) {
        let ts = match u.get(k) {
            Pat::Bot => lower.source().pred(&u.without(k)).clone(),
            Pat::Top => upper.source().pred(&u.without(k)).clone(),
            Pat::Star => {
                let vs = u.vertices();
                let target = c.pred(&u);
                let rows: Vec<Vec<u32>> = b
                    .coherent_candidates(&u)
                    .into_iter()
                    .filter(|t| {
                        let img: Vec<u32> = vs
                            .iter()
                            .zip(t)
                            .map(|(&v, &x)| components[v][x as usize])
                            .collect();
                        target.contains(&img)
                    })
                    .collect();
                TupleSet::from_tuples(vs.len(), rows)
            }
        };
        b.set(&u, ts);
    }
    let cell = Rc::new(b.finish());
    Ok(Lift {
        morphism: CellMorphism::from_parts(cell.clone(), c.clone(), components),
        cell,
    })
}

/// The opcartesian lift of `c` along `(lower, upper)`: relations at patterns
/// free in `k` are direct images.
pub fn opreindex(
    lower: &CellMorphism,
    upper: &CellMorphism,
    c: &Rc<CubeCell>,
    k: usize,
) -> Result<Lift, RelError> {
    check_faces(c, k, lower.source(), upper.source(), "sources")?;
    let level = c.level();
    let carriers = (0..1usize << level)
        .map(|w| {
            let (side, fv) = split_vertex(level, k, w);
            pick(side, lower, upper).target().carrier(fv)
        })
        .collect();
    let components = components_over(level, k, lower, upper);
    let mut b = CellBuilder::new(level, carriers);
    for u in FacePattern::relational(level) {
        let ts = match u.get(k) {
            Pat::Bot => lower.target().pred(&u.without(k)).clone(),
            Pat::Top => upper.target().pred(&u.without(k)).clone(),
            Pat::Star => {
                let vs = u.vertices();
                TupleSet::from_tuples(
                    vs.len(),
                    c.pred(&u)
                        .iter()
                        .map(|t| {
                            vs.iter()
                                .zip(t)
                                .map(|(&v, &x)| components[v][x as usize])
                                .collect::<Vec<u32>>()
                        })
                        .collect::<Vec<_>>(),
                )
            }
        };
        b.set(&u, ts);
    }
    let cell = Rc::new(b.finish());
    Ok(Lift {
        morphism: CellMorphism::from_parts(c.clone(), cell.clone(), components),
        cell,
    })
}

/// The factorization of `m : X → c` through a cartesian lift, lying over the
/// given pair of face morphisms into the lift's faces. Morphisms are
/// determined by their vertex components, so the factorization is unique when
/// it exists.
pub fn factor_through_cartesian(
    lift: &Lift,
    lower: &CellMorphism,
    upper: &CellMorphism,
    m: &CellMorphism,
    k: usize,
) -> Option<CellMorphism> {
    let level = lift.cell.level();
    let components = components_over(level, k, lower, upper);
    let f = CellMorphism::new(m.source().clone(), lift.cell.clone(), components).ok()?;
    (lift.morphism.after(&f).ok()? == *m).then_some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcube::{degenerate, CubeCell};
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn fun(a: u32, b: u32, table: &[u32]) -> CellMorphism {
        CellMorphism::new(
            Rc::new(CubeCell::point(a)),
            Rc::new(CubeCell::point(b)),
            vec![table.to_vec()],
        )
        .unwrap()
    }

    fn rel(a: u32, b: u32, pairs: &[[u32; 2]]) -> CubeCell {
        let mut preds = BTreeMap::new();
        preds.insert(
            FacePattern::all_stars(1),
            pairs.iter().map(|p| p.to_vec()).collect(),
        );
        CubeCell::new(1, vec![a, b], preds).unwrap()
    }

    #[test]
    fn inverse_image_of_equality_is_the_graph() {
        let f = fun(3, 2, &[1, 0, 1]);
        let id_b = CellMorphism::identity(Rc::new(CubeCell::point(2)));
        let eq_b = Rc::new(degenerate(&CubeCell::point(2), 0).unwrap());
        let g = reindex(&f, &id_b, &eq_b, 0).unwrap();
        assert_eq!(*g.cell, rel(3, 2, &[[0, 1], [1, 0], [2, 1]]));
        let id_a = CellMorphism::identity(Rc::new(CubeCell::point(3)));
        let eq_a = Rc::new(degenerate(&CubeCell::point(3), 0).unwrap());
        let h = opreindex(&id_a, &f, &eq_a, 0).unwrap();
        assert_eq!(h.cell, g.cell);
        assert!(g.morphism.preserves() && h.morphism.preserves());
    }

    #[test]
    fn identity_pairs_give_back_the_cell() {
        let c = Rc::new(rel(2, 2, &[[0, 1]]));
        let a = Rc::new(CubeCell::point(2));
        let id = CellMorphism::identity(a);
        assert_eq!(reindex(&id, &id, &c, 0).unwrap().cell, c);
        assert_eq!(opreindex(&id, &id, &c, 0).unwrap().cell, c);
    }

    #[test]
    fn mismatched_faces_are_rejected() {
        let c = Rc::new(rel(2, 3, &[]));
        let id = CellMorphism::identity(Rc::new(CubeCell::point(2)));
        assert!(matches!(
            reindex(&id, &id, &c, 0),
            Err(RelError::FaceMismatch(_))
        ));
    }
}
