use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use super::cell::{CellMorphism, CubeCell};
use super::pattern::{FacePattern, Pat};
use super::tuples::TupleSet;
use super::RelError;
use crate::cube::{degeneracy, face, BoxMorphism, Entry, Star};

/// The pattern of the source cell that a pattern `u` of `act(h, c)` reads
/// from: coordinate `i` is `h(i)` when that is an error value, else `u[h(i)]`.
pub fn source_pattern(h: &BoxMorphism, u: &FacePattern) -> FacePattern {
    FacePattern::new(
        h.assignment()
            .iter()
            .map(|e| match *e {
                Entry::Bot => Pat::Bot,
                Entry::Top => Pat::Top,
                Entry::Index(j) => u.get(j),
            })
            .collect(),
    )
}

fn check_action(h: &BoxMorphism, c: &CubeCell) -> Result<(), RelError> {
    if h.source() != c.level() {
        return Err(RelError::LevelMismatch {
            expected: h.source(),
            found: c.level(),
        });
    }
    if !h.is_injective() {
        return Err(RelError::Malformed(alloc::format!(
            "{h} identifies two dimensions"
        )));
    }
    Ok(())
}

fn source_vertex(h: &BoxMorphism, w: usize) -> usize {
    source_pattern(h, &FacePattern::vertex(h.target(), w)).vertex_index()
}

/// The action of a cube morphism `h : l₁ → l₂` sending an `l₁`-cell to an
/// `l₂`-cell. Free coordinates of a pattern outside the image of `h` are
/// degenerate: a tuple must be constant along them.
pub fn act(h: &BoxMorphism, c: &CubeCell) -> Result<CubeCell, RelError> {
    check_action(h, c)?;
    let l2 = h.target();
    let carriers = (0..1usize << l2)
        .map(|w| c.carrier(source_vertex(h, w)))
        .collect();
    let mut preds = vec![TupleSet::empty(0); 3usize.pow(l2 as u32)];
    for u in FacePattern::relational(l2) {
        let s = source_pattern(h, &u);
        let u_stars = u.stars();
        let m = u_stars.len();
        // for each source free coordinate, its position among the free
        // coordinates of u
        let s_pos: Vec<usize> = s
            .stars()
            .iter()
            .map(|&i| {
                let j = h.get(i).as_index().expect("free source coordinate");
                u_stars.iter().position(|&x| x == j).expect("image coordinate")
            })
            .collect();
        let ms = s_pos.len();
        let collapse: Vec<usize> = (0..1usize << m)
            .map(|a| {
                s_pos.iter().enumerate().fold(0, |b, (q, &p)| {
                    b | (((a >> (m - 1 - p)) & 1) << (ms - 1 - q))
                })
            })
            .collect();
        let width = 1 << m;
        let ts = if s.is_vertex() {
            TupleSet::from_tuples(
                width,
                (0..c.carrier(s.vertex_index())).map(|e| vec![e; width]),
            )
        } else {
            TupleSet::from_tuples(
                width,
                c.pred(&s)
                    .iter()
                    .map(|t| collapse.iter().map(|&b| t[b]).collect::<Vec<u32>>()),
            )
        };
        preds[u.index()] = ts;
    }
    Ok(CubeCell::from_parts(l2, carriers, preds))
}

/// The action on morphisms: each output vertex reuses the component at its
/// source vertex.
pub fn act_morphism(h: &BoxMorphism, m: &CellMorphism) -> Result<CellMorphism, RelError> {
    let source = Rc::new(act(h, m.source())?);
    let target = Rc::new(act(h, m.target())?);
    let components = (0..1usize << h.target())
        .map(|w| m.component(source_vertex(h, w)).to_vec())
        .collect();
    Ok(CellMorphism::from_parts(source, target, components))
}

/// The face of an `l`-cell with coordinate `k` fixed to `star`.
pub fn face_of(c: &CubeCell, k: usize, star: Star) -> Result<CubeCell, RelError> {
    let l = c.level();
    if l == 0 {
        return Err(RelError::Malformed("a 0-cell has no faces".into()));
    }
    act(&face(l - 1, k, star)?, c)
}

/// The degenerate `(l+1)`-cell repeating `c` along a new coordinate `k`.
pub fn degenerate(c: &CubeCell, k: usize) -> Result<CubeCell, RelError> {
    act(&degeneracy(c.level(), k)?, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::compose;
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
    fn degeneracy_of_a_set_is_equality() {
        let eq = degenerate(&CubeCell::point(3), 0).unwrap();
        assert_eq!(eq, rel(3, 3, &[[0, 0], [1, 1], [2, 2]]));
    }

    #[test]
    fn faces_project() {
        let r = rel(2, 3, &[[0, 2], [1, 0]]);
        assert_eq!(face_of(&r, 0, Star::Bot).unwrap(), CubeCell::point(2));
        assert_eq!(face_of(&r, 0, Star::Top).unwrap(), CubeCell::point(3));
        let back = act(
            &compose(&face(0, 0, Star::Top).unwrap(), &degeneracy(0, 0).unwrap()).unwrap(),
            &CubeCell::point(4),
        )
        .unwrap();
        assert_eq!(back, CubeCell::point(4));
    }

    #[test]
    fn degenerate_squares_are_coherent() {
        let r = rel(2, 2, &[[0, 1], [1, 1]]);
        for k in 0..2 {
            let sq = degenerate(&r, k).unwrap();
            assert!(sq.is_coherent());
            assert_eq!(face_of(&sq, k, Star::Bot).unwrap(), r);
            assert_eq!(face_of(&sq, k, Star::Top).unwrap(), r);
            assert_eq!(sq.top().len(), 2);
        }
        // the other pair of faces of d(1,0) r are equality relations
        let sq = degenerate(&r, 0).unwrap();
        assert_eq!(
            face_of(&sq, 1, Star::Bot).unwrap(),
            degenerate(&CubeCell::point(2), 0).unwrap()
        );
    }

    #[test]
    fn non_injective_maps_are_rejected() {
        let h = BoxMorphism::new(1, vec![Entry::Index(0), Entry::Index(0)]).unwrap();
        let square = degenerate(&rel(1, 1, &[]), 0).unwrap();
        assert!(matches!(act(&h, &square), Err(RelError::Malformed(_))));
    }
}
