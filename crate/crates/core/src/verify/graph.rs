use alloc::rc::Rc;
use alloc::vec::Vec;

use super::VerifyError;
use crate::cube::{degeneracy, Level};
use crate::relcube::{
    act_morphism, degenerate, factor_through_cartesian, opreindex, reindex, CellMorphism, CubeCell,
};

/// The graph `⟨f⟩_{l,k}` of `f : A → B` at level `l`: the `(l+1)`-cell
/// `(f, id_B)^* d(l,k) B`, whose faces in direction `k` are `A` and `B`.
#[derive(Clone, Debug)]
pub struct GraphCell {
    pub base: CellMorphism,
    pub k: usize,
    pub cell: Rc<CubeCell>,
    /// The cartesian morphism `⟨f⟩ → d(l,k) B` over `(f, id_B)`.
    pub cart_witness: CellMorphism,
}

fn check_level(f: &CellMorphism, k: usize, p: Level) -> Result<(), VerifyError> {
    let level = f.level();
    if level >= p || k > level {
        return Err(VerifyError::LevelBound { level, p });
    }
    Ok(())
}

pub fn graph(f: &CellMorphism, k: usize, p: Level) -> Result<GraphCell, VerifyError> {
    check_level(f, k, p)?;
    let b = f.target().clone();
    let d = Rc::new(degenerate(&b, k)?);
    let lift = reindex(f, &CellMorphism::identity(b), &d, k)?;
    Ok(GraphCell {
        base: f.clone(),
        k,
        cell: lift.cell,
        cart_witness: lift.morphism,
    })
}

/// The same cell as the direct image `Σ_{(id_A, f)} d(l,k) A`.
pub fn graph_via_opreindex(f: &CellMorphism, k: usize, p: Level) -> Result<Rc<CubeCell>, VerifyError> {
    check_level(f, k, p)?;
    let a = f.source().clone();
    let d = Rc::new(degenerate(&a, k)?);
    Ok(opreindex(&CellMorphism::identity(a), f, &d, k)?.cell)
}

/// The morphism `⟨f⟩ → ⟨g⟩` induced by a commuting square
/// `g ∘ alpha = beta ∘ f`, through the cartesian property of `⟨g⟩`.
/// `None` when the square does not commute.
pub fn graph_morphism(
    from: &GraphCell,
    to: &GraphCell,
    alpha: &CellMorphism,
    beta: &CellMorphism,
) -> Result<Option<CellMorphism>, VerifyError> {
    let level = beta.level();
    let d_beta = act_morphism(&degeneracy(level, to.k)?, beta)?;
    let m = d_beta.after(&from.cart_witness)?;
    let lift = crate::relcube::Lift {
        cell: to.cell.clone(),
        morphism: to.cart_witness.clone(),
    };
    Ok(factor_through_cartesian(&lift, alpha, beta, &m, to.k))
}

/// Every morphism between the vertices of two cells that is the identity on
/// each vertex, if the carriers agree and it preserves relations.
pub fn vertical(a: &Rc<CubeCell>, b: &Rc<CubeCell>) -> Option<CellMorphism> {
    if a.carriers() != b.carriers() {
        return None;
    }
    let comps: Vec<Vec<u32>> = a.carriers().iter().map(|&n| (0..n).collect()).collect();
    CellMorphism::new(a.clone(), b.clone(), comps).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcube::{TupleSet, FacePattern};
    use alloc::vec;

    fn fun(a: u32, table: Vec<u32>, b: u32) -> CellMorphism {
        CellMorphism::new(
            Rc::new(CubeCell::point(a)),
            Rc::new(CubeCell::point(b)),
            vec![table],
        )
        .unwrap()
    }

    fn pairs(c: &CubeCell) -> TupleSet {
        c.pred(&FacePattern::all_stars(1)).clone()
    }

    #[test]
    fn graph_of_a_function_is_its_inverse_image_relation() {
        for (a, b) in [(2, 2), (2, 1), (1, 2), (0, 2), (2, 3)] {
            let count = (b as u64).pow(a);
            for code in 0..count {
                let table = crate::relcube::decode_function(code as u32, a, b);
                let f = fun(a, table.clone(), b);
                let g = graph(&f, 0, 1).unwrap();
                let oracle = TupleSet::from_tuples(
                    2,
                    (0..a).flat_map(|x| (0..b).map(move |y| [x, y])).filter(|t| table[t[0] as usize] == t[1]),
                );
                assert_eq!(pairs(&g.cell), oracle);
                assert_eq!(*graph_via_opreindex(&f, 0, 1).unwrap(), *g.cell);
            }
        }
    }

    #[test]
    fn graph_of_a_constant_is_full() {
        let g = graph(&fun(2, vec![0, 0], 1), 0, 1).unwrap();
        assert_eq!(pairs(&g.cell), TupleSet::from_tuples(2, [[0, 0], [1, 0]]));
    }

    #[test]
    fn graph_of_identity_is_degenerate() {
        let a = Rc::new(CubeCell::point(2));
        let g = graph(&CellMorphism::identity(a.clone()), 0, 1).unwrap();
        assert_eq!(*g.cell, degenerate(&a, 0).unwrap());
    }

    #[test]
    fn level_bound() {
        let f = fun(1, vec![0], 1);
        assert_eq!(graph(&f, 0, 0).unwrap_err(), VerifyError::LevelBound { level: 0, p: 0 });
    }

    #[test]
    fn squares_induce_graph_morphisms() {
        let f = fun(2, vec![0, 1], 2);
        let g = fun(2, vec![1, 0], 2);
        let (gf, gg) = (graph(&f, 0, 1).unwrap(), graph(&g, 0, 1).unwrap());
        let swap = fun(2, vec![1, 0], 2);
        let id = fun(2, vec![0, 1], 2);
        // g ∘ id = swap ∘ f
        assert!(graph_morphism(&gf, &gg, &id, &swap).unwrap().is_some());
        assert!(graph_morphism(&gf, &gg, &id, &id).unwrap().is_none());
    }
}
