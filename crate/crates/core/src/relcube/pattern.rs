use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cube::{BoxMorphism, Entry, Level, Star};

/// One coordinate of a face pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pat {
    Bot,
    Top,
    Star,
}

impl Pat {
    pub fn from_star(s: Star) -> Self {
        match s {
            Star::Bot => Pat::Bot,
            Star::Top => Pat::Top,
        }
    }

    fn digit(self) -> usize {
        match self {
            Pat::Bot => 0,
            Pat::Top => 1,
            Pat::Star => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pat::Bot => 'B',
            Pat::Top => 'T',
            Pat::Star => '*',
        }
    }
}

/// A face of the `l`-cube: each coordinate is fixed to `B`/`T` or free (`*`).
///
/// The vertices `V(u)` of a pattern are listed by counting in binary over its
/// free coordinates, the lowest free coordinate being the most significant
/// digit and `B` standing for 0. Tuples of a relation at `u` follow that order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacePattern(Vec<Pat>);

impl FacePattern {
    pub fn new(coords: Vec<Pat>) -> Self {
        Self(coords)
    }

    pub fn all_stars(level: Level) -> Self {
        Self(alloc::vec![Pat::Star; level])
    }

    /// The vertex with the given index (`B` = 0, coordinate 0 most significant).
    pub fn vertex(level: Level, index: usize) -> Self {
        Self(
            (0..level)
                .map(|i| {
                    if (index >> (level - 1 - i)) & 1 == 1 {
                        Pat::Top
                    } else {
                        Pat::Bot
                    }
                })
                .collect(),
        )
    }

    pub fn level(&self) -> Level {
        self.0.len()
    }

    pub fn coords(&self) -> &[Pat] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Pat {
        self.0[i]
    }

    pub fn stars(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == Pat::Star).collect()
    }

    pub fn star_count(&self) -> usize {
        self.0.iter().filter(|p| **p == Pat::Star).count()
    }

    pub fn is_vertex(&self) -> bool {
        self.star_count() == 0
    }

    /// Base-3 index, coordinate 0 most significant.
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, p| acc * 3 + p.digit())
    }

    pub fn from_index(level: Level, mut index: usize) -> Self {
        let mut coords = alloc::vec![Pat::Bot; level];
        for i in (0..level).rev() {
            coords[i] = match index % 3 {
                0 => Pat::Bot,
                1 => Pat::Top,
                _ => Pat::Star,
            };
            index /= 3;
        }
        Self(coords)
    }

    /// Index of a vertex pattern among the `2^l` vertices.
    pub fn vertex_index(&self) -> usize {
        debug_assert!(self.is_vertex());
        self.0
            .iter()
            .fold(0, |acc, p| (acc << 1) | usize::from(*p == Pat::Top))
    }

    /// `u` with coordinate `i` replaced.
    pub fn with(&self, i: usize, p: Pat) -> Self {
        let mut c = self.0.clone();
        c[i] = p;
        Self(c)
    }

    /// `u` with coordinate `i` removed.
    pub fn without(&self, i: usize) -> Self {
        let mut c = self.0.clone();
        c.remove(i);
        Self(c)
    }

    /// `u` with `p` inserted at coordinate `i`.
    pub fn inserting(&self, i: usize, p: Pat) -> Self {
        let mut c = self.0.clone();
        c.insert(i, p);
        Self(c)
    }

    /// Vertex indices of `V(u)` in tuple order.
    pub fn vertices(&self) -> Vec<usize> {
        let stars = self.stars();
        let m = stars.len();
        let l = self.level();
        let base = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, p)| **p == Pat::Top)
            .fold(0usize, |acc, (i, _)| acc | (1 << (l - 1 - i)));
        (0..1usize << m)
            .map(|a| {
                let mut v = base;
                for (j, &s) in stars.iter().enumerate() {
                    if (a >> (m - 1 - j)) & 1 == 1 {
                        v |= 1 << (l - 1 - s);
                    }
                }
                v
            })
            .collect()
    }

    /// Positions (into a tuple over `V(u)`) of the sub-tuple over the face
    /// obtained by fixing the `j`-th free coordinate (counting free
    /// coordinates only) to `side`.
    pub fn face_positions(&self, j: usize, side: Star) -> Vec<usize> {
        let m = self.star_count();
        let want = usize::from(side == Star::Top);
        (0..1usize << m)
            .filter(|a| (a >> (m - 1 - j)) & 1 == want)
            .collect()
    }

    /// All patterns at a level, vertices included, in base-3 order.
    pub fn all(level: Level) -> impl Iterator<Item = FacePattern> {
        (0..3usize.pow(level as u32)).map(move |i| FacePattern::from_index(level, i))
    }

    /// Patterns with at least one free coordinate, ordered by number of free
    /// coordinates and then by index, so that every face precedes its cofaces.
    pub fn relational(level: Level) -> Vec<FacePattern> {
        let mut v: Vec<FacePattern> = Self::all(level).filter(|u| !u.is_vertex()).collect();
        v.sort_by_key(|u| (u.star_count(), u.index()));
        v
    }

    /// The `□` morphism `l → m` (m = number of free coordinates) whose action
    /// restricts an `l`-cell to this face.
    pub fn restriction(&self) -> BoxMorphism {
        let mut next = 0;
        let assignment = self
            .0
            .iter()
            .map(|p| match p {
                Pat::Bot => Entry::Bot,
                Pat::Top => Entry::Top,
                Pat::Star => {
                    next += 1;
                    Entry::Index(next - 1)
                }
            })
            .collect();
        BoxMorphism::new(self.star_count(), assignment).expect("indices below star count")
    }

    pub fn to_text(&self) -> String {
        self.0.iter().map(|p| p.symbol()).collect()
    }
}

impl fmt::Display for FacePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for p in &self.0 {
            write!(f, "{}", p.symbol())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertices_follow_tuple_order() {
        let u = FacePattern::new(alloc::vec![Pat::Star, Pat::Top, Pat::Star]);
        // stars at 0 and 2; vertex index bits: coord0 = 4, coord1 = 2, coord2 = 1
        assert_eq!(u.vertices(), [2, 3, 6, 7]);
        assert_eq!(u.face_positions(0, Star::Bot), [0, 1]);
        assert_eq!(u.face_positions(1, Star::Top), [1, 3]);
    }

    #[test]
    fn index_round_trip() {
        for l in 0..4 {
            for u in FacePattern::all(l) {
                assert_eq!(FacePattern::from_index(l, u.index()), u);
            }
        }
        let v = FacePattern::vertex(3, 5);
        assert_eq!(v.to_text(), "TBT");
        assert_eq!(v.vertex_index(), 5);
    }

    #[test]
    fn relational_order_puts_faces_first() {
        let ps = FacePattern::relational(2);
        assert_eq!(ps.len(), 5);
        assert_eq!(ps.last().unwrap().to_text(), "**");
    }

    #[test]
    fn restriction_morphism() {
        let u = FacePattern::new(alloc::vec![Pat::Top, Pat::Star]);
        assert_eq!(alloc::format!("{}", u.restriction()), "2->1 [T,0]");
    }
}
