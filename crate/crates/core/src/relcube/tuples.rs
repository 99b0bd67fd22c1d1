use alloc::vec::Vec;
use core::fmt;

/// A set of fixed-width tuples of elements, stored flat and sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TupleSet {
    width: usize,
    flat: Vec<u32>,
}

impl TupleSet {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            flat: Vec::new(),
        }
    }

    /// Builds a set from arbitrary tuples; order and duplicates are irrelevant.
    pub fn from_tuples<I, T>(width: usize, tuples: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[u32]>,
    {
        let mut rows: Vec<Vec<u32>> = tuples
            .into_iter()
            .map(|t| {
                let t = t.as_ref();
                assert_eq!(t.len(), width, "tuple width");
                t.to_vec()
            })
            .collect();
        rows.sort_unstable();
        rows.dedup();
        Self {
            width,
            flat: rows.concat(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.flat.len().checked_div(self.width).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        let w = self.width.max(1);
        self.flat.chunks_exact(w).take(self.len())
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.width..(i + 1) * self.width]
    }

    pub fn contains(&self, t: &[u32]) -> bool {
        if t.len() != self.width || self.width == 0 {
            return false;
        }
        let n = self.len();
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(t) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn is_subset(&self, other: &TupleSet) -> bool {
        self.iter().all(|t| other.contains(t))
    }
}

impl fmt::Debug for TupleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deduplicated() {
        let s = TupleSet::from_tuples(2, [[1, 0], [0, 1], [1, 0]]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.get(0), &[0, 1]);
        assert!(s.contains(&[1, 0]));
        assert!(!s.contains(&[1, 1]));
        assert!(!s.contains(&[1]));
        assert!(TupleSet::empty(2).is_subset(&s));
        assert_eq!(TupleSet::empty(0).iter().count(), 0);
    }
}
