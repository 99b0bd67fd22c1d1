//! Binary logical relations over plain finite sets, independent of the cube
//! machinery. A family `(f_A)` over the sets of size at most `n` is counted
//! when every relation `R ⊆ A × B` relates `f_A` and `f_B`.

#[derive(Clone, Debug)]
pub enum Simple {
    /// The quantified variable.
    X,
    /// A fixed set of this size, related to itself by equality.
    Base(usize),
    Arrow(Box<Simple>, Box<Simple>),
}

pub fn arrow(a: Simple, b: Simple) -> Simple {
    Simple::Arrow(Box::new(a), Box::new(b))
}

pub fn size(t: &Simple, a: usize) -> usize {
    match t {
        Simple::X => a,
        Simple::Base(n) => *n,
        Simple::Arrow(s, r) => size(r, a).pow(size(s, a) as u32),
    }
}

fn apply(t: &Simple, a: usize, f: usize, x: usize) -> usize {
    let Simple::Arrow(s, r) = t else { unreachable!() };
    let (dom, cod) = (size(s, a), size(r, a));
    (f / cod.pow((dom - 1 - x) as u32)) % cod
}

fn related(t: &Simple, a: usize, b: usize, rel: &[Vec<bool>], x: usize, y: usize) -> bool {
    match t {
        Simple::X => rel[x][y],
        Simple::Base(_) => x == y,
        Simple::Arrow(s, r) => (0..size(s, a)).all(|u| {
            (0..size(s, b)).all(|v| {
                !related(s, a, b, rel, u, v)
                    || related(r, a, b, rel, apply(t, a, x, u), apply(t, b, y, v))
            })
        }),
    }
}

fn relations(a: usize, b: usize) -> Vec<Vec<Vec<bool>>> {
    let cells = a * b;
    (0..1usize << cells)
        .map(|bits| {
            (0..a)
                .map(|i| (0..b).map(|j| bits >> (i * b + j) & 1 == 1).collect())
                .collect()
        })
        .collect()
}

/// Number of parametric families of `∀X. t` over sets of size `lo..=n`.
pub fn count(t: &Simple, lo: usize, n: usize) -> usize {
    let sets: Vec<usize> = (lo..=n).collect();
    let mut total = 0;
    let mut choice = vec![0usize; sets.len()];
    let sizes: Vec<usize> = sets.iter().map(|&a| size(t, a)).collect();
    if sizes.contains(&0) {
        return 0;
    }
    loop {
        let ok = sets.iter().enumerate().all(|(i, &a)| {
            sets.iter().enumerate().all(|(j, &b)| {
                relations(a, b)
                    .iter()
                    .all(|r| related(t, a, b, r, choice[i], choice[j]))
            })
        });
        total += usize::from(ok);
        let mut k = 0;
        loop {
            if k == choice.len() {
                return total;
            }
            choice[k] += 1;
            if choice[k] < sizes[k] {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
