//! Finite posets with a materialized order relation, and an isomorphism test.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite poset on `0..n`; `le(i, j)` is the order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Poset {
    /// Builds the relation from a predicate. The predicate is trusted; call
    /// [`is_partial_order`](Self::is_partial_order) to check it.
    pub fn from_relation(n: usize, mut le: impl FnMut(usize, usize) -> bool) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if le(i, j) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Self { n, words, rows }
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, |i, j| i <= j)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relation(n, |i, j| i == j)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| self.le(i, i))
            && (0..n).all(|i| (0..n).all(|j| i == j || !(self.le(i, j) && self.le(j, i))))
            && (0..n).all(|i| {
                (0..n).all(|j| !self.le(i, j) || (0..n).all(|k| !self.le(j, k) || self.le(i, k)))
            })
    }

    /// Elements with nothing strictly above them.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| (0..self.n).all(|j| !self.lt(i, j)))
            .collect()
    }

    /// Elements with nothing strictly below them.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| (0..self.n).all(|j| !self.lt(j, i)))
            .collect()
    }

    /// `j` covers `i`: `i < j` with nothing strictly between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) && (0..self.n).all(|k| !(self.lt(i, k) && self.lt(k, j)))
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// Neighbors of each element in the Hasse diagram (upper and lower covers).
    pub fn hasse_neighbors(&self) -> Vec<Vec<usize>> {
        let down = Poset::from_relation(self.n, |i, j| self.le(j, i));
        let mut out = vec![Vec::new(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.lt(i, j) {
                    continue;
                }
                // Strictly between i and j: up(i) ∩ down(j) minus {i, j}.
                let between = self
                    .row(i)
                    .iter()
                    .zip(down.row(j))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>();
                if between == 2 {
                    out[i].push(j);
                    out[j].push(i);
                }
            }
        }
        out
    }

    fn down_size(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.le(j, i)).count()
    }

    fn up_size(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.le(i, j)).count()
    }

    /// Length of the longest chain ending at `i`.
    fn height(&self, i: usize, memo: &mut [Option<usize>]) -> usize {
        if let Some(h) = memo[i] {
            return h;
        }
        let h = (0..self.n)
            .filter(|&j| self.lt(j, i))
            .map(|j| self.height(j, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[i] = Some(h);
        h
    }
}

/// Decides whether an order-preserving bijection with order-preserving inverse
/// exists. Colors from iterated refinement over strict up/down sets prune the
/// backtracking search. Fails with a capacity error above `cap` elements.
pub fn poset_isomorphic(a: &Poset, b: &Poset, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, cap)?.is_some())
}

/// Returns an isomorphism `a → b` as a vector of images, if one exists.
pub fn find_isomorphism(a: &Poset, b: &Poset, cap: usize) -> Result<Option<Vec<usize>>> {
    let size = a.len().max(b.len());
    if size > cap {
        return Err(Error::Capacity {
            what: "poset isomorphism search",
            size,
            cap,
        });
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let (ca, cb) = initial_colors(a, b);
    Ok(individualize(a, b, ca, cb))
}

/// Individualization-refinement: fix an element of the smallest non-singleton
/// class of `a`, try every same-colored partner in `b`, refine, recurse.
fn individualize(a: &Poset, b: &Poset, ca: Vec<usize>, cb: Vec<usize>) -> Option<Vec<usize>> {
    let (ca, cb) = refine(a, b, ca, cb)?;
    let n = a.len();
    let mut size: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *size.entry(c).or_default() += 1;
    }
    let Some(x) = (0..n).filter(|&i| size[&ca[i]] > 1).min_by_key(|&i| (size[&ca[i]], i)) else {
        // Discrete: colors are a bijection, check it.
        let where_b: HashMap<usize, usize> = cb.iter().enumerate().map(|(j, &c)| (c, j)).collect();
        let image: Vec<usize> = ca.iter().map(|c| where_b[c]).collect();
        let ok = (0..n).all(|i| (0..n).all(|j| a.le(i, j) == b.le(image[i], image[j])));
        return ok.then_some(image);
    };
    let fresh = ca.iter().chain(&cb).max().map_or(0, |m| m + 1);
    for y in (0..n).filter(|&j| cb[j] == ca[x]) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[x] = fresh;
        nb[y] = fresh;
        if let Some(found) = individualize(a, b, na, nb) {
            return Some(found);
        }
    }
    None
}

fn initial_colors(a: &Poset, b: &Poset) -> (Vec<usize>, Vec<usize>) {
    let data = |p: &Poset| -> Vec<Vec<usize>> {
        let mut memo = vec![None; p.len()];
        (0..p.len())
            .map(|i| vec![p.height(i, &mut memo), p.down_size(i), p.up_size(i)])
            .collect()
    };
    let mut palette: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut recolor = |keys: Vec<Vec<usize>>| -> Vec<usize> {
        keys.into_iter()
            .map(|k| {
                let next = palette.len();
                *palette.entry(k).or_insert(next)
            })
            .collect()
    };
    let ca = recolor(data(a));
    let cb = recolor(data(b));
    (ca, cb)
}

/// Joint color refinement over strict up/down sets so colors stay comparable.
/// `None` once the color histograms of the two posets differ.
fn refine(a: &Poset, b: &Poset, mut ca: Vec<usize>, mut cb: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
    let histogram = |c: &[usize]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v
    };
    let classes = |c: &[usize]| {
        let mut v = histogram(c);
        v.dedup();
        v.len()
    };
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let key = |p: &Poset, c: &[usize], i: usize| -> Vec<usize> {
            let mut up: Vec<usize> = (0..p.len()).filter(|&j| p.lt(i, j)).map(|j| c[j]).collect();
            let mut down: Vec<usize> = (0..p.len()).filter(|&j| p.lt(j, i)).map(|j| c[j]).collect();
            up.sort_unstable();
            down.sort_unstable();
            let mut k = vec![c[i], usize::MAX];
            k.extend(up);
            k.push(usize::MAX);
            k.extend(down);
            k
        };
        let mut palette: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut recolor = |keys: Vec<Vec<usize>>| -> Vec<usize> {
            keys.into_iter()
                .map(|k| {
                    let next = palette.len();
                    *palette.entry(k).or_insert(next)
                })
                .collect()
        };
        let na = recolor((0..a.len()).map(|i| key(a, &ca, i)).collect());
        let nb = recolor((0..b.len()).map(|i| key(b, &cb, i)).collect());
        let stable = classes(&na) == classes(&ca);
        ca = na;
        cb = nb;
        if stable {
            return (histogram(&ca) == histogram(&cb)).then_some((ca, cb));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_lattice(k: usize) -> Poset {
        Poset::from_relation(1 << k, |i, j| i & j == i)
    }

    #[test]
    fn examples() {
        let p = boolean_lattice(2);
        assert!(poset_isomorphic(&p, &p, 100).unwrap());
        assert!(!poset_isomorphic(&Poset::chain(2), &Poset::antichain(2), 100).unwrap());
        assert!(!poset_isomorphic(&Poset::chain(2), &Poset::chain(3), 100).unwrap());
    }

    #[test]
    fn relabeled_posets_are_isomorphic() {
        let p = boolean_lattice(3);
        let perm = [5usize, 2, 7, 0, 3, 6, 1, 4];
        let mut inv = [0usize; 8];
        for (i, &x) in perm.iter().enumerate() {
            inv[x] = i;
        }
        let q = Poset::from_relation(8, |i, j| p.le(inv[i], inv[j]));
        let iso = find_isomorphism(&p, &q, 100).unwrap().unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(p.le(i, j), q.le(iso[i], iso[j]));
            }
        }
    }

    #[test]
    fn same_size_different_order() {
        let two_chains = Poset::from_relation(4, |i, j| i == j || (i, j) == (0, 1) || (i, j) == (2, 3));
        let bowtie = Poset::from_relation(4, |i, j| i == j || (i < 2 && j >= 2));
        assert!(!poset_isomorphic(&two_chains, &bowtie, 10).unwrap());
        // A 6-crown and two disjoint 4-crowns minus a point share local degree data.
        let crown = Poset::from_relation(6, |i, j| {
            i == j || (i < 3 && j >= 3 && (j - 3 == i || j - 3 == (i + 1) % 3))
        });
        let split = Poset::from_relation(6, |i, j| {
            i == j || matches!((i, j), (0, 3) | (0, 4) | (1, 3) | (1, 4) | (2, 5))
        });
        assert!(crown.is_partial_order() && split.is_partial_order());
        assert!(!poset_isomorphic(&crown, &split, 10).unwrap());
    }

    #[test]
    fn hasse_diagram_of_chain() {
        let h = Poset::chain(3).hasse_neighbors();
        assert_eq!(h, vec![vec![1], vec![0, 2], vec![1]]);
    }

    #[test]
    fn capacity_error() {
        let p = Poset::chain(5);
        assert!(matches!(poset_isomorphic(&p, &p, 4), Err(Error::Capacity { .. })));
    }

    #[test]
    fn partial_order_checks() {
        assert!(boolean_lattice(3).is_partial_order());
        let cyclic = Poset::from_relation(2, |_, _| true);
        assert!(!cyclic.is_partial_order());
        assert_eq!(boolean_lattice(2).maximal(), vec![3]);
        assert_eq!(boolean_lattice(2).minimal(), vec![0]);
        assert!(Poset::chain(3).covers(0, 1));
        assert!(!Poset::chain(3).covers(0, 2));
    }
}
