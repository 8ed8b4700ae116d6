//! 3-edge connectivization and cyclic equivalence. Two graphs have isomorphic
//! cographic rings iff their 3-edge connectivizations are cyclically
//! equivalent.

use std::collections::{BTreeMap, BTreeSet};

use crate::circuit::enumerate_oriented_circuits;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::Limits;

/// Separating pairs `{e, f}`, `e < f`: neither edge is separating on its
/// own, but removing both increases the number of components.
pub fn two_edge_cuts(g: &Graph) -> Vec<(usize, usize)> {
    let full = EdgeSet::full(g);
    let base = g.component_count();
    let bridges = g.separating_edges();
    let candidates: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !g.is_loop(e) && !bridges.contains(e))
        .collect();
    let mut out = Vec::new();
    for (i, &e) in candidates.iter().enumerate() {
        for &f in &candidates[i + 1..] {
            let mut rest = full.clone();
            rest.remove(e);
            rest.remove(f);
            if g.components_within(&rest) > base {
                out.push((e, f));
            }
        }
    }
    out
}

/// Which member of a separating pair gets contracted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Lowest,
    Highest,
}

/// Contracts every separating edge, then one member of each separating pair,
/// until neither remains. The first Betti number is unchanged.
pub fn three_edge_connectivization(g: &Graph, limits: &Limits) -> Result<Graph> {
    three_edge_connectivization_with(g, limits, TieBreak::Lowest)
}

pub fn three_edge_connectivization_with(g: &Graph, limits: &Limits, tie: TieBreak) -> Result<Graph> {
    if g.edge_count() > limits.orientation_edges {
        return Err(Error::Capacity {
            what: "edges for 3-edge connectivization",
            size: g.edge_count(),
            cap: limits.orientation_edges,
        });
    }
    let mut g = g.clone();
    loop {
        if let Some(e) = g.separating_edges().first() {
            g = g.contract_edge(e)?;
            continue;
        }
        match two_edge_cuts(&g).first() {
            Some(&(e, f)) => {
                let pick = match tie {
                    TieBreak::Lowest => e,
                    TieBreak::Highest => f,
                };
                g = g.contract_edge(pick)?;
            }
            None => return Ok(g),
        }
    }
}

/// Unoriented circuit supports as bitmasks over edge indices.
pub fn circuit_supports(g: &Graph, limits: &Limits) -> Result<BTreeSet<u64>> {
    let circuits = enumerate_oriented_circuits(g, limits)?;
    Ok(circuits
        .iter()
        .map(|c| c.support().iter().fold(0u64, |m, e| m | 1 << e))
        .collect())
}

/// Per-edge pruning signature: sorted sizes of the circuits through it.
fn signatures(m: usize, supports: &BTreeSet<u64>) -> Vec<Vec<u32>> {
    (0..m)
        .map(|e| {
            let mut s: Vec<u32> = supports
                .iter()
                .filter(|&&c| c >> e & 1 == 1)
                .map(|c| c.count_ones())
                .collect();
            s.sort_unstable();
            s
        })
        .collect()
}

/// Searches for an edge bijection carrying the circuit supports of `g` onto
/// those of `h`. Returns the image of each edge of `g`.
pub fn find_cyclic_equivalence(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let m = g.edge_count();
    if m != h.edge_count() {
        return Ok(None);
    }
    let (cg, ch) = (circuit_supports(g, limits)?, circuit_supports(h, limits)?);
    let sizes = |s: &BTreeSet<u64>| {
        let mut v: Vec<u32> = s.iter().map(|c| c.count_ones()).collect();
        v.sort_unstable();
        v
    };
    if sizes(&cg) != sizes(&ch) {
        return Ok(None);
    }
    let (sg, sh) = (signatures(m, &cg), signatures(m, &ch));
    let mut count: BTreeMap<&Vec<u32>, i64> = BTreeMap::new();
    for s in &sg {
        *count.entry(s).or_default() += 1;
    }
    for s in &sh {
        *count.entry(s).or_default() -= 1;
    }
    if count.values().any(|&c| c != 0) {
        return Ok(None);
    }

    // Circuits of g grouped by their highest edge: they can be checked as
    // soon as that edge is assigned.
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); m];
    for &c in &cg {
        closing[63 - c.leading_zeros() as usize].push(c);
    }

    struct Search<'a> {
        m: usize,
        sg: &'a [Vec<u32>],
        sh: &'a [Vec<u32>],
        ch: &'a BTreeSet<u64>,
        closing: &'a [Vec<u64>],
        image: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, e: usize) -> bool {
            if e == self.m {
                return true;
            }
            for f in 0..self.m {
                if self.used[f] || self.sg[e] != self.sh[f] {
                    continue;
                }
                self.image[e] = f;
                self.used[f] = true;
                let ok = self.closing[e].iter().all(|&c| {
                    let mapped = (0..=e).filter(|&x| c >> x & 1 == 1).fold(0u64, |acc, x| acc | 1 << self.image[x]);
                    self.ch.contains(&mapped)
                });
                if ok && self.run(e + 1) {
                    return true;
                }
                self.used[f] = false;
            }
            false
        }
    }

    let mut search = Search {
        m,
        sg: &sg,
        sh: &sh,
        ch: &ch,
        closing: &closing,
        image: vec![0; m],
        used: vec![false; m],
    };
    Ok(search.run(0).then_some(search.image))
}

/// Edge bijection preserving circuit supports exists.
pub fn cyclically_equivalent(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    Ok(find_cyclic_equivalence(g, h, limits)?.is_some())
}

/// `R(Γ) ≅ R(Γ′)`.
pub fn same_cographic_ring(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    let g3 = three_edge_connectivization(g, limits)?;
    let h3 = three_edge_connectivization(h, limits)?;
    cyclically_equivalent(&g3, &h3, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn cut_examples() {
        assert_eq!(two_edge_cuts(&catalog::b2()), vec![(0, 1)]);
        assert!(two_edge_cuts(&catalog::b3()).is_empty());
        assert!(two_edge_cuts(&catalog::loop1()).is_empty());
        assert!(two_edge_cuts(&catalog::tree3()).is_empty());
        assert_eq!(two_edge_cuts(&catalog::cycle(4)).len(), 6);
        // Every vertex of the doubled triangle has degree 4: no pair disconnects it.
        assert!(two_edge_cuts(&catalog::fig_nh()).is_empty());
    }

    #[test]
    fn connectivization_examples() {
        let t = three_edge_connectivization(&catalog::tree3(), &lim()).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (1, 0));
        for g in [catalog::b2(), catalog::cycle(2), catalog::cycle(5)] {
            let r = three_edge_connectivization(&g, &lim()).unwrap();
            assert_eq!((r.vertex_count(), r.edge_count()), (1, 1));
            assert!(r.is_loop(0));
        }
        for (_, g) in catalog::all() {
            let r = three_edge_connectivization(&g, &lim()).unwrap();
            assert_eq!(r.betti1(), g.betti1());
            assert!(r.separating_edges().is_empty());
            assert!(two_edge_cuts(&r).is_empty());
            let again = three_edge_connectivization(&r, &lim()).unwrap();
            assert!(cyclically_equivalent(&r, &again, &lim()).unwrap());
            let other = three_edge_connectivization_with(&g, &lim(), TieBreak::Highest).unwrap();
            assert!(cyclically_equivalent(&r, &other, &lim()).unwrap());
        }
    }

    #[test]
    fn equivalence_examples() {
        for (_, g) in catalog::all() {
            assert!(cyclically_equivalent(&g, &g, &lim()).unwrap());
        }
        assert!(!cyclically_equivalent(&catalog::b3(), &catalog::cycle(3), &lim()).unwrap());
        assert!(!cyclically_equivalent(&catalog::b3(), &catalog::b2(), &lim()).unwrap());
    }

    #[test]
    fn relabelled_graphs_are_equivalent() {
        let g = catalog::theta2();
        let reversed = Graph::parse(
            "edge e3_1 left right\nedge e3_0 left right\nedge e2_1 right top\nedge e2_0 top right\n\
             edge e1_1 top left\nedge e1_0 left top\n",
        )
        .unwrap();
        let map = find_cyclic_equivalence(&g, &reversed, &lim()).unwrap().unwrap();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn ring_comparisons() {
        assert!(same_cographic_ring(&catalog::cycle(5), &catalog::cycle(7), &lim()).unwrap());
        assert!(!same_cographic_ring(&catalog::b3(), &catalog::cycle(4), &lim()).unwrap());
        let g = catalog::theta2();
        let pendant = g.with_edge("p", "top", "extra").unwrap();
        assert!(same_cographic_ring(&g, &pendant, &lim()).unwrap());
        assert!(same_cographic_ring(&catalog::b2(), &catalog::loop1(), &lim()).unwrap());
        assert!(!same_cographic_ring(&catalog::fig_ng(), &catalog::fig_nh(), &lim()).unwrap());
    }
}
