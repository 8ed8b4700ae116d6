//! Orientations, totally cyclic orientations and the poset `OP_Γ` of pairs
//! `(T, φ)` with `φ` a totally cyclic orientation of `Γ∖T`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeSet, Graph, OrientedEdge};
use crate::poset::Poset;
use crate::Limits;

/// A choice of direction for each edge of some edge set (a section `E → oriented edges`).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation(BTreeMap<usize, Direction>);

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    /// The reference orientation on every edge of `g`.
    pub fn reference(g: &Graph) -> Self {
        (0..g.edge_count()).map(|e| (e, Direction::Forward)).collect()
    }

    /// Parses directions given per edge name.
    pub fn from_named<S: AsRef<str>>(g: &Graph, dirs: &[(S, Direction)]) -> Result<Self> {
        dirs.iter()
            .map(|(n, d)| Ok((g.edge_index(n.as_ref())?, *d)))
            .collect()
    }

    pub fn get(&self, e: usize) -> Option<Direction> {
        self.0.get(&e).copied()
    }

    pub fn oriented_edge(&self, e: usize) -> Option<OrientedEdge> {
        self.get(e).map(|d| OrientedEdge::new(e, d))
    }

    pub fn domain(&self) -> EdgeSet {
        self.0.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Direction)> + '_ {
        self.0.iter().map(|(&e, &d)| (e, d))
    }

    pub fn restrict(&self, edges: &EdgeSet) -> Self {
        self.iter().filter(|(e, _)| edges.contains(*e)).collect()
    }

    /// Reverses every edge.
    pub fn reversed(&self) -> Self {
        self.iter().map(|(e, d)| (e, d.reverse())).collect()
    }

    /// `true` when both orientations agree on every edge they share.
    pub fn agrees_with(&self, other: &Orientation) -> bool {
        self.iter()
            .all(|(e, d)| other.get(e).map_or(true, |d2| d2 == d))
    }

    /// `{edge name: "+"|"-"}` for reports.
    pub fn to_named(&self, g: &Graph) -> BTreeMap<String, Direction> {
        self.iter()
            .map(|(e, d)| (g.edge_name(e).to_owned(), d))
            .collect()
    }
}

impl FromIterator<(usize, Direction)> for Orientation {
    fn from_iter<I: IntoIterator<Item = (usize, Direction)>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Totally cyclic test on the spanning subgraph `active` (the domain of `phi`):
/// every connected component of the digraph must be strongly connected.
pub(crate) fn is_totally_cyclic_on(g: &Graph, active: &EdgeSet, phi: &Orientation) -> bool {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in active {
        let r = OrientedEdge::new(e, phi.get(e).expect("orientation covers active edges"));
        let (s, t) = (g.source(r), g.target(r));
        out[s].push(t);
        inc[t].push(s);
    }
    let reach = |adj: &[Vec<usize>], root: usize| {
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    g.component_vertices(active).iter().all(|comp| {
        let root = comp[0];
        let fwd = reach(&out, root);
        let back = reach(&inc, root);
        comp.iter().all(|&v| fwd[v] && back[v])
    })
}

/// `true` iff `(g, φ)` has every connected component strongly connected.
/// `φ` must orient every edge of `g`.
pub fn is_totally_cyclic(g: &Graph, phi: &Orientation) -> Result<bool> {
    if phi.domain() != EdgeSet::full(g) {
        return Err(Error::PartialOrientation);
    }
    Ok(is_totally_cyclic_on(g, &EdgeSet::full(g), phi))
}

/// All orientations of `active` in canonical order: lexicographic over the
/// edges, forward before backward.
fn all_orientations(active: &EdgeSet) -> impl Iterator<Item = Orientation> + '_ {
    let k = active.len();
    (0u64..1 << k).map(move |mask| {
        active
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let bit = mask >> (k - 1 - i) & 1;
                (e, if bit == 0 { Direction::Forward } else { Direction::Backward })
            })
            .collect()
    })
}

pub(crate) fn enumerate_tco_within(
    g: &Graph,
    active: &EdgeSet,
    cap: usize,
) -> Result<Vec<Orientation>> {
    if active.len() > cap {
        return Err(Error::Capacity {
            what: "totally cyclic orientation enumeration",
            size: active.len(),
            cap,
        });
    }
    // A bridge can never lie on a directed cycle.
    if !g.separating_within(active).is_empty() {
        return Ok(Vec::new());
    }
    Ok(all_orientations(active)
        .filter(|phi| is_totally_cyclic_on(g, active, phi))
        .collect())
}

/// Every totally cyclic orientation of `g`, in canonical order.
pub fn enumerate_tco(g: &Graph, limits: &Limits) -> Result<Vec<Orientation>> {
    enumerate_tco_within(g, &EdgeSet::full(g), limits.orientation_edges)
}

/// A pair `(T, φ)`: an edge set `T` and a totally cyclic orientation `φ` of `Γ∖T`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotCycPair {
    removed: EdgeSet,
    orientation: Orientation,
}

impl TotCycPair {
    /// Validates that `φ` orients exactly `E∖T` and is totally cyclic there.
    pub fn new(g: &Graph, removed: EdgeSet, orientation: Orientation) -> Result<Self> {
        for e in &removed {
            g.check_edge(e)?;
        }
        let rest = removed.complement(g);
        if orientation.domain() != rest {
            return Err(Error::PartialOrientation);
        }
        if !is_totally_cyclic_on(g, &rest, &orientation) {
            return Err(Error::NotTotallyCyclic);
        }
        Ok(Self {
            removed,
            orientation,
        })
    }

    pub(crate) fn new_unchecked(removed: EdgeSet, orientation: Orientation) -> Self {
        Self {
            removed,
            orientation,
        }
    }

    /// The minimum `(E, ∅)`.
    pub fn minimum(g: &Graph) -> Self {
        Self::new_unchecked(EdgeSet::full(g), Orientation::new())
    }

    /// `T`.
    pub fn removed(&self) -> &EdgeSet {
        &self.removed
    }

    /// `φ`, an orientation of `Γ∖T`.
    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// `E∖T`.
    pub fn remaining(&self) -> EdgeSet {
        self.orientation.domain()
    }

    /// `self ≤ other` iff `Γ∖T_self ⊆ Γ∖T_other` and `φ_self` is the restriction of `φ_other`.
    pub fn le(&self, other: &TotCycPair) -> bool {
        other.removed.is_subset(&self.removed)
            && self
                .orientation
                .iter()
                .all(|(e, d)| other.orientation.get(e) == Some(d))
    }

    /// Restricts to `Γ∖T'` for `T' ⊇ T`, without checking total cyclicity.
    pub(crate) fn restrict_unchecked(&self, removed: EdgeSet) -> Self {
        let rest = self.orientation.domain().difference(&removed);
        Self::new_unchecked(removed, self.orientation.restrict(&rest))
    }

    /// Compact label such as `T={e3} φ=[e1+,e2-]`.
    pub fn label(&self, g: &Graph) -> String {
        let t = self.removed.names(g).join(",");
        let phi: Vec<String> = self
            .orientation
            .iter()
            .map(|(e, d)| format!("{}{}", g.edge_name(e), d.symbol()))
            .collect();
        format!("T={{{t}}} φ=[{}]", phi.join(","))
    }
}

/// The poset `OP_Γ` with its order relation materialized.
#[derive(Clone, Debug)]
pub struct OrientationPoset {
    pub elements: Vec<TotCycPair>,
    pub order: Poset,
}

impl OrientationPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &TotCycPair) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }
}

fn subsets_by_size(m: usize) -> Vec<EdgeSet> {
    let mut masks: Vec<u64> = (0u64..1 << m).collect();
    // Increasing |T|, then lexicographic on the sorted edge list.
    let key = |mask: u64| -> (u32, Vec<usize>) {
        (mask.count_ones(), (0..m).filter(|i| mask >> i & 1 == 1).collect())
    };
    masks.sort_by_cached_key(|&mask| key(mask));
    masks
        .into_iter()
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Builds `OP_Γ`: every `(T, φ)`, listed by increasing `|T|`, then `T`, then
/// `φ` in canonical order. The last element is the minimum `(E, ∅)`.
pub fn build_orientation_poset(g: &Graph, limits: &Limits) -> Result<OrientationPoset> {
    let m = g.edge_count();
    if m > limits.poset_edges {
        return Err(Error::Capacity {
            what: "orientation poset construction",
            size: m,
            cap: limits.poset_edges,
        });
    }
    let per_subset: Vec<Vec<TotCycPair>> = subsets_by_size(m)
        .into_par_iter()
        .map(|t| {
            let rest = t.complement(g);
            enumerate_tco_within(g, &rest, usize::MAX)
                .expect("no cap")
                .into_iter()
                .map(|phi| TotCycPair::new_unchecked(t.clone(), phi))
                .collect()
        })
        .collect();
    let elements: Vec<TotCycPair> = per_subset.into_iter().flatten().collect();
    let order = Poset::from_relation(elements.len(), |i, j| elements[i].le(&elements[j]));
    Ok(OrientationPoset { elements, order })
}

/// The maximal elements of `OP_Γ`, in poset order.
pub fn maximal_elements(p: &OrientationPoset) -> Vec<TotCycPair> {
    p.order
        .maximal()
        .into_iter()
        .map(|i| p.elements[i].clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn b2_orientations() {
        let g = catalog::b2();
        let anti = Orientation::from_named(&g, &[("a", Direction::Forward), ("b", Direction::Backward)]).unwrap();
        assert!(is_totally_cyclic(&g, &anti).unwrap());
        assert!(!is_totally_cyclic(&g, &Orientation::reference(&g)).unwrap());
        let partial = Orientation::from_named(&g, &[("a", Direction::Forward)]).unwrap();
        assert_eq!(is_totally_cyclic(&g, &partial), Err(Error::PartialOrientation));
    }

    #[test]
    fn figure_orientations_are_totally_cyclic() {
        for g in [catalog::fig_ng(), catalog::theta2(), catalog::fig_nh()] {
            assert!(is_totally_cyclic(&g, &Orientation::reference(&g)).unwrap());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tco(&catalog::b3(), &limits()).unwrap().len(), 6);
        assert!(enumerate_tco(&catalog::tree3(), &limits()).unwrap().is_empty());
        assert_eq!(enumerate_tco(&catalog::fig_ng(), &limits()).unwrap().len(), 30);
        assert_eq!(enumerate_tco(&Graph::empty(), &limits()).unwrap(), vec![Orientation::new()]);
        let tight = Limits {
            orientation_edges: 4,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_tco(&catalog::fig_ng(), &tight),
            Err(Error::Capacity { size: 5, cap: 4, .. })
        ));
    }

    #[test]
    fn enumeration_order_is_canonical() {
        let tcos = enumerate_tco(&catalog::b3(), &limits()).unwrap();
        let mut sorted = tcos.clone();
        sorted.sort_by_key(|o| o.iter().map(|(_, d)| d).collect::<Vec<_>>());
        assert_eq!(tcos, sorted);
    }

    #[test]
    fn reversal_symmetry() {
        for (_, g) in catalog::all() {
            let tcos = enumerate_tco(&g, &limits()).unwrap();
            for phi in &tcos {
                assert!(tcos.contains(&phi.reversed()));
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_bridge_shortcut() {
        for (_, g) in catalog::all() {
            let full = EdgeSet::full(&g);
            let brute: Vec<Orientation> = all_orientations(&full)
                .filter(|phi| is_totally_cyclic_on(&g, &full, phi))
                .collect();
            assert_eq!(brute, enumerate_tco(&g, &limits()).unwrap());
        }
    }

    #[test]
    fn poset_examples() {
        let tree = build_orientation_poset(&catalog::tree3(), &limits()).unwrap();
        assert_eq!(tree.len(), 1);
        assert_eq!(maximal_elements(&tree), vec![TotCycPair::minimum(&catalog::tree3())]);

        let l = build_orientation_poset(&catalog::loop1(), &limits()).unwrap();
        assert_eq!(l.len(), 3);

        let b3 = build_orientation_poset(&catalog::b3(), &limits()).unwrap();
        assert_eq!(b3.len(), 13);
        let max = maximal_elements(&b3);
        assert_eq!(max.len(), 6);
        assert!(max.iter().all(|p| p.removed().is_empty()));

        let ng = build_orientation_poset(&catalog::fig_ng(), &limits()).unwrap();
        let max = maximal_elements(&ng);
        assert_eq!(max.len(), 30);
        assert!(max.iter().all(|p| p.removed().is_empty()));
    }

    #[test]
    fn poset_has_unique_minimum_and_is_a_partial_order() {
        for (_, g) in catalog::all() {
            if g.edge_count() > 6 {
                continue;
            }
            let p = build_orientation_poset(&g, &limits()).unwrap();
            assert!(p.order.is_partial_order());
            let mins = p.order.minimal();
            assert_eq!(mins.len(), 1);
            assert_eq!(p.elements[mins[0]], TotCycPair::minimum(&g));
        }
    }

    #[test]
    fn maximal_elements_have_t_equal_to_bridges() {
        let g = catalog::b3().with_edge("p", "2", "3").unwrap();
        let p = build_orientation_poset(&g, &limits()).unwrap();
        let sep = g.separating_edges();
        let max = maximal_elements(&p);
        assert!(max.iter().all(|q| q.removed() == &sep));
        let core = g.delete_edges(&sep).unwrap();
        assert_eq!(max.len(), enumerate_tco(&core, &limits()).unwrap().len());
    }

    #[test]
    fn pair_validation() {
        let g = catalog::b2();
        let parallel = Orientation::reference(&g);
        assert_eq!(
            TotCycPair::new(&g, EdgeSet::new(), parallel),
            Err(Error::NotTotallyCyclic)
        );
        assert_eq!(
            TotCycPair::new(&g, EdgeSet::new(), Orientation::new()),
            Err(Error::PartialOrientation)
        );
        assert!(TotCycPair::new(&g, EdgeSet::full(&g), Orientation::new()).is_ok());
    }

    #[test]
    fn poset_capacity() {
        let tight = Limits {
            poset_edges: 3,
            ..Limits::default()
        };
        assert!(matches!(
            build_orientation_poset(&catalog::fig_ng(), &tight),
            Err(Error::Capacity { .. })
        ));
    }
}
