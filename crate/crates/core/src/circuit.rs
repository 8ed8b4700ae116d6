//! Oriented circuits, concordance and cycle decomposition.
//!
//! An oriented circuit is a connected, bridge-free subgraph with `b1 = 1`
//! (a simple closed walk, a pair of parallel edges, or a loop) together with
//! one of its two coherent orientations. Its class `[γ]` is the `±1` cycle
//! that records the direction of each of its edges.

use std::collections::BTreeMap;

use crate::cycle::{canonical_form, require_cycle, Chain1};
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeSet, Graph, OrientedEdge};
use crate::orientation::{is_totally_cyclic_on, Orientation, TotCycPair};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedCircuit {
    support: EdgeSet,
    orientation: Orientation,
}

impl OrientedCircuit {
    /// Validates that `orientation` is a coherent orientation of a circuit.
    pub fn new(g: &Graph, orientation: Orientation) -> Result<Self> {
        let support = orientation.domain();
        for e in &support {
            g.check_edge(e)?;
        }
        let is_circuit = !support.is_empty()
            && g.betti1_within(&support) == 1
            && g.separating_within(&support).is_empty()
            && connected_support(g, &support)
            && is_totally_cyclic_on(g, &support, &orientation);
        if !is_circuit {
            return Err(Error::NotTotallyCyclic);
        }
        Ok(Self {
            support,
            orientation,
        })
    }

    pub fn support(&self) -> &EdgeSet {
        &self.support
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn reversed(&self) -> Self {
        Self {
            support: self.support.clone(),
            orientation: self.orientation.reversed(),
        }
    }

    /// `[γ] = Σ_{e ∈ γ} φ_γ(e)`.
    pub fn class(&self, edge_count: usize) -> Chain1 {
        let mut c = Chain1::zero(edge_count);
        for (e, d) in self.orientation.iter() {
            c.set(e, d.sign());
        }
        c
    }

    /// Sorted oriented edge list such as `["e1+", "e3-"]`.
    pub fn label(&self, g: &Graph) -> Vec<String> {
        self.orientation
            .iter()
            .map(|(e, d)| format!("{}{}", g.edge_name(e), d.symbol()))
            .collect()
    }

    fn sort_key(&self) -> (EdgeSet, Option<Direction>) {
        let first = self.support.first().expect("circuits are nonempty");
        (self.support.clone(), self.orientation.get(first))
    }
}

fn connected_support(g: &Graph, support: &EdgeSet) -> bool {
    let touched: std::collections::BTreeSet<usize> = support
        .iter()
        .flat_map(|e| {
            let (s, t) = g.endpoints(e);
            [s, t]
        })
        .collect();
    let comps = g.component_vertices(support);
    comps
        .iter()
        .filter(|c| c.iter().any(|v| touched.contains(v)))
        .count()
        == 1
}

/// Two circuits are concordant when they orient every shared edge the same way.
pub fn concordant(a: &OrientedCircuit, b: &OrientedCircuit) -> bool {
    a.orientation.agrees_with(&b.orientation)
}

/// Oriented circuits in canonical order (support, then direction of its lowest edge).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CircuitSet(Vec<OrientedCircuit>);

impl CircuitSet {
    pub fn from_vec(mut circuits: Vec<OrientedCircuit>) -> Self {
        circuits.sort_by_cached_key(OrientedCircuit::sort_key);
        circuits.dedup();
        Self(circuits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, OrientedCircuit> {
        self.0.iter()
    }

    pub fn get(&self, i: usize) -> Option<&OrientedCircuit> {
        self.0.get(i)
    }

    pub fn index_of(&self, c: &OrientedCircuit) -> Option<usize> {
        self.0.iter().position(|d| d == c)
    }

    pub fn contains(&self, c: &OrientedCircuit) -> bool {
        self.index_of(c).is_some()
    }

    pub fn classes(&self, edge_count: usize) -> Vec<Chain1> {
        self.0.iter().map(|c| c.class(edge_count)).collect()
    }

    pub fn as_slice(&self) -> &[OrientedCircuit] {
        &self.0
    }
}

impl<'a> IntoIterator for &'a CircuitSet {
    type Item = &'a OrientedCircuit;
    type IntoIter = std::slice::Iter<'a, OrientedCircuit>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// One orientation of every circuit whose edges lie in `active`. Each simple
/// cycle is found once, anchored at its lowest edge and closed by a path
/// through strictly higher edges.
pub(crate) fn circuits_within(g: &Graph, active: &EdgeSet) -> Vec<OrientedCircuit> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for e in active {
        if !g.is_loop(e) {
            let (s, t) = g.endpoints(e);
            adj[s].push((e, t));
            adj[t].push((e, s));
        }
    }
    let mut found = Vec::new();
    for anchor in active {
        if g.is_loop(anchor) {
            found.push(OrientedCircuit {
                support: [anchor].into_iter().collect(),
                orientation: [(anchor, Direction::Forward)].into_iter().collect(),
            });
            continue;
        }
        let (u, v) = g.endpoints(anchor);
        let mut visited = vec![false; n];
        visited[v] = true;
        let mut path: Vec<OrientedEdge> = vec![OrientedEdge::new(anchor, Direction::Forward)];
        walk(g, &adj, anchor, v, u, &mut visited, &mut path, &mut found);
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn walk(
    g: &Graph,
    adj: &[Vec<(usize, usize)>],
    anchor: usize,
    at: usize,
    goal: usize,
    visited: &mut [bool],
    path: &mut Vec<OrientedEdge>,
    found: &mut Vec<OrientedCircuit>,
) {
    for &(f, w) in &adj[at] {
        if f <= anchor {
            continue;
        }
        let (s, _) = g.endpoints(f);
        let dir = if s == at { Direction::Forward } else { Direction::Backward };
        if w == goal {
            path.push(OrientedEdge::new(f, dir));
            found.push(OrientedCircuit {
                support: path.iter().map(|r| r.edge).collect(),
                orientation: path.iter().map(|r| (r.edge, r.dir)).collect(),
            });
            path.pop();
        } else if !visited[w] {
            visited[w] = true;
            path.push(OrientedEdge::new(f, dir));
            walk(g, adj, anchor, w, goal, visited, path, found);
            path.pop();
            visited[w] = false;
        }
    }
}

/// `Cyc(Γ)`: every oriented circuit, both orientations of each support.
pub fn enumerate_oriented_circuits(g: &Graph, limits: &Limits) -> Result<CircuitSet> {
    limits.check_poset_edges(g, "oriented circuit enumeration")?;
    let one_way = circuits_within(g, &EdgeSet::full(g));
    let both = one_way
        .into_iter()
        .flat_map(|c| {
            let r = c.reversed();
            [c, r]
        })
        .collect();
    Ok(CircuitSet::from_vec(both))
}

/// `Cir_φ(Γ∖T)`: circuits inside `E∖T` whose orientation is a restriction of `φ`.
pub fn compatible_circuits(g: &Graph, p: &TotCycPair) -> CircuitSet {
    let phi = p.orientation();
    let found = circuits_within(g, &p.remaining())
        .into_iter()
        .filter_map(|c| {
            if phi.agrees_with(&c.orientation) {
                Some(c)
            } else {
                let r = c.reversed();
                phi.agrees_with(&r.orientation).then_some(r)
            }
        })
        .collect();
    CircuitSet::from_vec(found)
}

/// Writes a cycle as `Σ n_γ [γ]` with every `γ` concordant with the sign
/// pattern of `c` and supported on `supp(c)`. Circuits are peeled off one at a
/// time (lowest-edge search), subtracting the largest multiple that keeps the
/// remainder sign-compatible. The decomposition is not unique in general.
pub fn decompose_cycle(g: &Graph, c: &Chain1) -> Result<Vec<(OrientedCircuit, u64)>> {
    require_cycle(g, c)?;
    let m = g.edge_count();
    let mut rest = c.clone();
    let mut parts: BTreeMap<OrientedCircuit, u64> = BTreeMap::new();
    while !rest.is_zero() {
        let form = canonical_form(&rest);
        let gamma = directed_circuit_through_lowest(g, &form.support, &form.orientation)
            .expect("the sign pattern of a cycle is totally cyclic on its support");
        let k = gamma
            .support
            .iter()
            .map(|e| rest.get(e).abs())
            .min()
            .expect("circuits are nonempty");
        rest -= &gamma.class(m).scaled(k);
        *parts.entry(gamma).or_default() += k as u64;
    }
    let mut out: Vec<(OrientedCircuit, u64)> = parts.into_iter().collect();
    out.sort_by_cached_key(|(c, _)| c.sort_key());
    Ok(out)
}

/// A directed simple cycle of `(active, phi)` through the lowest active edge.
fn directed_circuit_through_lowest(
    g: &Graph,
    active: &EdgeSet,
    phi: &Orientation,
) -> Option<OrientedCircuit> {
    let first = active.first()?;
    let r0 = phi.oriented_edge(first)?;
    let (start, goal) = (g.target(r0), g.source(r0));
    let mut path = vec![r0];
    if start != goal {
        let mut out: Vec<Vec<OrientedEdge>> = vec![Vec::new(); g.vertex_count()];
        for e in active.iter().filter(|&e| e != first && !g.is_loop(e)) {
            let r = phi.oriented_edge(e)?;
            out[g.source(r)].push(r);
        }
        // Depth-first search for a directed path start ⇝ goal, lowest edges first.
        let mut parent: Vec<Option<OrientedEdge>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if v == goal {
                break;
            }
            for &r in out[v].iter().rev() {
                let w = g.target(r);
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(r);
                    stack.push(w);
                }
            }
        }
        if !seen[goal] {
            return None;
        }
        let mut tail = Vec::new();
        let mut v = goal;
        while v != start {
            let r = parent[v]?;
            tail.push(r);
            v = g.source(r);
        }
        tail.reverse();
        path.extend(tail);
    }
    Some(OrientedCircuit {
        support: path.iter().map(|r| r.edge).collect(),
        orientation: path.iter().map(|r| (r.edge, r.dir)).collect(),
    })
}

/// `(T_σ, φ_σ)` for a set of pairwise concordant circuits: `T_σ` is the set of
/// edges in no circuit of σ and `φ_σ` their common orientation elsewhere.
pub fn support_orientation_of(g: &Graph, sigma: &[OrientedCircuit]) -> Result<TotCycPair> {
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if !concordant(&sigma[i], &sigma[j]) {
                return Err(Error::Discordant(i, j));
            }
        }
    }
    let phi: Orientation = sigma
        .iter()
        .flat_map(|c| c.orientation.iter())
        .collect();
    let removed = phi.domain().complement(g);
    TotCycPair::new(g, removed, phi)
}

/// Debug oracle for total cyclicity: every edge lies on a circuit whose
/// orientation agrees with `phi`.
pub fn is_totally_cyclic_by_circuits(g: &Graph, phi: &Orientation) -> bool {
    let active = phi.domain();
    let covered: EdgeSet = circuits_within(g, &active)
        .into_iter()
        .flat_map(|c| [c.clone(), c.reversed()])
        .filter(|c| c.orientation.iter().all(|(e, d)| phi.get(e) == Some(d)))
        .flat_map(|c| c.support.iter().collect::<Vec<_>>())
        .collect();
    covered == active
}
