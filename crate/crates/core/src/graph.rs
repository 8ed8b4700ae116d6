//! Finite multigraphs with a reference orientation on every edge.
//!
//! Each edge `e` carries two oriented edges, `e→` (the direction given at
//! construction) and `e←`, exchanged by the involution [`OrientedEdge::reverse`].
//! Loops and parallel edges are allowed. Vertices and edges are stored in
//! declaration order, which is the canonical enumeration order used by every
//! algorithm in the crate ("lowest edge" means lowest declaration index).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two orientations of an edge, relative to its reference direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "+")]
    Forward,
    #[serde(rename = "-")]
    Backward,
}

impl Direction {
    pub fn reverse(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    /// `+1` for forward, `-1` for backward.
    pub fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Backward => '-',
        }
    }
}

/// An oriented edge (half-edge) `e→` or `e←`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    pub edge: usize,
    pub dir: Direction,
}

impl OrientedEdge {
    pub fn new(edge: usize, dir: Direction) -> Self {
        Self { edge, dir }
    }

    /// The fixed-point-free involution `e→ ↔ e←`.
    pub fn reverse(self) -> Self {
        Self::new(self.edge, self.dir.reverse())
    }
}

/// A set of edge indices of some ambient graph, iterated in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(BTreeSet<usize>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every edge of `g`.
    pub fn full(g: &Graph) -> Self {
        (0..g.edge_count()).collect()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: usize) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: usize) -> bool {
        self.0.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.0.intersection(&other.0).copied().collect()
    }

    /// The edges of `g` not in this set.
    pub fn complement(&self, g: &Graph) -> EdgeSet {
        (0..g.edge_count()).filter(|e| !self.contains(*e)).collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Edge names in canonical order.
    pub fn names<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.iter().map(|e| g.edge_name(e)).collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct EdgeData {
    name: String,
    source: usize,
    target: usize,
}

/// A finite multigraph. Immutable once built; every operation returns a new value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<EdgeData>,
}

#[derive(Default)]
struct Builder {
    vertices: Vec<String>,
    vertex_index: HashMap<String, usize>,
    edges: Vec<EdgeData>,
    edge_names: HashMap<String, usize>,
}

impl Builder {
    fn vertex(&mut self, name: &str) -> usize {
        if let Some(&v) = self.vertex_index.get(name) {
            return v;
        }
        let v = self.vertices.len();
        self.vertices.push(name.to_owned());
        self.vertex_index.insert(name.to_owned(), v);
        v
    }

    fn edge(&mut self, name: &str, source: &str, target: &str) -> Result<()> {
        if self.edge_names.contains_key(name) {
            return Err(Error::DuplicateEdge(name.to_owned()));
        }
        let source = self.vertex(source);
        let target = self.vertex(target);
        self.edge_names.insert(name.to_owned(), self.edges.len());
        self.edges.push(EdgeData {
            name: name.to_owned(),
            source,
            target,
        });
        Ok(())
    }

    fn finish(self) -> Graph {
        Graph {
            vertices: self.vertices,
            edges: self.edges,
        }
    }
}

impl Graph {
    /// The edgeless graph on no vertices.
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Builds a graph from `(edge id, source, target)` triples. Vertices are
    /// created on first mention; the reference orientation of each edge is
    /// `source → target`.
    pub fn from_edge_list<E, S, T>(spec: &[(E, S, T)]) -> Result<Self>
    where
        E: AsRef<str>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut b = Builder::default();
        for (e, s, t) in spec {
            b.edge(e.as_ref(), s.as_ref(), t.as_ref())?;
        }
        Ok(b.finish())
    }

    /// Parses the line-based text format:
    ///
    /// ```text
    /// # comment
    /// vertex v1
    /// edge e1 v1 v2
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = Builder::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = content.split_whitespace().collect();
            match words.as_slice() {
                [] => {}
                ["vertex", v] => {
                    b.vertex(v);
                }
                ["edge", e, s, t] => b.edge(e, s, t).map_err(|err| Error::Parse {
                    line,
                    message: err.to_string(),
                })?,
                [keyword, ..] if *keyword == "vertex" || *keyword == "edge" => {
                    return Err(Error::Parse {
                        line,
                        message: format!("wrong number of fields for `{keyword}`"),
                    })
                }
                [other, ..] => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown directive `{other}`"),
                    })
                }
            }
        }
        Ok(b.finish())
    }

    /// Serializes to the text format; `Graph::parse(&g.to_text())` reproduces `g`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                e.name, self.vertices[e.source], self.vertices[e.target]
            ));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e].name
    }

    pub fn edge_names(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.name.as_str())
    }

    pub fn edge_index(&self, name: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| Error::UnknownEdge(name.to_owned()))
    }

    /// Resolves a list of edge names to an [`EdgeSet`].
    pub fn edge_set<S: AsRef<str>>(&self, names: &[S]) -> Result<EdgeSet> {
        names.iter().map(|n| self.edge_index(n.as_ref())).collect()
    }

    /// Endpoints `(s(e→), t(e→))` of the reference orientation.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let d = &self.edges[e];
        (d.source, d.target)
    }

    pub fn source(&self, r: OrientedEdge) -> usize {
        let (s, t) = self.endpoints(r.edge);
        match r.dir {
            Direction::Forward => s,
            Direction::Backward => t,
        }
    }

    pub fn target(&self, r: OrientedEdge) -> usize {
        self.source(r.reverse())
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (s, t) = self.endpoints(e);
        s == t
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edge_count() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange(e))
        }
    }

    /// The spanning subgraph `Γ∖S`: all vertices, the edges outside `s`.
    pub fn delete_edges(&self, s: &EdgeSet) -> Result<Graph> {
        for e in s {
            self.check_edge(e)?;
        }
        Ok(Graph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !s.contains(*i))
                .map(|(_, d)| d.clone())
                .collect(),
        })
    }

    /// Contracts a non-loop edge. The merged vertex keeps the name and
    /// position of the lower-ordered endpoint; other edges are kept, so
    /// parallel edges and loops may appear.
    pub fn contract_edge(&self, e: usize) -> Result<Graph> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return Err(Error::ContractLoop(self.edge_name(e).to_owned()));
        }
        let (s, t) = self.endpoints(e);
        let (keep, gone) = (s.min(t), s.max(t));
        let remap = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let mut vertices = self.vertices.clone();
        vertices.remove(gone);
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != e)
            .map(|(_, d)| EdgeData {
                name: d.name.clone(),
                source: remap(d.source),
                target: remap(d.target),
            })
            .collect();
        Ok(Graph { vertices, edges })
    }

    /// Adds a new edge (and new vertices as needed). Used to build variants of
    /// catalog graphs such as pendant-edge attachments.
    pub fn with_edge(&self, name: &str, source: &str, target: &str) -> Result<Graph> {
        let mut b = Builder::default();
        for v in &self.vertices {
            b.vertex(v);
        }
        for d in &self.edges {
            b.edge(&d.name, &self.vertices[d.source], &self.vertices[d.target])?;
        }
        b.edge(name, source, target)?;
        Ok(b.finish())
    }

    /// Number of connected components of the spanning subgraph on `active`.
    pub(crate) fn components_within(&self, active: &EdgeSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in active {
            let (s, t) = self.endpoints(e);
            uf.union(s, t);
        }
        uf.count()
    }

    pub fn component_count(&self) -> usize {
        self.components_within(&EdgeSet::full(self))
    }

    /// First Betti number of the spanning subgraph on `active`.
    pub(crate) fn betti1_within(&self, active: &EdgeSet) -> usize {
        active.len() + self.components_within(active) - self.vertex_count()
    }

    /// `b1(Γ) = |E| − |V| + #components`.
    pub fn betti1(&self) -> usize {
        self.betti1_within(&EdgeSet::full(self))
    }

    /// Bridges of the spanning subgraph on `active`.
    pub(crate) fn separating_within(&self, active: &EdgeSet) -> EdgeSet {
        active
            .iter()
            .filter(|&e| {
                if self.is_loop(e) {
                    return false;
                }
                let mut uf = UnionFind::new(self.vertex_count());
                for f in active.iter().filter(|&f| f != e) {
                    let (s, t) = self.endpoints(f);
                    uf.union(s, t);
                }
                let (s, t) = self.endpoints(e);
                uf.find(s) != uf.find(t)
            })
            .collect()
    }

    /// `E(Γ)_sep`: edges whose removal disconnects their component.
    pub fn separating_edges(&self) -> EdgeSet {
        self.separating_within(&EdgeSet::full(self))
    }

    /// Vertex sets of the connected components of the subgraph on `active`,
    /// each sorted, listed by smallest vertex.
    pub(crate) fn component_vertices(&self, active: &EdgeSet) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in active {
            let (s, t) = self.endpoints(e);
            uf.union(s, t);
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.vertex_count() {
            let root = uf.find(v);
            let i = *slot.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[i].push(v);
        }
        groups
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph with {} vertices, {} edges",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn path3() -> Graph {
        Graph::from_edge_list(&[("a", "1", "2"), ("b", "2", "3")]).unwrap()
    }

    #[test]
    fn builds_double_edge_and_loop() {
        let b2 = Graph::from_edge_list(&[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert_eq!((b2.vertex_count(), b2.edge_count()), (2, 2));
        let loop1 = Graph::from_edge_list(&[("l", "1", "1")]).unwrap();
        assert_eq!((loop1.vertex_count(), loop1.edge_count()), (1, 1));
        assert!(loop1.is_loop(0));
        let empty = Graph::from_edge_list::<&str, &str, &str>(&[]).unwrap();
        assert_eq!(empty, Graph::empty());
    }

    #[test]
    fn rejects_duplicate_edge_ids() {
        let err = Graph::from_edge_list(&[("a", "1", "2"), ("a", "2", "3")]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge("a".into()));
    }

    #[test]
    fn theta2_shape() {
        let g = catalog::theta2();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 6));
        assert_eq!(g.betti1(), 4);
    }

    #[test]
    fn involution_swaps_endpoints() {
        let g = catalog::theta2();
        for e in 0..g.edge_count() {
            for dir in [Direction::Forward, Direction::Backward] {
                let r = OrientedEdge::new(e, dir);
                assert_ne!(r, r.reverse());
                assert_eq!(r.reverse().reverse(), r);
                assert_eq!(g.source(r), g.target(r.reverse()));
            }
        }
    }

    #[test]
    fn parse_text_format() {
        let text = "# two vertices\nvertex x\n\nedge a x y  # trailing\nedge b y x\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.vertex_names().collect::<Vec<_>>(), ["x", "y"]);
        assert_eq!(g.endpoints(1), (1, 0));
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Graph::parse("edge a 1 2\n\nedge a 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Graph::parse("edge a 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = Graph::parse("node a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn delete_edges_examples() {
        let b2 = catalog::b2();
        let g = b2.delete_edges(&b2.edge_set(&["b"]).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(b2.delete_edges(&EdgeSet::new()).unwrap(), b2);

        let theta = catalog::theta2();
        let sub = theta.delete_edges(&theta.edge_set(&["e1_0"]).unwrap()).unwrap();
        assert_eq!(sub.edge_count(), 5);
        assert_eq!(sub.betti1(), 3);

        assert_eq!(
            b2.delete_edges(&[7].into_iter().collect()).unwrap_err(),
            Error::EdgeOutOfRange(7)
        );
    }

    #[test]
    fn contraction_examples() {
        let p = path3();
        let q = p.contract_edge(1).unwrap();
        assert_eq!((q.vertex_count(), q.edge_count()), (2, 1));
        assert_eq!(q.vertex_names().collect::<Vec<_>>(), ["1", "2"]);

        let l = catalog::b2().contract_edge(0).unwrap();
        assert_eq!((l.vertex_count(), l.edge_count()), (1, 1));
        assert!(l.is_loop(0));

        assert_eq!(
            catalog::loop1().contract_edge(0).unwrap_err(),
            Error::ContractLoop("l".into())
        );
    }

    #[test]
    fn separating_edge_examples() {
        assert_eq!(path3().separating_edges().len(), 2);
        assert!(catalog::b3().separating_edges().is_empty());
        assert!(catalog::fig_ng().separating_edges().is_empty());
        assert!(catalog::loop1().separating_edges().is_empty());
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(catalog::b3().betti1(), 2);
        assert_eq!(catalog::fig_ng().betti1(), 4);
        assert_eq!(catalog::theta2().betti1(), 4);
        assert_eq!(path3().betti1(), 0);
        assert_eq!(Graph::empty().betti1(), 0);
    }

    #[test]
    fn deleting_an_edge_changes_b1_by_bridge_status() {
        for (_, g) in catalog::all() {
            let sep = g.separating_edges();
            for e in 0..g.edge_count() {
                let h = g.delete_edges(&[e].into_iter().collect()).unwrap();
                let expected = if sep.contains(e) { g.betti1() } else { g.betti1() - 1 };
                assert_eq!(h.betti1(), expected);
            }
        }
    }

    #[test]
    fn removing_all_bridges_leaves_none() {
        let g = catalog::tree3().with_edge("x", "3", "3").unwrap();
        let g = g.with_edge("y", "3", "4").unwrap();
        let h = g.delete_edges(&g.separating_edges()).unwrap();
        assert!(h.separating_edges().is_empty());
        for (_, g) in catalog::all() {
            let h = g.delete_edges(&g.separating_edges()).unwrap();
            assert!(h.separating_edges().is_empty());
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let text = catalog::theta2().to_text();
        let a = Graph::parse(&text).unwrap();
        let b = Graph::parse(&text).unwrap();
        assert_eq!(a.edge_names().collect::<Vec<_>>(), b.edge_names().collect::<Vec<_>>());
        assert_eq!(a.vertex_names().collect::<Vec<_>>(), b.vertex_names().collect::<Vec<_>>());
    }

    #[test]
    fn contraction_preserves_b1() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let graphs: Vec<Graph> = catalog::all().into_iter().map(|(_, g)| g).collect();
        let mut done = 0;
        while done < 20 {
            let g = &graphs[rng.gen_range(0..graphs.len())];
            if g.edge_count() == 0 {
                continue;
            }
            let e = rng.gen_range(0..g.edge_count());
            if g.is_loop(e) {
                continue;
            }
            assert_eq!(g.contract_edge(e).unwrap().betti1(), g.betti1());
            done += 1;
        }
    }
}
