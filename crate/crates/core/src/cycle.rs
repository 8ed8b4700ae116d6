//! Integer chains, the boundary map and the cycle lattice `H1(Γ, ℤ)`.
//!
//! A [`Chain1`] stores one integer per edge: the coefficient of `e→` in the
//! reference orientation. The coefficient of `e←` is implicitly its negation.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeSet, Graph, OrientedEdge, UnionFind};
use crate::linalg::{self, rat};
use crate::orientation::Orientation;

/// An integer 1-chain `Σ c(e)·e→`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain1(Vec<i64>);

impl Chain1 {
    pub fn zero(edge_count: usize) -> Self {
        Self(vec![0; edge_count])
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    /// The chain of a single oriented edge: `+1` on `e→`, or `−1` for `e←`.
    pub fn oriented_edge(edge_count: usize, r: OrientedEdge) -> Self {
        let mut c = Self::zero(edge_count);
        c.0[r.edge] = r.dir.sign();
        c
    }

    /// Builds a chain from `(edge name, coefficient)` pairs.
    pub fn from_named<S: AsRef<str>>(g: &Graph, terms: &[(S, i64)]) -> Result<Self> {
        let mut c = Self::zero(g.edge_count());
        for (name, k) in terms {
            c.0[g.edge_index(name.as_ref())?] += k;
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, e: usize) -> i64 {
        self.0[e]
    }

    pub fn set(&mut self, e: usize, value: i64) {
        self.0[e] = value;
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn support(&self) -> EdgeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(e, _)| e)
            .collect()
    }

    /// `Σ |c(e)|`, the total degree of the corresponding monomial.
    pub fn l1_norm(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }

    /// Named nonzero coefficients, for reports.
    pub fn to_named(&self, g: &Graph) -> BTreeMap<String, i64> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(e, &x)| (g.edge_name(e).to_owned(), x))
            .collect()
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::ChainLength {
                expected: g.edge_count(),
                got: self.len(),
            })
        }
    }
}

impl Add<&Chain1> for &Chain1 {
    type Output = Chain1;
    fn add(self, rhs: &Chain1) -> Chain1 {
        Chain1(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Chain1> for &Chain1 {
    type Output = Chain1;
    fn sub(self, rhs: &Chain1) -> Chain1 {
        Chain1(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&Chain1> for Chain1 {
    fn add_assign(&mut self, rhs: &Chain1) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Chain1> for Chain1 {
    fn sub_assign(&mut self, rhs: &Chain1) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Chain1 {
    type Output = Chain1;
    fn neg(self) -> Chain1 {
        self.scaled(-1)
    }
}

impl Mul<&Chain1> for i64 {
    type Output = Chain1;
    fn mul(self, rhs: &Chain1) -> Chain1 {
        rhs.scaled(self)
    }
}

/// An integer 0-chain: one coefficient per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain0(Vec<i64>);

impl Chain0 {
    pub fn get(&self, v: usize) -> i64 {
        self.0[v]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// `∂c = Σ c(e)·(t(e→) − s(e→))`.
pub fn boundary(g: &Graph, c: &Chain1) -> Result<Chain0> {
    c.check(g)?;
    let mut out = vec![0; g.vertex_count()];
    for (e, &k) in c.coeffs().iter().enumerate() {
        let (s, t) = g.endpoints(e);
        out[t] += k;
        out[s] -= k;
    }
    Ok(Chain0(out))
}

pub fn is_cycle(g: &Graph, c: &Chain1) -> bool {
    boundary(g, c).map(|b| b.is_zero()).unwrap_or(false)
}

pub(crate) fn require_cycle(g: &Graph, c: &Chain1) -> Result<()> {
    if boundary(g, c)?.is_zero() {
        Ok(())
    } else {
        Err(Error::NotACycle)
    }
}

/// The edge inner product: oriented edges of distinct edges are orthogonal,
/// `(e→, e→) = 1` and `(e→, e←) = −1`.
pub fn inner_product(c: &Chain1, d: &Chain1) -> i64 {
    c.coeffs().iter().zip(d.coeffs()).map(|(a, b)| a * b).sum()
}

/// A fundamental-cycle basis of `H1(Γ, ℤ)` (or of a spanning subgraph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub spanning_forest: EdgeSet,
    /// The non-forest edge of each basis element, in canonical order.
    pub cotree_edges: Vec<usize>,
    pub basis: Vec<Chain1>,
    /// Length of the chains, so that a rank-0 basis still knows its ambient space.
    pub edge_count: usize,
}

impl CycleBasis {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a cycle supported on the basis' subgraph. The i-th
    /// coordinate is just the coefficient on the i-th cotree edge.
    pub fn coordinates(&self, c: &Chain1) -> Vec<i64> {
        self.cotree_edges.iter().map(|&e| c.get(e)).collect()
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn combine(&self, coords: &[i64]) -> Chain1 {
        let mut out = Chain1::zero(self.edge_count);
        for (k, b) in coords.iter().zip(&self.basis) {
            out += &b.scaled(*k);
        }
        out
    }
}

/// The fundamental cycle basis of the spanning subgraph on `active`, in the
/// edge coordinates of `g`. The forest is chosen greedily by lowest edge index.
pub(crate) fn fundamental_cycle_basis_within(g: &Graph, active: &EdgeSet) -> CycleBasis {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut uf = UnionFind::new(n);
    let mut forest = EdgeSet::new();
    let mut cotree = Vec::new();
    for e in active {
        let (s, t) = g.endpoints(e);
        if uf.union(s, t) {
            forest.insert(e);
        } else {
            cotree.push(e);
        }
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for e in &forest {
        let (s, t) = g.endpoints(e);
        adj[s].push((e, t));
        adj[t].push((e, s));
    }
    let basis = cotree
        .iter()
        .map(|&f| {
            let mut c = Chain1::zero(m);
            c.set(f, 1);
            let (s, t) = g.endpoints(f);
            // Close f→ with the forest path t(f) ⇝ s(f).
            for (e, from, _to) in forest_path(g, &adj, t, s) {
                let (es, _) = g.endpoints(e);
                c.set(e, c.get(e) + if es == from { 1 } else { -1 });
            }
            c
        })
        .collect();
    CycleBasis {
        spanning_forest: forest,
        cotree_edges: cotree,
        basis,
        edge_count: m,
    }
}

/// Edges `(e, from, to)` of the unique forest path `a ⇝ b`.
fn forest_path(
    g: &Graph,
    adj: &[Vec<(usize, usize)>],
    a: usize,
    b: usize,
) -> Vec<(usize, usize, usize)> {
    let _ = g;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        if v == b {
            break;
        }
        for &(e, w) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((e, v));
                stack.push(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = b;
    while v != a {
        let (e, p) = parent[v].expect("endpoints of a cotree edge lie in one tree");
        path.push((e, p, v));
        v = p;
    }
    path.reverse();
    path
}

pub fn fundamental_cycle_basis(g: &Graph) -> CycleBasis {
    fundamental_cycle_basis_within(g, &EdgeSet::full(g))
}

/// Sign decomposition `c = Σ_{e ∈ supp c} m_c(e)·φ_c(e)` with all `m_c(e) > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub support: EdgeSet,
    pub orientation: Orientation,
    pub multiplicity: BTreeMap<usize, i64>,
}

impl CanonicalForm {
    pub fn reconstruct(&self, edge_count: usize) -> Chain1 {
        let mut c = Chain1::zero(edge_count);
        for (&e, &m) in &self.multiplicity {
            let dir = self.orientation.get(e).expect("orientation covers the support");
            c.set(e, m * dir.sign());
        }
        c
    }
}

pub fn canonical_form(c: &Chain1) -> CanonicalForm {
    let support = c.support();
    let orientation = support
        .iter()
        .map(|e| {
            let dir = if c.get(e) > 0 {
                Direction::Forward
            } else {
                Direction::Backward
            };
            (e, dir)
        })
        .collect();
    let multiplicity = support.iter().map(|e| (e, c.get(e).abs())).collect();
    CanonicalForm {
        support,
        orientation,
        multiplicity,
    }
}

/// Coordinates of `c` in an arbitrary list of chains, if `c` is an integral
/// combination of them and the combination is unique.
pub fn express_in_basis(basis: &[Chain1], c: &Chain1) -> Option<Vec<i64>> {
    let m = c.len();
    let a: Vec<Vec<_>> = (0..m)
        .map(|e| basis.iter().map(|b| rat(b.get(e))).collect())
        .collect();
    if linalg::rank(&a) < basis.len() {
        return None;
    }
    let rhs: Vec<_> = c.coeffs().iter().map(|&x| rat(x)).collect();
    let x = linalg::solve(&a, &rhs)?;
    x.iter().map(linalg::as_integer).collect()
}
