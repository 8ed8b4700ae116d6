//! The affine semigroup `C(σ) = σ ∩ H1(Γ∖T, ℤ)` of a cone and its ring
//! `k[C(σ)]`: Hilbert basis, unimodularity, binomial relations, the
//! (ℚ-)Gorenstein test and two independent multiplicity computations.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{Integer, Signed, Zero};

use crate::circuit::OrientedCircuit;
use crate::cycle::Chain1;
use crate::error::{Error, Result};
use crate::fan::{facets, Cone};
use crate::graph::Graph;
use crate::hull;
use crate::linalg::{self, rat, Rational};
use crate::orientation::TotCycPair;

/// `C(σ)` together with its Hilbert basis, in edge coordinates and in the
/// coordinates of the cone's lattice basis.
#[derive(Clone, Debug)]
pub struct AffineSemigroup {
    pub cone: Cone,
    pub hilbert_basis: Vec<Chain1>,
    /// `b1(Γ∖T)`.
    pub lattice_rank: usize,
    edge_count: usize,
    coords: Vec<Vec<i64>>,
    facet_normals: Vec<Vec<i64>>,
}

impl AffineSemigroup {
    /// Hilbert basis elements in the cone's lattice basis.
    pub fn coordinates(&self) -> &[Vec<i64>] {
        &self.coords
    }

    pub fn circuits(&self) -> &[OrientedCircuit] {
        self.cone.circuits().as_slice()
    }

    /// Inward primitive facet normals, in the dual of the lattice basis.
    pub fn facet_normals(&self) -> &[Vec<i64>] {
        &self.facet_normals
    }

    /// `p_σ(u) = Σ uᵢ hᵢ` in edge coordinates.
    pub fn evaluate(&self, exponents: &[u32]) -> Chain1 {
        let mut out = Chain1::zero(self.edge_count);
        for (&k, h) in exponents.iter().zip(&self.hilbert_basis) {
            out += &h.scaled(k as i64);
        }
        out
    }
}

/// The Hilbert basis of `C(σ(T, φ))` is the set of classes of circuits of
/// `Γ∖T` compatible with `φ`.
pub fn hilbert_basis(g: &Graph, p: &TotCycPair) -> AffineSemigroup {
    let cone = Cone::new(g, p.clone());
    let hilbert_basis = cone.extremal_rays().to_vec();
    let coords = hilbert_basis.iter().map(|h| cone.coordinates(h)).collect();
    let facet_normals = facets(g, &cone).into_iter().map(|f| f.normal).collect();
    AffineSemigroup {
        lattice_rank: cone.dimension(),
        cone,
        hilbert_basis,
        edge_count: g.edge_count(),
        coords,
        facet_normals,
    }
}

/// True iff the Hilbert basis spans the lattice `H1(Γ∖T, ℤ)` over ℤ.
pub fn spans_lattice(s: &AffineSemigroup) -> bool {
    if s.lattice_rank == 0 {
        return true;
    }
    let divisors = linalg::elementary_divisors(&s.coords);
    divisors.len() == s.lattice_rank && divisors.iter().all(|&d| d == 1)
}

/// A `d × d` minor of the Hilbert basis matrix, given by its row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub value: i128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unimodularity {
    pub unimodular: bool,
    /// Two nonzero minors of different absolute value, when not unimodular.
    pub witness: Option<(Minor, Minor)>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All nonzero maximal minors share one absolute value.
pub fn is_unimodular(s: &AffineSemigroup) -> Unimodularity {
    let d = s.lattice_rank;
    let mut first: Option<Minor> = None;
    for rows in subsets(s.coords.len(), d) {
        let m: Vec<Vec<i64>> = rows.iter().map(|&i| s.coords[i].clone()).collect();
        let value = linalg::det(&m);
        if value == 0 {
            continue;
        }
        match &first {
            None => first = Some(Minor { rows, value }),
            Some(f) if f.value.abs() != value.abs() => {
                return Unimodularity {
                    unimodular: false,
                    witness: Some((f.clone(), Minor { rows, value })),
                }
            }
            Some(_) => {}
        }
    }
    Unimodularity {
        unimodular: true,
        witness: None,
    }
}

/// Binomials `V^u − V^v` of the kernel of `p_σ`, up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialIdeal {
    pub generators: Vec<(Vec<u32>, Vec<u32>)>,
    pub degree_bound: usize,
}

fn degree(u: &[u32]) -> u32 {
    u.iter().sum()
}

fn exponent_vectors(k: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_degree, &mut vec![0; k], &mut out);
    out
}

/// Every primitive binomial with disjoint supports and both sides of degree
/// at most `d`, one per unordered pair. Each is written with the side of
/// larger `(degree, exponents)` first.
pub fn toric_ideal_up_to_degree(s: &AffineSemigroup, d: usize) -> Result<BinomialIdeal> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut fibres: BTreeMap<Vec<i64>, Vec<Vec<u32>>> = BTreeMap::new();
    for u in exponent_vectors(s.coords.len(), d as u32) {
        let image: Vec<i64> = (0..s.lattice_rank)
            .map(|j| u.iter().zip(&s.coords).map(|(&a, c)| a as i64 * c[j]).sum())
            .collect();
        fibres.entry(image).or_default().push(u);
    }
    let mut generators = BTreeSet::new();
    for fibre in fibres.values() {
        for (i, u) in fibre.iter().enumerate() {
            for v in &fibre[i + 1..] {
                if u.iter().zip(v).any(|(&a, &b)| a > 0 && b > 0) {
                    continue;
                }
                let g = u.iter().chain(v).fold(0u32, |g, &x| g.gcd(&x));
                if g != 1 {
                    continue;
                }
                let (hi, lo) = if (degree(u), u) >= (degree(v), v) { (u, v) } else { (v, u) };
                generators.insert((hi.clone(), lo.clone()));
            }
        }
    }
    Ok(BinomialIdeal {
        generators: generators.into_iter().collect(),
        degree_bound: d,
    })
}

/// Every generator has both sides of the same degree.
pub fn is_homogeneous(i: &BinomialIdeal) -> bool {
    i.generators.iter().all(|(u, v)| degree(u) == degree(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinTest {
    pub q_gorenstein: bool,
    pub gorenstein_integral: bool,
    /// The point `m` with `ℓᵢ(m) = 1` on every facet, in lattice coordinates.
    pub m: Option<Vec<Rational>>,
}

/// Solves `ℓᵢ(m) = 1` for all primitive facet normals `ℓᵢ`.
pub fn q_gorenstein(s: &AffineSemigroup) -> GorensteinTest {
    let a: Vec<Vec<Rational>> = s
        .facet_normals
        .iter()
        .map(|n| n.iter().map(|&x| rat(x)).collect())
        .collect();
    let b = vec![rat(1); a.len()];
    let m = if a.is_empty() {
        Some(vec![Rational::zero(); s.lattice_rank])
    } else {
        linalg::solve(&a, &b)
    };
    match m {
        None => GorensteinTest {
            q_gorenstein: false,
            gorenstein_integral: false,
            m: None,
        },
        Some(m) => GorensteinTest {
            q_gorenstein: true,
            gorenstein_integral: m.iter().all(|x| x.is_integer()),
            m: Some(m),
        },
    }
}

/// Normalized volume of the region below the bounded facets of
/// `conv(C(σ)∖0)`, which is the multiplicity of `k[C(σ)]`.
pub fn subdiagram_volume(s: &AffineSemigroup) -> Result<u64> {
    if s.lattice_rank == 0 {
        return Ok(1);
    }
    hull::subdiagram_volume(&s.coords)
}

/// Multiplicity read off the Hilbert–Samuel function
/// `n ↦ #{c : ord(c) ≤ n − 1}`, with `ord(c)` the length of the longest
/// decomposition of `c` into Hilbert basis elements, evaluated for `n ≤ n_max`.
/// Uses only sign tests on edges and never the hull code.
pub fn multiplicity_hs_oracle(s: &AffineSemigroup, n_max: usize) -> Result<u64> {
    let d = s.lattice_rank;
    let label = s.cone.label();
    let in_cone = |c: &[i64]| {
        c.iter().enumerate().all(|(e, &x)| match label.orientation().get(e) {
            None => x == 0,
            Some(dir) => x * dir.sign() >= 0,
        })
    };
    let basis: Vec<Vec<i64>> = s.hilbert_basis.iter().map(|h| h.coeffs().to_vec()).collect();
    let m = basis.first().map_or(0, Vec::len);

    // Points that are sums of at most n_max − 1 basis elements.
    let mut layers: Vec<BTreeSet<Vec<i64>>> = vec![BTreeSet::from([vec![0; m]])];
    for _ in 1..n_max {
        let prev = layers.last().expect("nonempty");
        let mut next = BTreeSet::new();
        for p in prev {
            for h in &basis {
                next.insert(p.iter().zip(h).map(|(a, b)| a + b).collect::<Vec<i64>>());
            }
        }
        layers.push(next);
    }
    let points: BTreeSet<Vec<i64>> = layers.into_iter().flatten().collect();

    let mut memo: HashMap<Vec<i64>, usize> = HashMap::new();
    fn ord(
        c: &[i64],
        basis: &[Vec<i64>],
        in_cone: &dyn Fn(&[i64]) -> bool,
        memo: &mut HashMap<Vec<i64>, usize>,
    ) -> usize {
        if c.iter().all(|&x| x == 0) {
            return 0;
        }
        if let Some(&v) = memo.get(c) {
            return v;
        }
        let mut best = 0;
        for h in basis {
            let rest: Vec<i64> = c.iter().zip(h).map(|(a, b)| a - b).collect();
            if in_cone(&rest) {
                best = best.max(1 + ord(&rest, basis, in_cone, memo));
            }
        }
        memo.insert(c.to_vec(), best);
        best
    }

    let orders: Vec<usize> = points
        .iter()
        .map(|p| ord(p, &basis, &in_cone, &mut memo))
        .collect();
    let hs: Vec<i128> = (1..=n_max)
        .map(|n| orders.iter().filter(|&&o| o < n).count() as i128)
        .collect();
    let mut diff = hs;
    for _ in 0..d {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let stable = diff.len() >= 3 && diff[diff.len() - 3..].iter().all(|&x| x == diff[diff.len() - 1]);
    if !stable {
        return Err(Error::Capacity {
            what: "Hilbert-Samuel horizon",
            size: n_max,
            cap: n_max,
        });
    }
    let e = *diff.last().expect("nonempty");
    if e <= 0 {
        return Err(Error::Degenerate);
    }
    Ok(e as u64)
}

/// Brute-force irreducibility in lattice coordinates: `c` is not `a + b` with
/// `a, b` nonzero points of the cone drawn from `box_points`.
pub fn is_irreducible(s: &AffineSemigroup, c: &[i64], box_points: &[Vec<i64>]) -> bool {
    let inside = |p: &[i64]| {
        let chain = s.cone.lattice_basis().combine(p);
        s.cone.contains_unchecked(&chain)
    };
    !box_points.iter().any(|a| {
        let b: Vec<i64> = c.iter().zip(a).map(|(x, y)| x - y).collect();
        a.iter().any(|&x| x != 0) && b.iter().any(|&x| x != 0) && inside(a) && inside(&b)
    })
}

/// All lattice points with every coordinate in `[−r, r]`.
pub fn lattice_box(d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-r..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Ratio of the two absolute minor values, for reporting.
pub fn minor_ratio(w: &(Minor, Minor)) -> Rational {
    Rational::new(w.1.value.abs().into(), w.0.value.abs().into()).abs()
}
