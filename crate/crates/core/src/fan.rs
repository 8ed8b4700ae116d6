//! The cographic fan in `H1(Γ, ℝ)`.
//!
//! Cones are represented by their labels `(T, φ)`:
//!
//! ```text
//! σ(T, φ) = { c : (c, φ(e)) ≥ 0 for e ∉ T,  (c, e) = 0 for e ∈ T }
//! ```
//!
//! Membership, dimension, rays and facets all come from sign conditions and
//! circuit classes; nothing here uses floating point.

use rayon::prelude::*;

use crate::circuit::{compatible_circuits, CircuitSet};
use crate::cycle::{fundamental_cycle_basis, fundamental_cycle_basis_within, require_cycle, Chain1, CycleBasis};
use crate::error::Result;
use crate::graph::{Direction, EdgeSet, Graph};
use crate::linalg;
use crate::orientation::{build_orientation_poset, is_totally_cyclic_on, OrientationPoset, TotCycPair};
use crate::poset::Poset;
use crate::Limits;

/// A cone `σ(T, φ)` of the cographic fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    label: TotCycPair,
    circuits: CircuitSet,
    rays: Vec<Chain1>,
    /// ℤ-basis of `H1(Γ∖T, ℤ)`, the lattice spanned by the cone.
    lattice: CycleBasis,
}

impl Cone {
    pub fn new(g: &Graph, label: TotCycPair) -> Self {
        let circuits = compatible_circuits(g, &label);
        let rays = circuits.classes(g.edge_count());
        let lattice = fundamental_cycle_basis_within(g, &label.remaining());
        Self {
            label,
            circuits,
            rays,
            lattice,
        }
    }

    pub fn label(&self) -> &TotCycPair {
        &self.label
    }

    /// `Cir_φ(Γ∖T)`.
    pub fn circuits(&self) -> &CircuitSet {
        &self.circuits
    }

    /// Generators `[γ]` of the extremal rays, one per compatible circuit.
    pub fn extremal_rays(&self) -> &[Chain1] {
        &self.rays
    }

    pub fn lattice_basis(&self) -> &CycleBasis {
        &self.lattice
    }

    /// `dim σ(T, φ) = b1(Γ∖T)`.
    pub fn dimension(&self) -> usize {
        self.lattice.rank()
    }

    /// Sign-condition membership; the chain is assumed to be a cycle.
    pub fn contains_unchecked(&self, c: &Chain1) -> bool {
        sign_compatible(&self.label, c)
    }

    /// Coordinates of a chain of this cone's span in [`lattice_basis`](Self::lattice_basis).
    pub fn coordinates(&self, c: &Chain1) -> Vec<i64> {
        self.lattice.coordinates(c)
    }
}

fn sign_compatible(label: &TotCycPair, c: &Chain1) -> bool {
    (0..c.len()).all(|e| {
        let x = c.get(e);
        match label.orientation().get(e) {
            None => x == 0,
            Some(Direction::Forward) => x >= 0,
            Some(Direction::Backward) => x <= 0,
        }
    })
}

/// `c ∈ σ(T, φ)`.
pub fn cone_contains(g: &Graph, k: &Cone, c: &Chain1) -> Result<bool> {
    require_cycle(g, c)?;
    Ok(k.contains_unchecked(c))
}

/// Two cycles lie in a common cone iff `c(e)·d(e) ≥ 0` on every edge.
pub fn common_cone(c: &Chain1, d: &Chain1) -> bool {
    c.coeffs().iter().zip(d.coeffs()).all(|(a, b)| a * b >= 0)
}

/// The unique smallest cone containing a cycle: `T = E∖supp(c)`, `φ = φ_c`.
pub fn cone_of(g: &Graph, c: &Chain1) -> Result<TotCycPair> {
    require_cycle(g, c)?;
    let form = crate::cycle::canonical_form(c);
    let removed = form.support.complement(g);
    debug_assert!(is_totally_cyclic_on(g, &form.support, &form.orientation));
    TotCycPair::new(g, removed, form.orientation)
}

/// Dimension of a cone and of the dual face of the Voronoi polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeDimension {
    pub dimension: usize,
    /// `b1(Γ) − b1(Γ∖T)`.
    pub voronoi_face_dim: usize,
}

pub fn cone_dimension(g: &Graph, k: &Cone) -> ConeDimension {
    let dimension = k.dimension();
    ConeDimension {
        dimension,
        voronoi_face_dim: g.betti1() - dimension,
    }
}

pub fn extremal_rays(k: &Cone) -> Vec<Chain1> {
    k.extremal_rays().to_vec()
}

/// A codimension-one face together with its inward primitive normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub cone: Cone,
    /// The edges `T'∖T` that the facet additionally annihilates.
    pub edges: EdgeSet,
    /// Primitive functional `(·, φ(e))` in the dual of the parent's lattice basis.
    pub normal: Vec<i64>,
}

/// Faces of `k` of dimension `dim k − 1`, found as poset children
/// `(T ∪ S, φ|)` with `b1` dropping by exactly one.
pub fn facets(g: &Graph, k: &Cone) -> Vec<Facet> {
    let rest: Vec<usize> = k.label.remaining().iter().collect();
    let dim = k.dimension();
    if dim == 0 {
        return Vec::new();
    }
    let mut out: Vec<Facet> = Vec::new();
    let mut masks: Vec<u64> = (1u64..1 << rest.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    for mask in masks {
        let extra: EdgeSet = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let removed = k.label.removed().union(&extra);
        let child = k.label.restrict_unchecked(removed);
        let remaining = child.remaining();
        if g.betti1_within(&remaining) + 1 != dim
            || !is_totally_cyclic_on(g, &remaining, child.orientation())
        {
            continue;
        }
        let normal = facet_normal(k, extra.first().expect("nonempty"));
        out.push(Facet {
            cone: Cone::new(g, child),
            edges: extra,
            normal,
        });
    }
    out
}

/// The functional `(·, φ(e))` on the cone's lattice, made primitive.
fn facet_normal(k: &Cone, e: usize) -> Vec<i64> {
    let sign = k.label.orientation().get(e).map_or(0, Direction::sign);
    let raw: Vec<i64> = k.lattice.basis.iter().map(|b| sign * b.get(e)).collect();
    let g = linalg::gcd_all(&raw).max(1);
    raw.into_iter().map(|x| x / g).collect()
}

/// The complete fan: one cone per element of `OP_Γ`, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct Fan {
    pub ambient: CycleBasis,
    pub cones: Vec<Cone>,
    /// Inclusion of cones, computed geometrically from rays.
    pub inclusion: Poset,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Cones of maximal dimension.
    pub fn chambers(&self) -> Vec<&Cone> {
        let top = self.cones.iter().map(Cone::dimension).max().unwrap_or(0);
        self.cones.iter().filter(|c| c.dimension() == top).collect()
    }

    pub fn index_of(&self, label: &TotCycPair) -> Option<usize> {
        self.cones.iter().position(|c| c.label() == label)
    }
}

/// Builds the fan from `OP_Γ`; inclusion is decided by checking that every
/// ray of one cone satisfies the sign conditions of the other.
pub fn build_fan(g: &Graph, limits: &Limits) -> Result<Fan> {
    let poset = build_orientation_poset(g, limits)?;
    Ok(fan_from_poset(g, &poset))
}

pub fn fan_from_poset(g: &Graph, poset: &OrientationPoset) -> Fan {
    let cones: Vec<Cone> = poset
        .elements
        .par_iter()
        .map(|p| Cone::new(g, p.clone()))
        .collect();
    let inclusion = Poset::from_relation(cones.len(), |i, j| {
        cones[i].dimension() <= cones[j].dimension()
            && cones[i].extremal_rays().iter().all(|r| cones[j].contains_unchecked(r))
    });
    Fan {
        ambient: fundamental_cycle_basis(g),
        cones,
        inclusion,
    }
}

pub use crate::poset::poset_isomorphic;
