//! Cographic fans and cographic toric face rings of finite multigraphs.
//!
//! Starting from a [`Graph`], the crate enumerates totally cyclic
//! orientations and the poset `OP_Γ` they form, oriented circuits and their
//! classes in `H1(Γ, ℤ)`, the cones of the cographic fan, the affine
//! semigroups of those cones (Hilbert bases, toric ideals, multiplicities),
//! and the invariants of the cographic ring `R(Γ)`. The [`torelli`] module
//! decides when two graphs have isomorphic cographic rings.
//!
//! All arithmetic is exact. Exhaustive searches are bounded by [`Limits`] and
//! fail with [`Error::Capacity`] rather than truncating.
//!
//! ```
//! use cographic::{catalog, ring, Limits};
//!
//! let report = ring::ring_report(&catalog::b3(), &Limits::default()).unwrap();
//! assert_eq!(report.dimension, 2);
//! assert_eq!(report.embedded_dimension, 6);
//! assert_eq!(report.multiplicity, 6);
//! ```

pub mod catalog;
pub mod circuit;
pub mod cycle;
pub mod error;
pub mod fan;
pub mod graph;
pub mod hull;
pub mod invariants;
pub mod linalg;
pub mod orientation;
pub mod poset;
pub mod report;
pub mod ring;
pub mod semigroup;
pub mod torelli;

pub use circuit::{CircuitSet, OrientedCircuit};
pub use cycle::{Chain0, Chain1, CycleBasis};
pub use error::{Error, Result};
pub use fan::{Cone, Fan};
pub use graph::{Direction, EdgeSet, Graph, OrientedEdge};
pub use orientation::{Orientation, OrientationPoset, TotCycPair};
pub use poset::Poset;
pub use semigroup::{AffineSemigroup, BinomialIdeal};

/// Caps on exhaustive searches and default computation parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum edge count for totally cyclic orientation enumeration.
    pub orientation_edges: usize,
    /// Maximum edge count for poset, fan, circuit and ring construction.
    pub poset_edges: usize,
    /// Maximum poset size for isomorphism search.
    pub poset_elements: usize,
    /// Degree bound for binomial enumeration.
    pub degree: usize,
    /// Extra terms beyond the dimension used by the Hilbert–Samuel oracle.
    pub hs_extra: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            orientation_edges: 20,
            poset_edges: 14,
            poset_elements: 20_000,
            degree: 3,
            hs_extra: 6,
        }
    }
}

impl Limits {
    pub(crate) fn check_poset_edges(&self, g: &Graph, what: &'static str) -> Result<()> {
        if g.edge_count() > self.poset_edges {
            Err(Error::Capacity {
                what,
                size: g.edge_count(),
                cap: self.poset_edges,
            })
        } else {
            Ok(())
        }
    }
}

// The guide's chapters are compiled as doctests so that every snippet in the
// book stays in sync with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/orientations.md")]
    mod orientations {}
    #[doc = include_str!("../../../book/src/circuits.md")]
    mod circuits {}
    #[doc = include_str!("../../../book/src/fan.md")]
    mod fan {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/invariant-ring.md")]
    mod invariant_ring {}
    #[doc = include_str!("../../../book/src/torelli.md")]
    mod torelli {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
