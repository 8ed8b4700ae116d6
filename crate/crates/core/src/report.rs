//! Serializable reports. Field order is fixed by declaration, so serialized
//! output is canonical.

use serde::Serialize;

use rayon::prelude::*;

use crate::circuit::{enumerate_oriented_circuits, CircuitSet};
use crate::error::Result;
use crate::fan::{cone_dimension, facets, fan_from_poset};
use crate::graph::Graph;
use crate::invariants::{check_iso_truncated, cycles_up_to_norm, invariant_monomial_basis};
use crate::linalg::fmt_rational;
use crate::orientation::{build_orientation_poset, enumerate_tco, maximal_elements, Orientation, TotCycPair};
use crate::ring::{present_ring, ring_report};
use crate::semigroup::{
    hilbert_basis, is_homogeneous, is_unimodular, multiplicity_hs_oracle, q_gorenstein, spans_lattice,
    subdiagram_volume, toric_ideal_up_to_degree,
};
use crate::torelli::{same_cographic_ring, three_edge_connectivization};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSummary {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSummary>,
    pub components: usize,
    pub betti1: usize,
    pub separating_edges: Vec<String>,
}

pub fn graph_summary(g: &Graph) -> GraphSummary {
    GraphSummary {
        vertices: g.vertex_names().map(str::to_owned).collect(),
        edges: (0..g.edge_count())
            .map(|e| {
                let (s, t) = g.endpoints(e);
                EdgeSummary {
                    name: g.edge_name(e).to_owned(),
                    source: g.vertex_name(s).to_owned(),
                    target: g.vertex_name(t).to_owned(),
                }
            })
            .collect(),
        components: g.component_count(),
        betti1: g.betti1(),
        separating_edges: g.separating_edges().names(g).into_iter().map(str::to_owned).collect(),
    }
}

/// A pair `(T, φ)` with edges named and orientations as `name±`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairLabel {
    pub removed: Vec<String>,
    pub orientation: Vec<String>,
}

fn orientation_names(g: &Graph, phi: &Orientation) -> Vec<String> {
    phi.iter()
        .map(|(e, d)| format!("{}{}", g.edge_name(e), d.symbol()))
        .collect()
}

pub fn pair_label(g: &Graph, p: &TotCycPair) -> PairLabel {
    PairLabel {
        removed: p.removed().names(g).into_iter().map(str::to_owned).collect(),
        orientation: orientation_names(g, p.orientation()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationsReport {
    pub totally_cyclic_orientations: Vec<Vec<String>>,
    pub poset_size: usize,
    pub maximal_elements: Vec<PairLabel>,
    /// Number of pairs `(T, φ)` for each `|T|`.
    pub elements_by_removed_size: Vec<usize>,
}

pub fn orientations_report(g: &Graph, limits: &Limits) -> Result<OrientationsReport> {
    let tcos = enumerate_tco(g, limits)?;
    let poset = build_orientation_poset(g, limits)?;
    let mut by_size = vec![0; g.edge_count() + 1];
    for p in &poset.elements {
        by_size[p.removed().len()] += 1;
    }
    Ok(OrientationsReport {
        totally_cyclic_orientations: tcos.iter().map(|phi| orientation_names(g, phi)).collect(),
        poset_size: poset.len(),
        maximal_elements: maximal_elements(&poset).iter().map(|p| pair_label(g, p)).collect(),
        elements_by_removed_size: by_size,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitEntry {
    pub index: usize,
    pub edges: Vec<String>,
    pub class: Vec<i64>,
}

fn circuit_entries(g: &Graph, circuits: &CircuitSet) -> Vec<CircuitEntry> {
    circuits
        .iter()
        .enumerate()
        .map(|(index, c)| CircuitEntry {
            index,
            edges: c.label(g),
            class: c.class(g.edge_count()).coeffs().to_vec(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitsReport {
    pub count: usize,
    pub circuits: Vec<CircuitEntry>,
}

pub fn circuits_report(g: &Graph, limits: &Limits) -> Result<CircuitsReport> {
    let circuits = enumerate_oriented_circuits(g, limits)?;
    Ok(CircuitsReport {
        count: circuits.len(),
        circuits: circuit_entries(g, &circuits),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetEntry {
    pub removed_edges: Vec<String>,
    pub normal: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeEntry {
    pub label: PairLabel,
    pub dimension: usize,
    pub voronoi_face_dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub facets: Vec<FacetEntry>,
    /// Indices of the cones contained in this one, itself excluded.
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub cone_count: usize,
    pub chamber_count: usize,
    pub cones_by_dimension: Vec<usize>,
    pub cones: Vec<ConeEntry>,
}

pub fn fan_report(g: &Graph, limits: &Limits) -> Result<FanReport> {
    let poset = build_orientation_poset(g, limits)?;
    let fan = fan_from_poset(g, &poset);
    let mut by_dim = vec![0; g.betti1() + 1];
    for k in &fan.cones {
        by_dim[k.dimension()] += 1;
    }
    let cones = fan
        .cones
        .par_iter()
        .enumerate()
        .map(|(i, k)| {
            let d = cone_dimension(g, k);
            ConeEntry {
                label: pair_label(g, k.label()),
                dimension: d.dimension,
                voronoi_face_dim: d.voronoi_face_dim,
                rays: k.extremal_rays().iter().map(|r| r.coeffs().to_vec()).collect(),
                facets: facets(g, k)
                    .into_iter()
                    .map(|f| FacetEntry {
                        removed_edges: f.edges.names(g).into_iter().map(str::to_owned).collect(),
                        normal: f.normal,
                    })
                    .collect(),
                faces: (0..fan.len()).filter(|&j| j != i && fan.inclusion.le(j, i)).collect(),
            }
        })
        .collect();
    Ok(FanReport {
        cone_count: fan.len(),
        chamber_count: fan.chambers().len(),
        cones_by_dimension: by_dim,
        cones,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub circuit: Vec<String>,
    pub edge_coordinates: Vec<i64>,
    pub lattice_coordinates: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorEntry {
    /// Positions in the Hilbert basis list, counted from 1.
    pub rows: Vec<usize>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialEntry {
    pub u: Vec<u32>,
    pub v: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub label: PairLabel,
    pub dimension: usize,
    /// Cotree edges whose fundamental cycles form the lattice basis.
    pub lattice_basis_edges: Vec<String>,
    pub hilbert_basis: Vec<BasisElement>,
    pub spans_lattice: bool,
    pub unimodular: bool,
    pub unimodularity_witness: Option<(MinorEntry, MinorEntry)>,
    pub degree_bound: usize,
    pub binomials: Vec<BinomialEntry>,
    pub homogeneous: bool,
    pub q_gorenstein: bool,
    pub gorenstein_integral: bool,
    pub gorenstein_point: Option<Vec<String>>,
    pub subdiagram_volume: u64,
    pub hilbert_samuel_multiplicity: u64,
}

pub fn semigroup_report(g: &Graph, p: &TotCycPair, limits: &Limits) -> Result<SemigroupReport> {
    let s = hilbert_basis(g, p);
    let u = is_unimodular(&s);
    let ideal = toric_ideal_up_to_degree(&s, limits.degree)?;
    let q = q_gorenstein(&s);
    let minor = |m: &crate::semigroup::Minor| MinorEntry {
        rows: m.rows.iter().map(|i| i + 1).collect(),
        value: m.value as i64,
    };
    Ok(SemigroupReport {
        label: pair_label(g, p),
        dimension: s.lattice_rank,
        lattice_basis_edges: s
            .cone
            .lattice_basis()
            .cotree_edges
            .iter()
            .map(|&e| g.edge_name(e).to_owned())
            .collect(),
        hilbert_basis: s
            .circuits()
            .iter()
            .zip(&s.hilbert_basis)
            .zip(s.coordinates())
            .map(|((c, h), x)| BasisElement {
                circuit: c.label(g),
                edge_coordinates: h.coeffs().to_vec(),
                lattice_coordinates: x.clone(),
            })
            .collect(),
        spans_lattice: spans_lattice(&s),
        unimodular: u.unimodular,
        unimodularity_witness: u.witness.as_ref().map(|(a, b)| (minor(a), minor(b))),
        degree_bound: ideal.degree_bound,
        homogeneous: is_homogeneous(&ideal),
        binomials: ideal
            .generators
            .into_iter()
            .map(|(u, v)| BinomialEntry { u, v })
            .collect(),
        q_gorenstein: q.q_gorenstein,
        gorenstein_integral: q.gorenstein_integral,
        gorenstein_point: q.m.map(|m| m.iter().map(fmt_rational).collect()),
        subdiagram_volume: subdiagram_volume(&s)?,
        hilbert_samuel_multiplicity: multiplicity_hs_oracle(&s, s.lattice_rank + limits.hs_extra)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingSummary {
    pub dimension: usize,
    pub embedded_dimension: usize,
    pub minimal_primes: Vec<PairLabel>,
    pub multiplicity: u64,
    pub chamber_multiplicities: Vec<u64>,
    pub normalization_components: Vec<PairLabel>,
    /// Properties that hold for every cographic ring but are not computed here.
    pub asserted_not_computed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberBinomials {
    pub chamber: PairLabel,
    /// Generator indices the exponent vectors refer to.
    pub variables: Vec<usize>,
    pub binomials: Vec<BinomialEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub generators: Vec<CircuitEntry>,
    pub discordance_quadrics: Vec<(usize, usize)>,
    pub degree_bound: usize,
    pub chamber_binomials: Vec<ChamberBinomials>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingFullReport {
    pub ring: RingSummary,
    pub presentation: PresentationReport,
}

pub fn ring_summary(g: &Graph, limits: &Limits) -> Result<RingSummary> {
    let r = ring_report(g, limits)?;
    Ok(RingSummary {
        dimension: r.dimension,
        embedded_dimension: r.embedded_dimension,
        minimal_primes: r.minimal_prime_labels.iter().map(|p| pair_label(g, p)).collect(),
        multiplicity: r.multiplicity,
        chamber_multiplicities: r.chamber_multiplicities,
        normalization_components: r.normalization_components.iter().map(|p| pair_label(g, p)).collect(),
        asserted_not_computed: ["gorenstein", "seminormal", "semi_log_canonical"]
            .map(String::from)
            .to_vec(),
    })
}

pub fn ring_full_report(g: &Graph, limits: &Limits) -> Result<RingFullReport> {
    let p = present_ring(g, limits.degree, limits)?;
    Ok(RingFullReport {
        ring: ring_summary(g, limits)?,
        presentation: PresentationReport {
            generators: circuit_entries(g, &p.generators),
            discordance_quadrics: p.discordance_quadrics,
            degree_bound: limits.degree,
            chamber_binomials: p
                .per_chamber_binomials
                .into_iter()
                .map(|r| ChamberBinomials {
                    chamber: pair_label(g, &r.chamber),
                    variables: r.variables,
                    binomials: r
                        .ideal
                        .generators
                        .into_iter()
                        .map(|(u, v)| BinomialEntry { u, v })
                        .collect(),
                })
                .collect(),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetStats {
    pub elements: usize,
    pub maximal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanStats {
    pub cones: usize,
    pub chambers: usize,
    pub cones_by_dimension: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub graph: GraphSummary,
    pub orientation_poset: PosetStats,
    pub fan: FanStats,
    pub ring: RingSummary,
    pub chambers: Vec<SemigroupReport>,
}

pub fn analyze(g: &Graph, limits: &Limits) -> Result<AnalyzeReport> {
    let poset = build_orientation_poset(g, limits)?;
    let chambers = maximal_elements(&poset);
    let mut by_dim = vec![0; g.betti1() + 1];
    for p in &poset.elements {
        by_dim[g.betti1_within(&p.remaining())] += 1;
    }
    let top = by_dim.iter().rposition(|&n| n > 0).unwrap_or(0);
    let reports = chambers
        .par_iter()
        .map(|p| semigroup_report(g, p, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalyzeReport {
        graph: graph_summary(g),
        orientation_poset: PosetStats {
            elements: poset.len(),
            maximal: chambers.len(),
        },
        fan: FanStats {
            cones: poset.len(),
            chambers: by_dim[top],
            cones_by_dimension: by_dim,
        },
        ring: ring_summary(g, limits)?,
        chambers: reports,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub same_ring: bool,
    /// Edge counts of the two 3-edge connectivizations.
    pub g_class_size: usize,
    pub h_class_size: usize,
}

pub fn compare(g: &Graph, h: &Graph, limits: &Limits) -> Result<CompareReport> {
    Ok(CompareReport {
        same_ring: same_cographic_ring(g, h, limits)?,
        g_class_size: three_edge_connectivization(g, limits)?.edge_count(),
        h_class_size: three_edge_connectivization(h, limits)?.edge_count(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRingReport {
    pub degree: usize,
    pub invariant_monomials: usize,
    pub cycles: usize,
    pub isomorphic: bool,
}

pub fn verify_invariant_ring(g: &Graph, degree: usize) -> InvariantRingReport {
    InvariantRingReport {
        degree,
        invariant_monomials: invariant_monomial_basis(g, degree).len(),
        cycles: cycles_up_to_norm(g, degree).len(),
        isomorphic: check_iso_truncated(g, degree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn analyze_small_graphs() {
        let lim = Limits::default();
        let l = analyze(&catalog::loop1(), &lim).unwrap();
        assert_eq!((l.ring.dimension, l.ring.embedded_dimension, l.ring.multiplicity), (1, 2, 2));
        assert_eq!(l.ring.minimal_primes.len(), 2);
        let b = analyze(&catalog::b3(), &lim).unwrap();
        assert_eq!(b.fan.cones_by_dimension, vec![1, 6, 6]);
        assert!(b.chambers.iter().all(|c| c.subdiagram_volume == c.hilbert_samuel_multiplicity));
    }

    #[test]
    fn theta_witness() {
        let t = analyze(&catalog::theta2(), &Limits::default()).unwrap();
        let reference = t
            .chambers
            .iter()
            .find(|c| c.label.orientation.iter().all(|e| e.ends_with('+')))
            .unwrap();
        assert!(!reference.unimodular);
        let (a, b) = reference.unimodularity_witness.clone().unwrap();
        assert_eq!((a.value.abs(), b.value.abs()), (1, 2));
    }

    #[test]
    fn reports_serialize_deterministically() {
        let g = catalog::fig_nh();
        let a = serde_json::to_string(&fan_report(&g, &Limits::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&fan_report(&g, &Limits::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compare_and_invariants() {
        let lim = Limits::default();
        let c = compare(&catalog::cycle(5), &catalog::cycle(7), &lim).unwrap();
        assert_eq!(c, CompareReport { same_ring: true, g_class_size: 1, h_class_size: 1 });
        let r = verify_invariant_ring(&catalog::b2(), 2);
        assert_eq!((r.invariant_monomials, r.cycles, r.isomorphic), (3, 3, true));
    }
}
