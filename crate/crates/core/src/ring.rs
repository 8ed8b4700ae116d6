//! The cographic ring `R(Γ)`: its presentation, the monomial product, graded
//! primes and the invariants read off the fan.
//!
//! Elements are never materialized beyond monomials `X^c`, `c ∈ H1(Γ, ℤ)`.

use rayon::prelude::*;

use crate::circuit::{concordant, enumerate_oriented_circuits, CircuitSet};
use crate::cycle::{require_cycle, Chain1};
use crate::error::Result;
use crate::fan::{common_cone, cone_of};
use crate::graph::{Direction, Graph};
use crate::orientation::{build_orientation_poset, maximal_elements, TotCycPair};
use crate::poset::Poset;
use crate::semigroup::{hilbert_basis, subdiagram_volume, toric_ideal_up_to_degree, BinomialIdeal};
use crate::Limits;

/// Binomial relations of one maximal chamber. Exponent vectors are indexed
/// by `variables`, which are positions in the global generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberRelations {
    pub chamber: TotCycPair,
    pub variables: Vec<usize>,
    pub ideal: BinomialIdeal,
}

/// `R(Γ) = k[V_γ : γ ∈ Cyc(Γ)] / I_Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub generators: CircuitSet,
    /// Index pairs `i < j` of discordant circuits; each gives `V_i V_j`.
    pub discordance_quadrics: Vec<(usize, usize)>,
    pub per_chamber_binomials: Vec<ChamberRelations>,
}

pub fn present_ring(g: &Graph, degree: usize, limits: &Limits) -> Result<RingPresentation> {
    let generators = enumerate_oriented_circuits(g, limits)?;
    let n = generators.len();
    let mut discordance_quadrics = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&generators.as_slice()[i], &generators.as_slice()[j]);
            if !concordant(a, b) {
                discordance_quadrics.push((i, j));
            }
        }
    }
    let poset = build_orientation_poset(g, limits)?;
    let per_chamber_binomials = maximal_elements(&poset)
        .into_par_iter()
        .map(|chamber| {
            let s = hilbert_basis(g, &chamber);
            let variables = s
                .circuits()
                .iter()
                .map(|c| generators.index_of(c).expect("compatible circuits are circuits"))
                .collect();
            let ideal = toric_ideal_up_to_degree(&s, degree)?;
            Ok(ChamberRelations {
                chamber,
                variables,
                ideal,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RingPresentation {
        generators,
        discordance_quadrics,
        per_chamber_binomials,
    })
}

/// `X^c · X^d`: `Some(c + d)` when `c` and `d` share a cone, `None` for zero.
pub fn multiply_monomials(g: &Graph, c: &Chain1, d: &Chain1) -> Result<Option<Chain1>> {
    require_cycle(g, c)?;
    require_cycle(g, d)?;
    Ok(common_cone(c, d).then(|| c + d))
}

/// The graded prime `𝔭_(T,φ)`, spanned by the monomials `X^c` with
/// `c ∉ σ(T, φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPrime {
    pub label: TotCycPair,
}

impl GradedPrime {
    /// Membership of `X^c`; the chain is assumed to be a cycle.
    pub fn contains(&self, c: &Chain1) -> bool {
        !in_cone(&self.label, c)
    }

    /// The prime of the minimum pair is the graded maximal ideal `𝔪`.
    pub fn is_maximal_ideal(&self) -> bool {
        self.label.orientation().is_empty()
    }

    pub fn describe(&self, g: &Graph) -> String {
        format!("monomials X^c with c outside sigma{}", self.label.label(g))
    }
}

fn in_cone(p: &TotCycPair, c: &Chain1) -> bool {
    (0..c.len()).all(|e| {
        let x = c.get(e);
        match p.orientation().get(e) {
            None => x == 0,
            Some(Direction::Forward) => x >= 0,
            Some(Direction::Backward) => x <= 0,
        }
    })
}

pub fn graded_prime_of(_g: &Graph, p: &TotCycPair) -> GradedPrime {
    GradedPrime { label: p.clone() }
}

/// The restriction `r_σ : R(Γ) → k[C(σ)]` on a monomial: `X^c` survives iff
/// `c ∈ σ`.
pub fn restrict_monomial(p: &TotCycPair, c: &Chain1) -> Option<Chain1> {
    in_cone(p, c).then(|| c.clone())
}

/// Invariants of `R(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingReport {
    pub dimension: usize,
    pub embedded_dimension: usize,
    pub minimal_prime_labels: Vec<TotCycPair>,
    pub multiplicity: u64,
    /// `Spec` of the normalization is the disjoint union of the chambers' toric varieties.
    pub normalization_components: Vec<TotCycPair>,
    /// Subdiagram volume of each chamber, aligned with `minimal_prime_labels`.
    pub chamber_multiplicities: Vec<u64>,
}

pub fn ring_report(g: &Graph, limits: &Limits) -> Result<RingReport> {
    let circuits = enumerate_oriented_circuits(g, limits)?;
    let poset = build_orientation_poset(g, limits)?;
    let chambers = maximal_elements(&poset);
    let chamber_multiplicities = chambers
        .par_iter()
        .map(|p| subdiagram_volume(&hilbert_basis(g, p)))
        .collect::<Result<Vec<u64>>>()?;
    Ok(RingReport {
        dimension: g.betti1(),
        embedded_dimension: circuits.len(),
        multiplicity: chamber_multiplicities.iter().sum(),
        normalization_components: chambers.clone(),
        minimal_prime_labels: chambers,
        chamber_multiplicities,
    })
}

/// Graded primes `𝔭_(T,φ)` ordered by reverse inclusion, so that the order
/// matches inclusion of cones.
#[derive(Clone, Debug)]
pub struct StrataPoset {
    pub labels: Vec<TotCycPair>,
    pub order: Poset,
}

/// Builds the strata poset. Inclusion of monomial primes is decided on
/// circuit classes, which generate every cone.
pub fn strata_poset(g: &Graph, limits: &Limits) -> Result<StrataPoset> {
    let circuits = enumerate_oriented_circuits(g, limits)?;
    let labels = build_orientation_poset(g, limits)?.elements;
    let classes = circuits.classes(g.edge_count());
    let members: Vec<Vec<bool>> = labels
        .iter()
        .map(|p| {
            let prime = GradedPrime { label: p.clone() };
            classes.iter().map(|c| prime.contains(c)).collect()
        })
        .collect();
    // i ≤ j iff 𝔭_j ⊆ 𝔭_i.
    let order = Poset::from_relation(labels.len(), |i, j| {
        members[j].iter().zip(&members[i]).all(|(&mj, &mi)| !mj || mi)
    });
    Ok(StrataPoset { labels, order })
}

/// `Σ 𝔭_σᵢ = 𝔭_(∩σᵢ)`. The intersection is located through the circuits
/// lying in every cone: their sum is a relative interior point.
pub fn sum_of_primes(g: &Graph, primes: &[GradedPrime], limits: &Limits) -> Result<GradedPrime> {
    let circuits = enumerate_oriented_circuits(g, limits)?;
    let m = g.edge_count();
    let mut interior = Chain1::zero(m);
    for c in &circuits {
        let class = c.class(m);
        if primes.iter().all(|p| !p.contains(&class)) {
            interior += &class;
        }
    }
    Ok(GradedPrime {
        label: cone_of(g, &interior)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::EdgeSet;
    use crate::orientation::Orientation;
    use crate::poset::poset_isomorphic;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use Direction::{Backward as B, Forward as F};

    fn lim() -> Limits {
        Limits::default()
    }

    fn ch(g: &Graph, terms: &[(&str, i64)]) -> Chain1 {
        Chain1::from_named(g, terms).unwrap()
    }

    #[test]
    fn loop_and_digon_presentations() {
        for g in [catalog::loop1(), catalog::b2()] {
            let p = present_ring(&g, 3, &lim()).unwrap();
            assert_eq!(p.generators.len(), 2);
            assert_eq!(p.discordance_quadrics, vec![(0, 1)]);
            assert_eq!(p.per_chamber_binomials.len(), 2);
            assert!(p.per_chamber_binomials.iter().all(|r| r.ideal.generators.is_empty()));
        }
    }

    #[test]
    fn figure_three_presentation_contains_relation() {
        let g = catalog::fig_nh();
        let p = present_ring(&g, 3, &lim()).unwrap();
        let chamber = TotCycPair::new(&g, EdgeSet::new(), Orientation::reference(&g)).unwrap();
        let rel = p.per_chamber_binomials.iter().find(|r| r.chamber == chamber).unwrap();
        assert_eq!(rel.variables.len(), 5);
        assert_eq!(rel.ideal.generators.len(), 1);
        let (u, v) = &rel.ideal.generators[0];
        assert_eq!((u.iter().sum::<u32>(), v.iter().sum::<u32>()), (3, 2));
    }

    #[test]
    fn quadrics_are_the_discordant_pairs() {
        let g = catalog::theta2();
        let p = present_ring(&g, 1, &lim()).unwrap();
        let n = p.generators.len();
        let total = n * (n - 1) / 2;
        let concordant_pairs = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| concordant(p.generators.get(i).unwrap(), p.generators.get(j).unwrap()))
            .count();
        assert_eq!(p.discordance_quadrics.len() + concordant_pairs, total);
    }

    #[test]
    fn multiplication_examples() {
        let g = catalog::b3();
        let c = ch(&g, &[("e1", 1), ("e3", -1)]);
        let d = ch(&g, &[("e2", 1), ("e3", -1)]);
        let zero = Chain1::zero(3);
        assert_eq!(multiply_monomials(&g, &c, &zero).unwrap(), Some(c.clone()));
        assert_eq!(multiply_monomials(&g, &c, &-&c).unwrap(), None);
        assert_eq!(
            multiply_monomials(&g, &c, &d).unwrap(),
            Some(ch(&g, &[("e1", 1), ("e2", 1), ("e3", -2)]))
        );
        assert!(multiply_monomials(&g, &ch(&g, &[("e1", 1)]), &c).is_err());
    }

    fn random_cycle(rng: &mut ChaCha8Rng, g: &Graph) -> Chain1 {
        let basis = crate::cycle::fundamental_cycle_basis(g);
        let coords: Vec<i64> = (0..basis.rank()).map(|_| rng.gen_range(-2..=2)).collect();
        basis.combine(&coords)
    }

    fn mul(g: &Graph, a: Option<Chain1>, b: Option<Chain1>) -> Option<Chain1> {
        multiply_monomials(g, &a?, &b?).unwrap()
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [catalog::b3(), catalog::theta2(), catalog::fig_nh()] {
            for _ in 0..300 {
                let (a, b, c) = (random_cycle(&mut rng, &g), random_cycle(&mut rng, &g), random_cycle(&mut rng, &g));
                assert_eq!(mul(&g, Some(a.clone()), Some(b.clone())), mul(&g, Some(b.clone()), Some(a.clone())));
                let left = mul(&g, mul(&g, Some(a.clone()), Some(b.clone())), Some(c.clone()));
                let right = mul(&g, Some(a.clone()), mul(&g, Some(b.clone()), Some(c.clone())));
                assert_eq!(left, right);
                assert_eq!(mul(&g, None, Some(a.clone())), None);
            }
        }
    }

    #[test]
    fn restrictions_commute_with_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = catalog::theta2();
        let poset = build_orientation_poset(&g, &lim()).unwrap();
        for _ in 0..300 {
            let p = &poset.elements[rng.gen_range(0..poset.len())];
            let (a, b) = (random_cycle(&mut rng, &g), random_cycle(&mut rng, &g));
            let lhs = mul(&g, Some(a.clone()), Some(b.clone())).and_then(|x| restrict_monomial(p, &x));
            let rhs = match (restrict_monomial(p, &a), restrict_monomial(p, &b)) {
                (Some(x), Some(y)) => Some(&x + &y),
                _ => None,
            };
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn prime_examples() {
        let g = catalog::b3();
        let m = graded_prime_of(&g, &TotCycPair::minimum(&g));
        assert!(m.is_maximal_ideal());
        assert!(!m.contains(&Chain1::zero(3)));
        assert!(m.contains(&ch(&g, &[("e1", 1), ("e3", -1)])));

        let phi = Orientation::from_named(&g, &[("e1", F), ("e2", F), ("e3", B)]).unwrap();
        let p = graded_prime_of(&g, &TotCycPair::new(&g, EdgeSet::new(), phi).unwrap());
        assert!(p.contains(&ch(&g, &[("e3", 1), ("e1", -1)])));
        assert!(!p.contains(&ch(&g, &[("e1", 1), ("e3", -1)])));
    }

    #[test]
    fn membership_is_antitone() {
        let g = catalog::theta2();
        let poset = build_orientation_poset(&g, &lim()).unwrap();
        let classes = enumerate_oriented_circuits(&g, &lim()).unwrap().classes(g.edge_count());
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if poset.order.le(i, j) {
                    let (pi, pj) = (GradedPrime { label: poset.elements[i].clone() }, GradedPrime { label: poset.elements[j].clone() });
                    assert!(classes.iter().all(|c| !pj.contains(c) || pi.contains(c)));
                }
            }
        }
    }

    #[test]
    fn report_examples() {
        let t = ring_report(&catalog::tree3(), &lim()).unwrap();
        assert_eq!((t.dimension, t.embedded_dimension, t.minimal_prime_labels.len(), t.multiplicity), (0, 0, 1, 1));
        let l = ring_report(&catalog::loop1(), &lim()).unwrap();
        assert_eq!((l.dimension, l.embedded_dimension, l.minimal_prime_labels.len(), l.multiplicity), (1, 2, 2, 2));
        let b = ring_report(&catalog::b3(), &lim()).unwrap();
        assert_eq!((b.dimension, b.embedded_dimension, b.minimal_prime_labels.len(), b.multiplicity), (2, 6, 6, 6));
        let ng = ring_report(&catalog::fig_ng(), &lim()).unwrap();
        assert_eq!((ng.dimension, ng.embedded_dimension, ng.minimal_prime_labels.len()), (4, 20, 30));
        // Σ_k C(5,k)·vol(Δ_{k−1} × Δ_{4−k}) over chambers with k forward edges.
        assert_eq!(ng.multiplicity, 70);
        assert_eq!(ng.normalization_components, ng.minimal_prime_labels);
    }

    #[test]
    fn chamber_bases_cover_all_circuits() {
        for (_, g) in catalog::all() {
            if g.edge_count() > 6 {
                continue;
            }
            let circuits = enumerate_oriented_circuits(&g, &lim()).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for p in build_orientation_poset(&g, &lim()).unwrap().elements {
                for c in hilbert_basis(&g, &p).circuits() {
                    seen.insert(c.clone());
                }
            }
            assert_eq!(seen.len(), circuits.len());
        }
    }

    #[test]
    fn strata_match_the_fan() {
        for g in [catalog::b3(), catalog::theta2(), catalog::fig_nh()] {
            let strata = strata_poset(&g, &lim()).unwrap();
            let poset = build_orientation_poset(&g, &lim()).unwrap();
            assert!(poset_isomorphic(&strata.order, &poset.order, 20_000).unwrap());
            for i in 0..poset.len() {
                for j in 0..poset.len() {
                    assert_eq!(strata.order.le(i, j), poset.order.le(i, j));
                }
            }
        }
    }

    #[test]
    fn sums_of_primes() {
        let g = catalog::b3();
        let chambers: Vec<GradedPrime> = maximal_elements(&build_orientation_poset(&g, &lim()).unwrap())
            .into_iter()
            .map(|label| GradedPrime { label })
            .collect();
        assert!(sum_of_primes(&g, &chambers, &lim()).unwrap().is_maximal_ideal());
        assert_eq!(sum_of_primes(&g, &chambers[..1], &lim()).unwrap(), chambers[0]);
        // Adjacent chambers share a ray.
        let mut adjacent = 0;
        for a in &chambers {
            for b in &chambers {
                let s = sum_of_primes(&g, &[a.clone(), b.clone()], &lim()).unwrap();
                if a != b && s.label.remaining().len() == 2 {
                    adjacent += 1;
                    assert!(s.label.le(&a.label) && s.label.le(&b.label));
                }
            }
        }
        assert_eq!(adjacent, 12);
    }
}
