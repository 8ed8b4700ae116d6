//! Torus invariants of `A(Γ) = k[U_r : r oriented edge] / (U_{e→} U_{e←})`
//! under `λ · U_r = λ_{s(r)} λ_{t(r)}⁻¹ U_r`, checked against `R(Γ)` up to a
//! degree bound.

use std::collections::{BTreeMap, BTreeSet};

use crate::cycle::{fundamental_cycle_basis, Chain1};
use crate::fan::common_cone;
use crate::graph::{Direction, Graph, OrientedEdge};

/// A nonzero monomial of `A(Γ)`: no edge carries both orientations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedMonomial {
    exponents: BTreeMap<OrientedEdge, u32>,
}

impl OrientedMonomial {
    pub fn one() -> Self {
        Self {
            exponents: BTreeMap::new(),
        }
    }

    /// `None` if some edge would carry both orientations.
    pub fn new(exponents: BTreeMap<OrientedEdge, u32>) -> Option<Self> {
        let exponents: BTreeMap<OrientedEdge, u32> = exponents.into_iter().filter(|&(_, k)| k > 0).collect();
        let clash = exponents.keys().any(|r| exponents.contains_key(&r.reverse()));
        (!clash).then_some(Self { exponents })
    }

    pub fn exponents(&self) -> &BTreeMap<OrientedEdge, u32> {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    /// `Σ exponent(r) · r` as a 1-chain.
    pub fn weight(&self, edge_count: usize) -> Chain1 {
        let mut c = Chain1::zero(edge_count);
        for (r, &k) in &self.exponents {
            c.set(r.edge, c.get(r.edge) + r.dir.sign() * k as i64);
        }
        c
    }

    /// Product in `A(Γ)`; `None` when it vanishes.
    pub fn multiply(&self, other: &Self) -> Option<Self> {
        let mut exponents = self.exponents.clone();
        for (r, &k) in &other.exponents {
            *exponents.entry(*r).or_insert(0) += k;
        }
        Self::new(exponents)
    }
}

/// The character `v ↦ Σ_{s(r)=v} k_r − Σ_{t(r)=v} k_r` by which the torus
/// scales the monomial.
pub fn torus_character(g: &Graph, m: &OrientedMonomial) -> Vec<i64> {
    let mut chi = vec![0i64; g.vertex_count()];
    for (&r, &k) in m.exponents() {
        chi[g.source(r)] += k as i64;
        chi[g.target(r)] -= k as i64;
    }
    chi
}

pub fn is_torus_invariant(g: &Graph, m: &OrientedMonomial) -> bool {
    torus_character(g, m).iter().all(|&x| x == 0)
}

/// All nonzero monomials of degree at most `d`.
pub fn monomials_up_to_degree(g: &Graph, d: usize) -> Vec<OrientedMonomial> {
    fn rec(e: usize, m: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if e == m {
            out.push(cur.clone());
            return;
        }
        for x in -left..=left {
            cur[e] = x;
            rec(e + 1, m, left - x.abs(), cur, out);
        }
        cur[e] = 0;
    }
    let m = g.edge_count();
    let mut vectors = Vec::new();
    rec(0, m, d as i64, &mut vec![0; m], &mut vectors);
    vectors
        .into_iter()
        .map(|v| {
            let exponents = v
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(e, &x)| {
                    let dir = if x > 0 { Direction::Forward } else { Direction::Backward };
                    (OrientedEdge::new(e, dir), x.unsigned_abs() as u32)
                })
                .collect();
            OrientedMonomial::new(exponents).expect("one orientation per edge")
        })
        .collect()
}

/// The torus-invariant nonzero monomials of degree at most `d`.
pub fn invariant_monomial_basis(g: &Graph, d: usize) -> Vec<OrientedMonomial> {
    monomials_up_to_degree(g, d)
        .into_iter()
        .filter(|m| is_torus_invariant(g, m))
        .collect()
}

/// Cycles `c` with `Σ|c(e)| ≤ d`, enumerated from fundamental-basis coordinates.
pub fn cycles_up_to_norm(g: &Graph, d: usize) -> BTreeSet<Chain1> {
    let basis = fundamental_cycle_basis(g);
    let r = basis.rank();
    let d = d as i64;
    let mut out = BTreeSet::new();
    let mut coords = vec![-d; r];
    loop {
        let c = basis.combine(&coords);
        if c.l1_norm() <= d {
            out.insert(c);
        }
        let Some(i) = (0..r).find(|&i| coords[i] < d) else {
            return out;
        };
        coords[i] += 1;
        for x in coords.iter_mut().take(i) {
            *x = -d;
        }
    }
}

/// Verifies the isomorphism `A(Γ)^T ≅ R(Γ)` in degrees `≤ d`: weights biject
/// invariant monomials onto cycles of norm `≤ d`, and products vanish on the
/// same pairs on both sides.
pub fn check_iso_truncated(g: &Graph, d: usize) -> bool {
    let m = g.edge_count();
    let basis = invariant_monomial_basis(g, d);
    let weights: BTreeSet<Chain1> = basis.iter().map(|x| x.weight(m)).collect();
    if weights.len() != basis.len() || weights != cycles_up_to_norm(g, d) {
        return false;
    }
    for a in &basis {
        for b in &basis {
            if (a.degree() + b.degree()) as usize > d {
                continue;
            }
            let (wa, wb) = (a.weight(m), b.weight(m));
            let upstairs = a.multiply(b).map(|p| p.weight(m));
            let downstairs = common_cone(&wa, &wb).then(|| &wa + &wb);
            if upstairs != downstairs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cycle::is_cycle;

    #[test]
    fn degree_zero() {
        let g = catalog::b3();
        assert_eq!(invariant_monomial_basis(&g, 0), vec![OrientedMonomial::one()]);
    }

    #[test]
    fn loop_weights() {
        let g = catalog::loop1();
        let basis = invariant_monomial_basis(&g, 2);
        let weights: BTreeSet<i64> = basis.iter().map(|m| m.weight(1).get(0)).collect();
        assert_eq!(weights, [-2, -1, 0, 1, 2].into_iter().collect());
    }

    #[test]
    fn digon_degree_two() {
        let g = catalog::b2();
        let basis = invariant_monomial_basis(&g, 2);
        assert_eq!(basis.len(), 3);
        assert!(basis.iter().filter(|m| m.degree() == 2).all(|m| {
            let w = m.weight(2);
            w.get(0) == -w.get(1)
        }));
    }

    #[test]
    fn invariance_is_the_cycle_condition() {
        for g in [catalog::theta2(), catalog::fig_nh(), catalog::tree3()] {
            for m in monomials_up_to_degree(&g, 3) {
                assert_eq!(is_torus_invariant(&g, &m), is_cycle(&g, &m.weight(g.edge_count())));
            }
        }
    }

    #[test]
    fn clashing_monomials_are_zero() {
        let a = OrientedMonomial::new([(OrientedEdge::new(0, Direction::Forward), 1)].into()).unwrap();
        let b = OrientedMonomial::new([(OrientedEdge::new(0, Direction::Backward), 2)].into()).unwrap();
        assert_eq!(a.multiply(&b), None);
        assert_eq!(a.multiply(&OrientedMonomial::one()), Some(a.clone()));
    }

    #[test]
    fn truncated_isomorphism() {
        assert!(check_iso_truncated(&catalog::tree3(), 4));
        assert!(check_iso_truncated(&catalog::loop1(), 4));
        assert!(check_iso_truncated(&catalog::b2(), 4));
        assert!(check_iso_truncated(&catalog::b3(), 4));
        assert!(check_iso_truncated(&catalog::fig_ng(), 3));
    }
}
