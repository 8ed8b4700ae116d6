//! Exact convex-hull facets, triangulation and the subdiagram volume of a
//! pointed lattice cone generated by a finite set of lattice points.
//!
//! Desk-scale brute force: facets are found by testing every affinely
//! independent subset of generating points for the supporting-hyperplane
//! property. Fine for dimension ≤ 5 and a dozen points.

use std::collections::BTreeSet;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, rat, Rational};

type Point = Vec<Rational>;

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Facets of `conv(points) + cone(points)` that do not contain the origin's
/// recession directions, i.e. the bounded facets. Each is returned as the set
/// of generating points lying on it.
pub fn bounded_facets(points: &[Vec<i64>]) -> Result<Vec<BTreeSet<usize>>> {
    let d = points.first().map_or(0, Vec::len);
    if linalg::rank_int(points) < d {
        return Err(Error::Degenerate);
    }
    let pts: Vec<Point> = points.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
    let ones = vec![rat(1); d];
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for subset in combinations(pts.len(), d) {
        let rows: Vec<Point> = subset.iter().map(|&i| pts[i].clone()).collect();
        if linalg::rank(&rows) < d {
            // Affinely dependent, or the affine hull passes through 0.
            continue;
        }
        let normal = linalg::solve(&rows, &ones).expect("nonsingular system");
        let values: Vec<Rational> = pts.iter().map(|p| dot(&normal, p)).collect();
        if values.iter().any(|v| *v < rat(1)) {
            continue;
        }
        let on: BTreeSet<usize> = (0..pts.len()).filter(|&i| values[i] == rat(1)).collect();
        if seen.insert(on.clone()) {
            out.push(on);
        }
    }
    Ok(out)
}

/// Triangulates the polytope `conv(pts)` of affine dimension `k` by pulling
/// its first point: cones from it over triangulations of the facets that
/// miss it. Returns simplices as index lists of length `k + 1`.
fn triangulate(all: &[Point], pts: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![pts[0]]];
    }
    let base = &all[pts[0]];
    let diffs: Vec<Point> = pts
        .iter()
        .map(|&i| all[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    // Pick k independent directions spanning the affine hull.
    let mut dirs: Vec<Point> = Vec::new();
    for v in &diffs {
        let mut trial = dirs.clone();
        trial.push(v.clone());
        if linalg::rank(&trial) > dirs.len() {
            dirs = trial;
        }
        if dirs.len() == k {
            break;
        }
    }
    debug_assert_eq!(dirs.len(), k);
    let ambient = base.len();
    let columns: Vec<Vec<Rational>> = (0..ambient)
        .map(|r| dirs.iter().map(|v| v[r].clone()).collect())
        .collect();
    let local: Vec<Point> = diffs
        .iter()
        .map(|v| linalg::solve(&columns, v).expect("point lies in its affine hull"))
        .collect();

    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in combinations(pts.len(), k) {
        // Hyperplane a·y = b through the chosen points: null space of [y | −1].
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| {
                let mut r = local[i].clone();
                r.push(rat(-1));
                r
            })
            .collect();
        let ns = linalg::nullspace(&rows, k + 1);
        if ns.len() != 1 {
            continue;
        }
        let (a, b) = ns[0].split_at(k);
        let side: Vec<Rational> = local.iter().map(|y| dot(a, y) - &b[0]).collect();
        let pos = side.iter().any(|s| s.is_positive());
        let neg = side.iter().any(|s| s.is_negative());
        if pos && neg {
            continue;
        }
        let on: Vec<usize> = (0..pts.len()).filter(|&i| side[i].is_zero()).collect();
        facets.insert(on);
    }
    let mut out = Vec::new();
    for facet in facets {
        if facet.contains(&0) {
            continue;
        }
        let members: Vec<usize> = facet.iter().map(|&i| pts[i]).collect();
        for simplex in triangulate(all, &members, k - 1) {
            let mut s = vec![pts[0]];
            s.extend(simplex);
            out.push(s);
        }
    }
    out
}

/// Normalized lattice volume (unimodular simplex = 1) of the region between
/// the origin and the bounded facets of `conv(points) + cone(points)`.
/// `points` are lattice coordinates of the semigroup generators in a ℤ-basis
/// of the lattice they span, and must have full rank.
pub fn subdiagram_volume(points: &[Vec<i64>]) -> Result<u64> {
    let d = points.first().map_or(0, Vec::len);
    if d == 0 {
        return Ok(1);
    }
    let all: Vec<Point> = points.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
    let mut total = Rational::zero();
    for facet in bounded_facets(points)? {
        let members: Vec<usize> = facet.into_iter().collect();
        for simplex in triangulate(&all, &members, d - 1) {
            let rows: Vec<Point> = simplex.iter().map(|&i| all[i].clone()).collect();
            total += linalg::det_rational(&rows).abs();
        }
    }
    linalg::as_integer(&total)
        .map(|v| v as u64)
        .ok_or(Error::Degenerate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_cones_have_volume_one() {
        assert_eq!(subdiagram_volume(&[vec![1]]).unwrap(), 1);
        assert_eq!(subdiagram_volume(&[vec![1, 0], vec![0, 1]]).unwrap(), 1);
        assert_eq!(subdiagram_volume(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap(), 1);
    }

    #[test]
    fn two_dimensional_examples() {
        // Cone over (1,0),(1,1),(1,2): K₋ is the triangle 0,(1,0),(1,2): area 1 → normalized 2.
        assert_eq!(subdiagram_volume(&[vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap(), 2);
        // Cone spanned by (1,0),(1,2) with Hilbert basis {(1,0),(1,1),(1,2)}.
        // Non-homogeneous: generators (1,0),(0,1),(1,1); (1,1) lies above the segment.
        assert_eq!(subdiagram_volume(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap(), 1);
        // Cone of (0,1),(2,-1) with Hilbert basis (0,1),(1,0),(2,-1): two unit triangles.
        assert_eq!(subdiagram_volume(&[vec![0, 1], vec![1, 0], vec![2, -1]]).unwrap(), 2);
    }

    #[test]
    fn degenerate_input_is_rejected() {
        assert_eq!(subdiagram_volume(&[vec![1, 1], vec![2, 2]]), Err(Error::Degenerate));
    }

    #[test]
    fn square_facet_triangulates() {
        // Cone over a unit square at height 1: normalized volume 2.
        let pts = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]];
        assert_eq!(bounded_facets(&pts).unwrap().len(), 1);
        assert_eq!(subdiagram_volume(&pts).unwrap(), 2);
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
