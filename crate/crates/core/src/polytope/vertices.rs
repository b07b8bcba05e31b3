use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::Polytope;
use crate::lattice::{rank_rational, solve_rational, Rational, RationalVec, Solution};

/// A 0-dimensional face together with every facet that contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: RationalVec,
    /// Facet indices with `ℓᵢ = 0`, ascending.
    pub active: Vec<usize>,
}

/// All vertices, ordered by their active facet lists.
///
/// Enumerates `n`-subsets of facets with invertible normal matrix and keeps
/// the feasible intersection points.
pub fn vertices(p: &Polytope) -> Vec<Vertex> {
    let n = p.dim();
    let mut found: BTreeMap<Vec<usize>, RationalVec> = BTreeMap::new();
    for subset in (0..p.facet_count()).combinations(n) {
        let rows: Vec<RationalVec> = subset.iter().map(|&i| p.facets()[i].normal.to_rational()).collect();
        let rhs: Vec<Rational> = subset.iter().map(|&i| -&p.facets()[i].offset).collect();
        let Solution::Unique(x) = solve_rational(&rows, &rhs, n) else {
            continue;
        };
        let slacks = p.slacks(&x);
        if slacks.iter().any(Signed::is_negative) {
            continue;
        }
        let active: Vec<usize> = slacks
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(i, _)| i)
            .collect();
        found.entry(active).or_insert(x);
    }
    found
        .into_iter()
        .map(|(active, point)| Vertex { point, active })
        .collect()
}

/// Extreme rays of the recession cone `{r : ⟨νᵢ, r⟩ ≥ 0}`, plus a
/// lineality marker: if the normals do not span, the cone contains a line
/// and a spanning direction of it is returned (both signs).
pub fn recession_rays(p: &Polytope) -> Vec<RationalVec> {
    let n = p.dim();
    if n == 0 {
        return Vec::new();
    }
    let normals: Vec<RationalVec> = p.normals().map(|v| v.to_rational()).collect();
    let mut rays: Vec<RationalVec> = Vec::new();
    let rank = rank_rational(&normals);
    if rank < n {
        // Some direction is orthogonal to every normal.
        if let Some(r) = null_direction(&normals, n) {
            rays.push(r.iter().map(|x| -x).collect());
            rays.push(r);
        }
        return rays;
    }
    for subset in (0..normals.len()).combinations(n - 1) {
        let rows: Vec<RationalVec> = subset.iter().map(|&i| normals[i].clone()).collect();
        if rank_rational(&rows) != n - 1 {
            continue;
        }
        let Some(r) = null_direction(&rows, n) else {
            continue;
        };
        for cand in [r.clone(), r.iter().map(|x| -x).collect::<RationalVec>()] {
            let ok = normals.iter().all(|nu| !dot(nu, &cand).is_negative());
            if ok && !rays.contains(&cand) {
                rays.push(cand);
            }
        }
    }
    rays
}

/// Bounded iff the recession cone is `{0}`.
pub fn is_compact(p: &Polytope) -> bool {
    p.dim() == 0 || recession_rays(p).is_empty()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::zero(), |s, t| s + t)
}

/// A nonzero vector orthogonal to all `rows`, if one exists.
fn null_direction(rows: &[RationalVec], n: usize) -> Option<RationalVec> {
    // Try unit right-hand sides on a pinned coordinate: solve rows·r = 0 with
    // r_k = 1 for the first k that admits a solution.
    for k in 0..n {
        let mut a: Vec<RationalVec> = rows.to_vec();
        let mut b: Vec<Rational> = vec![Rational::zero(); rows.len()];
        let mut pin = vec![Rational::zero(); n];
        pin[k] = Rational::from_integer(1.into());
        a.push(pin);
        b.push(Rational::from_integer(1.into()));
        match solve_rational(&a, &b, n) {
            Solution::Unique(r) | Solution::Underdetermined(r) => return Some(r),
            Solution::Inconsistent => {}
        }
    }
    None
}
