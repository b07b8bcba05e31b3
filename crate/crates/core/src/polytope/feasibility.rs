//! Exact feasibility tests by enumeration of basic solutions.
//!
//! Both tests reduce to minimizing a linear cost over
//! `{μ ≥ 0 : Σ μⱼ cⱼ = b}`. When that minimum is finite it is attained at a
//! basic solution, so enumerating column bases of size `rank` is exact.
//! This is fine at the sizes the crate targets (d ≲ 12, n ≲ 5).

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::Facet;
use crate::lattice::{rank_rational, solve_rational, IntVec, Rational, RationalVec, Solution};

/// Minimum of `Σ μⱼ costⱼ` over `μ ≥ 0` with `Σ μⱼ columnⱼ = rhs`, or `None`
/// when the system has no nonnegative solution.
///
/// Callers must know the cost is bounded below on the feasible set.
pub(crate) fn min_basic_cost(columns: &[RationalVec], rhs: &[Rational], cost: &[Rational]) -> Option<Rational> {
    let m = rhs.len();
    let rows: Vec<RationalVec> = (0..m)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let rank = if columns.is_empty() { 0 } else { rank_rational(&rows) };
    if rank == 0 {
        return rhs.iter().all(Zero::is_zero).then(Rational::zero);
    }
    let mut best: Option<Rational> = None;
    for basis in (0..columns.len()).combinations(rank) {
        let sub: Vec<RationalVec> = (0..m)
            .map(|i| basis.iter().map(|&j| columns[j][i].clone()).collect())
            .collect();
        let Solution::Unique(mu) = solve_rational(&sub, rhs, rank) else {
            continue;
        };
        if mu.iter().any(Signed::is_negative) {
            continue;
        }
        let value: Rational = basis
            .iter()
            .zip(&mu)
            .map(|(&j, x)| x * &cost[j])
            .fold(Rational::zero(), |a, b| a + b);
        if best.as_ref().is_none_or(|b| &value < b) {
            best = Some(value);
        }
    }
    best
}

/// `min { ℓ(x) : x ∈ Q }` where `ℓ = ⟨·, normal⟩ + offset` and `Q` is cut out
/// by `facets`, provided `ℓ` is bounded below on `Q` (`None` otherwise).
///
/// `Q` must be nonempty. Uses the affine Farkas lemma:
/// `min ℓ = offset − min { Σ μⱼ aⱼ : μ ≥ 0, Σ μⱼ νⱼ = normal }`.
pub(crate) fn implied_slack(facets: &[Facet], normal: &IntVec, offset: &Rational) -> Option<Rational> {
    let columns: Vec<RationalVec> = facets.iter().map(|f| f.normal.to_rational()).collect();
    let cost: Vec<Rational> = facets.iter().map(|f| f.offset.clone()).collect();
    let best = min_basic_cost(&columns, &normal.to_rational(), &cost)?;
    Some(offset - best)
}

/// True iff some `x` has `ℓᵢ(x) > 0` for every facet.
///
/// By Motzkin's transposition theorem the strict system is infeasible iff
/// some `μ ≥ 0` with `Σ μᵢ = 1` and `Σ μᵢ νᵢ = 0` has `Σ μᵢ aᵢ ≤ 0`.
pub(crate) fn has_interior(dim: usize, facets: &[Facet]) -> bool {
    if facets.is_empty() {
        return true;
    }
    let columns: Vec<RationalVec> = facets
        .iter()
        .map(|f| {
            let mut c = f.normal.to_rational();
            c.push(Rational::one());
            c
        })
        .collect();
    let mut rhs = vec![Rational::zero(); dim];
    rhs.push(Rational::one());
    let cost: Vec<Rational> = facets.iter().map(|f| f.offset.clone()).collect();
    match min_basic_cost(&columns, &rhs, &cost) {
        None => true,
        Some(v) => v.is_positive(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};

    fn f(n: &[i64], a: Rational) -> Facet {
        Facet::new(IntVec::from_i64(n), a)
    }

    #[test]
    fn interior_detection() {
        assert!(has_interior(1, &[f(&[1], int(1)), f(&[-1], int(1))]));
        // x ≥ 1 and x ≤ 1: a point, no interior.
        assert!(!has_interior(1, &[f(&[1], int(-1)), f(&[-1], int(1))]));
        // x ≥ 2 and x ≤ 1: empty.
        assert!(!has_interior(1, &[f(&[1], int(-2)), f(&[-1], int(1))]));
        // half-planes only: unbounded, fine.
        assert!(has_interior(2, &[f(&[1, 0], int(0)), f(&[0, 1], int(0))]));
    }

    #[test]
    fn slack_of_parallel_facet() {
        let facets = [f(&[1], int(1)), f(&[-1], int(1))];
        // x + 2 ≥ 0 on [-1, 1] has minimum 1.
        assert_eq!(implied_slack(&facets, &IntVec::from_i64(&[1]), &int(2)), Some(int(1)));
        // x + 1/2 has minimum -1/2.
        assert_eq!(implied_slack(&facets, &IntVec::from_i64(&[1]), &rat(1, 2)), Some(rat(-1, 2)));
    }

    #[test]
    fn slack_unbounded_direction() {
        // On the half-line x ≥ -1, -x is unbounded below.
        let facets = [f(&[1], int(1))];
        assert_eq!(implied_slack(&facets, &IntVec::from_i64(&[-1]), &int(5)), None);
    }
}
