//! Standard moment polytopes.

use crate::lattice::{IntVec, Rational};
use crate::polytope::{Facet, Polytope, PolytopeError};

fn unit(n: usize, j: usize, sign: i64) -> IntVec {
    let mut e = vec![0i64; n];
    e[j] = sign;
    IntVec::from_i64(&e)
}

/// `CPⁿ`: `xⱼ + λ ≥ 0` and `−Σxⱼ + λ ≥ 0`.
pub fn simplex(n: usize, lambda: &Rational) -> Result<Polytope, PolytopeError> {
    weighted_projective(&vec![1; n + 1], lambda)
}

/// `CP(1, m₁, …, mₙ)`: `xⱼ + λ ≥ 0` and `−Σ mⱼxⱼ + λ ≥ 0`.
///
/// `weights` is the full list `(1, m₁, …, mₙ)`; its leading entry must be 1.
pub fn weighted_projective(weights: &[u64], lambda: &Rational) -> Result<Polytope, PolytopeError> {
    let n = weights.len().saturating_sub(1);
    if weights.first() != Some(&1) || weights.contains(&0) {
        return Err(PolytopeError::InvalidModel(format!(
            "weights {weights:?} must be positive and start with 1"
        )));
    }
    let mut facets: Vec<Facet> = (0..n).map(|j| Facet::new(unit(n, j, 1), lambda.clone())).collect();
    let slanted: Vec<i64> = weights[1..].iter().map(|&m| -(m as i64)).collect();
    facets.push(Facet::new(IntVec::from_i64(&slanted), lambda.clone()));
    Polytope::new(n, facets)
}

/// `CP¹` as the segment `x + a₁ ≥ 0`, `−x + a₂ ≥ 0`.
pub fn cp1(a1: &Rational, a2: &Rational) -> Result<Polytope, PolytopeError> {
    Polytope::new(
        1,
        vec![
            Facet::new(IntVec::from_i64(&[1]), a1.clone()),
            Facet::new(IntVec::from_i64(&[-1]), a2.clone()),
        ],
    )
}

/// Total space of `O(−1) → CP¹`: normals `(1,0)`, `(0,1)`, `(1,1)` in that
/// order.
pub fn o_minus_one(a1: &Rational, a2: &Rational, a3: &Rational) -> Result<Polytope, PolytopeError> {
    Polytope::new(
        2,
        vec![
            Facet::new(IntVec::from_i64(&[1, 0]), a1.clone()),
            Facet::new(IntVec::from_i64(&[0, 1]), a2.clone()),
            Facet::new(IntVec::from_i64(&[1, 1]), a3.clone()),
        ],
    )
}

/// `(CP¹)ⁿ`: `±xⱼ + λ ≥ 0`, ordered `e₁, −e₁, e₂, −e₂, …`.
pub fn cube(n: usize, lambda: &Rational) -> Result<Polytope, PolytopeError> {
    let facets = (0..n)
        .flat_map(|j| [unit(n, j, 1), unit(n, j, -1)])
        .map(|v| Facet::new(v, lambda.clone()))
        .collect();
    Polytope::new(n, facets)
}
