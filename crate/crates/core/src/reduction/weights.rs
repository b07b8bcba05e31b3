use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::ReductionError;
use crate::lattice::{solve_rational, IntVec, RationalVec};
use crate::polytope::{Polytope, Vertex};

/// Coordinates of a vector in the cone of a vertex's active normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCoords {
    pub vertex: Vertex,
    /// One coefficient per entry of `vertex.active`.
    pub coeffs: Vec<BigInt>,
}

/// `ν_k + Σ_{j≠k} mⱼνⱼ = 0`, stored with `m_k = 1` in place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    /// One weight per facet, in the polytope's facet order.
    pub m: Vec<u64>,
    pub pivot: usize,
}

impl WeightVector {
    /// The weights with the pivot removed, in facet order.
    pub fn others(&self) -> Vec<(usize, u64)> {
        self.m
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != self.pivot)
            .map(|(j, &m)| (j, m))
            .collect()
    }

    /// `Σ mⱼνⱼ` over the facets of `p`; zero for a valid weight vector.
    pub fn weighted_sum(&self, p: &Polytope) -> IntVec {
        p.normals()
            .zip(&self.m)
            .fold(IntVec::zeros(p.dim()), |acc, (v, &m)| acc.add(&v.scale(&BigInt::from(m))))
    }
}

/// First vertex, in the order of [`Polytope::vertices`], whose normal cone
/// contains `target` with nonnegative coordinates.
///
/// At a Delzant vertex the active normals form a lattice basis, so the
/// coordinates are integers.
pub fn vertex_cone_coords(p: &Polytope, target: &IntVec) -> Result<Option<ConeCoords>, ReductionError> {
    if !p.is_delzant() {
        return Err(ReductionError::NotDelzant);
    }
    let n = p.dim();
    for vertex in p.vertices() {
        let normals: Vec<RationalVec> = vertex.active.iter().map(|&i| p.facets()[i].normal.to_rational()).collect();
        // Solve Σ cᵢ νᵢ = target: the unknowns are the cᵢ, one equation per coordinate.
        let rows: Vec<RationalVec> = (0..n).map(|k| normals.iter().map(|v| v[k].clone()).collect()).collect();
        let Some(c) = solve_rational(&rows, &target.to_rational(), n).unique() else {
            continue;
        };
        if c.iter().any(Signed::is_negative) {
            continue;
        }
        debug_assert!(c.iter().all(|x| x.is_integer()));
        let coeffs = c.into_iter().map(|x| x.to_integer()).collect();
        return Ok(Some(ConeCoords { vertex, coeffs }));
    }
    Ok(None)
}

/// Positive integer weights with `ν_k + Σ_{j≠k} mⱼνⱼ = 0`.
///
/// Writes `−Σνⱼ` in the first admissible vertex cone (see
/// [`vertex_cone_coords`]) with coefficients `cⱼ ≥ 0`, then sets
/// `mⱼ = 1 + cⱼ`. The pivot is the last facet whose weight is 1, so when
/// the normals already sum to zero the pivot is the last facet.
pub fn monotone_weights(p: &Polytope) -> Result<WeightVector, ReductionError> {
    if !p.is_compact() {
        return Err(ReductionError::NotCompact);
    }
    let target = p.normals().fold(IntVec::zeros(p.dim()), |acc, v| acc.add(v)).neg();
    let cone = vertex_cone_coords(p, &target)?.ok_or_else(|| ReductionError::NoAdmissibleVertex(target.clone()))?;
    let mut m = vec![1u64; p.facet_count()];
    for (&i, c) in cone.vertex.active.iter().zip(&cone.coeffs) {
        m[i] += c.to_u64().expect("cone coefficient fits in u64");
    }
    // Some weight among the non-vertex facets is 1 whenever d > n; at a
    // simplex every weight is 1.
    let pivot = m.iter().rposition(|&w| w == 1).ok_or(ReductionError::NoAdmissibleVertex(target))?;
    Ok(WeightVector { m, pivot })
}
