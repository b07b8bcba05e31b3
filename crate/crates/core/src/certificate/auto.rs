use num_traits::Zero;

use super::{BaseFact, BaseKind, CertNode, Certificate, CertificateError, ClaimKind};
use crate::lattice::{IntMat, IntVec, Rational};
use crate::polytope::Polytope;
use crate::reduction::{models, monotone_weights, AffineReduction, ReductionError};

/// Certificate for the centered fiber of a compact monotone Delzant
/// polytope: a centered reduction of `CP(1, m₁, …, m_{d−1})`.
///
/// With `ν_k + Σ_{j≠k} mⱼνⱼ = 0`, the slice `eⱼ ↦ νⱼ` sends the slanted
/// facet `−Σ mⱼeⱼ` of the weighted projective space to `ν_k`. Non-pivot
/// facets are listed by ascending weight (stable in canonical facet order).
pub fn auto_certify_monotone(p: &Polytope) -> Result<Certificate, CertificateError> {
    let lambda = p.is_monotone().ok_or(CertificateError::NotMonotone)?;
    if !p.is_compact() {
        return Err(ReductionError::NotCompact.into());
    }
    let canonical = p.canonical_form();
    let w = monotone_weights(&canonical)?;
    let mut others = w.others();
    others.sort_by_key(|&(_, m)| m);

    let mut weights = vec![1u64];
    weights.extend(others.iter().map(|&(_, m)| m));
    let rows: Vec<IntVec> = others.iter().map(|&(j, _)| canonical.facets()[j].normal.clone()).collect();
    let a = IntMat::from_rows(p.dim(), &rows).expect("normals have the polytope's dimension");
    let slice = AffineReduction::linear(a)?;
    let instance = models::weighted_projective(&weights, &lambda)?;
    Ok(Certificate {
        kind: ClaimKind::TT,
        target: Some(canonical),
        marked_point: Some(vec![Rational::zero(); p.dim()]),
        tree: CertNode::Reduce {
            slice,
            child: Box::new(CertNode::Leaf(BaseFact {
                kind: BaseKind::WeightedProjectiveOneM(weights),
                instance,
                basis_change: None,
            })),
        },
    })
}
