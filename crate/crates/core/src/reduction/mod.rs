//! Symplectic reduction at the level of moment polytopes.
//!
//! A reduction is given by an integral affine slice `y ↦ A·y + x₀` of the
//! ambient space. Facet `⟨x,ν⟩ + a ≥ 0` pulls back to
//! `⟨y, Aᵀν⟩ + a + ⟨x₀,ν⟩ ≥ 0`. The subtorus being quotiented is the
//! integral kernel of `Aᵀ`, and the level is `x₀` paired with it.

pub mod models;
mod weights;

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lattice::{integral_kernel, is_primitive, is_surjective_onto_lattice, solve_rational, IntMat, IntVec, Rational, RationalVec};
use crate::polytope::{implied_slack, prune_facets, Facet, Polytope, PolytopeError};

pub use weights::{monotone_weights, vertex_cone_coords, ConeCoords, WeightVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("slice shape: {0}")]
    Shape(String),
    #[error("slice linear part has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("slice transpose is not onto the integer lattice")]
    NotLatticeSurjective,
    #[error("SliceOutsidePolytope: facet {facet} is constant {value} ≤ 0 along the slice")]
    SliceOutsidePolytope { facet: usize, value: Rational },
    #[error("NonPrimitiveImage: facet {facet} maps to the non-primitive normal {image}")]
    NonPrimitiveImage { facet: usize, image: IntVec },
    #[error("NotDelzant: the polytope is not Delzant")]
    NotDelzant,
    #[error("NotCompact: the polytope is unbounded")]
    NotCompact,
    #[error("no vertex cone contains {0} with nonnegative coordinates")]
    NoAdmissibleVertex(IntVec),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// The section `y ↦ A·y + x₀` from `Rⁿ` into the ambient `R^Ñ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineReduction {
    a: IntMat,
    x0: RationalVec,
}

impl AffineReduction {
    /// Checks that `A` has independent columns and that `Aᵀ` maps `Z^Ñ` onto
    /// `Zⁿ`.
    pub fn new(a: IntMat, x0: RationalVec) -> Result<Self, ReductionError> {
        if x0.len() != a.rows() {
            return Err(ReductionError::Shape(format!(
                "A has {} rows but x0 has {} entries",
                a.rows(),
                x0.len()
            )));
        }
        if a.cols() > a.rows() {
            return Err(ReductionError::Shape(format!(
                "A is {}×{}; a slice cannot have more columns than rows",
                a.rows(),
                a.cols()
            )));
        }
        let rank = a.rank();
        if rank != a.cols() {
            return Err(ReductionError::RankDeficient {
                rank,
                expected: a.cols(),
            });
        }
        if !is_surjective_onto_lattice(&a) {
            return Err(ReductionError::NotLatticeSurjective);
        }
        Ok(AffineReduction { a, x0 })
    }

    /// Slice through the origin.
    pub fn linear(a: IntMat) -> Result<Self, ReductionError> {
        let rows = a.rows();
        AffineReduction::new(a, vec![Rational::zero(); rows])
    }

    pub fn identity(n: usize) -> Self {
        AffineReduction {
            a: IntMat::identity(n),
            x0: vec![Rational::zero(); n],
        }
    }

    pub fn linear_part(&self) -> &IntMat {
        &self.a
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.x0
    }

    /// `Ñ`.
    pub fn ambient_dim(&self) -> usize {
        self.a.rows()
    }

    /// `n`.
    pub fn reduced_dim(&self) -> usize {
        self.a.cols()
    }

    /// Dimension of the subtorus, `Ñ − n`.
    pub fn codim(&self) -> usize {
        self.a.rows() - self.a.cols()
    }

    /// `A·y + x₀`.
    pub fn map_point(&self, y: &[Rational]) -> RationalVec {
        self.a
            .apply_rational(y)
            .into_iter()
            .zip(&self.x0)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// The `y` with `A·y + x₀ = x`, if `x` lies on the slice.
    pub fn preimage(&self, x: &[Rational]) -> Option<RationalVec> {
        if x.len() != self.ambient_dim() {
            return None;
        }
        let rhs: Vec<Rational> = x.iter().zip(&self.x0).map(|(a, b)| a - b).collect();
        solve_rational(&self.a.to_rational_rows(), &rhs, self.reduced_dim()).unique()
    }

    /// Image of an ambient facet: `(Aᵀν, a + ⟨x₀,ν⟩)`.
    pub fn pull_back(&self, f: &Facet) -> (IntVec, Rational) {
        let normal = self.a.transpose().apply(&f.normal);
        let offset = &f.offset + f.normal.pair(&self.x0);
        (normal, offset)
    }

    /// Integral basis of the Lie algebra of the subtorus, `ker Aᵀ ∩ Z^Ñ`.
    pub fn subtorus(&self) -> Vec<IntVec> {
        integral_kernel(&self.a.transpose())
    }

    /// The level `⟨x₀, k⟩` for each subtorus generator `k`.
    pub fn levels(&self) -> RationalVec {
        self.subtorus().iter().map(|k| k.pair(&self.x0)).collect()
    }

    /// Reduction in stages: first `self`, then `next` on the result.
    ///
    /// The composite is `z ↦ A₁(A₂z + x₀₂) + x₀₁`.
    pub fn then(&self, next: &AffineReduction) -> Result<AffineReduction, ReductionError> {
        if next.ambient_dim() != self.reduced_dim() {
            return Err(ReductionError::Shape(format!(
                "cannot compose: first stage reduces to dimension {}, second expects {}",
                self.reduced_dim(),
                next.ambient_dim()
            )));
        }
        AffineReduction::new(self.a.mul(&next.a), self.map_point(&next.x0))
    }
}

impl fmt::Display for AffineReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .row_vectors()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        let x0: Vec<String> = self.x0.iter().map(ToString::to_string).collect();
        write!(f, "{}@{}", rows.join(";"), x0.join(","))
    }
}

/// Why a level is not a regular value of the moment map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// Several ambient facets pull back to the same reduced facet.
    SharedFacet { facets: Vec<usize> },
    /// A dropped ambient facet still touches the reduced polytope.
    TouchingFacet { facet: usize },
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::SharedFacet { facets } => {
                let list: Vec<String> = facets.iter().map(ToString::to_string).collect();
                write!(f, "ambient facets {} pull back to one facet", list.join(", "))
            }
            Degeneracy::TouchingFacet { facet } => {
                write!(f, "ambient facet {facet} is redundant but touches the reduced polytope")
            }
        }
    }
}

/// Everything [`reduce_detailed`] learns about a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    /// Pruned, canonical reduced polytope.
    pub polytope: Polytope,
    /// Pull-back of each ambient facet, `None` where the image is zero.
    pub images: Vec<Option<Facet>>,
    pub degeneracies: Vec<Degeneracy>,
}

impl Reduced {
    /// The level is regular: every reduced facet comes from exactly one
    /// ambient facet and no dropped facet touches the reduced polytope.
    pub fn is_regular(&self) -> bool {
        self.degeneracies.is_empty()
    }
}

pub fn reduce(ambient: &Polytope, slice: &AffineReduction) -> Result<Polytope, ReductionError> {
    reduce_detailed(ambient, slice).map(|r| r.polytope)
}

pub fn reduce_detailed(ambient: &Polytope, slice: &AffineReduction) -> Result<Reduced, ReductionError> {
    if ambient.dim() != slice.ambient_dim() {
        return Err(ReductionError::Shape(format!(
            "ambient polytope has dimension {}, slice expects {}",
            ambient.dim(),
            slice.ambient_dim()
        )));
    }
    let mut images = Vec::with_capacity(ambient.facet_count());
    for (i, f) in ambient.facets().iter().enumerate() {
        let (normal, offset) = slice.pull_back(f);
        if normal.is_zero() {
            if !offset.is_positive() {
                return Err(ReductionError::SliceOutsidePolytope { facet: i, value: offset });
            }
            images.push(None);
            continue;
        }
        if !is_primitive(&normal).unwrap_or(false) {
            return Err(ReductionError::NonPrimitiveImage { facet: i, image: normal });
        }
        images.push(Some(Facet::new(normal, offset)));
    }
    let polytope = prune_facets(slice.reduced_dim(), images.iter().flatten().cloned().collect())?;

    let mut degeneracies = Vec::new();
    for kept in polytope.facets() {
        let sources: Vec<usize> = images
            .iter()
            .enumerate()
            .filter(|(_, img)| img.as_ref() == Some(kept))
            .map(|(i, _)| i)
            .collect();
        if sources.len() > 1 {
            degeneracies.push(Degeneracy::SharedFacet { facets: sources });
        }
    }
    for (i, img) in images.iter().enumerate() {
        let Some(img) = img else { continue };
        if polytope.facets().contains(img) {
            continue;
        }
        let touches = implied_slack(polytope.facets(), &img.normal, &img.offset).is_none_or(|s| !s.is_positive());
        if touches {
            degeneracies.push(Degeneracy::TouchingFacet { facet: i });
        }
    }
    Ok(Reduced {
        polytope,
        images,
        degeneracies,
    })
}
