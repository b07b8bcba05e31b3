//! Moment polytopes `{x : ⟨x, νᵢ⟩ + aᵢ ≥ 0}` with primitive integral
//! interior normals and exact rational offsets.
//!
//! Unbounded polytopes are first-class. The only global requirement is a
//! nonempty interior.

mod affine;
mod feasibility;
mod vertices;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::lattice::{IntVec, Rational, RationalVec};

pub use affine::{equidistant_point, match_dilate_translate, Dilation, Equidistant};
pub(crate) use feasibility::implied_slack;
pub use vertices::{is_compact, recession_rays, vertices, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("facet {index}: normal has length {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("facet {0}: normal is zero")]
    ZeroNormal(usize),
    #[error("facet {0}: normal {1} is not primitive")]
    NonPrimitiveNormal(usize, IntVec),
    #[error("facets {0} and {1} are identical")]
    DuplicateFacet(usize, usize),
    #[error("{facets} facets cannot bound a polytope of dimension {dim}")]
    TooFewFacets { facets: usize, dim: usize },
    #[error("EmptyInterior: the inequalities have no common interior point")]
    EmptyInterior,
    #[error("invalid model parameters: {0}")]
    InvalidModel(String),
}

/// One inequality `⟨x, normal⟩ + offset ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: IntVec,
    pub offset: Rational,
}

impl Facet {
    pub fn new(normal: IntVec, offset: Rational) -> Self {
        Facet { normal, offset }
    }

    /// `ℓ(x) = ⟨x, ν⟩ + a`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal.pair(x) + &self.offset
    }
}

impl Ord for Facet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normal
            .cmp(&other.normal)
            .then_with(|| self.offset.cmp(&other.offset))
    }
}

impl PartialOrd for Facet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨x,{}⟩ + {} ≥ 0", self.normal, self.offset)
    }
}

/// A validated moment polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    facets: Vec<Facet>,
}

impl Polytope {
    /// Validates and builds a polytope, keeping the facet order given.
    pub fn new(dim: usize, facets: Vec<Facet>) -> Result<Self, PolytopeError> {
        validate_shape(dim, &facets)?;
        let mut seen: HashMap<&Facet, usize> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            if let Some(&j) = seen.get(f) {
                return Err(PolytopeError::DuplicateFacet(j, i));
            }
            seen.insert(f, i);
        }
        if facets.len() < dim {
            return Err(PolytopeError::TooFewFacets {
                facets: facets.len(),
                dim,
            });
        }
        if !feasibility::has_interior(dim, &facets) {
            return Err(PolytopeError::EmptyInterior);
        }
        Ok(Polytope { dim, facets })
    }

    /// Builds from small integer literals: `(normal, (num, den))` per facet.
    pub fn from_literals(dim: usize, facets: &[(&[i64], (i64, i64))]) -> Result<Self, PolytopeError> {
        Polytope::new(
            dim,
            facets
                .iter()
                .map(|(n, (p, q))| Facet::new(IntVec::from_i64(n), crate::lattice::rat(*p, *q)))
                .collect(),
        )
    }

    /// The zero-dimensional polytope (a point). Identity for [`product`].
    pub fn point() -> Self {
        Polytope {
            dim: 0,
            facets: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn normals(&self) -> impl Iterator<Item = &IntVec> {
        self.facets.iter().map(|f| &f.normal)
    }

    /// Values `ℓᵢ(x)` for every facet.
    pub fn slacks(&self, x: &[Rational]) -> RationalVec {
        self.facets.iter().map(|f| f.eval(x)).collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|f| f.eval(x).is_positive())
    }

    /// `d` even.
    pub fn is_even(&self) -> bool {
        self.facets.len().is_multiple_of(2)
    }

    /// Normals closed under negation, counted with multiplicity.
    pub fn is_symmetric(&self) -> bool {
        let mut counts: HashMap<&IntVec, i64> = HashMap::new();
        for n in self.normals() {
            *counts.entry(n).or_default() += 1;
        }
        self.normals().all(|n| counts.get(&n.neg()) == counts.get(n))
    }

    /// `Some(λ)` when every offset equals the same `λ > 0`.
    pub fn is_monotone(&self) -> Option<Rational> {
        let first = &self.facets.first()?.offset;
        if !first.is_positive() || self.facets.iter().any(|f| &f.offset != first) {
            return None;
        }
        Some(first.clone())
    }

    /// Facets sorted lexicographically by `(normal, offset)`.
    pub fn canonical_form(&self) -> Polytope {
        let mut facets = self.facets.clone();
        facets.sort();
        Polytope {
            dim: self.dim,
            facets,
        }
    }

    /// Polytope identity: equality of canonical forms.
    pub fn same_as(&self, other: &Polytope) -> bool {
        self.dim == other.dim && self.canonical_form().facets == other.canonical_form().facets
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        vertices(self)
    }

    pub fn is_compact(&self) -> bool {
        is_compact(self)
    }

    /// Every vertex has exactly `n` active facets whose normals form a basis
    /// of `Zⁿ`.
    pub fn is_delzant(&self) -> bool {
        self.vertices().iter().all(|v| {
            v.active.len() == self.dim && {
                let rows: Vec<IntVec> = v.active.iter().map(|&i| self.facets[i].normal.clone()).collect();
                crate::lattice::IntMat::from_rows(self.dim, &rows)
                    .map(|m| m.is_unimodular())
                    .unwrap_or(false)
            }
        })
    }

    /// Removes every facet whose removal leaves the feasible set unchanged.
    /// The result is in canonical order.
    pub fn prune_redundant(&self) -> Result<Polytope, PolytopeError> {
        prune_facets(self.dim, self.facets.clone())
    }

    /// Returns the same polytope with facets transformed by `ν ↦ B ν`
    /// (offsets unchanged). `B` must be square of size `dim`.
    pub(crate) fn map_normals(&self, b: &crate::lattice::IntMat) -> Result<Polytope, PolytopeError> {
        let facets = self
            .facets
            .iter()
            .map(|f| Facet::new(b.apply(&f.normal), f.offset.clone()))
            .collect();
        Polytope::new(self.dim, facets)
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P ⊂ R^{} {{", self.dim)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", facet.normal, facet.offset)?;
        }
        write!(f, "}}")
    }
}

fn validate_shape(dim: usize, facets: &[Facet]) -> Result<(), PolytopeError> {
    for (i, f) in facets.iter().enumerate() {
        if f.normal.len() != dim {
            return Err(PolytopeError::DimensionMismatch {
                index: i,
                got: f.normal.len(),
                expected: dim,
            });
        }
        if f.normal.is_zero() {
            return Err(PolytopeError::ZeroNormal(i));
        }
        if !crate::lattice::is_primitive(&f.normal).unwrap_or(false) {
            return Err(PolytopeError::NonPrimitiveNormal(i, f.normal.clone()));
        }
    }
    Ok(())
}

/// Prunes an arbitrary facet list (duplicates allowed) to an irredundant,
/// canonical polytope.
pub(crate) fn prune_facets(dim: usize, mut facets: Vec<Facet>) -> Result<Polytope, PolytopeError> {
    validate_shape(dim, &facets)?;
    facets.sort();
    facets.dedup();
    if !feasibility::has_interior(dim, &facets) {
        return Err(PolytopeError::EmptyInterior);
    }
    // Sequential removal keeps the feasible set fixed at every step.
    let mut i = 0;
    while i < facets.len() {
        let candidate = facets.remove(i);
        match implied_slack(&facets, &candidate.normal, &candidate.offset) {
            Some(s) if !s.is_negative() => {}
            _ => {
                facets.insert(i, candidate);
                i += 1;
            }
        }
    }
    Polytope::new(dim, facets)
}

/// Cartesian product. Facets of `p1` come first, zero-padded on the right,
/// then those of `p2`, zero-padded on the left.
pub fn product(p1: &Polytope, p2: &Polytope) -> Polytope {
    let left_pad = IntVec::zeros(p1.dim);
    let right_pad = IntVec::zeros(p2.dim);
    let facets = p1
        .facets
        .iter()
        .map(|f| Facet::new(f.normal.concat(&right_pad), f.offset.clone()))
        .chain(
            p2.facets
                .iter()
                .map(|f| Facet::new(left_pad.concat(&f.normal), f.offset.clone())),
        )
        .collect();
    Polytope {
        dim: p1.dim + p2.dim,
        facets,
    }
}

/// Product of any number of factors, left to right.
pub fn product_all<'a>(factors: impl IntoIterator<Item = &'a Polytope>) -> Polytope {
    factors
        .into_iter()
        .fold(Polytope::point(), |acc, p| product(&acc, p))
}
