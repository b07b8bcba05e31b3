//! Non-displaceability certificates.
//!
//! A certificate is a tree. Leaves are base facts: known non-displaceable
//! fibers of standard toric manifolds, taken as axioms and carrying a
//! citation. Internal nodes are products and centered reductions. Verifying
//! the tree recomputes every polytope, marked fiber and intersection bound.

mod auto;

use std::fmt;

use thiserror::Error;

use crate::floer::{hf_detailed, FloerError};
use crate::lattice::{IntMat, Rational, RationalVec};
use crate::polytope::{equidistant_point, match_dilate_translate, product, Polytope, PolytopeError};
use crate::reduction::{models, reduce_detailed, AffineReduction, ReductionError};

pub use auto::auto_certify_monotone;

/// Recorded whenever a product node is used.
pub const PRODUCT_HYPOTHESIS: &str =
    "product closure: if T₁ ⊂ M₁ and T₂ ⊂ M₂ satisfy a bound, T₁ × T₂ ⊂ M₁ × M₂ satisfies the product bound";

/// What the bound counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimKind {
    /// `♯(ψ(T) ⋔ T)` for the marked torus fiber `T`.
    TT,
    /// `♯(ψ(T) ⋔ R)` against the real part `R`.
    TR,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::TT => "TT",
            ClaimKind::TR => "TR",
        })
    }
}

/// The standard manifolds whose centered fibers are known to be
/// non-displaceable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// `CPⁿ`, `n` taken from the instance.
    CliffordTorus,
    /// `CP(1, m₁, …, mₙ)`; the weights include the leading 1.
    WeightedProjectiveOneM(Vec<u64>),
    Cp1,
    OMinusOne,
}

impl BaseKind {
    pub fn name(&self) -> &'static str {
        match self {
            BaseKind::CliffordTorus => "clifford",
            BaseKind::WeightedProjectiveOneM(_) => "weighted_projective",
            BaseKind::Cp1 => "cp1",
            BaseKind::OMinusOne => "o_minus_one",
        }
    }

    /// The unit model the instance must be a dilate and translate of.
    pub fn model(&self, n: usize) -> Result<Polytope, CertificateError> {
        let one = Rational::from_integer(1.into());
        Ok(match self {
            BaseKind::CliffordTorus => models::simplex(n, &one)?,
            BaseKind::WeightedProjectiveOneM(w) => {
                if w.first() != Some(&1) {
                    return Err(CertificateError::UnsupportedWeights(w.clone()));
                }
                models::weighted_projective(w, &one)?
            }
            BaseKind::Cp1 => models::cp1(&one, &one)?,
            BaseKind::OMinusOne => models::o_minus_one(&one, &one, &one)?,
        })
    }

    /// The axiomatized bound, or `None` when no such fact is available.
    pub fn bound(&self, n: usize, kind: ClaimKind) -> Option<u64> {
        match (self, kind) {
            (BaseKind::CliffordTorus | BaseKind::WeightedProjectiveOneM(_), ClaimKind::TT) => Some(1 << n),
            (BaseKind::CliffordTorus, ClaimKind::TR) => (n % 2 == 1).then(|| 1 << n.div_ceil(2)),
            (BaseKind::Cp1, _) => Some(2),
            (BaseKind::OMinusOne, ClaimKind::TT) => Some(4),
            (BaseKind::WeightedProjectiveOneM(_) | BaseKind::OMinusOne, ClaimKind::TR) => None,
        }
    }

    pub fn citation(&self, kind: ClaimKind) -> String {
        match (self, kind) {
            (BaseKind::CliffordTorus, ClaimKind::TT) => {
                "Clifford torus T₀ ⊂ CPⁿ: ♯(ψ(T₀) ⋔ T₀) ≥ 2ⁿ for every Hamiltonian ψ".into()
            }
            (BaseKind::CliffordTorus, ClaimKind::TR) => {
                "Clifford torus T₀ ⊂ CP^{2k−1}: ♯(ψ(T₀) ⋔ RP^{2k−1}) ≥ 2ᵏ for every Hamiltonian ψ".into()
            }
            (BaseKind::WeightedProjectiveOneM(w), _) => format!(
                "centered fiber T₀ of CP{w:?}: ♯(ψ(T₀) ⋔ T₀) ≥ 2ⁿ, ψ(T₀) ∩ T₀ ≠ ∅ for every Hamiltonian ψ"
            ),
            (BaseKind::Cp1, _) => "equator of CP¹: meets its Hamiltonian images in at least 2 points".into(),
            (BaseKind::OMinusOne, _) => {
                "centered fiber of O(−1) → CP¹ (equidistant from all three facets) is non-displaceable, with 4 transverse intersections".into()
            }
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::WeightedProjectiveOneM(w) => {
                let w: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(f, "CP({})", w.join(","))
            }
            BaseKind::CliffordTorus => f.write_str("CPⁿ"),
            BaseKind::Cp1 => f.write_str("CP¹"),
            BaseKind::OMinusOne => f.write_str("O(−1)"),
        }
    }
}

/// A leaf: `instance` is the given base manifold, in possibly dilated,
/// translated and (through `basis_change`) lattice-transformed coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseFact {
    pub kind: BaseKind,
    pub instance: Polytope,
    /// Unimodular `B`; the model is matched against the normals `B·νᵢ`.
    pub basis_change: Option<IntMat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertNode {
    Leaf(BaseFact),
    Product(Vec<CertNode>),
    Reduce { slice: AffineReduction, child: Box<CertNode> },
}

/// A tree plus the claim it is meant to establish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: ClaimKind,
    /// Expected polytope, compared up to facet order.
    pub target: Option<Polytope>,
    /// Expected marked point.
    pub marked_point: Option<RationalVec>,
    pub tree: CertNode,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("ModelMismatch: {kind} leaf is not a dilate and translate of its model")]
    ModelMismatch { kind: String },
    #[error("MarkedPointMismatch: {0}")]
    MarkedPointMismatch(String),
    #[error("ReducedPolytopeMismatch: {0}")]
    ReducedPolytopeMismatch(String),
    #[error("BoundNotIntegral: {bound} is not divisible by 2^{codim}")]
    BoundNotIntegral { bound: u64, codim: usize },
    #[error("UnsupportedClaim: no {kind} base fact for {base} in dimension {n}")]
    UnsupportedClaim { base: String, kind: ClaimKind, n: usize },
    #[error("UnsupportedWeights: weighted projective facts need weights (1, m₁, …, mₙ), got {0:?}")]
    UnsupportedWeights(Vec<u64>),
    #[error("basis change must be a unimodular {0}×{0} matrix")]
    BadBasisChange(usize),
    #[error("empty product node")]
    EmptyProduct,
    #[error("NotMonotone: all facet offsets must agree and be positive")]
    NotMonotone,
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Floer(#[from] FloerError),
}

/// What a verified certificate establishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedClaim {
    /// Canonical form of the certified polytope.
    pub polytope: Polytope,
    pub marked_point: RationalVec,
    pub kind: ClaimKind,
    pub bound: u64,
    /// One citation per leaf, in tree order.
    pub citations: Vec<String>,
    /// Unproved hypotheses the claim depends on, without repeats.
    pub hypotheses: Vec<String>,
}

impl fmt::Display for VerifiedClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pt: Vec<String> = self.marked_point.iter().map(ToString::to_string).collect();
        writeln!(f, "polytope: {}", self.polytope)?;
        writeln!(f, "marked point: ({})", pt.join(", "))?;
        let what = match self.kind {
            ClaimKind::TT => "♯(ψ(T) ⋔ T)",
            ClaimKind::TR => "♯(ψ(T) ⋔ R)",
        };
        writeln!(f, "claim: {} {what} ≥ {}", self.kind, self.bound)?;
        for c in &self.citations {
            writeln!(f, "base fact: {c}")?;
        }
        for h in &self.hypotheses {
            writeln!(f, "hypothesis: {h}")?;
        }
        Ok(())
    }
}

struct NodeClaim {
    polytope: Polytope,
    marked_point: RationalVec,
    bound: u64,
    citations: Vec<String>,
    hypotheses: Vec<String>,
}

pub fn verify(cert: &Certificate) -> Result<VerifiedClaim, CertificateError> {
    let claim = verify_node(&cert.tree, cert.kind)?;
    if let Some(target) = &cert.target {
        if !target.same_as(&claim.polytope) {
            return Err(CertificateError::ReducedPolytopeMismatch(format!(
                "computed {} but the certificate declares {}",
                claim.polytope.canonical_form(),
                target.canonical_form()
            )));
        }
    }
    if let Some(expected) = &cert.marked_point {
        if expected != &claim.marked_point {
            return Err(CertificateError::MarkedPointMismatch(format!(
                "computed ({}) but the certificate declares ({})",
                join(&claim.marked_point),
                join(expected)
            )));
        }
    }
    Ok(VerifiedClaim {
        polytope: claim.polytope.canonical_form(),
        marked_point: claim.marked_point,
        kind: cert.kind,
        bound: claim.bound,
        citations: claim.citations,
        hypotheses: claim.hypotheses,
    })
}

fn join(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn verify_node(node: &CertNode, kind: ClaimKind) -> Result<NodeClaim, CertificateError> {
    match node {
        CertNode::Leaf(fact) => verify_leaf(fact, kind),
        CertNode::Product(children) => {
            if children.is_empty() {
                return Err(CertificateError::EmptyProduct);
            }
            let mut acc = NodeClaim {
                polytope: Polytope::point(),
                marked_point: Vec::new(),
                bound: 1,
                citations: Vec::new(),
                hypotheses: vec![PRODUCT_HYPOTHESIS.to_string()],
            };
            for child in children {
                let c = verify_node(child, kind)?;
                acc.polytope = product(&acc.polytope, &c.polytope);
                acc.marked_point.extend(c.marked_point);
                acc.bound *= c.bound;
                acc.citations.extend(c.citations);
                for h in c.hypotheses {
                    if !acc.hypotheses.contains(&h) {
                        acc.hypotheses.push(h);
                    }
                }
            }
            Ok(acc)
        }
        CertNode::Reduce { slice, child } => {
            let c = verify_node(child, kind)?;
            let reduced = reduce_detailed(&c.polytope, slice)?;
            if let Some(d) = reduced.degeneracies.first() {
                return Err(CertificateError::ReducedPolytopeMismatch(format!(
                    "degenerate level, the quotient is singular: {d}"
                )));
            }
            let y = slice.preimage(&c.marked_point).ok_or_else(|| {
                CertificateError::MarkedPointMismatch(format!(
                    "slice {slice} does not pass through the marked point ({})",
                    join(&c.marked_point)
                ))
            })?;
            if !reduced.polytope.contains_in_interior(&y) {
                return Err(CertificateError::MarkedPointMismatch(format!(
                    "marked point ({}) is not interior to the reduced polytope",
                    join(&y)
                )));
            }
            let codim = slice.codim();
            let divisor = 1u64 << codim;
            if c.bound % divisor != 0 {
                return Err(CertificateError::BoundNotIntegral { bound: c.bound, codim });
            }
            Ok(NodeClaim {
                polytope: reduced.polytope,
                marked_point: y,
                bound: c.bound / divisor,
                citations: c.citations,
                hypotheses: c.hypotheses,
            })
        }
    }
}

fn verify_leaf(fact: &BaseFact, kind: ClaimKind) -> Result<NodeClaim, CertificateError> {
    let n = fact.instance.dim();
    let bound = fact.kind.bound(n, kind).ok_or_else(|| CertificateError::UnsupportedClaim {
        base: fact.kind.to_string(),
        kind,
        n,
    })?;
    let model = fact.kind.model(n)?;
    let mismatch = || CertificateError::ModelMismatch {
        kind: fact.kind.to_string(),
    };
    if model.dim() != n {
        return Err(mismatch());
    }
    let matched = match &fact.basis_change {
        Some(b) => {
            if b.rows() != n || b.cols() != n || !b.is_unimodular() {
                return Err(CertificateError::BadBasisChange(n));
            }
            match_dilate_translate(&fact.instance.map_normals(b)?, &model)
        }
        None => match_dilate_translate(&fact.instance, &model),
    };
    matched.ok_or_else(mismatch)?;
    let center = equidistant_point(&fact.instance).ok_or_else(|| {
        CertificateError::MarkedPointMismatch(format!("{} instance has no equidistant point", fact.kind))
    })?;
    Ok(NodeClaim {
        polytope: fact.instance.clone(),
        marked_point: center.point,
        bound,
        citations: vec![fact.kind.citation(kind)],
        hypotheses: Vec::new(),
    })
}

/// `HF(P)` read as a lower bound for `♯(ψ(R_P) ⋔ T_P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrLowerBound {
    pub bound: u64,
    /// The geometric hypothesis the number depends on.
    pub caveat: &'static str,
}

pub const TR_CAVEAT: &str = "combinatorial number only: reading it as ♯(ψ(R_P) ⋔ T_P) ≥ HF(P) needs HF(R_P, T_P; Z₂) to be well defined (minimal Maslov number of R_P at least 2)";

pub fn hf_lower_bound_tr(p: &Polytope) -> Result<TrLowerBound, CertificateError> {
    Ok(TrLowerBound {
        bound: hf_detailed(p)?.value,
        caveat: TR_CAVEAT,
    })
}

#[cfg(test)]
mod tests;
