//! The mod-2 operator `∂_P(ε) = Σᵢ (−1)^{νᵢ} ε` on `CFⁿ` and the
//! combinatorial Floer number.
//!
//! A sign vector `ε ∈ {±1}ⁿ` is stored as the bit index whose bit `k` is set
//! iff `εₖ = −1`. Multiplying by `(−1)^ν` then is XOR with `ν mod 2`, so `∂_P`
//! is convolution by `Σ g_{ν̄ᵢ}` in the group algebra of `(Z/2)ⁿ`.

mod gf2;

use std::fmt;

use num_integer::Roots;
use thiserror::Error;

use crate::polytope::{product, Polytope};
use gf2::{bit, flip, words_for};

/// Largest `n` accepted by [`rank_gf2`] unless a limit is passed explicitly.
pub const DEFAULT_DIMENSION_LIMIT: usize = 13;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FloerError {
    #[error("DimensionLimit: n = {n} exceeds the limit {limit} (matrix would be 2^{n} square)")]
    DimensionLimit { n: usize, limit: usize },
    #[error("OddPolytope: hf_even needs an even number of facets, got {0}")]
    OddPolytope(usize),
    #[error("NonSquareInvariant: HF(P×P) = {0} is not a perfect square")]
    NonSquareInvariant(i64),
    #[error("NegativeInvariant: kernel minus image is {0}")]
    NegativeInvariant(i64),
}

/// An element of `CFⁿ`: `2ⁿ` coefficients in GF(2), packed 64 per word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFVector {
    n: usize,
    bits: Vec<u64>,
}

impl CFVector {
    pub fn zero(n: usize) -> Self {
        CFVector {
            n,
            bits: vec![0; words_for(1 << n)],
        }
    }

    /// The generator `e_ε`.
    pub fn basis(n: usize, eps: usize) -> Self {
        let mut v = CFVector::zero(n);
        v.flip(eps);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `2ⁿ`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, eps: usize) -> bool {
        bit(&self.bits, eps)
    }

    pub fn flip(&mut self, eps: usize) {
        flip(&mut self.bits, eps);
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&e| self.get(e))
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl std::ops::BitXorAssign<&CFVector> for CFVector {
    fn bitxor_assign(&mut self, rhs: &CFVector) {
        assert_eq!(self.n, rhs.n);
        for (a, b) in self.bits.iter_mut().zip(&rhs.bits) {
            *a ^= b;
        }
    }
}

/// Sign vector notation: `(+,−,+)` for index `0b010`.
impl fmt::Display for CFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .map(|e| {
                let signs: String = (0..self.n).map(|k| if e >> k & 1 == 1 { '−' } else { '+' }).collect();
                format!("({signs})")
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `∂_P`, stored as the multiset of translations `νᵢ mod 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryOp {
    n: usize,
    translations: Vec<u64>,
}

impl BoundaryOp {
    /// Builds the operator of `P`. Fails only when `n` is too large to index
    /// sign vectors with a machine word.
    pub fn new(p: &Polytope) -> Result<Self, FloerError> {
        if p.dim() > 63 {
            return Err(FloerError::DimensionLimit { n: p.dim(), limit: 63 });
        }
        Ok(BoundaryOp {
            n: p.dim(),
            translations: p.normals().map(|v| v.parity_mask()).collect(),
        })
    }

    /// Operator with the given translations (bit `k` = parity of coordinate `k`).
    pub fn from_translations(n: usize, translations: Vec<u64>) -> Self {
        assert!(n <= 63 && translations.iter().all(|t| t >> n == 0));
        BoundaryOp { n, translations }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn translations(&self) -> &[u64] {
        &self.translations
    }

    /// `∂ e₀ = Σᵢ e_{ν̄ᵢ}`. Every other row is an XOR-translate of this one.
    pub fn generator(&self) -> CFVector {
        let mut g = CFVector::zero(self.n);
        for &t in &self.translations {
            g.flip(t as usize);
        }
        g
    }

    pub fn is_zero(&self) -> bool {
        self.generator().is_zero()
    }

    pub fn apply(&self, v: &CFVector) -> CFVector {
        assert_eq!(v.n, self.n);
        let mut out = CFVector::zero(self.n);
        for eps in v.support() {
            for &t in &self.translations {
                out.flip(eps ^ t as usize);
            }
        }
        out
    }
}

impl fmt::Display for BoundaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts: Vec<String> = self
            .translations
            .iter()
            .map(|t| (0..self.n).map(|k| if t >> k & 1 == 1 { '1' } else { '0' }).collect())
            .collect();
        write!(f, "∂ on CF^{} with translations {{{}}}", self.n, ts.join(", "))
    }
}

/// Rank and nullity of `∂` on `CFⁿ`; they sum to `2ⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankNullity {
    pub rank: usize,
    pub nullity: usize,
}

impl RankNullity {
    /// `dim ker − dim im`.
    pub fn difference(&self) -> i64 {
        self.nullity as i64 - self.rank as i64
    }
}

pub fn rank_gf2(op: &BoundaryOp) -> Result<RankNullity, FloerError> {
    rank_gf2_with_limit(op, DEFAULT_DIMENSION_LIMIT)
}

pub fn rank_gf2_with_limit(op: &BoundaryOp, limit: usize) -> Result<RankNullity, FloerError> {
    if op.n > limit {
        return Err(FloerError::DimensionLimit { n: op.n, limit });
    }
    let rank = gf2::circulant_rank(op.n as u32, op.generator().words());
    Ok(RankNullity {
        rank,
        nullity: (1 << op.n) - rank,
    })
}

/// `dim ker ∂_P − dim im ∂_P` for even `P`, with the underlying counts.
///
/// The value is reported signed.
pub fn hf_even_detailed(p: &Polytope) -> Result<RankNullity, FloerError> {
    if !p.is_even() {
        return Err(FloerError::OddPolytope(p.facet_count()));
    }
    rank_gf2(&BoundaryOp::new(p)?)
}

pub fn hf_even(p: &Polytope) -> Result<i64, FloerError> {
    hf_even_detailed(p).map(|r| r.difference())
}

/// How `HF(P)` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HfReport {
    pub value: u64,
    /// Counts for `∂_P` itself when `d` is even.
    pub direct: Option<RankNullity>,
    /// Counts for `∂_{P×P}`, computed when `d` is odd.
    pub square: Option<RankNullity>,
}

/// `HF(P) = √HF(P×P)`.
///
/// For even `P` this is `HF(P)` itself by the product formula, so the
/// `2n`-dimensional operator is only built when `d` is odd.
pub fn hf_detailed(p: &Polytope) -> Result<HfReport, FloerError> {
    if p.is_even() {
        let r = hf_even_detailed(p)?;
        let v = r.difference();
        if v < 0 {
            return Err(FloerError::NegativeInvariant(v));
        }
        return Ok(HfReport {
            value: v as u64,
            direct: Some(r),
            square: None,
        });
    }
    let r = hf_even_detailed(&product(p, p))?;
    let v = r.difference();
    if v < 0 {
        return Err(FloerError::NegativeInvariant(v));
    }
    let root = (v as u64).sqrt();
    if root * root != v as u64 {
        return Err(FloerError::NonSquareInvariant(v));
    }
    Ok(HfReport {
        value: root,
        direct: None,
        square: Some(r),
    })
}

pub fn hf(p: &Polytope) -> Result<u64, FloerError> {
    hf_detailed(p).map(|r| r.value)
}

#[cfg(test)]
mod tests;
