//! Displaceability by probes.
//!
//! A probe starts at a point `x` in the relative interior of a facet `F` and
//! runs in an integral direction `w` with `⟨ν_F, w⟩ = 1` until it leaves the
//! polytope. Fibers over points strictly less than halfway along a probe are
//! displaceable. This is the negative counterpart to certificates.

use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lattice::{IntVec, Rational, RationalVec};
use crate::polytope::Polytope;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProbeError {
    #[error("NotTransverse: ⟨ν_F, w⟩ = {0}, expected 1")]
    NotTransverse(num_bigint::BigInt),
    #[error("NotOnFacet: the base point is not in the relative interior of facet {0}")]
    NotOnFacet(usize),
    #[error("UnboundedProbe: the ray never leaves the polytope")]
    UnboundedProbe,
    #[error("probe shape: {0}")]
    Shape(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Probe {
    pub facet: usize,
    pub direction: IntVec,
    pub base: RationalVec,
}

impl Probe {
    /// `x + t·w`.
    pub fn at(&self, t: &Rational) -> RationalVec {
        self.base
            .iter()
            .zip(self.direction.iter())
            .map(|(x, w)| x + t * Rational::from_integer(w.clone()))
            .collect()
    }

    fn check(&self, p: &Polytope) -> Result<(), ProbeError> {
        let n = p.dim();
        if self.facet >= p.facet_count() || self.direction.len() != n || self.base.len() != n {
            return Err(ProbeError::Shape(format!(
                "facet {} of {}, direction length {}, base length {}, dimension {n}",
                self.facet,
                p.facet_count(),
                self.direction.len(),
                self.base.len()
            )));
        }
        let pairing = p.facets()[self.facet].normal.dot(&self.direction);
        if pairing != 1.into() {
            return Err(ProbeError::NotTransverse(pairing));
        }
        let on_facet = p.facets().iter().enumerate().all(|(j, f)| {
            let v = f.eval(&self.base);
            if j == self.facet {
                v.is_zero()
            } else {
                v.is_positive()
            }
        });
        if !on_facet {
            return Err(ProbeError::NotOnFacet(self.facet));
        }
        Ok(())
    }
}

impl fmt::Display for Probe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x: Vec<String> = self.base.iter().map(ToString::to_string).collect();
        write!(f, "facet {} from ({}) along {}", self.facet, x.join(", "), self.direction)
    }
}

/// Largest `t ≥ 0` with `x + t·w ∈ P`.
pub fn probe_reach(p: &Polytope, probe: &Probe) -> Result<Rational, ProbeError> {
    probe.check(p)?;
    p.facets()
        .iter()
        .filter_map(|f| {
            let rate = Rational::from_integer(f.normal.dot(&probe.direction));
            rate.is_negative().then(|| f.eval(&probe.base) / -rate)
        })
        .min()
        .ok_or(ProbeError::UnboundedProbe)
}

/// The `t` with `u = x + t·w`, if `u` is on the probe's line.
fn parameter_of(probe: &Probe, u: &[Rational]) -> Option<Rational> {
    let mut t: Option<Rational> = None;
    for ((x, w), u) in probe.base.iter().zip(probe.direction.iter()).zip(u) {
        let d = u - x;
        if w.is_zero() {
            if !d.is_zero() {
                return None;
            }
            continue;
        }
        let s = d / Rational::from_integer(w.clone());
        match &t {
            Some(t) if *t != s => return None,
            _ => t = Some(s),
        }
    }
    t
}

/// True iff `u = x + t·w` with `0 < t < reach/2`.
pub fn is_displaceable_by_probe(p: &Polytope, u: &[Rational], probe: &Probe) -> Result<bool, ProbeError> {
    let reach = probe_reach(p, probe)?;
    Ok(parameter_of(probe, u).is_some_and(|t| t.is_positive() && t * Rational::from_integer(2.into()) < reach))
}

/// A probe that displaces a given point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub probe: Probe,
    pub reach: Rational,
    /// Position of the point along the probe, `0 < t < reach/2`.
    pub t: Rational,
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: reach {}, point at t = {}, displaceable segment 0 < t < {}",
            self.probe,
            self.reach,
            self.t,
            &self.reach / Rational::from_integer(2.into())
        )
    }
}

/// Searches facets in order, then directions `w ∈ [−b, b]ⁿ` in
/// lexicographic order, for a probe displacing `u`. Returns the first hit.
///
/// For each transverse `w` the base point is forced: `x = u − ℓ_F(u)·w`.
pub fn probe_scan(p: &Polytope, u: &[Rational], direction_bound: u32) -> Option<ProbeReport> {
    if u.len() != p.dim() || !p.contains_in_interior(u) {
        return None;
    }
    let b = direction_bound as i64;
    let directions: Vec<IntVec> = (0..p.dim())
        .map(|_| -b..=b)
        .multi_cartesian_product()
        .map(|w| IntVec::from_i64(&w))
        .collect();
    for (facet, f) in p.facets().iter().enumerate() {
        let t = f.eval(u);
        for w in directions.iter().filter(|w| f.normal.dot(w) == 1.into()) {
            let base: RationalVec = u
                .iter()
                .zip(w.iter())
                .map(|(u, wk)| u - &t * Rational::from_integer(wk.clone()))
                .collect();
            let probe = Probe {
                facet,
                direction: w.clone(),
                base,
            };
            let Ok(reach) = probe_reach(p, &probe) else {
                continue;
            };
            if &t * Rational::from_integer(2.into()) < reach {
                return Some(ProbeReport { probe, reach, t });
            }
        }
    }
    None
}
