use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::Polytope;
use crate::lattice::{solve_rational, IntVec, Rational, RationalVec};

/// The point where every facet function takes the same positive value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equidistant {
    pub point: RationalVec,
    pub value: Rational,
}

/// Solves `ℓᵢ(x) = t` for all `i` in the unknowns `(x, t)`.
///
/// Returns `None` unless the solution is unique and `t > 0`.
pub fn equidistant_point(p: &Polytope) -> Option<Equidistant> {
    let n = p.dim();
    let rows: Vec<RationalVec> = p
        .facets()
        .iter()
        .map(|f| {
            let mut r = f.normal.to_rational();
            r.push(-Rational::one());
            r
        })
        .collect();
    let rhs: Vec<Rational> = p.facets().iter().map(|f| -&f.offset).collect();
    let mut sol = solve_rational(&rows, &rhs, n + 1).unique()?;
    let value = sol.pop()?;
    value.is_positive().then_some(Equidistant { point: sol, value })
}

/// `P = scale · model + shift` as point sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dilation {
    pub scale: Rational,
    pub shift: RationalVec,
}

impl Dilation {
    /// Image of a model point.
    pub fn apply(&self, y: &[Rational]) -> RationalVec {
        y.iter().zip(&self.shift).map(|(a, b)| a * &self.scale + b).collect()
    }
}

/// Finds `(t, x₀)` with `t > 0` such that `P = t·model + x₀`.
///
/// Both polytopes must carry the same normals (as multisets, in the same
/// coordinates). Facet by facet this means `aᵢ = t·aᵢᵐᵒᵈᵉˡ − ⟨x₀, νᵢ⟩`.
pub fn match_dilate_translate(p: &Polytope, model: &Polytope) -> Option<Dilation> {
    let n = p.dim();
    if n != model.dim() || p.facet_count() != model.facet_count() {
        return None;
    }
    let mut model_offsets: HashMap<&IntVec, &Rational> = HashMap::new();
    for f in model.facets() {
        // A model with repeated normals has no canonical facet matching.
        if model_offsets.insert(&f.normal, &f.offset).is_some() {
            return None;
        }
    }
    let mut rows = Vec::with_capacity(p.facet_count());
    let mut rhs = Vec::with_capacity(p.facet_count());
    for f in p.facets() {
        let model_offset = model_offsets.remove(&f.normal)?;
        // unknowns: (t, x₀)
        let mut r = vec![model_offset.clone()];
        r.extend(f.normal.iter().map(|c| -Rational::from_integer(c.clone())));
        rows.push(r);
        rhs.push(f.offset.clone());
    }
    let sol = solve_rational(&rows, &rhs, n + 1).unique()?;
    let scale = sol[0].clone();
    if !scale.is_positive() {
        return None;
    }
    Some(Dilation {
        scale,
        shift: sol[1..].to_vec(),
    })
}

impl Dilation {
    pub fn identity(n: usize) -> Self {
        Dilation {
            scale: Rational::one(),
            shift: vec![Rational::zero(); n],
        }
    }
}
