//! Exact lattice-polytope tools for Lagrangian torus fibers in toric
//! manifolds.
//!
//! * [`lattice`]: arbitrary-precision integer matrices, Smith form,
//!   primitivity and lattice surjectivity.
//! * [`polytope`]: moment polytopes, vertices, Delzant and redundancy tests,
//!   equidistant fibers.
//! * [`floer`]: the mod-2 operator `∂_P` on `2ⁿ` sign vectors and the
//!   combinatorial Floer number `HF(P)`.
//! * [`reduction`]: polytope-level symplectic reduction through integral
//!   affine slices, standard models, weight vectors for monotone polytopes.
//! * [`certificate`]: checkable non-displaceability certificates built from
//!   base facts, products and centered reductions.
//! * [`probes`]: displaceability scanning with McDuff probes.
//! * [`io`]: JSON documents, SVG rendering, reports and the bundled corpus.
//!
//! See `examples/` for one runnable program per capability.

pub mod certificate;
pub mod floer;
pub mod io;
pub mod lattice;
pub mod polytope;
pub mod probes;
pub mod reduction;

pub use lattice::{int, rat, IntMat, IntVec, Rational, RationalVec};
pub use polytope::{Facet, Polytope, PolytopeError};
