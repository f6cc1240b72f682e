//! Mechanical verification of transcendence arguments for rational-angled
//! hyperbolic triangles and quadrilaterals.
//!
//! - [`arith`]: exact sparse multivariate polynomials.
//! - [`exppoly`]: exponential polynomials `Σ p·e^L` with dominance analysis.
//! - [`relations`]: the triangle and quadrilateral relations with
//!   checkpointed derivations and certificates.
//! - [`trig`]: constant-curvature triangle and polygon solvers.
//! - [`cyclo`]: exact cyclotomic arithmetic, degrees and Galois orbits.
//! - [`evidence`]: certified enclosures and bounded algebraicity scans.
//!
//! The algebra is generic over the coefficient type; the aliases below fix
//! the common concrete choices.

pub mod arith;
pub mod cyclo;
pub mod error;
pub mod evidence;
pub mod exppoly;
pub mod relations;
pub mod trig;

pub use error::{Error, Result};

/// Exact rational scalar.
pub type Rat = arith::Rat;
/// Polynomial with exact rational coefficients.
pub type QPoly = arith::MPoly<Rat>;
/// Polynomial with integer coefficients.
pub type ZPoly = arith::MPoly<num_bigint::BigInt>;
/// Polynomial with binary64 coefficients.
pub type FPoly = arith::MPoly<f64>;
/// Exponential polynomial with exact rational coefficients.
pub type QExpPoly = exppoly::ExpPoly<Rat>;
/// Exponential polynomial with integer coefficients.
pub type ZExpPoly = exppoly::ExpPoly<num_bigint::BigInt>;
/// Exponential polynomial with binary64 coefficients.
pub type FExpPoly = exppoly::ExpPoly<f64>;
/// Triangle solution in binary64.
pub type TriangleSolF64 = trig::TriangleSol<f64>;
/// Curvature in binary64.
pub type CurvatureF64 = trig::Curvature<f64>;
