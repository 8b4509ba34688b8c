//! Exact commutative-algebra kernel and verification harness.
//!
//! The crate implements, over exact rational arithmetic:
//!
//! - multivariate polynomials, monomial orders and a small expression
//!   grammar ([`poly`], [`parse`]);
//! - reduced Gröbner bases and the full ideal algebra: sums, products,
//!   powers, intersections, colons, dimension and membership ([`ideal`]);
//! - Hilbert series, multiplicities, Artinian lengths and socles
//!   ([`hilbert`], [`socle`]);
//! - Koszul homology of linear-form sequences with Euler characteristics
//!   ([`koszul`]);
//! - reductions, reduction numbers and cores of maximal ideals modulo a
//!   complete intersection ([`reduction`]);
//! - a seeded generator for almost complete intersections and a campaign
//!   harness that certifies a multiplicity bound on every sampled instance
//!   ([`generate`], [`verify`]).
//!
//! The algebraic layers are generic over an exact [`scalar::Scalar`]; the
//! concrete aliases below fix the shipped instantiation to
//! arbitrary-precision rationals.

pub mod error;
pub mod generate;
pub mod hilbert;
pub mod ideal;
pub mod koszul;
pub(crate) mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod reduction;
pub mod ring;
pub mod scalar;
pub mod socle;
pub mod verify;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use ring::RingContext;
pub use scalar::Scalar;

/// The coefficient field: exact arbitrary-precision rationals.
pub type Coeff = num::rational::BigRational;

/// Polynomials over the default coefficient field.
pub type Poly = poly::Polynomial<Coeff>;

/// Ideals over the default coefficient field.
pub type Ideal = ideal::Ideal<Coeff>;

/// Reduced Gröbner bases over the default coefficient field.
pub type GroebnerBasis = ideal::ReducedGroebnerBasis<Coeff>;

/// Socle data over the default coefficient field.
pub type SocleData = socle::SocleData<Coeff>;
