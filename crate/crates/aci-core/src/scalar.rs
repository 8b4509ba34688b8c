//! Coefficient scalars.
//!
//! Every algorithm in this crate assumes *exact* field arithmetic: equality
//! of Gröbner bases, kernel dimensions and Hilbert data are all decided by
//! exact zero tests. The engine is generic over the scalar type so the
//! algebraic layers carry no commitment to a particular representation, but
//! the only shipped instance is [`num::BigRational`] (arbitrary-precision
//! rationals, i.e. the field Q). Floating-point types must not be used: an
//! approximate zero test would silently corrupt every downstream result.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{FromPrimitive, Num, One, Signed, Zero};
use num::Integer;

/// An exact field element.
pub trait Scalar:
    Num
    + Signed
    + FromPrimitive
    + Clone
    + PartialOrd
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Exact conversion from a machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("exact conversion from i64")
    }

    /// Rescale a coefficient vector by one common nonzero constant into a
    /// canonical "primitive" form with a positive first nonzero entry.
    ///
    /// Scaling a polynomial by a nonzero constant does not change the ideal
    /// it generates, so basis elements inside Gröbner computations are kept
    /// in this form to limit coefficient growth. The default is a no-op.
    fn normalize_content(_coeffs: &mut [Self]) {}
}

impl Scalar for BigRational {
    /// Clear denominators, divide by the gcd of the numerators and fix the
    /// sign of the first nonzero entry.
    fn normalize_content(coeffs: &mut [Self]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            if !c.is_zero() {
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            if !c.is_zero() {
                let scaled = c.numer() * (&den_lcm / c.denom());
                num_gcd = num_gcd.gcd(&scaled);
            }
        }
        if num_gcd.is_zero() {
            return;
        }
        if let Some(first) = coeffs.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                num_gcd = -num_gcd;
            }
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        for c in coeffs.iter_mut() {
            *c = &*c * &factor;
        }
    }
}
