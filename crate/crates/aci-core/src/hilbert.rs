//! Hilbert series, Hilbert functions, multiplicity and Artinian length.
//!
//! Everything is read off the leading-term ideal of the grevlex Gröbner
//! basis: the series numerator comes from the standard pivot recursion on
//! the minimal monomial generators, and per-degree Hilbert function values
//! are counts of standard monomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::ring::RingContext;
use crate::scalar::Scalar;

/// Univariate polynomial with integer coefficients, little-endian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![0i64; len];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.coeff(i) + other.coeff(i);
        }
        IntPoly(out).trim()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.0.len() + k];
        out[k..].copy_from_slice(&self.0);
        IntPoly(out)
    }

    /// Multiply by `(1 - t^k)`.
    pub fn mul_one_minus_t_pow(&self, k: usize) -> IntPoly {
        let shifted = self.shift(k);
        let len = self.0.len().max(shifted.0.len());
        let mut out = vec![0i64; len];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.coeff(i) - shifted.coeff(i);
        }
        IntPoly(out).trim()
    }

    /// Exact division by `(1 - t)`, if the remainder vanishes.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // Synthetic division: q_i = sum of coefficients up to i; remainder is
        // the value at t = 1.
        let mut out = Vec::with_capacity(self.0.len());
        let mut acc = 0i64;
        for &c in &self.0 {
            acc += c;
            out.push(acc);
        }
        if acc != 0 {
            return None;
        }
        out.pop();
        Some(IntPoly(out).trim())
    }

    pub fn eval_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Hilbert data of a graded quotient `R/I`: the series equals
/// `numerator(t) / (1-t)^dim` with `numerator(1) != 0`, and the multiplicity
/// is `numerator(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: IntPoly,
    pub dim: u32,
    pub multiplicity: u64,
}

/// Hilbert data of `R/I`. Errors on the unit ideal.
pub fn hilbert<C: Scalar>(ideal: &Ideal<C>) -> Result<HilbertData> {
    let dim = ideal.dimension()?;
    let lms = ideal.gb().leading_monomials();
    let n = ideal.ctx().n_vars() as u32;
    let raw = numerator_over_full_denominator(&lms);
    let mut q = raw;
    for _ in 0..(n - dim) {
        q = q
            .div_one_minus_t()
            .expect("numerator must vanish at t = 1 to order n - dim");
    }
    let mult = q.eval_one();
    assert!(mult > 0, "reduced numerator must be positive at t = 1");
    Ok(HilbertData { numerator: q, dim, multiplicity: mult as u64 })
}

/// Multiplicity `e(R/I)`.
pub fn multiplicity<C: Scalar>(ideal: &Ideal<C>) -> Result<u64> {
    Ok(hilbert(ideal)?.multiplicity)
}

/// Numerator of the Hilbert series over `(1-t)^n` for the monomial ideal
/// with the given minimal generators, by the pivot recursion
/// `N(I) = N(I + (x)) + t * N(I : x)`.
fn numerator_over_full_denominator(gens: &[Monomial]) -> IntPoly {
    let mut memo: HashMap<Vec<Vec<u16>>, IntPoly> = HashMap::new();
    let gens: Vec<Monomial> = gens.to_vec();
    numerator_rec(minimalize(gens), &mut memo)
}

fn memo_key(gens: &[Monomial]) -> Vec<Vec<u16>> {
    let mut key: Vec<Vec<u16>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    key.sort();
    key
}

fn numerator_rec(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Vec<u16>>, IntPoly>) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|m| m.is_one()) {
        return IntPoly::zero();
    }
    if pairwise_coprime(&gens) {
        let mut out = IntPoly::one();
        for m in &gens {
            out = out.mul_one_minus_t_pow(m.degree() as usize);
        }
        return out;
    }
    let key = memo_key(&gens);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let n = gens[0].n_vars();
    // Pivot: the variable shared by the most generators.
    let mut counts = vec![0usize; n];
    for m in &gens {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, &c)| (c, std::cmp::Reverse(i)))
        .map(|(i, _)| i)
        .expect("nonempty generators");
    debug_assert!(counts[pivot] >= 2, "non-coprime generators share a variable");

    // I + (x_pivot): drop generators divisible by the pivot variable.
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponents()[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(n, pivot));

    // I : x_pivot: lower the pivot exponent where positive.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut exps = m.exponents().to_vec();
            if exps[pivot] > 0 {
                exps[pivot] -= 1;
            }
            Monomial::from_exponents(exps)
        })
        .collect();

    let result = numerator_rec(plus, memo).add(&numerator_rec(minimalize(colon), memo).shift(1));
    memo.insert(key, result.clone());
    result
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let masks: Vec<u32> = gens.iter().map(|m| m.support_mask()).collect();
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            if masks[i] & masks[j] != 0 {
                return false;
            }
        }
    }
    true
}

/// Remove duplicate and dominated monomials (keep the minimal generators).
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|kept| kept.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// All monomials of total degree `d` in `n` variables, in a fixed order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fill_monomials(&mut exps, 0, d, &mut out);
    out
}

fn fill_monomials(exps: &mut Vec<u16>, var: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if var + 1 == exps.len() {
        exps[var] = remaining as u16;
        out.push(Monomial::from_exponents(exps.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e as u16;
        fill_monomials(exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

/// Standard monomials of degree `d`: monomials outside the leading-term
/// ideal spanned by `lms`.
pub fn standard_monomials_of_degree(lms: &[Monomial], n: usize, d: u32) -> Vec<Monomial> {
    monomials_of_degree(n, d)
        .into_iter()
        .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
        .collect()
}

/// Hilbert function of `R/I` at degree `d`. Errors on the unit ideal.
pub fn hilbert_function<C: Scalar>(ideal: &Ideal<C>, d: u32) -> Result<u64> {
    let gb = ideal.gb();
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lms = gb.leading_monomials();
    Ok(standard_monomials_of_degree(&lms, ideal.ctx().n_vars(), d).len() as u64)
}

/// Degreewise vector-space basis (standard monomials) of an Artinian
/// quotient; finite because the quotient has dimension zero.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub by_degree: BTreeMap<u32, Vec<Monomial>>,
}

impl GradedBasis {
    pub fn total(&self) -> u64 {
        self.by_degree.values().map(|v| v.len() as u64).sum()
    }

    /// Largest degree with a nonzero piece.
    pub fn top_degree(&self) -> u32 {
        self.by_degree.keys().last().copied().unwrap_or(0)
    }

    pub fn basis_at(&self, d: u32) -> &[Monomial] {
        self.by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Graded basis of `R/I` for Artinian `I`.
///
/// Once the standard monomials of some degree are exhausted no higher degree
/// has any, so the scan stops at the first empty slice.
pub fn graded_basis<C: Scalar>(ideal: &Ideal<C>) -> Result<GradedBasis> {
    let dim = ideal.dimension()?;
    if dim != 0 {
        return Err(Error::NonArtinian { dim });
    }
    let lms = ideal.gb().leading_monomials();
    let n = ideal.ctx().n_vars();
    let mut by_degree = BTreeMap::new();
    let mut d = 0u32;
    loop {
        let basis = standard_monomials_of_degree(&lms, n, d);
        if basis.is_empty() {
            break;
        }
        by_degree.insert(d, basis);
        d += 1;
    }
    Ok(GradedBasis { by_degree })
}

/// Length of an Artinian quotient: the total number of standard monomials.
pub fn length_artinian<C: Scalar>(ideal: &Ideal<C>) -> Result<u64> {
    Ok(graded_basis(ideal)?.total())
}

/// Convenience: the ring context's full monomial count of degree `d`
/// (`dim_k R_d`).
pub fn ambient_dimension_at(ctx: &RingContext, d: u32) -> u64 {
    // C(d + n - 1, n - 1), built up so every intermediate value is a
    // binomial coefficient.
    let n = ctx.n_vars() as u64;
    let d = d as u64;
    let mut acc = 1u64;
    for k in 1..n {
        acc = acc * (d + k) / k;
    }
    acc
}
