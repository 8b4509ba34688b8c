//! Reductions, reduction numbers and cores of maximal ideals modulo a
//! complete intersection.
//!
//! A subideal `B ⊆ A` is a reduction of `A` with reduction number `t` when
//! `A^{t+1} = B·A^t` holds (and fails for smaller exponents). Quotient-ring
//! statements are decided in the ambient ring by adding the defining ideal
//! to both sides of the identity; quotient rings are never materialized.

use crate::error::{Error, Result};
use crate::generate::general_linear_forms;
use crate::ideal::{ideal_equal, is_regular_sequence, Ideal};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// A verified reduction relationship between two ideals.
#[derive(Clone, Debug)]
pub struct ReductionWitness<C: Scalar> {
    pub sub: Ideal<C>,
    pub of: Ideal<C>,
    /// Least `t` with `A^{t+1} = B·A^t`, when one at most `t_max` exists.
    pub reduction_number: Option<u32>,
}

/// Does the reduction identity hold at exponent `t`, optionally modulo an
/// ambient ideal added to both sides?
pub fn reduction_identity_at<C: Scalar>(
    sub: &Ideal<C>,
    of: &Ideal<C>,
    modulus: Option<&Ideal<C>>,
    t: u32,
) -> bool {
    let a_t = of.power(t);
    let lhs = of.product(&a_t);
    let rhs = sub.product(&a_t);
    match modulus {
        Some(m) => ideal_equal(&lhs.sum(m), &rhs.sum(m)),
        None => ideal_equal(&lhs, &rhs),
    }
}

fn reduction_number_impl<C: Scalar>(
    sub: &Ideal<C>,
    of: &Ideal<C>,
    modulus: Option<&Ideal<C>>,
    t_max: u32,
) -> Result<Option<u32>> {
    let enclosing = match modulus {
        Some(m) => of.sum(m),
        None => of.clone(),
    };
    for g in sub.generators() {
        if !enclosing.contains(g) {
            return Err(Error::Precondition(
                "reduction candidate is not contained in the ideal".into(),
            ));
        }
    }
    for t in 0..=t_max {
        if reduction_identity_at(sub, of, modulus, t) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Least `t <= t_max` with `A^{t+1} = B·A^t`, or `None`.
///
/// Errors when `B` is not contained in `A`.
pub fn reduction_number<C: Scalar>(sub: &Ideal<C>, of: &Ideal<C>, t_max: u32) -> Result<Option<u32>> {
    reduction_number_impl(sub, of, None, t_max)
}

/// Reduction number of the images of `B ⊆ A` in the quotient by `modulus`,
/// decided in the ambient ring: least `t` with
/// `A^{t+1} + modulus = B·A^t + modulus`.
pub fn reduction_number_mod<C: Scalar>(
    sub: &Ideal<C>,
    of: &Ideal<C>,
    modulus: &Ideal<C>,
    t_max: u32,
) -> Result<Option<u32>> {
    reduction_number_impl(sub, of, Some(modulus), t_max)
}

/// The colon formula for the core of an equimultiple ideal:
/// `core(A) = B^{r+1} : A^r` for a reduction `B` of `A` with reduction
/// number at most `r`.
///
/// The stability of the formula (`B^{t+1} : A^t` is independent of `t >= r`)
/// is spot-checked at `t = r + 1`; a failure is escalated, never ignored.
pub fn core_colon<C: Scalar>(sub: &Ideal<C>, of: &Ideal<C>, r: u32) -> Result<Ideal<C>> {
    let rn = reduction_number(sub, of, r)?;
    if rn.is_none() {
        return Err(Error::Precondition(format!(
            "not a reduction with reduction number <= {r}"
        )));
    }
    let core = sub.power(r + 1).colon(&of.power(r));
    let stability = sub.power(r + 2).colon(&of.power(r + 1));
    if !ideal_equal(&core, &stability) {
        return Err(Error::CheckFailed(
            "colon formula is not stable at the next exponent".into(),
        ));
    }
    Ok(core)
}

/// Result of a core computation for the maximal ideal modulo a complete
/// intersection, expressed in the ambient ring.
#[derive(Clone, Debug)]
pub struct CoreOutput<C: Scalar> {
    /// The ambient ideal `(ells^{r+1}, f) : m^r`; it presents the core of
    /// the maximal ideal of `R/(f)`.
    pub core: Ideal<C>,
    pub r: u32,
    pub ells: Vec<Polynomial<C>>,
}

/// Sum of `deg(f_i) - 1` over the sequence.
pub fn socle_bound<C: Scalar>(f: &[Polynomial<C>]) -> u32 {
    f.iter()
        .map(|g| g.degree().expect("nonzero form") - 1)
        .sum()
}

/// Core of the maximal ideal modulo the complete intersection `(f)`,
/// via certified general linear forms sampled from `seed`.
pub fn core_of_maximal_ideal(
    f: &[crate::Poly],
    seed: u64,
) -> Result<CoreOutput<crate::Coeff>> {
    if !is_regular_sequence(f)? {
        return Err(Error::NotRegularSequence);
    }
    let ctx = f[0].ctx().clone();
    let r = socle_bound(f);
    let ells = general_linear_forms(&ctx, f, seed)?;
    let core = core_from_linear_forms(f, &ells, r)?;
    Ok(CoreOutput { core, r, ells })
}

/// The ambient colon `(ells^{r+1}, f) : m^r` for an explicit choice of
/// linear forms, computed as `r` successive colons by the maximal ideal.
///
/// The reduction precondition (the images of the linear forms generate a
/// reduction of the maximal ideal of `R/(f)` with reduction number at most
/// `r`) is verified before the colon is formed.
pub fn core_from_linear_forms<C: Scalar>(
    f: &[Polynomial<C>],
    ells: &[Polynomial<C>],
    r: u32,
) -> Result<Ideal<C>> {
    let ctx = f[0].ctx().clone();
    let ci = Ideal::new(f.to_vec())?;
    let maximal = Ideal::maximal(&ctx);
    if ells.is_empty() {
        // Full-length sequence: the maximal ideal is nilpotent modulo (f)
        // and its unique minimal reduction is the zero ideal, so the core is
        // m^{r+1} + (f) once the nilpotency m^{r+1} ⊆ (f) is verified. The
        // colon presentation is unavailable here: every element of a
        // nilpotent maximal ideal is a zerodivisor, and (f) : m^r is the
        // strictly larger annihilator of the socle.
        if !ci.contains_ideal(&maximal.power(r + 1)) {
            return Err(Error::Precondition(format!(
                "the maximal ideal is not nilpotent of order {} modulo the sequence",
                r + 1
            )));
        }
        return Ok(maximal.power(r + 1).sum(&ci));
    }
    let sub = Ideal::new(ells.to_vec())?;
    if !reduction_identity_at(&sub, &maximal, Some(&ci), r) {
        return Err(Error::Precondition(format!(
            "linear forms do not give a reduction with reduction number <= {r}"
        )));
    }
    let base = sub.power(r + 1).sum(&ci);
    // Colon by m^r as r successive colons by m: A : (BC) = (A : B) : C.
    let mut core = base;
    for _ in 0..r {
        core = core.colon(&maximal);
    }
    Ok(core)
}

/// Is the distinguished last generator of an instance contained in the core
/// of the maximal ideal modulo `(f)`?
///
/// Whenever `deg(f_last) <= r` and `f_last` is not in `(f)`, this is false:
/// the core is generated in degree `r + 1`.
pub fn core_membership_gate(inst: &crate::generate::AciInstance) -> Result<bool> {
    let core = core_from_linear_forms(&inst.f, &inst.ells, inst.r)?;
    Ok(core.contains(&inst.f_last))
}

/// `m^{r+1} + (f)` — the expected value of the core computation.
pub fn expected_core<C: Scalar>(f: &[Polynomial<C>], r: u32) -> Result<Ideal<C>> {
    let ctx = f[0].ctx().clone();
    Ok(Ideal::maximal(&ctx).power(r + 1).sum(&Ideal::new(f.to_vec())?))
}
