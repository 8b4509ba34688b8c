//! Seeded random construction of regular sequences, almost complete
//! intersections and certified general linear forms.
//!
//! Determinism contract: identical (context, parameters, seed) inputs yield
//! bit-identical instances, across platforms and releases. To that end the
//! generator uses a fixed, fully documented RNG (SplitMix64) instead of an
//! external library whose stream might change between versions.

use crate::error::{Error, Result};
use crate::hilbert::{length_artinian, monomials_of_degree};
use crate::ideal::{ideal_equal, is_regular_sequence, Ideal};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::scalar::Scalar as _;
use crate::{Coeff, Poly};

/// SplitMix64: `state += 0x9E3779B97F4A7C15` per step, output mixed with
/// two xor-shift-multiply rounds (Steele, Lea & Flood's finalizer).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `lo..=hi` by rejection sampling (no modulo bias).
    pub fn next_range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        let zone = u64::MAX - u64::MAX % span;
        loop {
            let v = self.next_u64();
            if v < zone {
                return lo + (v % span) as i64;
            }
        }
    }
}

/// Derive an independent stream seed for sub-task `stream` of `seed`.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    SplitMix64::new(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15)).next_u64()
}

/// Coefficient range for the forms of the regular sequence (small, to keep
/// Gröbner coefficient growth tame).
const FORM_COEFF_BOUND: i64 = 9;
/// Coefficient range for general linear forms (large, for genericity).
const LINEAR_COEFF_BOUND: i64 = 1_000_000;
/// Resampling limits.
const FORM_ATTEMPTS: u32 = 32;
const LINEAR_ATTEMPTS: u32 = 8;

/// An almost complete intersection instance: a regular sequence `f` of
/// length `N`, one extra generator `f_last` that is a zerodivisor modulo
/// `(f)`, and certified general linear forms `ells`.
#[derive(Clone, Debug)]
pub struct AciInstance {
    pub ctx: RingContext,
    /// Height `N` of `(f)` (also its length).
    pub height: usize,
    /// Degrees `d_1, ..., d_N`.
    pub degrees: Vec<u32>,
    /// Degree of the extra generator.
    pub d_last: u32,
    pub f: Vec<Poly>,
    pub f_last: Poly,
    /// `sum(d_i - 1)`: socle degree of the Artinian reduction of `R/(f)`.
    pub r: u32,
    /// `n - N` certified general linear forms.
    pub ells: Vec<Poly>,
    pub seed: u64,
}

impl AciInstance {
    pub fn n_vars(&self) -> usize {
        self.ctx.n_vars()
    }

    /// The complete-intersection ideal `(f)`.
    pub fn ci_ideal(&self) -> Ideal<Coeff> {
        Ideal::new(self.f.clone()).expect("validated at construction")
    }

    /// The full ideal `(f, f_last)`.
    pub fn full_ideal(&self) -> Ideal<Coeff> {
        let mut gens = self.f.clone();
        gens.push(self.f_last.clone());
        Ideal::new(gens).expect("validated at construction")
    }

    /// Product of the degrees of the regular sequence.
    pub fn degree_product(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    /// Machine-readable description: every generator in the expression
    /// grammar, plus the sampling parameters.
    pub fn certificate(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": self.ctx.var_names(),
            "degrees": self.degrees,
            "d_last": self.d_last,
            "r": self.r,
            "seed": self.seed,
            "f": self.f.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "f_last": self.f_last.to_string(),
            "ells": self.ells.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Monomials of degree `d` divisible by at least one of the first
/// `restrict` variables, in the fixed enumeration order.
fn support_monomials(ctx: &RingContext, d: u32, restrict: usize) -> Vec<Monomial> {
    monomials_of_degree(ctx.n_vars(), d)
        .into_iter()
        .filter(|m| m.exponents()[..restrict].iter().any(|&e| e > 0))
        .collect()
}

/// One random form of degree `d` supported on the monomials divisible by a
/// variable of the coordinate prime `(X_1, ..., X_restrict)`; may be zero.
fn sample_form(rng: &mut SplitMix64, ctx: &RingContext, d: u32, restrict: usize, bound: i64) -> Poly {
    let terms: Vec<(Coeff, Monomial)> = support_monomials(ctx, d, restrict)
        .into_iter()
        .map(|m| (Coeff::from_int(rng.next_range(-bound, bound)), m))
        .collect();
    Polynomial::from_terms(ctx, terms)
}

fn sample_linear(rng: &mut SplitMix64, ctx: &RingContext) -> Poly {
    let n = ctx.n_vars();
    let terms: Vec<(Coeff, Monomial)> = (0..n)
        .map(|i| {
            (
                Coeff::from_int(rng.next_range(-LINEAR_COEFF_BOUND, LINEAR_COEFF_BOUND)),
                Monomial::var(n, i),
            )
        })
        .collect();
    Polynomial::from_terms(ctx, terms)
}

/// Random regular sequence of the given degrees, every form lying in the
/// coordinate prime `P = (X_1, ..., X_N)`. Resampled until the height is
/// full; fails after a fixed number of attempts.
pub fn random_regular_sequence(
    ctx: &RingContext,
    height: usize,
    degrees: &[u32],
    seed: u64,
) -> Result<Vec<Poly>> {
    if height == 0 || height > ctx.n_vars() {
        return Err(Error::Precondition(format!(
            "height must be between 1 and {}, got {height}",
            ctx.n_vars()
        )));
    }
    if degrees.len() != height || degrees.iter().any(|&d| d == 0) {
        return Err(Error::Precondition(
            "need one positive degree per element of the sequence".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..FORM_ATTEMPTS {
        let f: Vec<Poly> = degrees
            .iter()
            .map(|&d| sample_form(&mut rng, ctx, d, height, FORM_COEFF_BOUND))
            .collect();
        if f.iter().any(Poly::is_zero) {
            continue;
        }
        if is_regular_sequence(&f)? {
            return Ok(f);
        }
    }
    Err(Error::ResamplingExhausted {
        what: "regular sequence".into(),
        attempts: FORM_ATTEMPTS,
        seed,
    })
}

/// Certified general linear forms for the regular sequence `f`: accepted
/// only when `(f, ells)` is Artinian of length exactly `prod(d_i)`, which is
/// the property every downstream claim needs.
pub fn general_linear_forms(ctx: &RingContext, f: &[Poly], seed: u64) -> Result<Vec<Poly>> {
    let expected: u64 = f
        .iter()
        .map(|g| g.degree().expect("nonzero form") as u64)
        .product();
    let count = ctx.n_vars() - f.len();
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..LINEAR_ATTEMPTS {
        let ells: Vec<Poly> = (0..count).map(|_| sample_linear(&mut rng, ctx)).collect();
        if ells.iter().any(Poly::is_zero) {
            continue;
        }
        let mut gens = f.to_vec();
        gens.extend(ells.iter().cloned());
        let joint = Ideal::new(gens)?;
        if joint.dimension()? != 0 {
            continue;
        }
        if length_artinian(&joint)? == expected {
            return Ok(ells);
        }
    }
    Err(Error::ResamplingExhausted {
        what: "general linear forms (genericity certificate)".into(),
        attempts: LINEAR_ATTEMPTS,
        seed,
    })
}

/// Random almost complete intersection: a regular sequence of the given
/// degrees plus one extra form of degree `d_last` in the coordinate prime,
/// resampled until the result is minimally generated by `N + 1` elements
/// and the extra form is a zerodivisor with proper colon.
pub fn random_aci(ctx: &RingContext, degrees: &[u32], d_last: u32, seed: u64) -> Result<AciInstance> {
    if d_last == 0 {
        return Err(Error::Precondition("d_last must be positive".into()));
    }
    let height = degrees.len();
    let f = random_regular_sequence(ctx, height, degrees, seed)?;
    let ci = Ideal::new(f.clone())?;
    let r: u32 = degrees.iter().map(|&d| d - 1).sum();

    let mut rng = SplitMix64::new(derive_seed(seed, 1));
    let mut chosen: Option<Poly> = None;
    for _ in 0..FORM_ATTEMPTS {
        let candidate = sample_form(&mut rng, ctx, d_last, height, FORM_COEFF_BOUND);
        if candidate.is_zero() || ci.contains(&candidate) {
            continue;
        }
        let mut gens = f.clone();
        gens.push(candidate.clone());
        let full = Ideal::new(gens)?;
        if full.min_generator_count()? != height + 1 {
            continue;
        }
        // Zerodivisor certificate: (f) is strictly contained in
        // (f) : f_last, which is itself proper.
        let colon = ci.colon_single(&candidate);
        if ideal_equal(&colon, &ci) || colon.is_unit() {
            continue;
        }
        // Structural sanity: everything lives in the coordinate prime, so
        // the height stays N.
        debug_assert_eq!(full.height()?, height as u32);
        chosen = Some(candidate);
        break;
    }
    let f_last = chosen.ok_or(Error::ResamplingExhausted {
        what: format!("almost complete intersection generator of degree {d_last}"),
        attempts: FORM_ATTEMPTS,
        seed,
    })?;

    let ells = general_linear_forms(ctx, &f, derive_seed(seed, 2))?;
    Ok(AciInstance {
        ctx: ctx.clone(),
        height,
        degrees: degrees.to_vec(),
        d_last,
        f,
        f_last,
        r,
        ells,
        seed,
    })
}

/// Distribution-sanity probe: does the very first draw of every sampling
/// stage (regular sequence, extra generator, linear forms) already pass all
/// certificates? Genericity predicts this happens for most seeds.
pub fn first_draw_accepted(ctx: &RingContext, degrees: &[u32], d_last: u32, seed: u64) -> bool {
    let height = degrees.len();
    let mut rng = SplitMix64::new(seed);
    let f: Vec<Poly> = degrees
        .iter()
        .map(|&d| sample_form(&mut rng, ctx, d, height, FORM_COEFF_BOUND))
        .collect();
    if f.iter().any(Poly::is_zero) || !is_regular_sequence(&f).unwrap_or(false) {
        return false;
    }
    let ci = match Ideal::new(f.clone()) {
        Ok(i) => i,
        Err(_) => return false,
    };
    let mut rng2 = SplitMix64::new(derive_seed(seed, 1));
    let f_last = sample_form(&mut rng2, ctx, d_last, height, FORM_COEFF_BOUND);
    if f_last.is_zero() || ci.contains(&f_last) {
        return false;
    }
    let mut gens = f.clone();
    gens.push(f_last.clone());
    let full = match Ideal::new(gens) {
        Ok(i) => i,
        Err(_) => return false,
    };
    if full.min_generator_count().map_or(true, |c| c != height + 1) {
        return false;
    }
    let count = ctx.n_vars() - height;
    if count == 0 {
        return true;
    }
    let mut rng3 = SplitMix64::new(derive_seed(seed, 2));
    let ells: Vec<Poly> = (0..count).map(|_| sample_linear(&mut rng3, ctx)).collect();
    let mut joint = f.clone();
    joint.extend(ells);
    let joint = match Ideal::new(joint) {
        Ok(i) => i,
        Err(_) => return false,
    };
    let expected: u64 = degrees.iter().map(|&d| d as u64).product();
    joint.dimension().map_or(false, |d| d == 0)
        && length_artinian(&joint).map_or(false, |l| l == expected)
}

/// Build an instance around explicitly given generators (the verify CLI
/// path): validates the hypotheses and samples certified linear forms.
pub fn instance_from_parts(f: Vec<Poly>, f_last: Poly, seed: u64) -> Result<AciInstance> {
    if f.is_empty() {
        return Err(Error::Precondition("empty regular sequence".into()));
    }
    let ctx = f[0].ctx().clone();
    if !is_regular_sequence(&f)? {
        return Err(Error::NotRegularSequence);
    }
    let (d_last, homogeneous) = f_last.degree_info();
    let d_last = match (d_last, homogeneous) {
        (Some(d), true) if d >= 1 => d,
        _ => {
            return Err(Error::Precondition(
                "the extra generator must be a nonzero homogeneous form of positive degree".into(),
            ))
        }
    };
    let ci = Ideal::new(f.clone())?;
    if ci.contains(&f_last) {
        return Err(Error::Precondition(
            "the extra generator lies in the ideal of the regular sequence".into(),
        ));
    }
    let mut gens = f.clone();
    gens.push(f_last.clone());
    let full = Ideal::new(gens)?;
    if full.min_generator_count()? != f.len() + 1 {
        return Err(Error::Precondition(format!(
            "the ideal is not minimally generated by {} elements",
            f.len() + 1
        )));
    }
    if full.height()? != f.len() as u32 {
        return Err(Error::Precondition(format!(
            "the full ideal must keep height {} (the extra generator must be a zerodivisor)",
            f.len()
        )));
    }
    let degrees: Vec<u32> = f.iter().map(|g| g.degree().expect("nonzero")).collect();
    let r = degrees.iter().map(|&d| d - 1).sum();
    let ells = general_linear_forms(&ctx, &f, seed)?;
    Ok(AciInstance {
        ctx,
        height: f.len(),
        degrees,
        d_last,
        f,
        f_last,
        r,
        ells,
        seed,
    })
}
