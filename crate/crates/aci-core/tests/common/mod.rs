//! Shared helpers for integration tests: deterministic small-ideal
//! generation and an independent brute-force Gröbner oracle.

#![allow(dead_code)]

use std::cmp::Ordering;

use aci_core::generate::SplitMix64;
use aci_core::hilbert::monomials_of_degree;
use aci_core::monomial::{Monomial, MonomialOrder};
use aci_core::poly::Polynomial;
use aci_core::scalar::Scalar as _;
use aci_core::{Coeff, Ideal, Poly, RingContext};

pub fn ctx(names: &[&str]) -> RingContext {
    RingContext::new(names.iter().copied()).unwrap()
}

pub fn poly(ctx: &RingContext, s: &str) -> Poly {
    ctx.poly(s).unwrap()
}

pub fn ideal(ctx: &RingContext, gens: &[&str]) -> Ideal {
    Ideal::new(gens.iter().map(|s| poly(ctx, s)).collect()).unwrap()
}

/// Random homogeneous polynomial of the given degree with small integer
/// coefficients; may be zero.
pub fn random_form(rng: &mut SplitMix64, ctx: &RingContext, degree: u32, bound: i64) -> Poly {
    let terms: Vec<(Coeff, Monomial)> = monomials_of_degree(ctx.n_vars(), degree)
        .into_iter()
        .map(|m| (Coeff::from_int(rng.next_range(-bound, bound)), m))
        .collect();
    Polynomial::from_terms(ctx, terms)
}

/// Random small homogeneous ideal: `count` nonzero forms of degree 1..=3.
pub fn random_small_ideal(rng: &mut SplitMix64, ctx: &RingContext, count: usize) -> Ideal {
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let degree = rng.next_range(1, 3) as u32;
        let f = random_form(rng, ctx, degree, 3);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    Ideal::new(gens).unwrap()
}

/// Leading term of `p` under `ord`.
fn leading<'a>(p: &'a Poly, ord: MonomialOrder) -> (&'a Coeff, &'a Monomial) {
    p.terms()
        .iter()
        .max_by(|a, b| ord.compare(&a.1, &b.1))
        .map(|(c, m)| (c, m))
        .expect("nonzero polynomial")
}

/// Plain long division: repeatedly cancel the leading term of `p` by the
/// first divisor whose leading monomial divides it. No normal-selection
/// strategy, no criteria — deliberately different from the engine.
pub fn naive_reduce(p: &Poly, divisors: &[Poly], ord: MonomialOrder) -> Poly {
    let ctx = p.ctx().clone();
    let mut rem = Polynomial::zero(&ctx);
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let (wc, wm) = leading(&work, ord);
        let (wc, wm) = (wc.clone(), wm.clone());
        for g in divisors {
            if g.is_zero() {
                continue;
            }
            let (gc, gm) = leading(g, ord);
            if let Some(q) = wm.quotient(gm) {
                let scale = wc.clone() / gc.clone();
                let piece = Polynomial::monomial(&ctx, scale, q);
                work = &work - &(g * &piece);
                continue 'outer;
            }
        }
        let head = Polynomial::monomial(&ctx, wc.clone(), wm.clone());
        rem = &rem + &head;
        work = &work - &head;
    }
    rem
}

fn s_polynomial(a: &Poly, b: &Poly, ord: MonomialOrder) -> Poly {
    let ctx = a.ctx().clone();
    let (ac, am) = leading(a, ord);
    let (bc, bm) = leading(b, ord);
    let lcm = am.lcm(bm);
    let ua = Polynomial::monomial(&ctx, Coeff::from_int(1) / ac.clone(), lcm.quotient(am).unwrap());
    let ub = Polynomial::monomial(&ctx, Coeff::from_int(1) / bc.clone(), lcm.quotient(bm).unwrap());
    &(a * &ua) - &(b * &ub)
}

/// Brute-force Buchberger closure plus naive interreduction. Quadratic pair
/// scanning, no pair criteria, no content tricks: an independent oracle for
/// the optimized engine.
pub fn naive_groebner(gens: &[Poly], ord: MonomialOrder) -> Vec<Poly> {
    let ctx = gens[0].ctx().clone();
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    loop {
        let mut additions: Vec<Poly> = Vec::new();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let s = s_polynomial(&basis[i], &basis[j], ord);
                let r = naive_reduce(&s, &basis, ord);
                if !r.is_zero() {
                    additions.push(r);
                }
            }
        }
        if additions.is_empty() {
            break;
        }
        // Add one at a time so later reductions see the enlarged basis.
        basis.push(additions.swap_remove(0));
    }
    // Minimalize.
    let mut minimal: Vec<Poly> = Vec::new();
    for i in 0..basis.len() {
        let (_, lm) = leading(&basis[i], ord);
        let dominated = basis.iter().enumerate().any(|(j, other)| {
            if i == j {
                return false;
            }
            let (_, om) = leading(other, ord);
            om.divides(lm) && (om != lm || j < i)
        });
        if !dominated {
            minimal.push(basis[i].clone());
        }
    }
    // Tail-reduce to the reduced basis.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = naive_reduce(&minimal[i], &others, ord);
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut minimal {
        let (c, _) = leading(g, ord);
        let inv = Coeff::from_int(1) / c.clone();
        *g = g.scaled(&inv);
    }
    minimal.sort_by(|a, b| {
        let (_, am) = leading(a, ord);
        let (_, bm) = leading(b, ord);
        ord.compare(am, bm)
    });
    minimal
}

/// Total order for comparing polynomial lists element by element.
pub fn poly_sort_key(a: &Poly, b: &Poly) -> Ordering {
    aci_core::poly::canonical_cmp(a, b)
}
