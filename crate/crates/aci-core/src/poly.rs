//! Multivariate polynomials with exact coefficients in canonical form.
//!
//! Terms are stored strictly descending in graded reverse lexicographic
//! order with no zero coefficients, so structural equality coincides with
//! mathematical equality. Gröbner computations under other orders re-sort
//! internally; the stored form never changes.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::RingContext;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C: Scalar> {
    ctx: RingContext,
    /// `(coefficient, monomial)` pairs, strictly descending in grevlex.
    terms: Vec<(C, Monomial)>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(ctx: &RingContext) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &RingContext) -> Self {
        Self::constant(ctx, C::one())
    }

    pub fn constant(ctx: &RingContext, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(c, Monomial::one(ctx.n_vars()))],
        }
    }

    pub fn variable(ctx: &RingContext, index: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(C::one(), Monomial::var(ctx.n_vars(), index))],
        }
    }

    pub fn monomial(ctx: &RingContext, c: C, m: Monomial) -> Self {
        assert_eq!(m.n_vars(), ctx.n_vars(), "variable count mismatch");
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial { ctx: ctx.clone(), terms: vec![(c, m)] }
    }

    /// Build a polynomial from arbitrary `(coefficient, monomial)` pairs,
    /// merging repeated monomials and dropping zeros.
    pub fn from_terms(ctx: &RingContext, terms: Vec<(C, Monomial)>) -> Self {
        for (_, m) in &terms {
            assert_eq!(m.n_vars(), ctx.n_vars(), "variable count mismatch");
        }
        Polynomial { ctx: ctx.clone(), terms: canonicalize(terms) }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn terms(&self) -> &[(C, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the grevlex storage order.
    pub fn leading(&self) -> Option<&(C, Monomial)> {
        self.terms.first()
    }

    /// `(degree, homogeneous)`; the zero polynomial has no degree and is
    /// homogeneous by convention.
    pub fn degree_info(&self) -> (Option<u32>, bool) {
        let mut max = None::<u32>;
        let mut min = None::<u32>;
        for (_, m) in &self.terms {
            let d = m.degree();
            max = Some(max.map_or(d, |x| x.max(d)));
            min = Some(min.map_or(d, |x| x.min(d)));
        }
        (max, max == min)
    }

    pub fn degree(&self) -> Option<u32> {
        self.degree_info().0
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_info().1
    }

    /// Split into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial<C>> {
        let mut parts: BTreeMap<u32, Vec<(C, Monomial)>> = BTreeMap::new();
        for (c, m) in &self.terms {
            parts.entry(m.degree()).or_default().push((c.clone(), m.clone()));
        }
        parts
            .into_iter()
            .map(|(d, terms)| (d, Polynomial { ctx: self.ctx.clone(), terms }))
            .collect()
    }

    pub fn scaled(&self, c: &C) -> Polynomial<C> {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a.clone() * c.clone(), m.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial<C> {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, t)| (c.clone(), t.mul(m)))
                .collect(),
        }
    }

    /// Leading coefficient scaled to one.
    pub fn monic(&self) -> Polynomial<C> {
        match self.leading() {
            None => self.clone(),
            Some((lc, _)) => {
                let inv = C::one() / lc.clone();
                self.scaled(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial<C> {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by `divisor`; `None` if the division has a remainder.
    pub fn exact_div(&self, divisor: &Polynomial<C>) -> Option<Polynomial<C>> {
        assert!(self.ctx.same_as(&divisor.ctx), "ring context mismatch");
        let (dc, dm) = divisor.leading().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot: Vec<(C, Monomial)> = Vec::new();
        while let Some((lc, lm)) = rem.leading() {
            let qm = lm.quotient(dm)?;
            let qc = lc.clone() / dc.clone();
            let piece = Polynomial::monomial(&self.ctx, qc.clone(), qm.clone());
            rem = &rem - &(divisor * &piece);
            quot.push((qc, qm));
        }
        Some(Polynomial::from_terms(&self.ctx, quot))
    }

    fn assert_compatible(&self, other: &Polynomial<C>) {
        assert!(self.ctx.same_as(&other.ctx), "ring context mismatch");
    }
}

/// Sort descending in grevlex, merge duplicates, drop zeros.
fn canonicalize<C: Scalar>(mut terms: Vec<(C, Monomial)>) -> Vec<(C, Monomial)> {
    let ord = MonomialOrder::GrevLex;
    terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
    let mut out: Vec<(C, Monomial)> = Vec::with_capacity(terms.len());
    for (c, m) in terms {
        match out.last_mut() {
            Some((lc, lm)) if *lm == m => {
                *lc = lc.clone() + c;
                if lc.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !c.is_zero() {
                    out.push((c, m));
                }
            }
        }
    }
    out
}

/// Merge two term lists sorted descending under `ord` as `a + scale * b`.
pub(crate) fn merge_scaled<C: Scalar>(
    a: &[(C, Monomial)],
    b: &[(C, Monomial)],
    scale: &C,
    shift: Option<&Monomial>,
    ord: MonomialOrder,
) -> Vec<(C, Monomial)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let bterm = |j: usize| -> (C, Monomial) {
        let (c, m) = &b[j];
        let m = match shift {
            Some(s) => m.mul(s),
            None => m.clone(),
        };
        (c.clone() * scale.clone(), m)
    };
    while i < a.len() && j < b.len() {
        let bj = bterm(j);
        match ord.compare(&a[i].1, &bj.1) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(bj);
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].0.clone() + bj.0;
                if !c.is_zero() {
                    out.push((c, bj.1));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(bterm(j));
        j += 1;
    }
    out
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.assert_compatible(rhs);
        Polynomial {
            ctx: self.ctx.clone(),
            terms: merge_scaled(&self.terms, &rhs.terms, &C::one(), None, MonomialOrder::GrevLex),
        }
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.assert_compatible(rhs);
        let minus_one = C::zero() - C::one();
        Polynomial {
            ctx: self.ctx.clone(),
            terms: merge_scaled(&self.terms, &rhs.terms, &minus_one, None, MonomialOrder::GrevLex),
        }
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let minus_one = C::zero() - C::one();
        self.scaled(&minus_one)
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.assert_compatible(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(existing) => *existing = existing.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: canonicalize(acc.into_iter().map(|(m, c)| (c, m)).collect()),
        }
    }
}

/// Deterministic total order on polynomials of one context: by degree, then
/// termwise by monomial and coefficient. Used only to fix output orderings.
pub fn canonical_cmp<C: Scalar>(a: &Polynomial<C>, b: &Polynomial<C>) -> Ordering {
    let ord = MonomialOrder::GrevLex;
    let da = a.degree().unwrap_or(0);
    let db = b.degree().unwrap_or(0);
    da.cmp(&db).then_with(|| {
        for ((ca, ma), (cb, mb)) in a.terms.iter().zip(&b.terms) {
            match ord.compare(ma, mb) {
                Ordering::Equal => {}
                o => return o,
            }
            match ca.partial_cmp(cb) {
                Some(Ordering::Equal) | None => {}
                Some(o) => return o,
            }
        }
        a.terms.len().cmp(&b.terms.len())
    })
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    /// Deterministic printer for the expression grammar accepted by
    /// [`Polynomial::parse`]: terms descending in grevlex, explicit `*`,
    /// exponents as `^k`, rational coefficients as `a` or `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                for (v, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ctx.var_name(v))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    fn ctx() -> RingContext {
        RingContext::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial<Coeff> {
        Polynomial::parse(s, &ctx()).unwrap()
    }

    #[test]
    fn addition_cancels() {
        assert_eq!(&p("x + y") + &p("-x"), p("y"));
        assert_eq!(&p("x") - &p("x"), Polynomial::zero(&ctx()));
    }

    #[test]
    fn multiplication() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        let zero = Polynomial::zero(&ctx());
        assert_eq!(&zero * &p("x^3 + 2*y"), zero);
    }

    #[test]
    fn degree_info_examples() {
        assert_eq!(p("x^2 + y^2").degree_info(), (Some(2), true));
        assert_eq!(p("x^2 + y").degree_info(), (Some(2), false));
        assert_eq!(Polynomial::<Coeff>::zero(&ctx()).degree_info(), (None, true));
    }

    #[test]
    fn product_of_homogeneous_is_homogeneous() {
        let a = p("x^2 - 2*x*y");
        let b = p("x + y");
        let prod = &a * &b;
        assert_eq!(prod.degree_info(), (Some(3), true));
    }

    #[test]
    fn exact_division() {
        let prod = &p("x^2 - y^2") * &p("x + 3*y");
        assert_eq!(prod.exact_div(&p("x + 3*y")).unwrap(), p("x^2 - y^2"));
        assert!(p("x^2 + y^2").exact_div(&p("x + y")).is_none());
    }

    #[test]
    fn display_is_deterministic_grammar() {
        assert_eq!(p("y^2 + x^2").to_string(), "x^2 + y^2");
        assert_eq!(p("-x - 1/2*y").to_string(), "-x - 1/2*y");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("2*x*y - x^2").to_string(), "-x^2 + 2*x*y");
    }
}
