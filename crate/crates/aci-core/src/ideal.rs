//! Ideals of homogeneous polynomials and their algebra.
//!
//! Buchberger's algorithm produces the unique reduced Gröbner basis, which
//! serves as the canonical form behind membership, equality, dimension and
//! the colon/intersection operations. Elimination runs under a block order
//! with one auxiliary variable; the auxiliary variable never appears in any
//! public result.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};


use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{canonical_cmp, merge_scaled, Polynomial};
use crate::ring::RingContext;
use crate::scalar::Scalar;

/// An ideal given by a nonempty list of nonzero homogeneous generators.
///
/// The grevlex reduced Gröbner basis is computed lazily and cached, so
/// repeated membership and equality queries against the same value are
/// cheap. All data is immutable after construction.
pub struct Ideal<C: Scalar> {
    ctx: RingContext,
    gens: Vec<Polynomial<C>>,
    gb_grevlex: OnceLock<Arc<ReducedGroebnerBasis<C>>>,
}

impl<C: Scalar> Clone for Ideal<C> {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(gb) = self.gb_grevlex.get() {
            let _ = cache.set(gb.clone());
        }
        Ideal { ctx: self.ctx.clone(), gens: self.gens.clone(), gb_grevlex: cache }
    }
}

impl<C: Scalar> fmt::Debug for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl<C: Scalar> Ideal<C> {
    /// Validates that generators are nonempty, nonzero, homogeneous and share
    /// one ring context.
    pub fn new(gens: Vec<Polynomial<C>>) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidGenerators("empty generator list".into()))?;
        let ctx = first.ctx().clone();
        for g in &gens {
            if !g.ctx().same_as(&ctx) {
                return Err(Error::ContextMismatch(
                    "all generators must share one ring context".into(),
                ));
            }
            if g.is_zero() {
                return Err(Error::InvalidGenerators("zero generator".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidGenerators(format!(
                    "generator `{g}` is not homogeneous"
                )));
            }
        }
        Ok(Ideal { ctx, gens, gb_grevlex: OnceLock::new() })
    }

    pub fn principal(g: Polynomial<C>) -> Result<Self> {
        Self::new(vec![g])
    }

    /// The homogeneous maximal ideal `(X_1, ..., X_n)`.
    pub fn maximal(ctx: &RingContext) -> Self {
        let gens = (0..ctx.n_vars()).map(|i| Polynomial::variable(ctx, i)).collect();
        Ideal { ctx: ctx.clone(), gens, gb_grevlex: OnceLock::new() }
    }

    pub fn unit(ctx: &RingContext) -> Self {
        Ideal { ctx: ctx.clone(), gens: vec![Polynomial::one(ctx)], gb_grevlex: OnceLock::new() }
    }

    fn from_parts(ctx: RingContext, gens: Vec<Polynomial<C>>) -> Self {
        Ideal { ctx, gens, gb_grevlex: OnceLock::new() }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    /// The cached reduced Gröbner basis under grevlex.
    pub fn gb(&self) -> &ReducedGroebnerBasis<C> {
        self.gb_grevlex.get_or_init(|| {
            Arc::new(groebner_basis(self, MonomialOrder::GrevLex))
        })
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    /// Ideal membership: true iff the normal form of `p` vanishes.
    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        assert!(p.ctx().same_as(&self.ctx), "ring context mismatch");
        self.gb().normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<C>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals: reduced Gröbner bases under the fixed global
    /// order coincide.
    pub fn equals(&self, other: &Ideal<C>) -> bool {
        self.ctx.same_as(&other.ctx) && self.gb().elements() == other.gb().elements()
    }

    /// Ideal sum; the generator list is the concatenation (deduplicated).
    pub fn sum(&self, other: &Ideal<C>) -> Ideal<C> {
        assert!(self.ctx.same_as(&other.ctx), "ring context mismatch");
        let mut gens = self.gens.clone();
        for g in &other.gens {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ideal::from_parts(self.ctx.clone(), gens)
    }

    /// Ideal product; generators are the pairwise products (deduplicated).
    pub fn product(&self, other: &Ideal<C>) -> Ideal<C> {
        assert!(self.ctx.same_as(&other.ctx), "ring context mismatch");
        let mut gens: Vec<Polynomial<C>> = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a * b;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::from_parts(self.ctx.clone(), gens)
    }

    /// `t`-fold product; `power(0)` is the unit ideal.
    pub fn power(&self, t: u32) -> Ideal<C> {
        let mut acc = Ideal::unit(&self.ctx);
        for _ in 0..t {
            acc = acc.product(self);
        }
        acc
    }

    /// Intersection, by eliminating an auxiliary variable `t` from
    /// `t*A + (1-t)*B`. The returned generators are the reduced grevlex
    /// Gröbner basis of the intersection.
    pub fn intersect(&self, other: &Ideal<C>) -> Ideal<C> {
        assert!(self.ctx.same_as(&other.ctx), "ring context mismatch");
        let ext = self.ctx.with_leading_aux();
        let t_mono = Monomial::var(ext.n_vars(), 0);
        let mut gens: Vec<Polynomial<C>> = Vec::new();
        for a in self.gb().elements() {
            gens.push(embed(a, &ext).mul_monomial(&t_mono));
        }
        for b in other.gb().elements() {
            let eb = embed(b, &ext);
            gens.push(&eb - &eb.mul_monomial(&t_mono));
        }
        let gb_ext = buchberger(&gens, MonomialOrder::Block(1), &ext);
        let mut result: Vec<Polynomial<C>> = Vec::new();
        for g in &gb_ext {
            // Under the block order a t-free leading term forces the whole
            // element to be t-free.
            let (_, lm) = g.leading().expect("nonzero basis element");
            if lm.exponents()[0] == 0 {
                let projected = project(g, &self.ctx);
                // The elimination ideal is homogeneous, but split anyway so
                // the generator invariant can never be violated.
                for (_, comp) in projected.homogeneous_components() {
                    result.push(comp);
                }
            }
        }
        let out = Ideal::from_parts(self.ctx.clone(), result);
        // The t-free elements of a reduced Gröbner basis under the block
        // order are the reduced grevlex basis of the intersection; seed the
        // cache with them.
        let gb = ReducedGroebnerBasis {
            elements: out.gens.clone(),
            order: MonomialOrder::GrevLex,
            source: out.gens.clone(),
            ctx: self.ctx.clone(),
        };
        let _ = out.gb_grevlex.set(Arc::new(gb));
        out
    }

    /// Colon by a single nonzero homogeneous polynomial:
    /// `A : g = (A ∩ (g)) / g`, dividing each generator exactly by `g`.
    pub fn colon_single(&self, g: &Polynomial<C>) -> Ideal<C> {
        assert!(!g.is_zero(), "colon by the zero polynomial");
        assert!(g.is_homogeneous(), "colon by an inhomogeneous polynomial");
        if g.n_terms() == 1 && g.leading().unwrap().1.is_one() {
            // g is a unit: A : (c) = A.
            return self.clone();
        }
        let principal = Ideal::from_parts(self.ctx.clone(), vec![g.clone()]);
        let meet = self.intersect(&principal);
        let gens: Vec<Polynomial<C>> = meet
            .gens
            .iter()
            .map(|p| {
                p.exact_div(g)
                    .expect("intersection with (g) must be divisible by g")
            })
            .collect();
        Ideal::from_parts(self.ctx.clone(), gens)
    }

    /// Ideal quotient `A : B`, as the intersection of the colons by the
    /// generators of `B`.
    pub fn colon(&self, other: &Ideal<C>) -> Ideal<C> {
        assert!(self.ctx.same_as(&other.ctx), "ring context mismatch");
        let mut parts = other.gens.iter().map(|g| self.colon_single(g));
        let first = parts.next().expect("nonempty generator list");
        parts.fold(first, |acc, next| acc.intersect(&next))
    }

    /// Krull dimension of `R/I`, read off the leading-term ideal: the
    /// largest size of a variable subset meeting the support of no leading
    /// monomial. Errors on the unit ideal (empty quotient).
    pub fn dimension(&self) -> Result<u32> {
        let gb = self.gb();
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports: Vec<u32> = gb
            .elements()
            .iter()
            .map(|g| g.leading().expect("nonzero").1.support_mask())
            .collect();
        let n = self.ctx.n_vars();
        let mut best = 0u32;
        for mask in 0u32..(1u32 << n) {
            if supports.iter().all(|s| s & !mask != 0) {
                best = best.max(mask.count_ones());
            }
        }
        Ok(best)
    }

    /// Height (codimension) of the ideal: `n - dim R/I`.
    pub fn height(&self) -> Result<u32> {
        Ok(self.ctx.n_vars() as u32 - self.dimension()?)
    }

    /// Size of a minimal homogeneous generating set, obtained by greedily
    /// discarding generators contained in the ideal of the others.
    pub fn min_generator_count(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut gens: Vec<Polynomial<C>> = Vec::new();
        for g in &self.gens {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        gens.sort_by(canonical_cmp);
        'outer: loop {
            if gens.len() == 1 {
                break;
            }
            for i in 0..gens.len() {
                let mut others = gens.clone();
                let candidate = others.remove(i);
                let rest = Ideal::from_parts(self.ctx.clone(), others);
                if rest.contains(&candidate) {
                    gens.remove(i);
                    continue 'outer;
                }
            }
            break;
        }
        Ok(gens.len())
    }
}

/// Forms a regular sequence iff they generate an ideal of full height
/// (the graded Cohen-Macaulay criterion).
pub fn is_regular_sequence<C: Scalar>(forms: &[Polynomial<C>]) -> Result<bool> {
    if forms.is_empty() {
        return Err(Error::Precondition("empty sequence".into()));
    }
    let n = forms[0].ctx().n_vars();
    for f in forms {
        match f.degree_info() {
            (Some(d), true) if d >= 1 => {}
            _ => {
                return Err(Error::Precondition(
                    "regular-sequence test requires nonzero homogeneous forms of positive degree"
                        .into(),
                ))
            }
        }
    }
    if forms.len() > n {
        return Ok(false);
    }
    let ideal = Ideal::new(forms.to_vec())?;
    Ok(ideal.dimension()? as usize == n - forms.len())
}

pub fn ideal_equal<C: Scalar>(a: &Ideal<C>, b: &Ideal<C>) -> bool {
    a.equals(b)
}

/// The reduced Gröbner basis of an ideal under a fixed order: elements are
/// monic, no term of any element is divisible by the leading monomial of
/// another, and the representation is unique for the (ideal, order) pair.
#[derive(Clone)]
pub struct ReducedGroebnerBasis<C: Scalar> {
    elements: Vec<Polynomial<C>>,
    order: MonomialOrder,
    source: Vec<Polynomial<C>>,
    ctx: RingContext,
}

impl<C: Scalar> ReducedGroebnerBasis<C> {
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The ideal this basis was computed from.
    pub fn source(&self) -> Ideal<C> {
        Ideal::from_parts(self.ctx.clone(), self.source.clone())
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].degree() == Some(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| {
                leading_under(g, self.order)
                    .expect("basis elements are nonzero")
                    .1
                    .clone()
            })
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Fully reduced normal form: no term of the result is divisible by any
    /// leading monomial of the basis. Zero iff `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        assert!(p.ctx().same_as(&self.ctx), "ring context mismatch");
        let work: Vec<WorkPoly<C>> = self
            .elements
            .iter()
            .map(|g| WorkPoly::from_polynomial(g, self.order))
            .collect();
        let reduced = normal_form_work(WorkPoly::from_polynomial(p, self.order), &work, None, self.order);
        reduced.into_polynomial(&self.ctx)
    }
}

/// Compute the reduced Gröbner basis of `ideal` under `order`.
pub fn groebner_basis<C: Scalar>(ideal: &Ideal<C>, order: MonomialOrder) -> ReducedGroebnerBasis<C> {
    let elements = buchberger(&ideal.gens, order, &ideal.ctx);
    ReducedGroebnerBasis {
        elements,
        order,
        source: ideal.gens.clone(),
        ctx: ideal.ctx.clone(),
    }
}

/// Normal form of `p` with respect to a reduced basis.
pub fn normal_form<C: Scalar>(p: &Polynomial<C>, gb: &ReducedGroebnerBasis<C>) -> Polynomial<C> {
    gb.normal_form(p)
}

fn leading_under<C: Scalar>(p: &Polynomial<C>, order: MonomialOrder) -> Option<(&C, &Monomial)> {
    if order == MonomialOrder::GrevLex {
        return p.leading().map(|(c, m)| (c, m));
    }
    p.terms()
        .iter()
        .max_by(|a, b| order.compare(&a.1, &b.1))
        .map(|(c, m)| (c, m))
}

/// Working representation inside Buchberger: terms sorted descending under
/// the run's order, coefficients kept content-normalized.
#[derive(Clone, Debug)]
struct WorkPoly<C: Scalar> {
    terms: Vec<(C, Monomial)>,
}

impl<C: Scalar> WorkPoly<C> {
    fn from_polynomial(p: &Polynomial<C>, order: MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if order != MonomialOrder::GrevLex {
            terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        }
        WorkPoly { terms }
    }

    fn into_polynomial(self, ctx: &RingContext) -> Polynomial<C> {
        Polynomial::from_terms(ctx, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &(C, Monomial) {
        &self.terms[0]
    }

    fn normalize_content(&mut self) {
        let mut coeffs: Vec<C> = self.terms.iter().map(|(c, _)| c.clone()).collect();
        C::normalize_content(&mut coeffs);
        for ((c, _), nc) in self.terms.iter_mut().zip(coeffs) {
            *c = nc;
        }
    }

    fn make_monic(&mut self) {
        if let Some((lc, _)) = self.terms.first() {
            let inv = C::one() / lc.clone();
            for (c, _) in &mut self.terms {
                *c = c.clone() * inv.clone();
            }
        }
    }
}

/// `a - scale * x^shift * b`, all sorted under `ord`.
fn work_sub_scaled<C: Scalar>(
    a: &WorkPoly<C>,
    scale: &C,
    shift: &Monomial,
    b: &WorkPoly<C>,
    ord: MonomialOrder,
) -> WorkPoly<C> {
    let neg = C::zero() - scale.clone();
    WorkPoly { terms: merge_scaled(&a.terms, &b.terms, &neg, Some(shift), ord) }
}

/// Full normal form of `p` against `basis` (optionally skipping one index).
fn normal_form_work<C: Scalar>(
    p: WorkPoly<C>,
    basis: &[WorkPoly<C>],
    skip: Option<usize>,
    ord: MonomialOrder,
) -> WorkPoly<C> {
    let mut work = p;
    let mut cursor = 0usize;
    let mut remainder: Vec<(C, Monomial)> = Vec::new();
    'outer: while cursor < work.terms.len() {
        let (lc, lm) = work.terms[cursor].clone();
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip || g.is_zero() {
                continue;
            }
            let (gc, gm) = g.leading();
            if gm.divides(&lm) {
                let shift = lm.quotient(gm).expect("divisibility checked");
                let scale = lc.clone() / gc.clone();
                let tail = WorkPoly { terms: work.terms[cursor..].to_vec() };
                work = work_sub_scaled(&tail, &scale, &shift, g, ord);
                debug_assert!(
                    work.terms.first().map_or(true, |(_, m)| ord.compare(m, &lm) == Ordering::Less),
                    "leading term must strictly drop"
                );
                cursor = 0;
                continue 'outer;
            }
        }
        remainder.push((lc, lm));
        cursor += 1;
    }
    WorkPoly { terms: remainder }
}

type PairKey = (u32, Vec<u16>, usize, usize);

fn pair_key<C: Scalar>(basis: &[WorkPoly<C>], i: usize, j: usize) -> PairKey {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let lcm = basis[lo].leading().1.lcm(&basis[hi].leading().1);
    (lcm.degree(), lcm.exponents().to_vec(), lo, hi)
}

/// Buchberger's algorithm with the product and chain criteria and
/// degree-ascending pair selection, followed by interreduction. Returns the
/// reduced basis, monic, sorted ascending by leading monomial.
fn buchberger<C: Scalar>(
    gens: &[Polynomial<C>],
    order: MonomialOrder,
    ctx: &RingContext,
) -> Vec<Polynomial<C>> {
    let mut basis: Vec<WorkPoly<C>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut w = WorkPoly::from_polynomial(g, order);
        w.normalize_content();
        if !basis.iter().any(|b| b.terms == w.terms) {
            basis.push(w);
        }
    }
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert(pair_key(&basis, i, j));
        }
    }

    while let Some(key) = pairs.iter().next().cloned() {
        pairs.remove(&key);
        let (_, lcm_exps, i, j) = key;
        let lcm = Monomial::from_exponents(lcm_exps);
        let (lci, lmi) = basis[i].leading().clone();
        let (lcj, lmj) = basis[j].leading().clone();
        // Product criterion: coprime leading monomials reduce to zero.
        if lmi.is_coprime_with(&lmj) {
            continue;
        }
        // Chain criterion: some k divides the lcm and both mixed pairs have
        // already been handled.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().1.divides(&lcm)
                && !pairs.contains(&pair_key(&basis, i, k))
                && !pairs.contains(&pair_key(&basis, j, k))
        });
        if chained {
            continue;
        }
        // S-polynomial: cancel the scaled leading terms.
        let ui = lcm.quotient(&lmi).expect("lcm divisibility");
        let uj = lcm.quotient(&lmj).expect("lcm divisibility");
        let lifted = WorkPoly {
            terms: basis[i].terms.iter().map(|(c, m)| (c.clone(), m.mul(&ui))).collect(),
        };
        let scale = lci.clone() / lcj.clone();
        let spoly = work_sub_scaled(&lifted, &scale, &uj, &basis[j], order);
        let mut reduced = normal_form_work(spoly, &basis, None, order);
        if reduced.is_zero() {
            continue;
        }
        reduced.normalize_content();
        let new_index = basis.len();
        basis.push(reduced);
        for k in 0..new_index {
            pairs.insert(pair_key(&basis, k, new_index));
        }
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // leading monomial divides. Ascending order puts divisors first.
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| order.compare(&basis[a].leading().1, &basis[b].leading().1));
    let mut kept: Vec<WorkPoly<C>> = Vec::new();
    for idx in order_idx {
        let lm = &basis[idx].leading().1;
        if !kept.iter().any(|k| k.leading().1.divides(lm)) {
            kept.push(basis[idx].clone());
        }
    }

    // Tail-reduce to the unique reduced basis.
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let current = kept[i].clone();
            let reduced = normal_form_work(current.clone(), &kept, Some(i), order);
            if reduced.terms != current.terms {
                let mut r = reduced;
                r.normalize_content();
                kept[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    for g in &mut kept {
        g.make_monic();
    }
    kept.sort_by(|a, b| order.compare(&a.leading().1, &b.leading().1));
    kept.into_iter().map(|w| w.into_polynomial(ctx)).collect()
}

/// Map a polynomial into the context extended by a leading auxiliary
/// variable (exponent vectors shift right by one).
fn embed<C: Scalar>(p: &Polynomial<C>, ext: &RingContext) -> Polynomial<C> {
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut exps = Vec::with_capacity(m.n_vars() + 1);
            exps.push(0u16);
            exps.extend_from_slice(m.exponents());
            (c.clone(), Monomial::from_exponents(exps))
        })
        .collect();
    Polynomial::from_terms(ext, terms)
}

/// Inverse of [`embed`] for polynomials free of the auxiliary variable.
fn project<C: Scalar>(p: &Polynomial<C>, ctx: &RingContext) -> Polynomial<C> {
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| {
            assert_eq!(m.exponents()[0], 0, "projection of a term containing the auxiliary variable");
            (c.clone(), Monomial::from_exponents(m.exponents()[1..].to_vec()))
        })
        .collect();
    Polynomial::from_terms(ctx, terms)
}
