//! Graded socle of an Artinian quotient.
//!
//! The socle of `R/I` is the annihilator of the maximal ideal, computed
//! degree by degree as the kernel of multiplication by all variables on the
//! standard-monomial basis.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hilbert::graded_basis;
use crate::ideal::Ideal;
use crate::linalg::{kernel_basis, Matrix};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Socle of an Artinian quotient: per-degree dimensions and one normalized
/// representative per kernel basis vector.
#[derive(Clone, Debug)]
pub struct SocleData<C: Scalar> {
    /// Degree -> socle dimension in that degree (only nonzero entries).
    pub by_degree: BTreeMap<u32, usize>,
    /// Monic normal-form representatives, grouped by ascending degree.
    pub generators: Vec<Polynomial<C>>,
}

impl<C: Scalar> SocleData<C> {
    pub fn total_dimension(&self) -> usize {
        self.by_degree.values().sum()
    }

    /// The unique degree carrying the socle, if it is concentrated in one.
    pub fn pure_degree(&self) -> Option<u32> {
        if self.by_degree.len() == 1 {
            self.by_degree.keys().next().copied()
        } else {
            None
        }
    }
}

/// Compute the socle `(I : m) / I` of an Artinian quotient `R/I`.
pub fn socle<C: Scalar>(ideal: &Ideal<C>) -> Result<SocleData<C>> {
    let dim = ideal.dimension()?;
    if dim != 0 {
        return Err(Error::NonArtinian { dim });
    }
    let ctx = ideal.ctx().clone();
    let n = ctx.n_vars();
    let basis = graded_basis(ideal)?;
    let gb = ideal.gb();

    let mut by_degree = BTreeMap::new();
    let mut generators = Vec::new();
    for (&d, slice) in &basis.by_degree {
        let above = basis.basis_at(d + 1);
        let index_above: HashMap<&Monomial, usize> =
            above.iter().enumerate().map(|(i, m)| (m, i)).collect();
        // Stacked multiplication maps: rows are (variable, basis monomial of
        // degree d+1), columns are basis monomials of degree d.
        let mut matrix: Matrix<C> = vec![vec![C::zero(); slice.len()]; n * above.len()];
        for (col, u) in slice.iter().enumerate() {
            for var in 0..n {
                let shifted = u.mul(&Monomial::var(n, var));
                let image = gb.normal_form(&Polynomial::monomial(&ctx, C::one(), shifted));
                for (c, m) in image.terms() {
                    let row = var * above.len()
                        + index_above
                            .get(m)
                            .copied()
                            .expect("normal form lies in the standard basis");
                    matrix[row][col] = c.clone();
                }
            }
        }
        let kernel = kernel_basis(matrix, slice.len());
        if kernel.is_empty() {
            continue;
        }
        by_degree.insert(d, kernel.len());
        for v in kernel {
            let terms: Vec<(C, Monomial)> = v
                .into_iter()
                .zip(slice.iter())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, m)| (c, m.clone()))
                .collect();
            let poly = Polynomial::from_terms(&ctx, terms).monic();
            generators.push(poly);
        }
    }
    Ok(SocleData { by_degree, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ideal(ctx: &RingContext, gens: &[&str]) -> crate::Ideal {
        Ideal::new(gens.iter().map(|s| ctx.poly(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn monomial_complete_intersection() {
        // k[x,y]/(x^2, y^3): one socle generator x*y^2 in degree 3.
        let ctx = RingContext::new(["x", "y"]).unwrap();
        let data = socle(&ideal(&ctx, &["x^2", "y^3"])).unwrap();
        assert_eq!(data.by_degree.len(), 1);
        assert_eq!(data.by_degree.get(&3), Some(&1));
        assert_eq!(data.generators.len(), 1);
        assert_eq!(data.generators[0], ctx.poly("x*y^2").unwrap());
    }

    #[test]
    fn residue_field_socle_is_one() {
        let ctx = RingContext::new(["x", "y"]).unwrap();
        let data = socle(&crate::Ideal::maximal(&ctx)).unwrap();
        assert_eq!(data.by_degree.get(&0), Some(&1));
        assert_eq!(data.total_dimension(), 1);
        assert_eq!(data.pure_degree(), Some(0));
    }

    #[test]
    fn socle_concentrated_in_twice_the_reduction_number() {
        // (ell^{r+1}, f) with f = x^2, ell = y, r = 1: socle in degree 2.
        let ctx = RingContext::new(["x", "y"]).unwrap();
        let data = socle(&ideal(&ctx, &["y^2", "x^2"])).unwrap();
        assert_eq!(data.pure_degree(), Some(2));
        assert_eq!(data.total_dimension(), 1);
    }

    #[test]
    fn socle_representatives_are_annihilated() {
        let ctx = RingContext::new(["x", "y", "z"]).unwrap();
        let i = ideal(&ctx, &["x^2 - y*z", "y^2", "z^3", "x*z^2"]);
        let i = Ideal::new(
            i.generators()
                .iter()
                .cloned()
                .chain(std::iter::once(ctx.poly("z*y - x^2").unwrap()))
                .collect(),
        )
        .unwrap();
        let data = socle(&i).unwrap();
        assert!(data.total_dimension() > 0);
        for s in &data.generators {
            assert!(!i.contains(s), "representative must be nonzero in the quotient");
            for v in 0..3 {
                let shifted = s * &crate::Poly::variable(&ctx, v);
                assert!(i.contains(&shifted), "socle element not annihilated by variable {v}");
            }
        }
    }

    #[test]
    fn socle_dimensions_match_colon_route() {
        // Independent route: dim soc_d = hf(R/I, d) - hf(R/(I : m), d).
        let ctx = RingContext::new(["x", "y"]).unwrap();
        let i = ideal(&ctx, &["x^3", "x*y^2 + y^3"]);
        let data = socle(&i).unwrap();
        let colon = i.colon(&crate::Ideal::maximal(&ctx));
        let top = graded_basis(&i).unwrap().top_degree();
        for d in 0..=top {
            let via_kernel = data.by_degree.get(&d).copied().unwrap_or(0) as u64;
            let via_colon = crate::hilbert::hilbert_function(&i, d).unwrap()
                - crate::hilbert::hilbert_function(&colon, d).unwrap();
            assert_eq!(via_kernel, via_colon, "degree {d}");
        }
    }

    #[test]
    fn rejects_positive_dimension() {
        let ctx = RingContext::new(["x", "y"]).unwrap();
        assert!(matches!(
            socle(&ideal(&ctx, &["x^2"])),
            Err(Error::NonArtinian { dim: 1 })
        ));
    }
}
