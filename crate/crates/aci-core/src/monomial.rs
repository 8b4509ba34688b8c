//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// A monomial in a fixed number of variables, stored as an exponent vector
/// with a cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
    deg: u32,
}

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial { exps: vec![0; n_vars], deg: 0 }
    }

    pub fn var(n_vars: usize, index: usize) -> Self {
        assert!(index < n_vars, "variable index out of range");
        let mut exps = vec![0; n_vars];
        exps[index] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn var_power(n_vars: usize, index: usize, exp: u16) -> Self {
        assert!(index < n_vars, "variable index out of range");
        let mut exps = vec![0; n_vars];
        exps[index] = exp;
        Monomial { exps, deg: exp as u32 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / divisor`, if the division is exact.
    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), divisor.exps.len());
        if divisor.deg > self.deg {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&divisor.exps) {
            if b > a {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps, deg: self.deg - divisor.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables with a positive exponent.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// A total, multiplicative monomial order.
///
/// `Block(k)` eliminates the first `k` variables: it compares the leading
/// block lexicographically and breaks ties by graded reverse lexicographic
/// order on the remaining variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.exps.len(), b.exps.len(), "variable count mismatch");
        match *self {
            MonomialOrder::GrevLex => grevlex(&a.exps, a.deg, &b.exps, b.deg),
            MonomialOrder::Lex => lex(&a.exps, &b.exps),
            MonomialOrder::Block(k) => {
                let k = k.min(a.exps.len());
                match lex(&a.exps[..k], &b.exps[..k]) {
                    Ordering::Equal => {
                        let da = a.deg - a.exps[..k].iter().map(|&e| e as u32).sum::<u32>();
                        let db = b.deg - b.exps[..k].iter().map(|&e| e as u32).sum::<u32>();
                        grevlex(&a.exps[k..], da, &b.exps[k..], db)
                    }
                    ord => ord,
                }
            }
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Graded reverse lexicographic: higher total degree wins; on equal degree
/// the monomial whose *last* differing exponent is smaller wins.
fn grevlex(a: &[u16], da: u32, b: &[u16], db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (&x, &y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        // x*y vs z^2 in three variables: degrees tie, the exponent
        // difference (1, 1, -2) has a negative last nonzero entry.
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.compare(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        // Degree dominates.
        assert_eq!(ord.compare(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[2, 0, 1]), &m(&[2, 0, 1])), Ordering::Equal);
    }

    #[test]
    fn lex_examples() {
        let ord = MonomialOrder::Lex;
        // x vs y^5 with x > y.
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_leading_variables() {
        // Block(1) on (t, x, y): any monomial containing t beats any without.
        let ord = MonomialOrder::Block(1);
        assert_eq!(ord.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // Ties fall through to grevlex on the tail.
        assert_eq!(ord.compare(&m(&[1, 1, 1]), &m(&[1, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.quotient(&b).unwrap(), m(&[1, 1, 0]));
        assert!(a.quotient(&m(&[0, 0, 1])).is_none());
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert!(m(&[1, 0, 0]).is_coprime_with(&m(&[0, 2, 1])));
    }
}
