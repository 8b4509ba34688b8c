//! The ambient graded polynomial ring: an ordered list of variable names.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the number of variables (exponent vectors stay small).
pub const MAX_VARS: usize = 16;

/// Shared, immutable description of the ambient ring `k[X_1, ..., X_n]`.
///
/// The coefficient field is fixed by the scalar type used in polynomials;
/// the context only carries variable names and arity. Contexts compare by
/// value (same names in the same order), so independently constructed but
/// identical contexts are interchangeable.
#[derive(Clone)]
pub struct RingContext {
    inner: Arc<Vec<String>>,
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable required".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidContext(format!(
                "at most {MAX_VARS} variables supported, got {}",
                names.len()
            )));
        }
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(Self { inner: Arc::new(names) })
    }

    /// Convenience constructor with names `x1, ..., xn` (or `x, y, z, w` for
    /// up to four variables).
    pub fn with_arity(n: usize) -> Result<Self> {
        const LETTERS: [&str; 4] = ["x", "y", "z", "w"];
        if (1..=4).contains(&n) {
            Self::new(LETTERS[..n].iter().copied())
        } else {
            Self::new((1..=n).map(|i| format!("x{i}")))
        }
    }

    pub fn n_vars(&self) -> usize {
        self.inner.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.inner
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.inner[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.iter().position(|v| v == name)
    }

    pub fn same_as(&self, other: &RingContext) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }

    /// Extended context with one auxiliary variable prepended, used
    /// internally for elimination. The auxiliary name never collides with
    /// an existing variable and never escapes public results.
    pub(crate) fn with_leading_aux(&self) -> RingContext {
        let mut aux = String::from("t");
        while self.inner.contains(&aux) {
            aux.push('_');
        }
        let mut names = Vec::with_capacity(self.inner.len() + 1);
        names.push(aux);
        names.extend(self.inner.iter().cloned());
        // One extra slot above MAX_VARS is fine internally.
        RingContext { inner: Arc::new(names) }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for RingContext {}

impl Hash for RingContext {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingContext[{}]", self.inner.join(", "))
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.inner.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_contexts() {
        assert!(RingContext::new(Vec::<String>::new()).is_err());
        assert!(RingContext::new(["x", "x"]).is_err());
        assert!(RingContext::new(["x", ""]).is_err());
        assert!(RingContext::new(["x", "2y"]).is_err());
        assert!(RingContext::new((1..=17).map(|i| format!("x{i}"))).is_err());
    }

    #[test]
    fn value_equality() {
        let a = RingContext::new(["x", "y"]).unwrap();
        let b = RingContext::new(["x", "y"]).unwrap();
        let c = RingContext::new(["y", "x"]).unwrap();
        assert!(a.same_as(&b));
        assert!(!a.same_as(&c));
    }

    #[test]
    fn aux_name_avoids_collisions() {
        let ctx = RingContext::new(["t", "t_"]).unwrap();
        let ext = ctx.with_leading_aux();
        assert_eq!(ext.n_vars(), 3);
        assert_eq!(ext.var_name(0), "t__");
        assert_eq!(ext.var_name(1), "t");
    }
}
