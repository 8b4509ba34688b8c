//! Exact dense linear algebra over the coefficient field.
//!
//! Ranks and kernels are decided by exact zero tests; there are no
//! tolerances anywhere. Matrices are row-major `Vec<Vec<C>>`.

use crate::scalar::Scalar;

pub type Matrix<C> = Vec<Vec<C>>;

pub fn is_zero_matrix<C: Scalar>(m: &Matrix<C>) -> bool {
    m.iter().all(|row| row.iter().all(|c| c.is_zero()))
}

/// Matrix product `a * b`; `a` is `r x k`, `b` is `k x c`.
pub fn mul<C: Scalar>(a: &Matrix<C>, b: &Matrix<C>, cols_b: usize) -> Matrix<C> {
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        let mut new_row = vec![C::zero(); cols_b];
        for (k, coeff) in row.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (j, v) in b[k].iter().enumerate() {
                if !v.is_zero() {
                    new_row[j] = new_row[j].clone() + coeff.clone() * v.clone();
                }
            }
        }
        out.push(new_row);
    }
    out
}

/// Row-reduce in place; returns the pivot columns. Pivot selection is the
/// first row with a nonzero entry, so the result is deterministic.
fn row_reduce<C: Scalar>(m: &mut Matrix<C>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = C::one() / m[row][col].clone();
        for v in m[row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = factor.clone() * m[row][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank<C: Scalar>(mut m: Matrix<C>, cols: usize) -> usize {
    row_reduce(&mut m, cols).len()
}

/// Basis of the right kernel `{v : m v = 0}`, one vector per free column,
/// in ascending column order. Each vector has a `1` in its free coordinate.
pub fn kernel_basis<C: Scalar>(mut m: Matrix<C>, cols: usize) -> Vec<Vec<C>> {
    let pivots = row_reduce(&mut m, cols);
    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![C::zero(); cols];
        v[free] = C::one();
        for (row, &pc) in pivots.iter().enumerate() {
            if pc < free {
                v[pc] = C::zero() - m[row][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}
