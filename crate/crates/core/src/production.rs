//! Production matrix to output matrix and back.

use crate::error::Result;
use crate::hessenberg::{conjugate_shift_inverse, HessWindow, LowTriWindow};
use crate::scalar::Ring;

/// Rows `0..N` of the output matrix `A = O(Pi)`, from the row recurrence
/// `a_{nk} = sum_i a_{n-1,i} pi_{ik}` with `a_{0k} = delta_{0k}`.
///
/// Row `n` only reads production rows below `n`, so `N - 1` rows of `Pi`
/// are required.
pub fn output_matrix<R: Ring>(pi: &HessWindow<R>, size: usize) -> Result<LowTriWindow<R>> {
    pi.require_rows(size.saturating_sub(1))?;
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(size);
    if size == 0 {
        return LowTriWindow::new(rows);
    }
    rows.push(vec![R::one()]);
    for n in 1..size {
        let prev = &rows[n - 1];
        let mut row = vec![R::zero(); n + 1];
        for (i, a) in prev.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (lo, band) = pi.band_row(i);
            for (off, p) in band.iter().enumerate() {
                row[lo + off] = row[lo + off].clone() + a.clone() * p.clone();
            }
            row[i + 1] = row[i + 1].clone() + a.clone();
        }
        rows.push(row);
    }
    LowTriWindow::new(rows)
}

/// First `N - 1` rows of `Pi = A^{-1} Delta A`.
pub fn production_from_output<R: Ring>(a: &LowTriWindow<R>) -> Result<HessWindow<R>> {
    conjugate_shift_inverse(a)
}

/// Column 0 of `O(Pi)`: the moments `(Pi^n)_{00}` for `n < N`.
pub fn moments_from_production<R: Ring>(pi: &HessWindow<R>, size: usize) -> Result<Vec<R>> {
    Ok(output_matrix(pi, size)?.column(0))
}
