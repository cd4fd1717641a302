//! Finite windows of unit-lower-Hessenberg, unit-lower-triangular and dense
//! matrices.
//!
//! The matrices of the theory are infinite; every operation here works on a
//! top-left window and states how many rows it needs. All defining
//! recurrences are row-local, so a large enough window gives exact entries.

use crate::error::{Error, Result};
use crate::functionals::MonicPolySeq;
use crate::scalar::Ring;
use crate::unipoly::UniPoly;

/// Top-left `N x N` window of a unit-lower-Hessenberg matrix.
///
/// Row `n` stores the entries at columns `max(0, n-d) ..= n`; the
/// superdiagonal is implicitly 1 and everything else implicitly 0. When a
/// band `d` is declared the matrix is `(d,1)`-banded by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessWindow<R> {
    band: Option<usize>,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> HessWindow<R> {
    fn lo(band: Option<usize>, n: usize) -> usize {
        band.map_or(0, |d| n.saturating_sub(d))
    }

    /// Builds the window from `entry(n, k)` for `max(0, n-d) <= k <= n`.
    pub fn from_fn(size: usize, band: Option<usize>, entry: impl Fn(usize, usize) -> R) -> Self {
        let rows = (0..size)
            .map(|n| (Self::lo(band, n)..=n).map(|k| entry(n, k)).collect())
            .collect();
        HessWindow { band, rows }
    }

    /// `rows[n]` holds the in-band entries of row `n`, columns
    /// `max(0, n-d) ..= n`, without the superdiagonal 1.
    pub fn from_band_rows(band: Option<usize>, rows: Vec<Vec<R>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            let expected = n + 1 - Self::lo(band, n);
            if row.len() != expected {
                return Err(Error::InvalidInput(format!(
                    "row {n} has {} entries, expected {expected}",
                    row.len()
                )));
            }
        }
        Ok(HessWindow { band, rows })
    }

    /// Builds from full lower rows (`rows[n]` has entries for columns `0..=n`),
    /// enforcing the band when one is declared.
    pub fn from_lower_rows(band: Option<usize>, rows: Vec<Vec<R>>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for (n, row) in rows.into_iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::InvalidInput(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            let lo = Self::lo(band, n);
            if let Some(k) = row[..lo].iter().position(|c| !c.is_zero()) {
                return Err(Error::BandViolation { row: n, col: k });
            }
            out.push(row[lo..].to_vec());
        }
        Ok(HessWindow { band, rows: out })
    }

    /// Reads the strictly-Hessenberg part of a dense window, checking that it
    /// vanishes above the superdiagonal and has 1 on it.
    pub fn from_dense(m: &DenseWindow<R>, band: Option<usize>) -> Result<Self> {
        let size = m.size();
        for i in 0..size {
            for j in i + 1..size {
                let v = m.get(i, j);
                let ok = if j == i + 1 { v.is_one() } else { v.is_zero() };
                if !ok {
                    return Err(Error::Consistency(format!(
                        "not unit-lower-Hessenberg at ({i}, {j})"
                    )));
                }
            }
        }
        Self::from_lower_rows(band, (0..size).map(|i| (0..=i).map(|j| m.get(i, j)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn band(&self) -> Option<usize> {
        self.band
    }

    /// Entry `(n, k)` of the infinite matrix, for any `k`, with `n` inside
    /// the window.
    pub fn get(&self, n: usize, k: usize) -> R {
        if k == n + 1 {
            return R::one();
        }
        if k > n {
            return R::zero();
        }
        let lo = Self::lo(self.band, n);
        if k < lo {
            return R::zero();
        }
        self.rows[n][k - lo].clone()
    }

    /// The stored in-band part of row `n` and the column it starts at.
    pub fn band_row(&self, n: usize) -> (usize, &[R]) {
        (Self::lo(self.band, n), &self.rows[n])
    }

    /// Smallest `d` with `pi[n][k] = 0` for all `k < n - d` in the window.
    pub fn detect_band(&self) -> usize {
        let mut d = 0;
        for n in 0..self.size() {
            let (lo, row) = self.band_row(n);
            if let Some(pos) = row.iter().position(|c| !c.is_zero()) {
                d = d.max(n - (lo + pos));
            }
        }
        d
    }

    /// Re-declares the band, failing if some entry lies outside it.
    pub fn with_band(&self, band: Option<usize>) -> Result<Self> {
        let rows = (0..self.size())
            .map(|n| (0..=n).map(|k| self.get(n, k)).collect())
            .collect();
        Self::from_lower_rows(band, rows)
    }

    pub fn is_tridiagonal(&self) -> bool {
        self.detect_band() <= 1
    }

    /// First `size` rows.
    pub fn truncate(&self, size: usize) -> Self {
        HessWindow {
            band: self.band,
            rows: self.rows[..size.min(self.size())].to_vec(),
        }
    }

    /// Dense `N x N` view, including the superdiagonal ones inside the window.
    pub fn to_dense(&self) -> DenseWindow<R> {
        let n = self.size();
        DenseWindow::from_fn(n, |i, j| self.get(i, j))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> HessWindow<S> {
        HessWindow {
            band: self.band,
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub(crate) fn require_rows(&self, needed: usize) -> Result<()> {
        if self.size() < needed {
            return Err(Error::WindowTooSmall {
                needed,
                available: self.size(),
            });
        }
        Ok(())
    }
}

/// Unit-lower-triangular `N x N` window; row `n` holds columns `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowTriWindow<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> LowTriWindow<R> {
    pub fn new(rows: Vec<Vec<R>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::NotUnitLower(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            if !row[n].is_one() {
                return Err(Error::NotUnitLower(format!("diagonal entry {n} is not 1")));
            }
        }
        Ok(LowTriWindow { rows })
    }

    /// Strictly-lower entries from `entry(n, k)`, `k < n`; the diagonal is 1.
    pub fn from_fn(size: usize, entry: impl Fn(usize, usize) -> R) -> Self {
        let rows = (0..size)
            .map(|n| {
                (0..=n)
                    .map(|k| if k == n { R::one() } else { entry(n, k) })
                    .collect()
            })
            .collect();
        LowTriWindow { rows }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |_, _| R::zero())
    }

    /// Reads the lower part of a dense window, checking the unit-lower shape.
    pub fn from_dense(m: &DenseWindow<R>) -> Result<Self> {
        if let Some((i, j)) = m.first_nonzero_above(0) {
            return Err(Error::NotUnitLower(format!("entry ({i}, {j}) above the diagonal")));
        }
        Self::new((0..m.size()).map(|i| (0..=i).map(|j| m.get(i, j)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, n: usize, k: usize) -> R {
        if k > n {
            R::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn column(&self, k: usize) -> Vec<R> {
        (0..self.size()).map(|n| self.get(n, k)).collect()
    }

    pub fn truncate(&self, size: usize) -> Self {
        LowTriWindow {
            rows: self.rows[..size.min(self.size())].to_vec(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.size(),
                other.size()
            )));
        }
        Ok(Self::from_fn(self.size(), |i, j| {
            (j..=i).fold(R::zero(), |acc, t| acc + self.get(i, t) * other.get(t, j))
        }))
    }

    pub fn to_dense(&self) -> DenseWindow<R> {
        DenseWindow::from_fn(self.size(), |i, j| self.get(i, j))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LowTriWindow<S> {
        LowTriWindow {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }
}

/// Square `N x N` window with no structural constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseWindow<R> {
    size: usize,
    entries: Vec<R>,
}

impl<R: Ring> DenseWindow<R> {
    pub fn new(rows: Vec<Vec<R>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != size) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries in a {size}x{size} matrix",
                rows[bad].len()
            )));
        }
        Ok(DenseWindow {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(size: usize, entry: impl Fn(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(entry(i, j));
            }
        }
        DenseWindow { size, entries }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.entries[i * self.size + j].clone()
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.size.max(1)).map(<[R]>::to_vec).take(self.size).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.size, other.size
            )));
        }
        Ok(Self::from_fn(self.size, |i, j| {
            (0..self.size).fold(R::zero(), |acc, t| acc + self.get(i, t) * other.get(t, j))
        }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |i, j| self.get(j, i))
    }

    /// Leading principal `n x n` submatrix.
    pub fn leading(&self, n: usize) -> Self {
        Self::from_fn(n.min(self.size), |i, j| self.get(i, j))
    }

    /// First nonzero entry with `j > i + offset`, scanning row by row.
    pub fn first_nonzero_above(&self, offset: usize) -> Option<(usize, usize)> {
        (0..self.size)
            .flat_map(|i| (i + offset + 1..self.size).map(move |j| (i, j)))
            .find(|&(i, j)| !self.entry(i, j).is_zero())
    }

    /// First nonzero entry strictly below the diagonal, scanning row by row.
    pub fn first_nonzero_below(&self) -> Option<(usize, usize)> {
        (0..self.size)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| !self.entry(i, j).is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.first_nonzero_below().is_none()
    }

    pub fn is_lower_hessenberg(&self) -> bool {
        self.first_nonzero_above(1).is_none()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DenseWindow<S> {
        DenseWindow {
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// The shift matrix: 1 on the superdiagonal, 0 elsewhere.
pub fn shift_window<R: Ring>(size: usize) -> HessWindow<R> {
    HessWindow::from_fn(size, Some(0), |_, _| R::zero())
}

/// Inverse of a unit-lower-triangular window by forward substitution.
pub fn invert_unit_lower<R: Ring>(b: &LowTriWindow<R>) -> LowTriWindow<R> {
    let n = b.size();
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![R::zero(); i + 1];
        row[i] = R::one();
        for j in (0..i).rev() {
            // (B A)_{ij} = 0  =>  a_ij = -sum_{t=j}^{i-1} b_it a_tj
            let mut s = R::zero();
            for (t, prev) in rows.iter().enumerate().take(i).skip(j) {
                s = s + b.get(i, t) * prev[j].clone();
            }
            row[j] = -s;
        }
        rows.push(row);
    }
    LowTriWindow { rows }
}

/// `L Delta L^{-1}` restricted to the rows where it is exact.
///
/// Row `i` of the product needs row `i + 1` of `L`, so an `N x N` input
/// yields the `N - 1` exact rows.
fn conjugate_with_inverse<R: Ring>(l: &LowTriWindow<R>, l_inv: &LowTriWindow<R>) -> Result<HessWindow<R>> {
    let n = l.size();
    let out = n.saturating_sub(1);
    let mut rows = Vec::with_capacity(out);
    for i in 0..out {
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..n {
            // (L Delta L^{-1})_{ij} = sum_t L_{it} Linv_{t+1, j}
            let v = (0..=i).fold(R::zero(), |acc, t| acc + l.get(i, t) * l_inv.get(t + 1, j));
            if j <= i {
                row.push(v);
            } else if j == i + 1 {
                if !v.is_one() {
                    return Err(Error::Consistency(format!("superdiagonal ({i}, {j}) is not 1")));
                }
            } else if !v.is_zero() {
                return Err(Error::Consistency(format!("nonzero entry above superdiagonal at ({i}, {j})")));
            }
        }
        rows.push(row);
    }
    HessWindow::from_lower_rows(None, rows)
}

/// Production matrix `B Delta B^{-1}` of a coefficient matrix `B`; an
/// `N x N` input gives `N - 1` rows.
pub fn conjugate_shift<R: Ring>(b: &LowTriWindow<R>) -> Result<HessWindow<R>> {
    conjugate_with_inverse(b, &invert_unit_lower(b))
}

/// `A^{-1} Delta A` for an output matrix `A`; an `N x N` input gives `N - 1` rows.
pub(crate) fn conjugate_shift_inverse<R: Ring>(a: &LowTriWindow<R>) -> Result<HessWindow<R>> {
    conjugate_with_inverse(&invert_unit_lower(a), a)
}

/// Row `n` of `Pi^power`, columns `0 ..= n + power`. Needs `n + power < N`.
pub fn hess_power_row<R: Ring>(pi: &HessWindow<R>, power: usize, n: usize) -> Result<Vec<R>> {
    pi.require_rows(n + power + 1)?;
    let mut v = vec![R::zero(); n + 1];
    v[n] = R::one();
    for _ in 0..power {
        let mut next = vec![R::zero(); v.len() + 1];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let (lo, row) = pi.band_row(i);
            for (off, p) in row.iter().enumerate() {
                next[lo + off] = next[lo + off].clone() + vi.clone() * p.clone();
            }
            next[i + 1] = next[i + 1].clone() + vi.clone();
        }
        v = next;
    }
    Ok(v)
}

/// `(Pi^power)_{nk}`, computed by repeated row-vector application.
pub fn hess_power_entry<R: Ring>(pi: &HessWindow<R>, power: usize, n: usize, k: usize) -> Result<R> {
    let row = hess_power_row(pi, power, n)?;
    Ok(row.get(k).cloned().unwrap_or_else(R::zero))
}

/// Leading principal minors `Delta_0 ..= Delta_upto` of a lower-Hessenberg
/// matrix by Laplace expansion along the last row:
///
/// `Delta_n = sum_j (-1)^{n-1-j} h_{n-1,j} (prod_{i=j}^{n-2} h_{i,i+1}) Delta_j`.
pub fn hessenberg_leading_minors<R: Ring>(h: &DenseWindow<R>, upto: usize) -> Result<Vec<R>> {
    check_upto(h, upto)?;
    if let Some((i, j)) = h.first_nonzero_above(1) {
        return Err(Error::InvalidInput(format!(
            "not lower-Hessenberg: entry ({i}, {j}) is nonzero"
        )));
    }
    let mut minors = vec![R::one()];
    for n in 1..=upto {
        let mut total = R::zero();
        // Walk j downward so the superdiagonal product grows incrementally.
        let mut superdiag = R::one();
        for j in (0..n).rev() {
            if j < n - 1 {
                superdiag = superdiag * h.get(j, j + 1);
            }
            let term = h.get(n - 1, j) * superdiag.clone() * minors[j].clone();
            total = if (n - 1 - j) % 2 == 0 { total + term } else { total - term };
        }
        minors.push(total);
    }
    Ok(minors)
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn determinant<R: Ring>(m: &DenseWindow<R>) -> Result<R> {
    let n = m.size();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.rows();
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.exact_div(&prev).ok_or_else(|| {
                    Error::Consistency("inexact division in fraction-free elimination".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Leading principal minors by pivot-free Bareiss elimination, whose
/// successive pivots are exactly the minors. After a zero pivot the remaining
/// minors are computed one by one with [`determinant`].
pub fn bareiss_leading_minors<R: Ring>(m: &DenseWindow<R>, upto: usize) -> Result<Vec<R>> {
    check_upto(m, upto)?;
    let mut minors = vec![R::one()];
    let mut a = m.leading(upto).rows();
    let mut prev = R::one();
    for k in 0..upto {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            for size in k + 2..=upto {
                minors.push(determinant(&m.leading(size))?);
            }
            return Ok(minors);
        }
        for i in k + 1..upto {
            for j in k + 1..upto {
                let num = a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.exact_div(&prev).ok_or_else(|| {
                    Error::Consistency("inexact division in fraction-free elimination".into())
                })?;
            }
        }
        prev = pivot;
    }
    Ok(minors)
}

/// `Delta_0 ..= Delta_upto`. Lower-Hessenberg input takes the Laplace
/// recurrence; anything else goes through fraction-free elimination.
pub fn leading_minors<R: Ring>(m: &DenseWindow<R>, upto: usize) -> Result<Vec<R>> {
    if m.is_lower_hessenberg() {
        hessenberg_leading_minors(m, upto)
    } else {
        bareiss_leading_minors(m, upto)
    }
}

fn check_upto<R: Ring>(m: &DenseWindow<R>, upto: usize) -> Result<()> {
    if upto > m.size() {
        return Err(Error::WindowTooSmall {
            needed: upto,
            available: m.size(),
        });
    }
    Ok(())
}

/// `P_n(x) = det(x I - Pi_n)` for `n = 0 ..= count`, via the Hessenberg
/// minor recurrence over `R[x]`. Needs `count` rows of `Pi`.
pub fn charpoly_seq<R: Ring>(pi: &HessWindow<R>, count: usize) -> Result<MonicPolySeq<R>> {
    pi.require_rows(count)?;
    let h = DenseWindow::from_fn(count, |i, j| {
        let c = UniPoly::constant(pi.get(i, j));
        if i == j {
            UniPoly::x() - c
        } else {
            -c
        }
    });
    let minors = hessenberg_leading_minors(&h, count)?;
    MonicPolySeq::from_polys(minors)
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::scalar::{int, Rational};

    fn q(rows: &[&[i64]]) -> DenseWindow<Rational> {
        DenseWindow::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn lt(rows: &[&[i64]]) -> LowTriWindow<Rational> {
        LowTriWindow::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_window::<Rational>(2).to_dense(), q(&[&[0, 1], &[0, 0]]));
        assert_eq!(shift_window::<Rational>(1).to_dense(), q(&[&[0]]));
        let m = q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let shifted = shift_window::<Rational>(3).to_dense().mul(&m).unwrap();
        assert_eq!(shifted, q(&[&[4, 5, 6], &[7, 8, 9], &[0, 0, 0]]));
    }

    #[test]
    fn inverse_examples() {
        let a = lt(&[&[1], &[5, 1]]);
        assert_eq!(invert_unit_lower(&a), lt(&[&[1], &[-5, 1]]));
        assert_eq!(invert_unit_lower(&LowTriWindow::<Rational>::identity(4)), LowTriWindow::identity(4));
        let b = lt(&[&[1], &[1, 1], &[1, 1, 1]]);
        assert_eq!(invert_unit_lower(&b), lt(&[&[1], &[-1, 1], &[0, -1, 1]]));
    }

    #[test]
    fn conjugate_examples() {
        let id = LowTriWindow::<Rational>::identity(4);
        assert_eq!(conjugate_shift(&id).unwrap(), shift_window(3).with_band(None).unwrap());
        // B = [[1,0],[c,1]] is the coefficient matrix of P_1 = x + c, so pi_00 = -c.
        let b = lt(&[&[1], &[7, 1]]);
        let pi = conjugate_shift(&b).unwrap();
        assert_eq!(pi.size(), 1);
        assert_eq!(pi.get(0, 0), int(-7));
    }

    #[test]
    fn power_entries() {
        let ones = HessWindow::from_fn(5, None, |_, _| int(1));
        assert_eq!(hess_power_entry(&ones, 0, 2, 2).unwrap(), int(1));
        assert_eq!(hess_power_entry(&ones, 0, 2, 1).unwrap(), int(0));
        assert_eq!(hess_power_entry(&ones, 1, 2, 0).unwrap(), ones.get(2, 0));
        assert_eq!(hess_power_entry(&ones, 2, 0, 0).unwrap(), int(2));
        assert!(matches!(
            hess_power_entry(&ones, 3, 2, 0),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn minors_examples() {
        assert_eq!(
            leading_minors(&q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap(),
            vec![int(1); 4]
        );
        let swap = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(leading_minors(&swap, 2).unwrap(), vec![int(1), int(0), int(-1)]);
        assert_eq!(bareiss_leading_minors(&swap, 2).unwrap(), vec![int(1), int(0), int(-1)]);
    }

    #[test]
    fn tridiagonal_minors_match_dense() {
        let pi = HessWindow::from_fn(6, Some(1), |_, _| int(1)).to_dense();
        assert_eq!(
            hessenberg_leading_minors(&pi, 6).unwrap(),
            bareiss_leading_minors(&pi, 6).unwrap()
        );
    }

    #[test]
    fn determinant_with_pivoting() {
        assert_eq!(determinant(&q(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]])).unwrap(), int(-1));
        assert_eq!(determinant(&q(&[&[1, 2], &[2, 4]])).unwrap(), int(0));
    }

    #[test]
    fn charpoly_examples() {
        let pi = HessWindow::from_lower_rows(Some(1), vec![vec![int(0)], vec![int(1), int(0)]]).unwrap();
        let ps = charpoly_seq(&pi, 2).unwrap();
        assert_eq!(ps.poly(0), UniPoly::one());
        assert_eq!(ps.poly(1), UniPoly::x());
        assert_eq!(ps.poly(2), UniPoly::new(vec![int(-1), int(0), int(1)]));
    }

    #[test]
    fn band_enforced_at_construction() {
        let rows = vec![vec![int(1)], vec![int(1), int(1)], vec![int(5), int(0), int(1)]];
        assert_eq!(
            HessWindow::from_lower_rows(Some(1), rows.clone()),
            Err(Error::BandViolation { row: 2, col: 0 })
        );
        let pi = HessWindow::from_lower_rows(None, rows).unwrap();
        assert_eq!(pi.detect_band(), 2);
    }
}
