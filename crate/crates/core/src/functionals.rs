//! Monic polynomial sequences, their dual functionals, expectations and
//! pivot-free LU factorization.

use num_traits::One;

use crate::error::{Error, Result};
use crate::hessenberg::{hess_power_row, invert_unit_lower, DenseWindow, HessWindow, LowTriWindow};
use crate::production::{moments_from_production, output_matrix};
use crate::scalar::Ring;
use crate::unipoly::UniPoly;

/// `P_0, ..., P_{N-1}`, each `P_n` monic of degree `n`, stored as the rows
/// of the coefficient matrix `B` (row `n`, column `j` is `[x^j] P_n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicPolySeq<R> {
    coeffs: LowTriWindow<R>,
}

impl<R: Ring> MonicPolySeq<R> {
    pub fn from_coeff_matrix(b: LowTriWindow<R>) -> Self {
        MonicPolySeq { coeffs: b }
    }

    pub fn from_polys(polys: Vec<UniPoly<R>>) -> Result<Self> {
        let rows = polys
            .into_iter()
            .enumerate()
            .map(|(n, p)| {
                if p.degree() != Some(n) || !p.is_monic() {
                    return Err(Error::NotUnitLower(format!(
                        "polynomial {n} is not monic of degree {n}"
                    )));
                }
                Ok(p.into_coeffs())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonicPolySeq {
            coeffs: LowTriWindow::new(rows)?,
        })
    }

    pub fn len(&self) -> usize {
        self.coeffs.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn poly(&self, n: usize) -> UniPoly<R> {
        UniPoly::new(self.coeffs.row(n).to_vec())
    }

    pub fn polys(&self) -> Vec<UniPoly<R>> {
        (0..self.len()).map(|n| self.poly(n)).collect()
    }

    /// The coefficient matrix `B`.
    pub fn coeff_matrix(&self) -> &LowTriWindow<R> {
        &self.coeffs
    }

    pub fn truncate(&self, len: usize) -> Self {
        MonicPolySeq {
            coeffs: self.coeffs.truncate(len),
        }
    }
}

/// Moment matrix of a sequence of functionals: entry `(n, k)` is
/// `L_k(x^n)`. Dual (normalized) sequences are unit-lower-triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MomentMatrix<R> {
    Normalized(LowTriWindow<R>),
    General(DenseWindow<R>),
}

impl<R: Ring> MomentMatrix<R> {
    pub fn size(&self) -> usize {
        match self {
            MomentMatrix::Normalized(a) => a.size(),
            MomentMatrix::General(g) => g.size(),
        }
    }

    pub fn get(&self, n: usize, k: usize) -> R {
        match self {
            MomentMatrix::Normalized(a) => a.get(n, k),
            MomentMatrix::General(g) => g.get(n, k),
        }
    }

    pub fn to_dense(&self) -> DenseWindow<R> {
        match self {
            MomentMatrix::Normalized(a) => a.to_dense(),
            MomentMatrix::General(g) => g.clone(),
        }
    }
}

/// The `l`-shifted Hankel matrix of a moment sequence, entry `(i, j)` equal
/// to `base[i + j + shift]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedHankel<R> {
    pub base: Vec<R>,
    pub shift: usize,
    pub size: usize,
}

impl<R: Ring> ShiftedHankel<R> {
    pub fn new(base: Vec<R>, shift: usize, size: usize) -> Result<Self> {
        let needed = (2 * size + shift).saturating_sub(1);
        if base.len() < needed {
            return Err(Error::InsufficientMoments {
                needed,
                available: base.len(),
            });
        }
        Ok(ShiftedHankel { base, shift, size })
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.base[i + j + self.shift].clone()
    }

    pub fn to_dense(&self) -> DenseWindow<R> {
        DenseWindow::from_fn(self.size, |i, j| self.get(i, j))
    }
}

/// `P_0 ..= P_{N-1}` from `P_{n+1} = (x - pi_nn) P_n - sum_{k<n} pi_nk P_k`.
/// Needs `N - 1` rows of `Pi`.
pub fn polyseq_from_production<R: Ring>(pi: &HessWindow<R>, size: usize) -> Result<MonicPolySeq<R>> {
    pi.require_rows(size.saturating_sub(1))?;
    let mut polys: Vec<UniPoly<R>> = Vec::with_capacity(size);
    if size > 0 {
        polys.push(UniPoly::one());
    }
    for n in 0..size.saturating_sub(1) {
        let mut next = UniPoly::x() * polys[n].clone();
        let (lo, row) = pi.band_row(n);
        for (off, p) in row.iter().enumerate() {
            if !p.is_zero() {
                next = next - polys[lo + off].scale(p);
            }
        }
        polys.push(next);
    }
    MonicPolySeq::from_polys(polys)
}

/// `A = B^{-1}`: column `k` holds the moments of the unique functional with
/// `L_k(P_n) = delta_kn`.
pub fn dual_functionals<R: Ring>(p: &MonicPolySeq<R>) -> MomentMatrix<R> {
    MomentMatrix::Normalized(invert_unit_lower(p.coeff_matrix()))
}

/// `L_k(p) = sum_n [x^n]p * A_nk`.
pub fn apply_functional<R: Ring>(a: &MomentMatrix<R>, k: usize, p: &UniPoly<R>) -> Result<R> {
    if k >= a.size() {
        return Err(Error::OutOfRange(format!(
            "functional {k} outside a window of size {}",
            a.size()
        )));
    }
    if let Some(d) = p.degree() {
        if d >= a.size() {
            return Err(Error::DegreeOverflow {
                degree: d,
                limit: a.size() - 1,
            });
        }
    }
    Ok(p
        .coeffs()
        .iter()
        .enumerate()
        .fold(R::zero(), |acc, (n, c)| acc + c.clone() * a.get(n, k)))
}

/// `L_k(x^l P_m P_n)` for the dual functionals of the sequence generated by
/// `Pi`.
///
/// Computed twice, as `sum_{j<=m} b_mj (Pi^{j+l})_nk` and as
/// `(B H_k^(l) B^T)_mn` with `H_k^(l)` the `l`-shifted Hankel matrix of
/// column `k` of `O(Pi)`; the two must agree. Needs `n + m + l + 1` rows.
pub fn expectation<R: Ring>(pi: &HessWindow<R>, k: usize, l: usize, m: usize, n: usize) -> Result<R> {
    pi.require_rows(n + m + l + 1)?;
    let b = polyseq_from_production(pi, m.max(n) + 1)?;
    let b = b.coeff_matrix();

    let mut via_powers = R::zero();
    for j in 0..=m {
        let bmj = b.get(m, j);
        if bmj.is_zero() {
            continue;
        }
        let row = hess_power_row(pi, j + l, n)?;
        if let Some(v) = row.get(k) {
            via_powers = via_powers + bmj * v.clone();
        }
    }

    let a = output_matrix(pi, m + n + l + 1)?;
    let mut via_hankel = R::zero();
    for i in 0..=m {
        for j in 0..=n {
            let h = a.get(i + j + l, k);
            if !h.is_zero() {
                via_hankel = via_hankel + b.get(m, i) * h * b.get(n, j);
            }
        }
    }

    if via_powers != via_hankel {
        return Err(Error::Consistency(format!(
            "expectation forms disagree at k={k}, l={l}, m={m}, n={n}"
        )));
    }
    Ok(via_powers)
}

/// `h_k^{-1} h_n (q(Pi) P_k(Pi))_mn` for tridiagonal `Pi`, where
/// `h_n = pi_10 pi_21 ... pi_{n,n-1}`. Only `k <= n` is accepted, in which
/// case `h_k^{-1} h_n = pi_{k+1,k} ... pi_{n,n-1}` needs no inversion.
pub fn tridiag_expectation<R: Ring>(
    pi: &HessWindow<R>,
    q: &UniPoly<R>,
    k: usize,
    m: usize,
    n: usize,
) -> Result<R> {
    check_tridiagonal(pi)?;
    if k > n {
        return Err(Error::OutOfRange(format!(
            "tridiagonal expectation needs k <= n, got k = {k}, n = {n}"
        )));
    }
    pi.require_rows(n.max(k) + 1)?;
    let pk = polyseq_from_production(pi, k + 1)?.poly(k);
    let r = q.clone() * pk;
    let mut value = R::zero();
    // (r(Pi))_mn = sum_i r_i (Pi^i)_mn
    for (i, c) in r.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some(v) = hess_power_row(pi, i, m)?.get(n) {
            value = value + c.clone() * v.clone();
        }
    }
    let ratio = (k + 1..=n).fold(R::one(), |acc, i| acc * pi.get(i, i - 1));
    Ok(ratio * value)
}

fn check_tridiagonal<R: Ring>(pi: &HessWindow<R>) -> Result<()> {
    for n in 0..pi.size() {
        let (lo, row) = pi.band_row(n);
        for (off, v) in row.iter().enumerate() {
            let col = lo + off;
            if col + 1 < n && !v.is_zero() {
                return Err(Error::NotTridiagonal { row: n, col });
            }
        }
    }
    Ok(())
}

/// `N x N` window with entry `(i, j)` equal to `l_{i+j+shift}`.
pub fn hankel_window<R: Ring>(moments: &[R], size: usize, shift: usize) -> Result<DenseWindow<R>> {
    Ok(ShiftedHankel::new(moments.to_vec(), shift, size)?.to_dense())
}

/// Doolittle factorization `G = L U` without pivoting.
///
/// Succeeds exactly when `Delta_1, ..., Delta_{N-1}` are invertible; the last
/// pivot is never divided by, so `Delta_N` may vanish. A non-invertible pivot
/// at step `k` (1-based) is reported as `SingularMinor(k)`.
pub fn lu_factorize<R: Ring>(g: &DenseWindow<R>) -> Result<(LowTriWindow<R>, DenseWindow<R>)> {
    let n = g.size();
    let mut u = g.rows();
    let mut l: Vec<Vec<R>> = (0..n).map(|i| vec![R::zero(); i + 1]).collect();
    for k in 0..n {
        l[k][k] = R::one();
        if k + 1 == n {
            break;
        }
        let inv = u[k][k]
            .inverse()
            .ok_or(Error::SingularMinor { index: k + 1 })?;
        for i in k + 1..n {
            let factor = u[i][k].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                u[i][j] = u[i][j].clone() - factor.clone() * u[k][j].clone();
            }
            l[i][k] = factor;
        }
    }
    Ok((LowTriWindow::new(l)?, DenseWindow::new(u)?))
}

/// The unique monic sequence with `Gamma_k(P_n) = 0` for `k < n`, from
/// `Gamma = L U` and `B = L^{-1}`, for `n < N`.
pub fn orthopolys_from_gamma<R: Ring>(gamma: &DenseWindow<R>, size: usize) -> Result<MonicPolySeq<R>> {
    if gamma.size() < size {
        return Err(Error::WindowTooSmall {
            needed: size,
            available: gamma.size(),
        });
    }
    let (l, _) = lu_factorize(&gamma.leading(size))?;
    Ok(MonicPolySeq::from_coeff_matrix(invert_unit_lower(&l)))
}

/// Whether `(B Gamma)_nk = 0` for every `k < n` inside the window.
pub fn check_orthogonality<R: Ring>(p: &MonicPolySeq<R>, gamma: &DenseWindow<R>) -> Result<bool> {
    Ok(first_orthogonality_violation(p, gamma)?.is_none())
}

/// First `(n, k)` with `k < n` and `Gamma_k(P_n) != 0`.
pub fn first_orthogonality_violation<R: Ring>(
    p: &MonicPolySeq<R>,
    gamma: &DenseWindow<R>,
) -> Result<Option<(usize, usize)>> {
    let size = p.len();
    if gamma.size() < size {
        return Err(Error::DimensionMismatch(format!(
            "{size} polynomials against a {0}x{0} moment window",
            gamma.size()
        )));
    }
    let b = p.coeff_matrix();
    for n in 0..size {
        for k in 0..n {
            let v = (0..=n).fold(R::zero(), |acc, t| acc + b.get(n, t) * gamma.get(t, k));
            if !v.is_zero() {
                return Ok(Some((n, k)));
            }
        }
    }
    Ok(None)
}

/// `H_N = J D J^T` with `J = O(Pi)` for the tridiagonal `Pi` of `(gamma, beta)`
/// and `D = diag(1, beta_1, beta_1 beta_2, ...)`. The moments of `H_N` reach
/// index `2N - 2`, so the coefficients must cover `2N - 2` rows.
pub fn hankel_ldlt_check<R: Ring>(gamma: &[R], beta: &[R], size: usize) -> Result<bool> {
    if size == 0 {
        return Ok(true);
    }
    let rows = 2 * size - 2;
    let jf = crate::cfrac::JFraction::new(
        gamma[..rows.min(gamma.len())].to_vec(),
        beta[..rows.saturating_sub(1).min(beta.len())].to_vec(),
    );
    let pi = crate::cfrac::jfrac_production(&jf, rows)?;
    let moments = moments_from_production(&pi, 2 * size - 1)?;
    let h = hankel_window(&moments, size, 0)?;
    let j = output_matrix(&pi, size)?;
    let mut d = Vec::with_capacity(size);
    d.push(R::one());
    for i in 1..size {
        let prev = d[i - 1].clone();
        d.push(prev * beta[i - 1].clone());
    }
    for r in 0..size {
        for c in 0..size {
            let v = (0..=r.min(c)).fold(R::zero(), |acc, t| {
                acc + j.get(r, t) * d[t].clone() * j.get(c, t)
            });
            if v != h.get(r, c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
