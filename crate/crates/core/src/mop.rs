//! Type-II multiple orthogonal polynomials from moment data.

use std::fmt;

use crate::error::{Error, Result};
use crate::functionals::{polyseq_from_production, MonicPolySeq};
use crate::hessenberg::{conjugate_shift, determinant, DenseWindow, HessWindow};
use crate::scalar::Ring;
use crate::unipoly::UniPoly;

/// Moments `moments[j][n] = L^(j+1)(x^n)` of `r` linear functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MOPSystem<R> {
    moments: Vec<Vec<R>>,
}

impl<R: Ring> MOPSystem<R> {
    pub fn new(moments: Vec<Vec<R>>) -> Result<Self> {
        let Some(first) = moments.first() else {
            return Err(Error::InvalidInput("a system needs at least one functional".into()));
        };
        if let Some(j) = moments.iter().position(|m| m.len() != first.len()) {
            return Err(Error::DimensionMismatch(format!(
                "functional {} has {} moments, functional 1 has {}",
                j + 1,
                moments[j].len(),
                first.len()
            )));
        }
        Ok(MOPSystem { moments })
    }

    pub fn r(&self) -> usize {
        self.moments.len()
    }

    /// Number of moments available per functional.
    pub fn len(&self) -> usize {
        self.moments[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Moments of `L^(j)`, `j` counted from 1.
    pub fn moments(&self, j: usize) -> &[R] {
        &self.moments[j - 1]
    }

    pub fn all_moments(&self) -> &[Vec<R>] {
        &self.moments
    }

    fn moment(&self, j: usize, n: usize) -> Result<R> {
        self.moments[j - 1]
            .get(n)
            .cloned()
            .ok_or(Error::InsufficientMoments {
                needed: n + 1,
                available: self.len(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn zeros(r: usize) -> Self {
        MultiIndex(vec![0; r])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// `|n| = n_1 + ... + n_r`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `n + e_j`, `j` counted from 1.
    pub fn step(&self, j: usize) -> Self {
        let mut next = self.0.clone();
        next[j - 1] += 1;
        MultiIndex(next)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Increasing nearest-neighbor path in `N^r`, given by its directions
/// `j_1, j_2, ...` in `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NNPath {
    pub directions: Vec<usize>,
}

impl NNPath {
    pub fn new(directions: Vec<usize>, r: usize) -> Result<Self> {
        if let Some(bad) = directions.iter().find(|&&j| j == 0 || j > r) {
            return Err(Error::InvalidInput(format!("direction {bad} outside 1..={r}")));
        }
        Ok(NNPath { directions })
    }

    /// The stepline path: directions `1, 2, ..., r, 1, 2, ...`.
    pub fn stepline(r: usize, len: usize) -> Self {
        NNPath {
            directions: (0..len).map(|i| i % r + 1).collect(),
        }
    }

    /// Every step in direction `j`.
    pub fn axis(j: usize, len: usize) -> Self {
        NNPath {
            directions: vec![j; len],
        }
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    /// `n_0 = 0, n_1, ..., n_len`.
    pub fn prefixes(&self, r: usize) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::zeros(r)];
        for &j in &self.directions {
            let next = out.last().expect("non-empty").step(j);
            out.push(next);
        }
        out
    }

    /// `m_i`: the number of earlier occurrences of `j_i`, for each step.
    pub fn shifts(&self) -> Vec<usize> {
        self.directions
            .iter()
            .enumerate()
            .map(|(i, j)| self.directions[..i].iter().filter(|&d| d == j).count())
            .collect()
    }
}

/// Stepline multi-index of weight `n`: `n_i = floor((n + r - i) / r)`.
pub fn stepline_index(r: usize, n: usize) -> MultiIndex {
    MultiIndex((1..=r).map(|i| (n + r - i) / r).collect())
}

fn check_index<R: Ring>(sys: &MOPSystem<R>, n: &MultiIndex) -> Result<()> {
    if n.r() != sys.r() {
        return Err(Error::DimensionMismatch(format!(
            "multi-index {n} has {} entries for a system of {} functionals",
            n.r(),
            sys.r()
        )));
    }
    Ok(())
}

/// Rows `(j, k)`, `k < n_j`, of the orthogonality system: the row holds
/// `m^(j)_{k+i}` for `i < |n|` followed by `m^(j)_{k+|n|}`.
fn system_rows<R: Ring>(sys: &MOPSystem<R>, n: &MultiIndex, with_rhs: bool) -> Result<Vec<Vec<R>>> {
    check_index(sys, n)?;
    let size = n.weight();
    let width = if with_rhs { size + 1 } else { size };
    let mut rows = Vec::with_capacity(size);
    for (j, &nj) in n.entries().iter().enumerate() {
        for k in 0..nj {
            rows.push((0..width).map(|i| sys.moment(j + 1, k + i)).collect::<Result<Vec<_>>>()?);
        }
    }
    Ok(rows)
}

/// The `|n| x |n|` matrix whose determinant decides normality (rows are the
/// orthogonality conditions, the transpose of the stacked Hankel blocks).
pub fn normality_matrix<R: Ring>(sys: &MOPSystem<R>, n: &MultiIndex) -> Result<DenseWindow<R>> {
    DenseWindow::new(system_rows(sys, n, false)?)
}

/// `det M_n != 0`.
pub fn normality<R: Ring>(sys: &MOPSystem<R>, n: &MultiIndex) -> Result<bool> {
    Ok(!determinant(&normality_matrix(sys, n)?)?.is_zero())
}

/// The monic type-II polynomial of degree `|n|` with `L^(j)(x^k P_n) = 0`
/// for `k < n_j`, solved exactly by elimination with row pivoting.
pub fn mop_type2<R: Ring>(sys: &MOPSystem<R>, n: &MultiIndex) -> Result<UniPoly<R>> {
    let size = n.weight();
    let mut rows = system_rows(sys, n, true)?;
    let not_normal = || Error::NotNormal {
        index: size,
        multi_index: Some(n.entries().to_vec()),
    };
    for col in 0..size {
        let pivot_row = (col..size)
            .find(|&i| rows[i][col].is_unit())
            .or_else(|| (col..size).find(|&i| !rows[i][col].is_zero()));
        let Some(p) = pivot_row else {
            return Err(not_normal());
        };
        rows.swap(col, p);
        let inv = rows[col][col].inverse().ok_or_else(|| {
            Error::NotInvertible(format!("pivot {col} of the orthogonality system for {n}"))
        })?;
        for v in rows[col][col..].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot = rows[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == col {
                continue;
            }
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                *v = v.clone() - factor.clone() * pv.clone();
            }
        }
    }
    // Row i now reads c_i + m_i = 0, with m_i the transformed right-hand side.
    let mut coeffs: Vec<R> = rows.into_iter().map(|row| -row[size].clone()).collect();
    coeffs.push(R::one());
    Ok(UniPoly::new(coeffs))
}

/// `P_{n_0}, ..., P_{n_len}` along the path's prefixes.
pub fn path_polys<R: Ring>(sys: &MOPSystem<R>, path: &NNPath, len: usize) -> Result<MonicPolySeq<R>> {
    if path.len() < len {
        return Err(Error::InvalidInput(format!(
            "path has {} steps, {len} needed",
            path.len()
        )));
    }
    let prefixes = path.prefixes(sys.r());
    let polys = prefixes[..=len]
        .iter()
        .map(|n| mop_type2(sys, n))
        .collect::<Result<Vec<_>>>()?;
    MonicPolySeq::from_polys(polys)
}

/// `N` rows of the production matrix `Pi = B Delta B^{-1}` of the
/// polynomials along the path; `(r, 1)`-bandedness is asserted.
pub fn path_production<R: Ring>(sys: &MOPSystem<R>, path: &NNPath, size: usize) -> Result<HessWindow<R>> {
    let polys = path_polys(sys, path, size)?;
    let pi = conjugate_shift(polys.coeff_matrix())?;
    pi.with_band(Some(sys.r()))
}

/// `Gamma` with column `k` the moments of `(L^(j_{k+1}))^{#m_{k+1}}`, the
/// functional that enters at stage `k + 1` of the path.
pub fn star_functionals<R: Ring>(sys: &MOPSystem<R>, path: &NNPath, size: usize) -> Result<DenseWindow<R>> {
    if path.len() < size {
        return Err(Error::InvalidInput(format!(
            "path has {} steps, {size} needed",
            path.len()
        )));
    }
    let shifts = path.shifts();
    let needed = (0..size).map(|k| size + shifts[k]).max().unwrap_or(0);
    if sys.len() < needed {
        return Err(Error::InsufficientMoments {
            needed,
            available: sys.len(),
        });
    }
    Ok(DenseWindow::from_fn(size, |n, k| {
        sys.moments(path.directions[k])[n + shifts[k]].clone()
    }))
}

/// `U = B Gamma` for `B` the coefficient matrix of the sequence generated by
/// `Pi`; fails unless `U` is upper-triangular.
pub fn verify_gamma_LU<R: Ring>(gamma: &DenseWindow<R>, pi: &HessWindow<R>) -> Result<DenseWindow<R>> {
    let b = polyseq_from_production(pi, gamma.size())?;
    let u = b.coeff_matrix().to_dense().mul(gamma)?;
    if let Some((row, col)) = u.first_nonzero_below() {
        return Err(Error::NotUpperTriangular { row, col });
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::{check_orthogonality, hankel_window, orthopolys_from_gamma};
    use crate::production::output_matrix;
    use crate::scalar::{int, rational, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn factorial_squares(shift: i64, len: usize) -> Vec<Rational> {
        (0..len)
            .map(|n| {
                let a = crate::scalar::rising_factorial(&int(1 + shift), n);
                a * crate::scalar::rising_factorial(&int(1), n)
            })
            .collect()
    }

    fn bessel_k() -> MOPSystem<Rational> {
        MOPSystem::new(vec![factorial_squares(0, 24), factorial_squares(1, 24)]).unwrap()
    }

    #[test]
    fn stepline_examples() {
        assert_eq!(stepline_index(2, 3), MultiIndex(vec![2, 1]));
        assert_eq!(stepline_index(4, 0), MultiIndex::zeros(4));
        assert_eq!(stepline_index(3, 4), MultiIndex(vec![2, 1, 1]));
        let path = NNPath::stepline(3, 7);
        for (n, idx) in path.prefixes(3).iter().enumerate() {
            assert_eq!(idx, &stepline_index(3, n));
        }
    }

    #[test]
    fn normality_examples() {
        let sys = bessel_k();
        assert!(normality(&sys, &MultiIndex::zeros(2)).unwrap());
        let same = MOPSystem::new(vec![ints(&[1, 2, 5, 9]), ints(&[1, 2, 5, 9])]).unwrap();
        assert!(!normality(&same, &MultiIndex(vec![1, 1])).unwrap());
        for w in 0..=5 {
            for n1 in 0..=w {
                assert!(normality(&sys, &MultiIndex(vec![n1, w - n1])).unwrap());
            }
        }
    }

    #[test]
    fn type2_examples() {
        let sys = MOPSystem::new(vec![ints(&[2, 3, 7, 1]), ints(&[1, 5, 2, 2])]).unwrap();
        assert_eq!(mop_type2(&sys, &MultiIndex::zeros(2)).unwrap(), UniPoly::constant(int(1)));
        let p = mop_type2(&sys, &MultiIndex(vec![1, 0])).unwrap();
        assert_eq!(p, UniPoly::new(vec![-rational(3, 2), int(1)]));
        let same = MOPSystem::new(vec![ints(&[1, 2, 5, 9]), ints(&[1, 2, 5, 9])]).unwrap();
        assert_eq!(
            mop_type2(&same, &MultiIndex(vec![1, 1])),
            Err(Error::NotNormal {
                index: 2,
                multi_index: Some(vec![1, 1])
            })
        );
    }

    #[test]
    fn single_functional_is_classical() {
        let motzkin = ints(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]);
        let sys = MOPSystem::new(vec![motzkin.clone()]).unwrap();
        let polys = path_polys(&sys, &NNPath::axis(1, 6), 6).unwrap();
        let classical = orthopolys_from_gamma(&hankel_window(&motzkin, 7, 0).unwrap(), 7).unwrap();
        assert_eq!(polys, classical);
    }

    #[test]
    fn path_production_examples() {
        let sys = bessel_k();
        let pi = path_production(&sys, &NNPath::stepline(2, 8), 8).unwrap();
        assert_eq!(pi.get(0, 0), int(1));
        assert_eq!(pi.get(1, 0), int(3));
        assert_eq!(pi.get(1, 1), int(7));
        assert_eq!(pi.band(), Some(2));

        let axis = path_production(&sys, &NNPath::axis(1, 6), 6).unwrap();
        assert!(axis.is_tridiagonal());

        let one = path_production(&sys, &NNPath::axis(2, 1), 1).unwrap();
        assert_eq!(one.get(0, 0), sys.moments(2)[1].clone() / sys.moments(2)[0].clone());
    }

    #[test]
    fn star_functionals_and_lu() {
        let sys = bessel_k();
        let path = NNPath::stepline(2, 8);
        let gamma = star_functionals(&sys, &path, 8).unwrap();
        assert_eq!(gamma.get(3, 0), sys.moments(1)[3]);
        assert_eq!(gamma.get(3, 1), sys.moments(2)[3]);
        assert_eq!(gamma.get(3, 2), sys.moments(1)[4]);
        assert_eq!(gamma.get(3, 3), sys.moments(2)[4]);
        let pi = path_production(&sys, &path, 8).unwrap();
        let polys = path_polys(&sys, &path, 7).unwrap();
        assert!(check_orthogonality(&polys, &gamma).unwrap());
        let u = verify_gamma_LU(&gamma, &pi).unwrap();
        assert!(u.is_upper_triangular());

        let a = output_matrix(&pi, 6).unwrap().to_dense();
        assert_eq!(verify_gamma_LU(&a, &pi).unwrap(), DenseWindow::identity(6));

        let bad = DenseWindow::<Rational>::from_fn(3, |_, _| int(1));
        assert!(matches!(
            verify_gamma_LU(&bad, &pi),
            Err(Error::NotUpperTriangular { .. })
        ));
    }

    #[test]
    fn axis_gamma_is_hankel() {
        let sys = bessel_k();
        let gamma = star_functionals(&sys, &NNPath::axis(1, 5), 5).unwrap();
        assert_eq!(gamma, hankel_window(sys.moments(1), 5, 0).unwrap());
    }
}
