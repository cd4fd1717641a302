//! Classical J- and S-fractions and m-branched S-fractions, as production
//! matrices.

use crate::error::{Error, Result};
use crate::functionals::{hankel_window, lu_factorize};
use crate::hessenberg::HessWindow;
use crate::production::{moments_from_production, production_from_output};
use crate::scalar::Ring;
use crate::series::TruncSeries;

/// J-fraction coefficients; `beta[0]` is `beta_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFraction<R> {
    pub gamma: Vec<R>,
    pub beta: Vec<R>,
}

impl<R: Ring> JFraction<R> {
    pub fn new(gamma: Vec<R>, beta: Vec<R>) -> Self {
        JFraction { gamma, beta }
    }

    /// `gamma_n`, or `None` past the stored coefficients.
    pub fn gamma(&self, n: usize) -> Option<&R> {
        self.gamma.get(n)
    }

    /// `beta_n` for `n >= 1`.
    pub fn beta(&self, n: usize) -> Option<&R> {
        n.checked_sub(1).and_then(|i| self.beta.get(i))
    }
}

/// m-branched S-fraction; `alpha[0]` is `alpha_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFraction<R> {
    m: usize,
    alpha: Vec<R>,
}

impl<R: Ring> SFraction<R> {
    pub fn new(m: usize, alpha: Vec<R>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("branch order m must be at least 1".into()));
        }
        Ok(SFraction { m, alpha })
    }

    /// Classical S-fraction from `alpha_1, alpha_2, ...`.
    pub fn classical(alpha: Vec<R>) -> Self {
        SFraction { m: 1, alpha }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Stored coefficients, starting at `alpha_m`.
    pub fn alphas(&self) -> &[R] {
        &self.alpha
    }

    /// `alpha_i`. Indices below `m` are 0 by convention; `None` past the end.
    pub fn alpha(&self, i: usize) -> Option<R> {
        if i < self.m {
            return Some(R::zero());
        }
        self.alpha.get(i - self.m).cloned()
    }

    /// Largest index `i` with `alpha_i` stored, if any.
    pub fn last_index(&self) -> Option<usize> {
        (self.m + self.alpha.len()).checked_sub(1).filter(|_| !self.alpha.is_empty())
    }

    /// `f_j`: the same fraction with `alpha_i` replaced by `alpha_{i+j}`.
    pub fn shifted(&self, j: usize) -> Self {
        SFraction {
            m: self.m,
            alpha: self.alpha[j.min(self.alpha.len())..].to_vec(),
        }
    }

    fn require(&self, i: usize) -> Result<R> {
        self.alpha(i).ok_or(Error::InsufficientCoefficients {
            needed: i + 1 - self.m,
            available: self.alpha.len(),
        })
    }
}

/// Tridiagonal `Pi` with `pi_nn = gamma_n`, `pi_{n,n-1} = beta_n`.
pub fn jfrac_production<R: Ring>(jf: &JFraction<R>, size: usize) -> Result<HessWindow<R>> {
    if jf.gamma.len() < size {
        return Err(Error::InsufficientCoefficients {
            needed: size,
            available: jf.gamma.len(),
        });
    }
    let betas = size.saturating_sub(1);
    if jf.beta.len() < betas {
        return Err(Error::InsufficientCoefficients {
            needed: betas,
            available: jf.beta.len(),
        });
    }
    Ok(HessWindow::from_fn(size, Some(1), |n, k| {
        if k == n {
            jf.gamma[n].clone()
        } else {
            jf.beta[n - 1].clone()
        }
    }))
}

/// Result of expanding a moment sequence into a J-fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JExpansion<R> {
    pub fraction: JFraction<R>,
    /// Set to `n` when `beta_n` came out zero. The fraction then terminates
    /// and the coefficients beyond it are not determined by the moments.
    pub zero_beta: Option<usize>,
}

fn tridiagonal_entries<R: Ring>(pi: &HessWindow<R>) -> Result<JFraction<R>> {
    let mut gamma = Vec::with_capacity(pi.size());
    let mut beta = Vec::with_capacity(pi.size());
    for n in 0..pi.size() {
        for k in 0..n.saturating_sub(1) {
            if !pi.get(n, k).is_zero() {
                return Err(Error::Consistency(format!(
                    "Hankel production matrix is not tridiagonal at ({n}, {k})"
                )));
            }
        }
        gamma.push(pi.get(n, n));
        if n > 0 {
            beta.push(pi.get(n, n - 1));
        }
    }
    Ok(JFraction { gamma, beta })
}

/// Expands `l_0, l_1, ...` into a J-fraction from the `N x N` Hankel window.
///
/// The window is LU-factored as `H = A U`, which gives `Pi = A^{-1} Delta A`
/// and so `gamma_0 ..= gamma_{N-2}` and `beta_1 ..= beta_{N-2}`. If the
/// factorization meets a singular minor `Delta_k`, then `beta_{k-1} = 0`; the
/// truncated fraction is accepted when it reproduces every supplied moment,
/// and `NotNormal(k)` is raised otherwise.
pub fn moments_to_jfrac<R: Ring>(moments: &[R], size: usize) -> Result<JExpansion<R>> {
    if size == 0 {
        return Err(Error::InvalidInput("Hankel window size must be at least 1".into()));
    }
    let needed = 2 * size - 1;
    if moments.len() < needed {
        return Err(Error::InsufficientMoments {
            needed,
            available: moments.len(),
        });
    }
    if !moments[0].is_one() {
        return Err(Error::InvalidInput("moment sequence must start with 1".into()));
    }
    let hankel = hankel_window(moments, size, 0)?;
    match lu_factorize(&hankel) {
        Ok((a, _)) => Ok(JExpansion {
            fraction: tridiagonal_entries(&production_from_output(&a)?)?,
            zero_beta: None,
        }),
        Err(Error::SingularMinor { index }) if index >= 2 => {
            let (a, _) = lu_factorize(&hankel.leading(index))?;
            let mut fraction = tridiagonal_entries(&production_from_output(&a)?)?;
            fraction.beta.push(R::zero());
            // Beyond the zero beta the walk never returns to height 0, so
            // padding with zeros leaves every moment unchanged.
            let rows = moments.len().max(1) - 1;
            let padded = JFraction {
                gamma: (0..rows.max(1))
                    .map(|n| fraction.gamma.get(n).cloned().unwrap_or_else(R::zero))
                    .collect(),
                beta: (0..rows.max(1))
                    .map(|n| fraction.beta.get(n).cloned().unwrap_or_else(R::zero))
                    .collect(),
            };
            let reproduced = moments_from_production(&jfrac_production(&padded, rows)?, moments.len())?;
            if reproduced == moments {
                Ok(JExpansion {
                    fraction,
                    zero_beta: Some(index - 1),
                })
            } else {
                Err(Error::NotNormal {
                    index,
                    multi_index: None,
                })
            }
        }
        Err(Error::SingularMinor { index }) => Err(Error::NotNormal {
            index,
            multi_index: None,
        }),
        Err(e) => Err(e),
    }
}

/// Contraction of a classical S-fraction: `gamma_0 = alpha_1`,
/// `gamma_n = alpha_{2n} + alpha_{2n+1}`, `beta_n = alpha_{2n-1} alpha_{2n}`.
/// Emits every coefficient the stored alphas determine.
pub fn contract_s_to_j<R: Ring>(sf: &SFraction<R>) -> Result<JFraction<R>> {
    if sf.m != 1 {
        return Err(Error::InvalidInput(format!(
            "contraction needs a classical S-fraction, got m = {}",
            sf.m
        )));
    }
    let len = sf.alpha.len();
    let a = |i: usize| sf.alpha[i - 1].clone();
    let mut gamma = Vec::new();
    if len >= 1 {
        gamma.push(a(1));
    }
    let mut n = 1;
    while 2 * n < len {
        gamma.push(a(2 * n) + a(2 * n + 1));
        n += 1;
    }
    let beta = (1..=len / 2).map(|n| a(2 * n - 1) * a(2 * n)).collect();
    Ok(JFraction { gamma, beta })
}

/// Wall coefficients `l_1, l_2, ...` of a classical S-fraction:
/// `l_{2k-1} = (alpha_1 alpha_3 ... alpha_{2k-3}) / (alpha_2 ... alpha_{2k-2})` and
/// `l_{2k} = (alpha_2 ... alpha_{2k-2}) / (alpha_1 alpha_3 ... alpha_{2k-1})`.
///
/// `alpha_1 ..= alpha_L` give `l_1 ..= l_{L+1}`.
pub fn wall_translation<R: Ring>(sf: &SFraction<R>) -> Result<Vec<R>> {
    if sf.m != 1 {
        return Err(Error::InvalidInput("Wall translation needs m = 1".into()));
    }
    let mut inverses = Vec::with_capacity(sf.alpha.len());
    for (i, a) in sf.alpha.iter().enumerate() {
        inverses.push(
            a.inverse()
                .ok_or_else(|| Error::NotInvertible(format!("alpha_{} = {a:?}", i + 1)))?,
        );
    }
    // odd = alpha_1 alpha_3 ..., even = alpha_2 alpha_4 ..., kept as
    // numerator/denominator pairs so no division is needed until the end.
    let mut out = vec![R::one()];
    let mut odd = R::one();
    let mut odd_inv = R::one();
    let mut even = R::one();
    let mut even_inv = R::one();
    for n in 2..=sf.alpha.len() + 1 {
        if n % 2 == 0 {
            // l_{2k}: uses alpha_{2k-1} as the newest odd factor.
            odd_inv = odd_inv * inverses[n - 2].clone();
            out.push(even.clone() * odd_inv.clone());
            odd = odd * sf.alpha[n - 2].clone();
        } else {
            // l_{2k-1}: the even product now reaches alpha_{2k-2}.
            even = even * sf.alpha[n - 2].clone();
            even_inv = even_inv * inverses[n - 2].clone();
            out.push(odd.clone() * even_inv.clone());
        }
    }
    Ok(out)
}

/// Inverse of [`wall_translation`]: `alpha_1 = 1/l_2`,
/// `alpha_n = 1/(l_n l_{n+1})`.
pub fn alpha_from_wall<R: Ring>(l: &[R]) -> Result<SFraction<R>> {
    if l.first().is_some_and(|l1| !l1.is_one()) {
        return Err(Error::InvalidInput("Wall sequence must start with l_1 = 1".into()));
    }
    let mut alpha = Vec::with_capacity(l.len().saturating_sub(1));
    for n in 1..l.len() {
        let denom = if n == 1 {
            l[1].clone()
        } else {
            l[n - 1].clone() * l[n].clone()
        };
        alpha.push(
            denom
                .inverse()
                .ok_or_else(|| Error::NotInvertible(format!("Wall product at n = {n}")))?,
        );
    }
    Ok(SFraction::classical(alpha))
}

/// The `N`-row window of `L_1 ... L_m U*`.
///
/// `L_j` is lower-bidiagonal with unit diagonal and subdiagonal entry
/// `alpha_{(m+1)i + j - 1}` in row `i`; `U*` is upper-bidiagonal with unit
/// superdiagonal and diagonal `alpha_{(m+1)i + m}`. The window needs
/// `alpha_m ..= alpha_{(m+1)N - 1}`.
pub fn mbranched_production<R: Ring>(sf: &SFraction<R>, size: usize) -> Result<HessWindow<R>> {
    let m = sf.m;
    if size == 0 {
        return HessWindow::from_lower_rows(Some(m), Vec::new());
    }
    sf.require((m + 1) * size - 1)?;
    // Rows of the running product, columns 0..=size.
    let mut rows: Vec<Vec<R>> = (0..size)
        .map(|i| {
            let mut row = vec![R::zero(); size + 1];
            row[i] = sf.alpha((m + 1) * i + m).expect("checked above");
            row[i + 1] = R::one();
            row
        })
        .collect();
    for j in (1..=m).rev() {
        for i in (1..size).rev() {
            let l = sf.alpha((m + 1) * i + j - 1).expect("checked above");
            if l.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(i);
            for (dst, src) in tail[0].iter_mut().zip(&head[i - 1]) {
                *dst = dst.clone() + l.clone() * src.clone();
            }
        }
    }
    let lower = rows.into_iter().enumerate().map(|(i, r)| r[..=i].to_vec()).collect();
    HessWindow::from_lower_rows(Some(m), lower)
        .map_err(|e| Error::Consistency(format!("branched product exceeds band {m}: {e}")))
}

/// Checks `f_k = 1 + alpha_{k+m} t f_k f_{k+1} ... f_{k+m}` to `t^{order-1}`,
/// where `f_j` is the moment series of the fraction shifted by `j`.
pub fn verify_functional_equation<R: Ring>(
    sf: &SFraction<R>,
    m: usize,
    k: usize,
    order: usize,
) -> Result<bool> {
    if m != sf.m {
        return Err(Error::InvalidInput(format!(
            "branch order {m} does not match the fraction's m = {}",
            sf.m
        )));
    }
    let series = |j: usize| -> Result<TruncSeries<R>> {
        let shifted = sf.shifted(j);
        let pi = mbranched_production(&shifted, order.saturating_sub(1))?;
        Ok(TruncSeries::new(moments_from_production(&pi, order)?, order))
    };
    let fk = series(k)?;
    let coeff = sf.require(k + m)?;
    let mut rhs = TruncSeries::monomial(coeff, 1, order).mul(&fk)?;
    for j in 1..=m {
        rhs = rhs.mul(&series(k + j)?)?;
    }
    Ok(TruncSeries::one(order).add(&rhs)? == fk)
}
