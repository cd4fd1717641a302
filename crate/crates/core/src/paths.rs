//! Brute-force lattice-path oracles.
//!
//! Every function here enumerates paths one by one with exact weights. None
//! of them shares code with the matrix algorithms they are used to check.

use crate::error::{Error, Result};
use crate::hessenberg::HessWindow;
use crate::scalar::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    /// Steps `i -> j` with `0 <= j <= i + 1`.
    Lukasiewicz,
    /// Steps `+1, 0, -1`.
    Motzkin,
    /// Steps `+1, -1`.
    Dyck,
    /// Steps `+1, -m`.
    MDyck(usize),
}

/// An unweighted family of paths in the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathSpec {
    pub kind: PathKind,
    pub length: usize,
    pub start_height: usize,
    pub end_height: usize,
}

impl PathSpec {
    /// Height profiles of all paths, starting height included, in the order
    /// of a depth-first search that tries lower next heights first.
    pub fn enumerate(&self) -> Result<Vec<Vec<usize>>> {
        if let PathKind::MDyck(0) = self.kind {
            return Err(Error::InvalidInput("m-Dyck paths need m >= 1".into()));
        }
        let mut out = Vec::new();
        let mut profile = vec![self.start_height];
        self.walk(&mut profile, &mut out);
        Ok(out)
    }

    fn next_heights(&self, h: usize) -> Vec<usize> {
        match self.kind {
            PathKind::Lukasiewicz => (0..=h + 1).collect(),
            PathKind::Motzkin => (h.saturating_sub(1)..=h + 1).collect(),
            PathKind::Dyck => {
                let mut v: Vec<usize> = h.checked_sub(1).into_iter().collect();
                v.push(h + 1);
                v
            }
            PathKind::MDyck(m) => {
                let mut v: Vec<usize> = h.checked_sub(m).into_iter().collect();
                v.push(h + 1);
                v
            }
        }
    }

    fn walk(&self, profile: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let h = *profile.last().expect("profile starts non-empty");
        let remaining = self.length + 1 - profile.len();
        if remaining == 0 {
            if h == self.end_height {
                out.push(profile.clone());
            }
            return;
        }
        for next in self.next_heights(h) {
            // Every kind rises by at most one per step.
            if next + remaining - 1 < self.end_height {
                continue;
            }
            profile.push(next);
            self.walk(profile, out);
            profile.pop();
        }
    }

    pub fn count(&self) -> Result<usize> {
        Ok(self.enumerate()?.len())
    }
}

/// Total weight of the `n`-step Łukasiewicz walks `0 -> k`, step `i -> j`
/// weighted `pi_{ij}`. Heights `0..n` are visited, so `n` rows are needed.
pub fn lukasiewicz_weight_sum<R: Ring>(pi: &HessWindow<R>, n: usize, k: usize) -> Result<R> {
    if pi.size() < n {
        return Err(Error::WindowTooSmall {
            needed: n,
            available: pi.size(),
        });
    }
    fn go<R: Ring>(pi: &HessWindow<R>, h: usize, left: usize, k: usize, w: R) -> R {
        if left == 0 {
            return if h == k { w } else { R::zero() };
        }
        let mut total = R::zero();
        for j in 0..=h + 1 {
            if j + left - 1 < k {
                continue;
            }
            let step = pi.get(h, j);
            if step.is_zero() {
                continue;
            }
            total = total + go(pi, j, left - 1, k, w.clone() * step);
        }
        total
    }
    Ok(go(pi, 0, n, k, R::one()))
}

/// `J_{n,k}(beta, gamma)`: Motzkin paths `0 -> k` of length `n`, rises
/// weight 1, level steps at height `i` weight `gamma[i]`, falls from height
/// `i` weight `beta[i-1]` (that is, `beta_i`).
pub fn motzkin_Jnk<R: Ring>(beta: &[R], gamma: &[R], n: usize, k: usize) -> Result<R> {
    struct Walk<'a, R> {
        beta: &'a [R],
        gamma: &'a [R],
        k: usize,
    }
    impl<R: Ring> Walk<'_, R> {
        fn go(&self, h: usize, left: usize, w: R) -> Result<R> {
            if left == 0 {
                return Ok(if h == self.k { w } else { R::zero() });
            }
            let mut total = R::zero();
            let reach = |next: usize| next.abs_diff(self.k) < left;
            if reach(h + 1) {
                total = total + self.go(h + 1, left - 1, w.clone())?;
            }
            if reach(h) {
                let g = self.gamma.get(h).ok_or(Error::InsufficientCoefficients {
                    needed: h + 1,
                    available: self.gamma.len(),
                })?;
                total = total + self.go(h, left - 1, w.clone() * g.clone())?;
            }
            if h > 0 && reach(h - 1) {
                let b = self.beta.get(h - 1).ok_or(Error::InsufficientCoefficients {
                    needed: h,
                    available: self.beta.len(),
                })?;
                total = total + self.go(h - 1, left - 1, w * b.clone())?;
            }
            Ok(total)
        }
    }
    if k > n {
        return Ok(R::zero());
    }
    Walk { beta, gamma, k }.go(0, n, R::one())
}

/// `S^(m)_{n,k}(alpha)`: partial m-Dyck paths from `(0,0)` to
/// `((m+1)n, (m+1)k)`, rises weight 1, an m-fall from height `i` weight
/// `alpha_i`. `alpha[0]` is `alpha_m`.
pub fn mdyck_Snk<R: Ring>(alpha: &[R], m: usize, n: usize, k: usize) -> Result<R> {
    if m == 0 {
        return Err(Error::InvalidInput("m-Dyck paths need m >= 1".into()));
    }
    if k > n {
        return Ok(R::zero());
    }
    let target = (m + 1) * k;
    fn go<R: Ring>(alpha: &[R], m: usize, target: usize, h: usize, left: usize, w: R) -> Result<R> {
        if left == 0 {
            return Ok(if h == target { w } else { R::zero() });
        }
        let mut total = R::zero();
        if h + left >= target {
            total = total + go(alpha, m, target, h + 1, left - 1, w.clone())?;
        }
        if h >= m && h - m + left > target {
            let a = alpha.get(h - m).ok_or(Error::InsufficientCoefficients {
                needed: h - m + 1,
                available: alpha.len(),
            })?;
            if !a.is_zero() {
                total = total + go(alpha, m, target, h - m, left - 1, w * a.clone())?;
            }
        }
        Ok(total)
    }
    go(alpha, m, target, 0, (m + 1) * n, R::one())
}

/// `b_{nj}`: sum over partitions of `{0, ..., n-1}` into intervals `[k, l]`
/// and exactly `j` empty sites, each interval weighted `-pi_{lk}`.
pub fn viennot_coeff<R: Ring>(pi: &HessWindow<R>, n: usize, j: usize) -> Result<R> {
    if j > n {
        return Err(Error::OutOfRange(format!("j = {j} exceeds n = {n}")));
    }
    if pi.size() < n {
        return Err(Error::WindowTooSmall {
            needed: n,
            available: pi.size(),
        });
    }
    fn go<R: Ring>(pi: &HessWindow<R>, n: usize, site: usize, empties_left: usize) -> R {
        if site == n {
            return if empties_left == 0 { R::one() } else { R::zero() };
        }
        let mut total = R::zero();
        if empties_left > 0 {
            total = total + go(pi, n, site + 1, empties_left - 1);
        }
        for end in site..n {
            let w = pi.get(end, site);
            if w.is_zero() {
                continue;
            }
            total = total - w * go(pi, n, end + 1, empties_left);
        }
        total
    }
    Ok(go(pi, n, 0, j))
}
