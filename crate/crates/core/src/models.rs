//! Worked examples: rising-factorial moments (Bessel-K weights), monic
//! Laguerre moments (Bessel-I weights) and hypergeometric alpha generators.

use crate::cfrac::SFraction;
use crate::error::{Error, Result};
use crate::hessenberg::HessWindow;
use crate::mop::MOPSystem;
use crate::scalar::{binomial, falling_factorial, rising_factorial, Ring};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BesselKParams<R> {
    pub a1: R,
    pub a2: R,
}

impl<R: Ring> BesselKParams<R> {
    pub fn new(a1: R, a2: R) -> Self {
        BesselKParams { a1, a2 }
    }

    pub fn swapped(&self) -> Self {
        BesselKParams {
            a1: self.a2.clone(),
            a2: self.a1.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BesselIParams<R> {
    pub alpha: R,
    pub xi: R,
}

impl<R: Ring> BesselIParams<R> {
    pub fn new(alpha: R, xi: R) -> Self {
        BesselIParams { alpha, xi }
    }
}

fn nat<R: Ring>(n: usize) -> R {
    R::from_int(n as i64)
}

/// `a1^(n rising) a2^(n rising)` for `n < N`.
pub fn besselK_moments<R: Ring>(p: &BesselKParams<R>, size: usize) -> Vec<R> {
    (0..size)
        .map(|n| rising_factorial(&p.a1, n) * rising_factorial(&p.a2, n))
        .collect()
}

/// The pair `(mu_{a1,a2}, mu_{a1+1,a2})`.
pub fn besselK_system<R: Ring>(p: &BesselKParams<R>, size: usize) -> Result<MOPSystem<R>> {
    let shifted = BesselKParams::new(p.a1.clone() + R::one(), p.a2.clone());
    MOPSystem::new(vec![besselK_moments(p, size), besselK_moments(&shifted, size)])
}

/// The four-term recurrence:
/// `pi_nn = a1 a2 + (2a1 + 2a2 - 1) n + 3n^2`,
/// `pi_{n,n-1} = n (a1+n-1)(a2+n-1)(a1+a2+3n-2)`,
/// `pi_{n,n-2} = n(n-1)(a1+n-1)(a1+n-2)(a2+n-1)(a2+n-2)`.
pub fn besselK_production<R: Ring>(p: &BesselKParams<R>, size: usize) -> HessWindow<R> {
    let (a1, a2) = (&p.a1, &p.a2);
    HessWindow::from_fn(size, Some(2), |n, k| {
        let nn = nat::<R>(n);
        match n - k {
            0 => {
                a1.clone() * a2.clone()
                    + (nat::<R>(2) * a1.clone() + nat::<R>(2) * a2.clone() - R::one()) * nn.clone()
                    + nat::<R>(3 * n * n)
            }
            1 => {
                let shift = nat::<R>(n - 1);
                nn * (a1.clone() + shift.clone())
                    * (a2.clone() + shift)
                    * (a1.clone() + a2.clone() + nat::<R>(3 * n) - nat::<R>(2))
            }
            _ => {
                let s1 = nat::<R>(n - 1);
                let s2 = nat::<R>(n - 2);
                nat::<R>(n * (n - 1))
                    * (a1.clone() + s1.clone())
                    * (a1.clone() + s2.clone())
                    * (a2.clone() + s1)
                    * (a2.clone() + s2)
            }
        }
    })
}

/// `S_{n,k} = C(n,k) (a1+k)^(n-k rising) (a2+k)^(n-k rising)`; zero for `k > n`.
pub fn besselK_Snk<R: Ring>(p: &BesselKParams<R>, n: usize, k: usize) -> R {
    if k > n {
        return R::zero();
    }
    let kk = nat::<R>(k);
    binomial::<R>(n, k)
        * rising_factorial(&(p.a1.clone() + kk.clone()), n - k)
        * rising_factorial(&(p.a2.clone() + kk), n - k)
}

/// `alpha_m, ..., alpha_{m+count-1}` with `alpha_{m+s} = p_s ... p_{s+m-1}`,
/// where the pre-alpha stream is `a_1, ..., a_{m+1}, a_1 + 1, ..., a_{m+1} + 1, ...`.
pub fn hyper_alphas<R: Ring>(m: usize, a: &[R], count: usize) -> Result<SFraction<R>> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be at least 1".into()));
    }
    if a.len() != m + 1 {
        return Err(Error::InvalidInput(format!(
            "need {} parameters, got {}",
            m + 1,
            a.len()
        )));
    }
    let pre = |t: usize| a[t % (m + 1)].clone() + nat::<R>(t / (m + 1));
    let alpha = (0..count)
        .map(|s| (s..s + m).fold(R::one(), |acc, t| acc * pre(t)))
        .collect();
    SFraction::new(m, alpha)
}

/// The quadridiagonal production matrix of an `m = 2` branched S-fraction:
/// `pi_nn = alpha_{3n} + alpha_{3n+1} + alpha_{3n+2}`,
/// `pi_{n,n-1} = alpha_{3n-2} alpha_{3n} + alpha_{3n-1} alpha_{3n} + alpha_{3n-1} alpha_{3n+1}`,
/// `pi_{n,n-2} = alpha_{3n-4} alpha_{3n-2} alpha_{3n}`, with `alpha_0 = alpha_1 = 0`.
pub fn quad_from_alphas<R: Ring>(sf: &SFraction<R>, size: usize) -> Result<HessWindow<R>> {
    if sf.m() != 2 {
        return Err(Error::InvalidInput(format!("expected m = 2, got m = {}", sf.m())));
    }
    if size > 0 {
        let needed = 3 * size - 1;
        if sf.alpha(needed).is_none() {
            return Err(Error::InsufficientCoefficients {
                needed: needed - 1,
                available: sf.alphas().len(),
            });
        }
    }
    let a = |i: usize| sf.alpha(i).expect("checked above");
    Ok(HessWindow::from_fn(size, Some(2), |n, k| match n - k {
        0 => a(3 * n) + a(3 * n + 1) + a(3 * n + 2),
        1 => {
            a(3 * n - 2) * a(3 * n) + a(3 * n - 1) * a(3 * n) + a(3 * n - 1) * a(3 * n + 1)
        }
        _ => a(3 * n - 4) * a(3 * n - 2) * a(3 * n),
    }))
}

/// `L_n^(alpha)(x) = sum_k C(n,k) (n+alpha)^(n-k falling) x^k`.
pub fn monic_laguerre<R: Ring>(n: usize, alpha: &R) -> UniPoly<R> {
    let top = alpha.clone() + nat::<R>(n);
    UniPoly::new(
        (0..=n)
            .map(|k| binomial::<R>(n, k) * falling_factorial(&top, n - k))
            .collect(),
    )
}

/// `L_n^(alpha)` evaluated at `x`.
pub fn monic_laguerre_at<R: Ring>(n: usize, alpha: &R, x: &R) -> R {
    monic_laguerre(n, alpha).eval(x)
}

/// `L_n^(alpha)(xi)` for `n < N`.
pub fn besselI_moments<R: Ring>(p: &BesselIParams<R>, size: usize) -> Vec<R> {
    (0..size).map(|n| monic_laguerre_at(n, &p.alpha, &p.xi)).collect()
}

/// The pair `(mu_{alpha,xi}, mu_{alpha+1,xi})`.
pub fn besselI_system<R: Ring>(p: &BesselIParams<R>, size: usize) -> Result<MOPSystem<R>> {
    let shifted = BesselIParams::new(p.alpha.clone() + R::one(), p.xi.clone());
    MOPSystem::new(vec![besselI_moments(p, size), besselI_moments(&shifted, size)])
}

/// `pi_nn = 2n + 1 + alpha + xi`, `pi_{n,n-1} = n(n + alpha) + 2n xi`,
/// `pi_{n,n-2} = n(n-1) xi`.
pub fn besselI_production<R: Ring>(p: &BesselIParams<R>, size: usize) -> HessWindow<R> {
    let (alpha, xi) = (&p.alpha, &p.xi);
    HessWindow::from_fn(size, Some(2), |n, k| match n - k {
        0 => nat::<R>(2 * n + 1) + alpha.clone() + xi.clone(),
        1 => nat::<R>(n) * (nat::<R>(n) + alpha.clone()) + nat::<R>(2 * n) * xi.clone(),
        _ => nat::<R>(n * (n - 1)) * xi.clone(),
    })
}

/// `(-1)^n sum_k C(n,k) xi^(n-k) L_k^(alpha)(-x)`.
pub fn besselI_stepline_poly<R: Ring>(n: usize, p: &BesselIParams<R>) -> UniPoly<R> {
    let mut total = UniPoly::new(Vec::new());
    for k in 0..=n {
        let c = binomial::<R>(n, k) * p.xi.pow((n - k) as u32);
        total = total + monic_laguerre(k, &p.alpha).reflect().scale(&c);
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}
