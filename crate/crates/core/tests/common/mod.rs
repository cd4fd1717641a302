#![allow(dead_code)]

pub mod golden;

use prodmat::hessenberg::{DenseWindow, HessWindow, LowTriWindow};
use prodmat::scalar::rational;
use prodmat::{MultiPoly, Rational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn small_q(rng: &mut TestRng) -> Rational {
    rational(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_q(rng: &mut TestRng) -> Rational {
    loop {
        let q = small_q(rng);
        if q != Rational::from_int(0) {
            return q;
        }
    }
}

pub fn positive_q(rng: &mut TestRng) -> Rational {
    rational(rng.gen_range(1..=12), rng.gen_range(1..=4))
}

pub fn small_int(rng: &mut TestRng, lo: i64, hi: i64) -> Rational {
    Rational::from_int(rng.gen_range(lo..=hi))
}

/// Random `(d, 1)`-banded unit-lower-Hessenberg window.
pub fn random_hess(rng: &mut TestRng, size: usize, d: usize) -> HessWindow<Rational> {
    let entries: Vec<Vec<Rational>> = (0..size)
        .map(|n| (0..size).map(|_| small_q(rng)).take(n + 1).collect())
        .collect();
    HessWindow::from_fn(size, Some(d), |n, k| entries[n][k].clone())
}

pub fn random_tridiag(rng: &mut TestRng, size: usize) -> (Vec<Rational>, Vec<Rational>) {
    let gamma = (0..size).map(|_| small_q(rng)).collect();
    let beta = (1..size).map(|_| nonzero_q(rng)).collect();
    (gamma, beta)
}

pub fn random_lowtri(rng: &mut TestRng, size: usize) -> LowTriWindow<Rational> {
    let entries: Vec<Vec<Rational>> = (0..size).map(|_| (0..size).map(|_| small_q(rng)).collect()).collect();
    LowTriWindow::from_fn(size, |i, j| entries[i][j].clone())
}

pub fn random_dense(rng: &mut TestRng, size: usize) -> DenseWindow<Rational> {
    let entries: Vec<Vec<Rational>> = (0..size).map(|_| (0..size).map(|_| small_q(rng)).collect()).collect();
    DenseWindow::from_fn(size, |i, j| entries[i][j].clone())
}

pub fn q(n: i64, d: i64) -> Rational {
    rational(n, d)
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| Rational::from_int(n)).collect()
}

/// `family1, family2, ...` as indeterminates.
pub fn sym_seq(family: &str, start: u32, count: usize) -> Vec<MultiPoly> {
    (0..count as u32).map(|i| MultiPoly::indet(family, start + i)).collect()
}

/// Generic symbolic Hessenberg window with indeterminate `p{n}_{k}` style
/// entries, written as family `p` and index `100 n + k`.
pub fn sym_hess(size: usize, d: usize) -> HessWindow<MultiPoly> {
    HessWindow::from_fn(size, Some(d), |n, k| MultiPoly::indet("p", (100 * n + k) as u32))
}
