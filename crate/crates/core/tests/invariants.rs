mod common;

use common::*;
use num_traits::One;
use prodmat::cfrac::{jfrac_production, JFraction};
use prodmat::functionals::{orthopolys_from_gamma, polyseq_from_production};
use prodmat::hessenberg::*;
use prodmat::json::{hess_from_json, hess_to_json};
use prodmat::paths::motzkin_Jnk;
use prodmat::production::{moments_from_production, output_matrix, production_from_output};
use prodmat::{Rational, Ring};
use rand::Rng;

#[test]
fn unit_lower_inverse() {
    let mut r = rng(101);
    for size in 1..=8 {
        let b = random_lowtri(&mut r, size);
        let inv = invert_unit_lower(&b);
        assert_eq!(inv.mul(&b).unwrap(), LowTriWindow::identity(size));
        assert_eq!(b.mul(&inv).unwrap(), LowTriWindow::identity(size));
    }
}

#[test]
fn conjugate_shift_is_unit_lower_hessenberg() {
    let mut r = rng(102);
    for size in 2..=8 {
        let pi = conjugate_shift(&random_lowtri(&mut r, size)).unwrap();
        assert_eq!(pi.size(), size - 1);
        let dense = pi.to_dense();
        assert!(dense.is_lower_hessenberg());
        for n in 0..size - 2 {
            assert!(dense.get(n, n + 1).is_one());
        }
    }
}

#[test]
fn hessenberg_minors_match_elimination() {
    let mut r = rng(103);
    for size in 1..=8 {
        for _ in 0..4 {
            let rows: Vec<Vec<Rational>> = (0..size)
                .map(|i| (0..size).map(|j| if j > i + 1 { Rational::from_int(0) } else { small_q(&mut r) }).collect())
                .collect();
            let h = DenseWindow::new(rows).unwrap();
            assert_eq!(
                hessenberg_leading_minors(&h, size).unwrap(),
                bareiss_leading_minors(&h, size).unwrap()
            );
        }
    }
}

#[test]
fn production_output_roundtrip() {
    let mut r = rng(104);
    for size in 2..=10 {
        for d in 1..=3 {
            let pi = random_hess(&mut r, size, d);
            let back = production_from_output(&output_matrix(&pi, size).unwrap()).unwrap();
            assert_eq!(back.to_dense(), pi.truncate(size - 1).to_dense(), "N={size}, d={d}");
        }
    }
}

#[test]
fn reversal_symmetry_of_motzkin_paths() {
    let mut r = rng(105);
    let (gamma, beta) = random_tridiag(&mut r, 11);
    let jf = JFraction::new(gamma.clone(), beta.clone());
    let moments = moments_from_production(&jfrac_production(&jf, 10).unwrap(), 11).unwrap();
    for total in 0..=10 {
        for n in 0..=total {
            let n2 = total - n;
            let split = (0..=n.min(n2)).fold(Rational::from_int(0), |acc, l| {
                let weight = beta[..l].iter().fold(Rational::one(), |w, b| w * b.clone());
                acc + motzkin_Jnk(&beta, &gamma, n, l).unwrap() * weight * motzkin_Jnk(&beta, &gamma, n2, l).unwrap()
            });
            assert_eq!(split, moments[total], "n={n}, n'={n2}");
        }
    }
}

#[test]
fn orthopolys_recover_constructed_factor() {
    let mut r = rng(106);
    for size in 1..=7 {
        let a = random_lowtri(&mut r, size);
        let u = DenseWindow::from_fn(size, |i, j| {
            if j < i {
                Rational::from_int(0)
            } else if j == i {
                Rational::from_int(1 + (i * 7 % 5) as i64)
            } else {
                Rational::from_int(((i + 2 * j) % 7) as i64 - 3)
            }
        });
        let gamma = a.to_dense().mul(&u).unwrap();
        let p = orthopolys_from_gamma(&gamma, size).unwrap();
        assert_eq!(p.coeff_matrix(), &invert_unit_lower(&a));
    }
}

#[test]
fn recurrence_sequence_is_monic_and_dual() {
    let mut r = rng(107);
    let pi = random_hess(&mut r, 8, 2);
    let p = polyseq_from_production(&pi, 8).unwrap();
    for n in 0..8 {
        assert!(p.poly(n).is_monic());
        assert_eq!(p.poly(n).degree(), Some(n));
    }
}

#[test]
fn hessenberg_json_roundtrip() {
    let mut r = rng(108);
    for _ in 0..20 {
        let size = r.gen_range(1..=7);
        let d = r.gen_range(1..=3);
        let pi = random_hess(&mut r, size, d);
        let v = hess_to_json(&pi);
        assert_eq!(hess_from_json::<Rational>(&v).unwrap(), pi);
    }
}

#[test]
fn repeated_cli_runs_are_byte_identical() {
    let args = ["prodmat", "--symbolic", "charpoly", "--production",
        r#"{"size":3,"band":2,"rows":[["p0","1"],["p1","p2","1"],["p3","p4","p5"]]}"#, "--n", "3"];
    let first = prodmat::cli::run(args);
    assert_eq!(first.code, 0);
    for _ in 0..3 {
        assert_eq!(prodmat::cli::run(args), first);
    }
}
