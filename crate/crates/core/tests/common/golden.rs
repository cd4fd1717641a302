//! CLI golden cases: arguments, the checked-in expected output, and the same
//! document computed directly through the library.

use std::path::PathBuf;

use prodmat::cfrac::{
    alpha_from_wall, contract_s_to_j, jfrac_production, mbranched_production, moments_to_jfrac,
    wall_translation, JFraction, SFraction,
};
use prodmat::functionals::{expectation, hankel_window, lu_factorize, tridiag_expectation};
use prodmat::hessenberg::{charpoly_seq, invert_unit_lower, leading_minors, DenseWindow, LowTriWindow};
use prodmat::json::*;
use prodmat::models::*;
use prodmat::mop::*;
use prodmat::paths::*;
use prodmat::production::*;
use prodmat::{MultiPoly, Rational, UniPoly, Var};
use serde_json::{json, Value};

use super::{ints, q};

pub struct GoldenCase {
    pub name: &'static str,
    pub args: Vec<String>,
    /// Expected exit status.
    pub code: i32,
    pub library: Box<dyn Fn() -> Value>,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden_path(name: &str) -> PathBuf {
    golden_dir().join(format!("{name}.json"))
}

fn case(name: &'static str, args: &[&str], library: impl Fn() -> Value + 'static) -> GoldenCase {
    GoldenCase {
        name,
        args: std::iter::once("prodmat").chain(args.iter().copied()).map(String::from).collect(),
        code: 0,
        library: Box::new(library),
    }
}

fn failing(name: &'static str, args: &[&str], library: impl Fn() -> Value + 'static) -> GoldenCase {
    GoldenCase {
        code: 2,
        ..case(name, args, library)
    }
}

fn ones(n: usize) -> Vec<Rational> {
    vec![q(1, 1); n]
}

fn motzkin_jf(rows: usize) -> JFraction<Rational> {
    JFraction::new(ones(rows), ones(rows))
}

const CATALAN_PI: &str = r#"{"size":4,"band":1,"rows":[["0","1"],["1","0","1"],["1","0","1"],["1","0"]]}"#;
const RANDOM_PI: &str = r#"{"size":4,"band":2,"rows":[["1/2","1"],["-1","3","1"],["2","0","-2/3","1"],["5","1","4"]]}"#;
const TRIDIAG_PI: &str = r#"{"size":6,"band":1,"rows":[["1","1"],["2","-1","1"],["3","0","1"],["1/2","2","1"],["1","1","1"],["2","3"]]}"#;

fn catalan_pi() -> prodmat::QHessWindow {
    jfrac_production(&JFraction::new(ints(&[0, 0, 0, 0]), ones(3)), 4).unwrap()
}

fn random_pi() -> prodmat::QHessWindow {
    hess_from_json(&serde_json::from_str(RANDOM_PI).unwrap()).unwrap()
}

fn tridiag_pi() -> prodmat::QHessWindow {
    hess_from_json(&serde_json::from_str(TRIDIAG_PI).unwrap()).unwrap()
}

fn bk_system_json() -> &'static str {
    Box::leak(system_to_json(&bk_system()).to_string().into_boxed_str())
}

fn bk_system() -> MOPSystem<Rational> {
    besselK_system(&BesselKParams::new(q(1, 1), q(2, 1)), 9).unwrap()
}

pub fn cases() -> Vec<GoldenCase> {
    let bk_json = bk_system_json();
    vec![
        case("output_catalan", &["output", "--production", CATALAN_PI, "--n", "5"], || {
            lowtri_to_json(&output_matrix(&catalan_pi(), 5).unwrap())
        }),
        case(
            "production_ballot",
            &["production", "--output", r#"[["1"],["0","1"],["1","0","1"],["0","2","0","1"]]"#],
            || {
                let a = LowTriWindow::new(vec![ints(&[1]), ints(&[0, 1]), ints(&[1, 0, 1]), ints(&[0, 2, 0, 1])]).unwrap();
                hess_to_json(&production_from_output(&a).unwrap())
            },
        ),
        case("moments_production", &["moments", "--production", RANDOM_PI, "--n", "5"], || {
            seq_to_json(&moments_from_production(&random_pi(), 5).unwrap())
        }),
        case(
            "moments_motzkin",
            &["moments", "--jfraction", r#"{"gamma":["1","1","1","1","1","1"],"beta":["1","1","1","1","1","1"]}"#, "--n", "7"],
            || seq_to_json(&moments_from_production(&jfrac_production(&motzkin_jf(6), 6).unwrap(), 7).unwrap()),
        ),
        case(
            "moments_two_dyck",
            &["moments", "--sfraction", r#"{"m":2,"alpha":["1","1","1","1","1","1","1","1","1","1","1","1","1"]}"#, "--n", "5"],
            || {
                let sf = SFraction::new(2, ones(13)).unwrap();
                seq_to_json(&moments_from_production(&mbranched_production(&sf, 4).unwrap(), 5).unwrap())
            },
        ),
        case("jfraction_motzkin", &["jfraction", "--moments", "[1,1,2,4,9,21,51]", "--n", "4"], || {
            jexpansion_to_json(&moments_to_jfrac(&ints(&[1, 1, 2, 4, 9, 21, 51]), 4).unwrap())
        }),
        case("jfraction_degenerate", &["jfraction", "--moments", "[1,1,1,1,1]", "--n", "3"], || {
            jexpansion_to_json(&moments_to_jfrac(&ints(&[1, 1, 1, 1, 1]), 3).unwrap())
        }),
        failing("jfraction_not_normal", &["jfraction", "--moments", "[1,1,1,7,1]", "--n", "3"], || {
            error_to_json(&moments_to_jfrac(&ints(&[1, 1, 1, 7, 1]), 3).unwrap_err())
        }),
        case("sfraction_wall", &["sfraction", "--sfraction", r#"{"alpha":["1","2","3","4"]}"#], || {
            json!({"wall": seq_to_json(&wall_translation(&SFraction::classical(ints(&[1, 2, 3, 4]))).unwrap())})
        }),
        case("sfraction_from_wall", &["sfraction", "--wall", r#"["1","1/2","2/3","3/4"]"#], || {
            sfrac_to_json(&alpha_from_wall(&[q(1, 1), q(1, 2), q(2, 3), q(3, 4)]).unwrap())
        }),
        case("contract", &["contract", "--sfraction", r#"{"alpha":["1","2","3","4","5"]}"#], || {
            jfrac_to_json(&contract_s_to_j(&SFraction::classical(ints(&[1, 2, 3, 4, 5]))).unwrap())
        }),
        case(
            "mbranched_symbolic",
            &["--symbolic", "mbranched", "--sfraction", r#"{"m":2,"alpha":["a2","a3","a4","a5","a6","a7","a8"]}"#, "--n", "3"],
            || {
                let alpha: Vec<MultiPoly> = (2..=8).map(|i| MultiPoly::indet("a", i)).collect();
                hess_to_json(&mbranched_production(&SFraction::new(2, alpha).unwrap(), 3).unwrap())
            },
        ),
        case("charpoly", &["charpoly", "--production", RANDOM_PI, "--n", "4"], || {
            polyseq_to_json(&charpoly_seq(&random_pi(), 4).unwrap())
        }),
        case("viennot_row", &["viennot", "--production", RANDOM_PI, "--n", "3"], || {
            let pi = random_pi();
            seq_to_json(&(0..=3).map(|j| viennot_coeff(&pi, 3, j).unwrap()).collect::<Vec<_>>())
        }),
        case("viennot_entry", &["viennot", "--production", RANDOM_PI, "--n", "3", "--k", "1"], || {
            viennot_coeff(&random_pi(), 3, 1).unwrap().to_json()
        }),
        case(
            "expectation",
            &["expectation", "--production", TRIDIAG_PI, "--k", "1", "--l", "2", "--m", "1", "--n", "2"],
            || expectation(&tridiag_pi(), 1, 2, 1, 2).unwrap().to_json(),
        ),
        case(
            "expectation_tridiagonal",
            &["expectation", "--production", TRIDIAG_PI, "--k", "1", "--q", r#"["0","0","1"]"#, "--m", "1", "--n", "2"],
            || {
                let x2 = UniPoly::new(ints(&[0, 0, 1]));
                tridiag_expectation(&tridiag_pi(), &x2, 1, 1, 2).unwrap().to_json()
            },
        ),
        failing(
            "expectation_not_tridiagonal",
            &["expectation", "--production", RANDOM_PI, "--k", "0", "--q", "[1]", "--m", "0", "--n", "1"],
            || {
                let one = UniPoly::new(ints(&[1]));
                error_to_json(&tridiag_expectation(&random_pi(), &one, 0, 0, 1).unwrap_err())
            },
        ),
        case("hankel_shifted", &["hankel", "--moments", "[1,1,2,5,14,42,132]", "--n", "3", "--l", "1"], || {
            let h = hankel_window(&ints(&[1, 1, 2, 5, 14, 42, 132]), 3, 1).unwrap();
            json!({"matrix": dense_to_json(&h), "minors": seq_to_json(&leading_minors(&h, 3).unwrap())})
        }),
        case("lu", &["lu", "--matrix", "[[1,2],[3,4]]"], || {
            let (l, u) = lu_factorize(&DenseWindow::new(vec![ints(&[1, 2]), ints(&[3, 4])]).unwrap()).unwrap();
            json!({"L": lowtri_to_json(&l), "U": dense_to_json(&u)})
        }),
        failing("lu_singular", &["lu", "--matrix", "[[0,1],[1,0]]"], || {
            error_to_json(&lu_factorize(&DenseWindow::new(vec![ints(&[0, 1]), ints(&[1, 0])]).unwrap()).unwrap_err())
        }),
        case("mop_index", &["mop", "--system", bk_json, "--index", "[2,1]"], || {
            poly_to_json(&mop_type2(&bk_system(), &MultiIndex(vec![2, 1])).unwrap())
        }),
        case("mop_stepline_path", &["mop", "--system", bk_json, "--path", "[1,2,1,2,1,2]", "--n", "4"], || {
            let sys = bk_system();
            let path = NNPath::stepline(2, 6);
            let pi = path_production(&sys, &path, 4).unwrap();
            let gamma = star_functionals(&sys, &path, 4).unwrap();
            json!({
                "polys": polyseq_to_json(&path_polys(&sys, &path, 4).unwrap())["polys"],
                "production": hess_to_json(&pi),
                "gamma": dense_to_json(&gamma),
                "U": dense_to_json(&verify_gamma_LU(&gamma, &pi).unwrap()),
            })
        }),
        failing(
            "mop_not_normal",
            &["mop", "--system", r#"{"r":2,"moments":[["1","0","1","0"],["1","0","1","0"]]}"#, "--index", "[1,1]"],
            || {
                let sys = MOPSystem::new(vec![ints(&[1, 0, 1, 0]), ints(&[1, 0, 1, 0])]).unwrap();
                error_to_json(&mop_type2(&sys, &MultiIndex(vec![1, 1])).unwrap_err())
            },
        ),
        case("stepline", &["stepline", "--r", "3", "--n", "7"], || json!(stepline_index(3, 7).entries())),
        case(
            "oracle_lukasiewicz",
            &["oracle", "--kind", "lukasiewicz", "--production", RANDOM_PI, "--n", "3", "--k", "1"],
            || {
                let pi = random_pi();
                let alg = output_matrix(&pi, 4).unwrap().get(3, 1);
                let ora = lukasiewicz_weight_sum(&pi, 3, 1).unwrap();
                json!({"agree": alg == ora, "algebra": alg.to_json(), "oracle": ora.to_json()})
            },
        ),
        case(
            "oracle_motzkin_symbolic",
            &["--symbolic", "oracle", "--kind", "motzkin", "--jfraction", r#"{"gamma":["g0","g1","g2"],"beta":["b1","b2","b3"]}"#, "--n", "3", "--k", "1"],
            || {
                let jf = JFraction::new(super::sym_seq("g", 0, 3), super::sym_seq("b", 1, 3));
                let alg = output_matrix(&jfrac_production(&jf, 3).unwrap(), 4).unwrap().get(3, 1);
                let ora = motzkin_Jnk(&jf.beta, &jf.gamma, 3, 1).unwrap();
                json!({"agree": alg == ora, "algebra": alg.to_json(), "oracle": ora.to_json()})
            },
        ),
        case(
            "oracle_mdyck",
            &["oracle", "--kind", "mdyck", "--sfraction", r#"{"m":2,"alpha":["1","2","3","4","5","6","7","8","9","10"]}"#, "--n", "3", "--k", "1"],
            || {
                let sf = SFraction::new(2, ints(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10])).unwrap();
                let alg = output_matrix(&mbranched_production(&sf, 3).unwrap(), 4).unwrap().get(3, 1);
                let ora = mdyck_Snk(sf.alphas(), 2, 3, 1).unwrap();
                json!({"agree": alg == ora, "algebra": alg.to_json(), "oracle": ora.to_json()})
            },
        ),
        case(
            "oracle_viennot",
            &["oracle", "--kind", "viennot", "--production", RANDOM_PI, "--n", "3", "--k", "0"],
            || {
                let pi = random_pi();
                let alg = invert_unit_lower(&output_matrix(&pi, 4).unwrap()).get(3, 0);
                let ora = viennot_coeff(&pi, 3, 0).unwrap();
                json!({"agree": alg == ora, "algebra": alg.to_json(), "oracle": ora.to_json()})
            },
        ),
        case("examples_besselK", &["examples", "besselK", "--params", r#"{"a1":"1/2","a2":"3"}"#, "--n", "4"], || {
            let p = BesselKParams::new(q(1, 2), q(3, 1));
            let pi = besselK_production(&p, 4);
            json!({
                "moments": seq_to_json(&besselK_moments(&p, 4)),
                "production": hess_to_json(&pi),
                "triangle": lowtri_to_json(&output_matrix(&pi, 4).unwrap()),
                "closed_form": lowtri_to_json(&LowTriWindow::from_fn(4, |n, k| besselK_Snk(&p, n, k))),
            })
        }),
        case(
            "examples_besselI_symbolic",
            &["--symbolic", "examples", "besselI", "--params", r#"{"alpha":"alpha","xi":"xi"}"#, "--n", "3"],
            || {
                let p = BesselIParams::new(MultiPoly::var(Var::named("alpha")), MultiPoly::var(Var::named("xi")));
                let polys: Vec<Value> = (0..3).map(|k| poly_to_json(&besselI_stepline_poly(k, &p))).collect();
                json!({
                    "moments": seq_to_json(&besselI_moments(&p, 3)),
                    "production": hess_to_json(&besselI_production(&p, 3)),
                    "stepline": polys,
                })
            },
        ),
        case("examples_hyper", &["examples", "hyper", "--params", r#"{"m":2,"a":["1","2","1"]}"#, "--n", "3"], || {
            let sf = hyper_alphas(2, &ints(&[1, 2, 1]), 7).unwrap();
            let pi = mbranched_production(&sf, 3).unwrap();
            json!({
                "sfraction": sfrac_to_json(&sf),
                "production": hess_to_json(&pi),
                "moments": seq_to_json(&moments_from_production(&pi, 4).unwrap()),
            })
        }),
    ]
}

/// Compares CLI output, golden file and library document for one case.
pub fn check_case(c: &GoldenCase) -> Result<(), String> {
    let out = prodmat::cli::run(c.args.clone());
    if out.code != c.code {
        return Err(format!("{}: exit {} (expected {}), stderr: {}", c.name, out.code, c.code, out.stderr));
    }
    let library = format!("{}\n", (c.library)());
    if out.stdout != library {
        return Err(format!("{}: CLI output differs from library\n  cli: {}  lib: {}", c.name, out.stdout, library));
    }
    let path = golden_path(c.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).map_err(|e| e.to_string())?;
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if golden != out.stdout {
        return Err(format!("{}: golden file differs\n  golden: {}  cli: {}", c.name, golden, out.stdout));
    }
    Ok(())
}
