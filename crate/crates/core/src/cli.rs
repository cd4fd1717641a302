//! Command-line front end: every subcommand reads JSON (inline or `@file`)
//! and writes one canonical JSON document to standard output.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cfrac::{
    alpha_from_wall, contract_s_to_j, jfrac_production, mbranched_production, moments_to_jfrac,
    wall_translation,
};
use crate::error::{Error, Result};
use crate::functionals::{expectation, hankel_window, lu_factorize, tridiag_expectation};
use crate::hessenberg::{charpoly_seq, leading_minors, LowTriWindow};
use crate::json::*;
use crate::models::{
    besselI_moments, besselI_production, besselI_stepline_poly, besselK_Snk, besselK_moments,
    besselK_production, hyper_alphas, BesselIParams, BesselKParams,
};
use crate::mop::{mop_type2, path_polys, path_production, star_functionals, stepline_index, verify_gamma_LU, MultiIndex};
use crate::multipoly::MultiPoly;
use crate::paths::{lukasiewicz_weight_sum, mdyck_Snk, motzkin_Jnk, viennot_coeff};
use crate::production::{moments_from_production, output_matrix, production_from_output};
use crate::scalar::Rational;

#[derive(Parser, Debug)]
#[command(name = "prodmat", version, about = "Exact production-matrix calculus")]
struct Cli {
    /// Parse scalars as polynomials in named indeterminates.
    #[arg(long, global = true)]
    symbolic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Output matrix O(Pi) from a production matrix.
    Output {
        #[arg(long)]
        production: String,
        #[arg(long)]
        n: usize,
    },
    /// Production matrix from an output matrix.
    Production {
        #[arg(long)]
        output: String,
    },
    /// Moment sequence from a production matrix, J-fraction or S-fraction.
    Moments {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
    },
    /// J-fraction expansion of a moment sequence (Hankel window size n).
    Jfraction {
        #[arg(long)]
        moments: String,
        #[arg(long)]
        n: usize,
    },
    /// Wall coefficients of a classical S-fraction, or the reverse.
    Sfraction {
        #[arg(long, conflicts_with = "wall", required_unless_present = "wall")]
        sfraction: Option<String>,
        #[arg(long)]
        wall: Option<String>,
    },
    /// Contraction of a classical S-fraction into a J-fraction.
    Contract {
        #[arg(long)]
        sfraction: String,
    },
    /// Production matrix of an m-branched S-fraction.
    Mbranched {
        #[arg(long)]
        sfraction: String,
        #[arg(long)]
        n: usize,
    },
    /// Characteristic polynomials P_0 ..= P_n of the leading blocks.
    Charpoly {
        #[arg(long)]
        production: String,
        #[arg(long)]
        n: usize,
    },
    /// Coefficient b_{nk} of P_n from the interval-partition formula (whole row without --k).
    Viennot {
        #[arg(long)]
        production: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// L_k(x^l P_m P_n); with --q, the tridiagonal formula for L_k(q P_m P_n).
    Expectation {
        #[arg(long)]
        production: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0, conflicts_with = "q")]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<String>,
    },
    /// Shifted Hankel window and its leading principal minors.
    Hankel {
        #[arg(long)]
        moments: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
    },
    /// LU factorization without pivoting.
    Lu {
        #[arg(long)]
        matrix: String,
    },
    /// Type-II multiple orthogonal polynomials.
    Mop {
        #[arg(long)]
        system: String,
        #[arg(long, conflicts_with = "path", required_unless_present = "path")]
        index: Option<String>,
        #[arg(long, requires = "n")]
        path: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Stepline multi-index of weight n.
    Stepline {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Brute-force path enumeration next to the matrix computation.
    Oracle {
        #[arg(long, value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Worked examples.
    Examples {
        #[command(subcommand)]
        which: Example,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    production: Option<String>,
    #[arg(long)]
    jfraction: Option<String>,
    #[arg(long)]
    sfraction: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OracleKind {
    Lukasiewicz,
    Motzkin,
    Mdyck,
    Viennot,
}

#[derive(Subcommand, Debug)]
enum Example {
    /// Rising-factorial moments; params {"a1", "a2"}.
    #[command(name = "besselK")]
    BesselK {
        #[arg(long)]
        params: String,
        #[arg(long)]
        n: usize,
    },
    /// Monic Laguerre moments; params {"alpha", "xi"}.
    #[command(name = "besselI")]
    BesselI {
        #[arg(long)]
        params: String,
        #[arg(long)]
        n: usize,
    },
    /// Hypergeometric alphas; params {"m", "a"}.
    #[command(name = "hyper")]
    Hyper {
        #[arg(long)]
        params: String,
        #[arg(long)]
        n: usize,
    },
}

/// Exit status and the text destined for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; `argv[0]` is the program name.
///
/// Exit 0 on success, 1 on usage or parse errors, 2 on domain errors. Errors
/// print `{"error": name, "index": k}` on standard output and a diagnostic
/// on standard error.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                let obj = json!({"error": "Usage"});
                Outcome { code, stdout: format!("{obj}\n"), stderr: text }
            };
        }
    };
    let result = if cli.symbolic {
        execute::<MultiPoly>(&cli.command)
    } else {
        execute::<Rational>(&cli.command)
    };
    match result {
        Ok(v) => Outcome {
            code: 0,
            stdout: format!("{v}\n"),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_usage() { 1 } else { 2 },
            stdout: format!("{}\n", error_to_json(&e)),
            stderr: format!("prodmat: {e}\n"),
        },
    }
}

/// Inline JSON, or `@path` to read it from a file.
fn load(arg: &str) -> Result<Value> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn source_production<R: JsonScalar>(src: &Source, rows: usize) -> Result<crate::hessenberg::HessWindow<R>> {
    if let Some(p) = &src.production {
        hess_from_json(&load(p)?)
    } else if let Some(j) = &src.jfraction {
        jfrac_production(&jfrac_from_json(&load(j)?)?, rows)
    } else if let Some(s) = &src.sfraction {
        mbranched_production(&sfrac_from_json(&load(s)?)?, rows)
    } else {
        Err(Error::InvalidInput("no source given".into()))
    }
}

fn execute<R: JsonScalar>(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Output { production, n } => {
            let pi = hess_from_json::<R>(&load(production)?)?;
            Ok(lowtri_to_json(&output_matrix(&pi, *n)?))
        }
        Command::Production { output } => {
            let a = lowtri_from_json::<R>(&load(output)?)?;
            Ok(hess_to_json(&production_from_output(&a)?))
        }
        Command::Moments { source, n } => {
            let pi = source_production::<R>(source, n.saturating_sub(1))?;
            Ok(seq_to_json(&moments_from_production(&pi, *n)?))
        }
        Command::Jfraction { moments, n } => {
            let l: Vec<R> = seq_from_json(&load(moments)?)?;
            Ok(jexpansion_to_json(&moments_to_jfrac(&l, *n)?))
        }
        Command::Sfraction { sfraction, wall } => {
            if let Some(s) = sfraction {
                let sf = sfrac_from_json::<R>(&load(s)?)?;
                Ok(json!({"wall": seq_to_json(&wall_translation(&sf)?)}))
            } else {
                let l: Vec<R> = seq_from_json(&load(wall.as_deref().unwrap_or("[]"))?)?;
                Ok(sfrac_to_json(&alpha_from_wall(&l)?))
            }
        }
        Command::Contract { sfraction } => {
            let sf = sfrac_from_json::<R>(&load(sfraction)?)?;
            Ok(jfrac_to_json(&contract_s_to_j(&sf)?))
        }
        Command::Mbranched { sfraction, n } => {
            let sf = sfrac_from_json::<R>(&load(sfraction)?)?;
            Ok(hess_to_json(&mbranched_production(&sf, *n)?))
        }
        Command::Charpoly { production, n } => {
            let pi = hess_from_json::<R>(&load(production)?)?;
            Ok(polyseq_to_json(&charpoly_seq(&pi, *n)?))
        }
        Command::Viennot { production, n, k } => {
            let pi = hess_from_json::<R>(&load(production)?)?;
            match k {
                Some(j) => Ok(viennot_coeff(&pi, *n, *j)?.to_json()),
                None => {
                    let row = (0..=*n).map(|j| viennot_coeff(&pi, *n, j)).collect::<Result<Vec<R>>>()?;
                    Ok(seq_to_json(&row))
                }
            }
        }
        Command::Expectation { production, k, l, m, n, q } => {
            let pi = hess_from_json::<R>(&load(production)?)?;
            let v = match q {
                Some(q) => tridiag_expectation(&pi, &poly_from_json(&load(q)?)?, *k, *m, *n)?,
                None => expectation(&pi, *k, *l, *m, *n)?,
            };
            Ok(v.to_json())
        }
        Command::Hankel { moments, n, l } => {
            let seq: Vec<R> = seq_from_json(&load(moments)?)?;
            let h = hankel_window(&seq, *n, *l)?;
            let minors = leading_minors(&h, *n)?;
            Ok(json!({"matrix": dense_to_json(&h), "minors": seq_to_json(&minors)}))
        }
        Command::Lu { matrix } => {
            let g = dense_from_json::<R>(&load(matrix)?)?;
            let (l, u) = lu_factorize(&g)?;
            Ok(json!({"L": lowtri_to_json(&l), "U": dense_to_json(&u)}))
        }
        Command::Mop { system, index, path, n } => {
            let sys = system_from_json::<R>(&load(system)?)?;
            if let Some(idx) = index {
                let v = load(idx)?;
                let entries: Vec<usize> = serde_json::from_value(v)
                    .map_err(|e| Error::Parse(format!("multi-index: {e}")))?;
                return Ok(poly_to_json(&mop_type2(&sys, &MultiIndex(entries))?));
            }
            let path = path_from_json(&load(path.as_deref().unwrap_or("{}"))?, sys.r())?;
            let n = n.unwrap_or(0);
            let polys = path_polys(&sys, &path, n)?;
            let pi = path_production(&sys, &path, n)?;
            let gamma = star_functionals(&sys, &path, n)?;
            let u = verify_gamma_LU(&gamma, &pi)?;
            Ok(json!({
                "polys": polyseq_to_json(&polys)["polys"],
                "production": hess_to_json(&pi),
                "gamma": dense_to_json(&gamma),
                "U": dense_to_json(&u),
            }))
        }
        Command::Stepline { r, n } => {
            if *r == 0 {
                return Err(Error::InvalidInput("r must be at least 1".into()));
            }
            Ok(json!(stepline_index(*r, *n).entries()))
        }
        Command::Oracle { kind, source, n, k } => {
            let (oracle, algebra) = match kind {
                OracleKind::Lukasiewicz => {
                    let pi = source_production::<R>(source, *n)?;
                    let a = output_matrix(&pi, n + 1)?;
                    (lukasiewicz_weight_sum(&pi, *n, *k)?, a.get(*n, *k))
                }
                OracleKind::Motzkin => {
                    let jf = jfrac_from_json::<R>(&load(
                        source.jfraction.as_deref().ok_or_else(|| {
                            Error::InvalidInput("the motzkin oracle needs --jfraction".into())
                        })?,
                    )?)?;
                    let a = output_matrix(&jfrac_production(&jf, *n)?, n + 1)?;
                    (motzkin_Jnk(&jf.beta, &jf.gamma, *n, *k)?, a.get(*n, *k))
                }
                OracleKind::Mdyck => {
                    let sf = sfrac_from_json::<R>(&load(
                        source.sfraction.as_deref().ok_or_else(|| {
                            Error::InvalidInput("the mdyck oracle needs --sfraction".into())
                        })?,
                    )?)?;
                    let a = output_matrix(&mbranched_production(&sf, *n)?, n + 1)?;
                    (mdyck_Snk(sf.alphas(), sf.m(), *n, *k)?, a.get(*n, *k))
                }
                OracleKind::Viennot => {
                    let pi = source_production::<R>(source, *n)?;
                    let b = crate::hessenberg::invert_unit_lower(&output_matrix(&pi, n + 1)?);
                    (viennot_coeff(&pi, *n, *k)?, b.get(*n, *k))
                }
            };
            Ok(json!({
                "agree": oracle == algebra,
                "algebra": algebra.to_json(),
                "oracle": oracle.to_json(),
            }))
        }
        Command::Examples { which } => example::<R>(which),
    }
}

fn param<R: JsonScalar>(v: &Value, key: &str) -> Result<R> {
    R::from_json(
        v.get(key)
            .ok_or_else(|| Error::Parse(format!("missing parameter \"{key}\"")))?,
    )
}

fn example<R: JsonScalar>(which: &Example) -> Result<Value> {
    match which {
        Example::BesselK { params, n } => {
            let v = load(params)?;
            let p = BesselKParams::new(param::<R>(&v, "a1")?, param::<R>(&v, "a2")?);
            let pi = besselK_production(&p, *n);
            let closed = LowTriWindow::from_fn(*n, |i, j| besselK_Snk(&p, i, j));
            Ok(json!({
                "moments": seq_to_json(&besselK_moments(&p, *n)),
                "production": hess_to_json(&pi),
                "triangle": lowtri_to_json(&output_matrix(&pi, *n)?),
                "closed_form": lowtri_to_json(&closed),
            }))
        }
        Example::BesselI { params, n } => {
            let v = load(params)?;
            let p = BesselIParams::new(param::<R>(&v, "alpha")?, param::<R>(&v, "xi")?);
            let polys: Vec<Value> = (0..*n).map(|k| poly_to_json(&besselI_stepline_poly(k, &p))).collect();
            Ok(json!({
                "moments": seq_to_json(&besselI_moments(&p, *n)),
                "production": hess_to_json(&besselI_production(&p, *n)),
                "stepline": polys,
            }))
        }
        Example::Hyper { params, n } => {
            let v = load(params)?;
            let m = v
                .get("m")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("missing parameter \"m\"".into()))? as usize;
            let a: Vec<R> = seq_from_json(
                v.get("a")
                    .ok_or_else(|| Error::Parse("missing parameter \"a\"".into()))?,
            )?;
            let count = ((m + 1) * n).saturating_sub(m);
            let sf = hyper_alphas(m, &a, count)?;
            let pi = mbranched_production(&sf, *n)?;
            Ok(json!({
                "sfraction": sfrac_to_json(&sf),
                "production": hess_to_json(&pi),
                "moments": seq_to_json(&moments_from_production(&pi, n + 1)?),
            }))
        }
    }
}
