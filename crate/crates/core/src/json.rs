//! JSON encodings of scalars, windows and continued fractions.
//!
//! Rationals are written as strings `"p/q"` (or `"p"`); multivariate
//! polynomials as term lists `[{"exponents": {"a1": 2}, "coeff": "3/2"}]`.
//! Objects are emitted through `serde_json::Map`, whose keys are sorted, so
//! the output is canonical.

use serde_json::{json, Map, Value};

use crate::cfrac::{JExpansion, JFraction, SFraction};
use crate::error::{Error, Result};
use crate::functionals::MonicPolySeq;
use crate::hessenberg::{DenseWindow, HessWindow, LowTriWindow};
use crate::mop::{MOPSystem, NNPath};
use crate::multipoly::{Monomial, MultiPoly, Var};
use crate::scalar::{format_rational, parse_rational, Rational, Ring};
use crate::unipoly::UniPoly;

/// A ring whose elements have a JSON encoding.
pub trait JsonScalar: Ring {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_int(i))
            } else {
                // Only integers are accepted as bare numbers; anything with a
                // fractional part or exponent must be quoted.
                parse_rational(&n.to_string())
            }
        }
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        rational_from_json(v)
    }
}

impl JsonScalar for MultiPoly {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| {
                    let exps: Map<String, Value> =
                        m.pairs().iter().map(|(v, e)| (v.name(), json!(e))).collect();
                    json!({"exponents": exps, "coeff": format_rational(c)})
                })
                .collect(),
        )
    }

    /// Accepts a number, a rational string, an indeterminate name, or a term
    /// list.
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(_) => Ok(MultiPoly::constant(rational_from_json(v)?)),
            Value::String(s) => match parse_rational(s) {
                Ok(q) => Ok(MultiPoly::constant(q)),
                Err(_) => Ok(MultiPoly::var(Var::parse(s.trim())?)),
            },
            Value::Array(terms) => {
                let mut out = Vec::with_capacity(terms.len());
                for t in terms {
                    let coeff = rational_from_json(
                        t.get("coeff")
                            .ok_or_else(|| Error::Parse("term without \"coeff\"".into()))?,
                    )?;
                    let mut pairs = Vec::new();
                    if let Some(exps) = t.get("exponents") {
                        let exps = exps
                            .as_object()
                            .ok_or_else(|| Error::Parse("\"exponents\" must be an object".into()))?;
                        for (name, e) in exps {
                            let e = e
                                .as_u64()
                                .and_then(|e| u32::try_from(e).ok())
                                .ok_or_else(|| Error::Parse(format!("bad exponent for {name}")))?;
                            pairs.push((Var::parse(name)?, e));
                        }
                    }
                    out.push((Monomial::from_pairs(pairs), coeff));
                }
                Ok(MultiPoly::from_terms(out))
            }
            other => Err(Error::Parse(format!("expected a polynomial, got {other}"))),
        }
    }
}

pub fn seq_to_json<R: JsonScalar>(v: &[R]) -> Value {
    Value::Array(v.iter().map(JsonScalar::to_json).collect())
}

pub fn seq_from_json<R: JsonScalar>(v: &Value) -> Result<Vec<R>> {
    as_array(v, "sequence")?.iter().map(R::from_json).collect()
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
}

fn natural(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::Parse(format!("{what} must be a natural number")))
}

pub fn poly_to_json<R: JsonScalar>(p: &UniPoly<R>) -> Value {
    seq_to_json(p.coeffs())
}

pub fn poly_from_json<R: JsonScalar>(v: &Value) -> Result<UniPoly<R>> {
    Ok(UniPoly::new(seq_from_json(v)?))
}

/// `{"size", "band", "rows"}`; row `n` lists columns `max(0, n-d) ..= min(n+1, N-1)`.
pub fn hess_to_json<R: JsonScalar>(pi: &HessWindow<R>) -> Value {
    let size = pi.size();
    let rows: Vec<Value> = (0..size)
        .map(|n| {
            let (lo, _) = pi.band_row(n);
            Value::Array((lo..=(n + 1).min(size - 1)).map(|k| pi.get(n, k).to_json()).collect())
        })
        .collect();
    json!({"size": size, "band": pi.band(), "rows": rows})
}

pub fn hess_from_json<R: JsonScalar>(v: &Value) -> Result<HessWindow<R>> {
    let rows = as_array(field(v, "rows")?, "\"rows\"")?;
    let size = match v.get("size") {
        Some(s) => natural(s, "\"size\"")?,
        None => rows.len(),
    };
    if size != rows.len() {
        return Err(Error::InvalidInput(format!(
            "\"size\" is {size} but {} rows are given",
            rows.len()
        )));
    }
    let band = match v.get("band") {
        None | Some(Value::Null) => None,
        Some(b) => Some(natural(b, "\"band\"")?),
    };
    let mut lower = Vec::with_capacity(size);
    for (n, row) in rows.iter().enumerate() {
        let row: Vec<R> = seq_from_json(row)?;
        let lo = band.map_or(0, |d| n.saturating_sub(d));
        let hi = (n + 1).min(size - 1);
        if row.len() != hi + 1 - lo {
            return Err(Error::InvalidInput(format!(
                "row {n} has {} entries, expected {} (columns {lo}..={hi})",
                row.len(),
                hi + 1 - lo
            )));
        }
        let mut entries = row;
        if hi == n + 1 {
            let sup = entries.pop().expect("row is non-empty");
            if !sup.is_one() {
                return Err(Error::InvalidInput(format!("superdiagonal entry of row {n} is not 1")));
            }
        }
        lower.push(entries);
    }
    HessWindow::from_band_rows(band, lower)
}

/// Lower rows `[[1], [a, 1], ...]`.
pub fn lowtri_to_json<R: JsonScalar>(a: &LowTriWindow<R>) -> Value {
    Value::Array(a.rows().iter().map(|r| seq_to_json(r)).collect())
}

/// Accepts lower rows or a full square matrix.
pub fn lowtri_from_json<R: JsonScalar>(v: &Value) -> Result<LowTriWindow<R>> {
    let rows = as_array(v, "matrix")?;
    let parsed: Vec<Vec<R>> = rows.iter().map(seq_from_json).collect::<Result<_>>()?;
    let square = parsed.len() > 1 && parsed.iter().all(|r| r.len() == parsed.len());
    if square {
        LowTriWindow::from_dense(&DenseWindow::new(parsed)?)
    } else {
        LowTriWindow::new(parsed)
    }
}

pub fn dense_to_json<R: JsonScalar>(m: &DenseWindow<R>) -> Value {
    Value::Array(m.rows().iter().map(|r| seq_to_json(r)).collect())
}

pub fn dense_from_json<R: JsonScalar>(v: &Value) -> Result<DenseWindow<R>> {
    let rows = as_array(v, "matrix")?;
    DenseWindow::new(rows.iter().map(seq_from_json).collect::<Result<_>>()?)
}

pub fn jfrac_to_json<R: JsonScalar>(jf: &JFraction<R>) -> Value {
    json!({"gamma": seq_to_json(&jf.gamma), "beta": seq_to_json(&jf.beta)})
}

pub fn jexpansion_to_json<R: JsonScalar>(e: &JExpansion<R>) -> Value {
    let mut v = jfrac_to_json(&e.fraction);
    v["zero_beta"] = json!(e.zero_beta);
    v
}

pub fn jfrac_from_json<R: JsonScalar>(v: &Value) -> Result<JFraction<R>> {
    Ok(JFraction::new(
        seq_from_json(field(v, "gamma")?)?,
        seq_from_json(field(v, "beta")?)?,
    ))
}

pub fn sfrac_to_json<R: JsonScalar>(sf: &SFraction<R>) -> Value {
    json!({"m": sf.m(), "alpha": seq_to_json(sf.alphas()), "alpha_start_index": sf.m()})
}

pub fn sfrac_from_json<R: JsonScalar>(v: &Value) -> Result<SFraction<R>> {
    let m = match v.get("m") {
        Some(m) => natural(m, "\"m\"")?,
        None => 1,
    };
    if let Some(start) = v.get("alpha_start_index") {
        if natural(start, "\"alpha_start_index\"")? != m {
            return Err(Error::InvalidInput("\"alpha_start_index\" must equal \"m\"".into()));
        }
    }
    SFraction::new(m, seq_from_json(field(v, "alpha")?)?)
}

pub fn polyseq_to_json<R: JsonScalar>(p: &MonicPolySeq<R>) -> Value {
    json!({"polys": lowtri_to_json(p.coeff_matrix())})
}

pub fn system_to_json<R: JsonScalar>(sys: &MOPSystem<R>) -> Value {
    let moments: Vec<Value> = sys.all_moments().iter().map(|m| seq_to_json(m)).collect();
    json!({"r": sys.r(), "moments": moments})
}

pub fn system_from_json<R: JsonScalar>(v: &Value) -> Result<MOPSystem<R>> {
    let moments: Vec<Vec<R>> = as_array(field(v, "moments")?, "\"moments\"")?
        .iter()
        .map(seq_from_json)
        .collect::<Result<_>>()?;
    if let Some(r) = v.get("r") {
        if natural(r, "\"r\"")? != moments.len() {
            return Err(Error::InvalidInput("\"r\" does not match the number of moment sequences".into()));
        }
    }
    MOPSystem::new(moments)
}

pub fn path_to_json(p: &NNPath) -> Value {
    json!({"directions": p.directions})
}

/// Accepts `{"directions": [...]}` or the bare direction array.
pub fn path_from_json(v: &Value, r: usize) -> Result<NNPath> {
    let list = if v.is_array() { v } else { field(v, "directions")? };
    let dirs = as_array(list, "\"directions\"")?
        .iter()
        .map(|d| natural(d, "direction"))
        .collect::<Result<Vec<_>>>()?;
    NNPath::new(dirs, r)
}

/// `{"error": name}` plus `"index"` when the error carries one.
pub fn error_to_json(e: &Error) -> Value {
    let mut obj = Map::new();
    obj.insert("error".into(), json!(e.name()));
    if let Some(i) = e.index() {
        obj.insert("index".into(), json!(i));
    }
    if let Error::NotNormal {
        multi_index: Some(n),
        ..
    } = e
    {
        obj.insert("multi_index".into(), json!(n));
    }
    Value::Object(obj)
}
