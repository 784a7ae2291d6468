//! JSON file formats.
//!
//! Every rational is written as a `"p/q"` string (`"0/1"`, `"-3/2"`); the
//! readers also accept a bare integer string. Readers ignore unknown fields,
//! so a report can be fed back where its embedded object is expected.

use std::str::FromStr;

use num_traits::Zero;
use saff_core::catalog::{CatalogEntry, CatalogSummary};
use saff_core::filtration::Filtration;
use saff_core::linalg::{SparseMatrix, Q};
use saff_core::matmodel::AffMatrixRep;
use saff_core::rationality::{TwoStepExtension, Verdict};
use saff_core::repclass::{ClassifyReport, StabilizerReport};
use saff_core::schur::{Weight, WeightMultiset};
use saff_core::sl::sl_basis;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad token {token:?}: {reason}")]
    Token { token: String, reason: String },
    #[error("{0}")]
    Invalid(String),
}

fn token_error(token: &str, reason: impl Into<String>) -> FormatError {
    FormatError::Token {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// Parse a weight given inline (`2,1,0`) or as a JSON array (`[2,1,0]`).
/// With `n` given, the weight is padded with zeros to that length.
pub fn parse_weight(n: Option<usize>, text: &str) -> Result<Weight, FormatError> {
    let body = text.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(body);
    let mut raw = Vec::new();
    for tok in body.split(',') {
        let t = tok.trim();
        let v: i64 = t
            .parse()
            .map_err(|_| token_error(t, "expected an integer"))?;
        raw.push(v);
    }
    let n = n.unwrap_or(raw.len());
    if raw.len() > n {
        return Err(token_error(
            text,
            format!("has {} entries but n = {n}", raw.len()),
        ));
    }
    let fill = raw.last().copied().unwrap_or(0).min(0);
    raw.resize(n, fill);
    Weight::normalize(n, &raw).map_err(|e| token_error(text, e.to_string()))
}

pub fn weight_json(w: &Weight) -> Value {
    json!(w.parts())
}

#[derive(Serialize, Deserialize)]
struct SummandFile {
    lambda: Vec<i64>,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct MultisetFile {
    n: usize,
    summands: Vec<SummandFile>,
}

pub fn multiset_json(m: &WeightMultiset) -> Value {
    let summands: Vec<Value> = m
        .iter()
        .map(|(w, k)| json!({ "lambda": w.parts(), "mult": k }))
        .collect();
    json!({ "n": m.rank(), "summands": summands })
}

pub fn multiset_from_value(v: &Value) -> Result<WeightMultiset, FormatError> {
    let file: MultisetFile = serde_json::from_value(v.clone())?;
    let mut out = WeightMultiset::new(file.n);
    for s in file.summands {
        if s.lambda.len() > file.n {
            return Err(token_error(
                &format!("{:?}", s.lambda),
                format!("has {} entries but n = {}", s.lambda.len(), file.n),
            ));
        }
        let w = Weight::normalize(file.n, &s.lambda)
            .map_err(|e| token_error(&format!("{:?}", s.lambda), e.to_string()))?;
        out.insert(w, s.mult);
    }
    Ok(out)
}

pub fn parse_multiset(text: &str) -> Result<WeightMultiset, FormatError> {
    multiset_from_value(&serde_json::from_str(text)?)
}

pub fn rational_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Q, FormatError> {
    let t = s.trim();
    let x = Q::from_str(t).map_err(|_| token_error(t, "expected a rational p/q"))?;
    Ok(x)
}

fn matrix_json(m: &SparseMatrix) -> Value {
    let dense = m.to_dense();
    let rows: Vec<Value> = (0..dense.rows())
        .map(|r| {
            Value::Array(
                (0..dense.cols())
                    .map(|c| json!(rational_string(dense.get(r, c))))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    n: usize,
    #[serde(rename = "N")]
    dim: usize,
    sl_gens: Vec<Vec<Vec<String>>>,
    trans_gens: Vec<Vec<Vec<String>>>,
    weight_grading: Vec<Vec<i64>>,
}

pub fn model_json(rep: &AffMatrixRep) -> Value {
    let labels: Vec<String> = sl_basis(rep.rank())
        .iter()
        .map(ToString::to_string)
        .collect();
    json!({
        "n": rep.rank(),
        "N": rep.dim(),
        "sl_basis": labels,
        "sl_gens": rep.sl_gens().iter().map(matrix_json).collect::<Vec<_>>(),
        "trans_gens": rep.trans_gens().iter().map(matrix_json).collect::<Vec<_>>(),
        "weight_grading": rep.weights(),
    })
}

fn matrix_from_strings(
    rows: &[Vec<String>],
    dim: usize,
    what: &str,
) -> Result<SparseMatrix, FormatError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(FormatError::Invalid(format!("{what} is not {dim}×{dim}")));
    }
    let mut columns = vec![Vec::new(); dim];
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            let x = parse_rational(s)?;
            if !x.is_zero() {
                columns[c].push((r, x));
            }
        }
    }
    Ok(SparseMatrix::from_columns(dim, columns))
}

/// Read a model file; the full invariant suite runs before it is accepted.
pub fn parse_model(text: &str) -> Result<AffMatrixRep, FormatError> {
    let file: ModelFile = serde_json::from_str(text)?;
    if file.weight_grading.len() != file.dim {
        return Err(FormatError::Invalid(format!(
            "weight_grading has {} entries but N = {}",
            file.weight_grading.len(),
            file.dim
        )));
    }
    let sl = file
        .sl_gens
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_strings(m, file.dim, &format!("sl_gens[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let trans = file
        .trans_gens
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_strings(m, file.dim, &format!("trans_gens[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    AffMatrixRep::new(file.n, sl, trans, file.weight_grading)
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct ExtensionFile {
    n: usize,
    #[serde(rename = "S")]
    s: Value,
    #[serde(rename = "Q")]
    q: Value,
    #[serde(rename = "W", default)]
    w: Option<Value>,
    #[serde(default)]
    assume_generically_free: bool,
}

pub fn parse_extension(text: &str) -> Result<TwoStepExtension, FormatError> {
    let file: ExtensionFile = serde_json::from_str(text)?;
    let s = multiset_from_value(&file.s)?;
    let q = multiset_from_value(&file.q)?;
    let w = match &file.w {
        Some(v) => multiset_from_value(v)?,
        None => WeightMultiset::new(file.n),
    };
    TwoStepExtension::new(file.n, s, q, w)
        .map(|e| e.assuming_free(file.assume_generically_free))
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn extension_json(ext: &TwoStepExtension) -> Value {
    json!({
        "n": ext.n,
        "S": multiset_json(&ext.s),
        "Q": multiset_json(&ext.q),
        "W": multiset_json(&ext.w),
        "assume_generically_free": ext.assume_generically_free,
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    let witness = v
        .witness
        .as_ref()
        .map(|w| json!({ "W1": multiset_json(&w.w1), "W2": multiset_json(&w.w2) }));
    let evidence: Vec<Value> = v
        .evidence
        .iter()
        .map(|e| json!({ "condition": e.condition, "clause": e.clause, "result": e.result }))
        .collect();
    json!({
        "outcome": v.outcome.as_str(),
        "witness": witness,
        "evidence": evidence,
        "search_complete": v.search_complete,
        "seed": v.seed,
    })
}

pub fn stabilizer_json(s: &StabilizerReport) -> Value {
    json!({ "stab_dim": s.stab_dim, "trials": s.trials, "seed": s.seed })
}

pub fn classify_json(r: &ClassifyReport, rep: &WeightMultiset, seed: u64) -> Value {
    json!({
        "rep": multiset_json(rep),
        "class": r.class.as_str(),
        "off_list": r.off_list.as_ref().map(weight_json),
        "list_complete": r.list_complete,
        "stabilizer": r.stabilizer.as_ref().map(stabilizer_json),
        "seed": seed,
    })
}

/// Results of the checks run alongside a filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationChecks {
    pub duality: bool,
    pub blocks: bool,
    pub embedding: bool,
    pub degree_bound: bool,
}

pub fn filtration_json(f: &Filtration, checks: &FiltrationChecks, seed: u64) -> Value {
    json!({
        "kind": f.kind().to_string(),
        "chain_dims": f.chain_dims(),
        "layers": f.layers().iter().map(multiset_json).collect::<Vec<_>>(),
        "checks": checks,
        "seed": seed,
    })
}

pub fn catalog_entry_json(e: &CatalogEntry) -> Value {
    json!({
        "n": e.n,
        "S": multiset_json(&e.s),
        "Q": multiset_json(&e.q),
        "trigger": e.trigger.as_str(),
        "verdict": verdict_json(&e.verdict),
    })
}

pub fn catalog_summary_json(s: &CatalogSummary, seed: u64) -> Value {
    json!({ "summary": { "entries": s.total, "by_trigger": s.by_trigger, "by_outcome": s.by_outcome, "seed": seed } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use saff_core::matmodel::{model_sym_dual, DEFAULT_MAX_MODEL_DIM};

    #[test]
    fn inline_and_json_weights() {
        let a = parse_weight(Some(3), "2,1,0").unwrap();
        assert_eq!(a, parse_weight(None, "[2,1,0]").unwrap());
        assert_eq!(parse_weight(Some(3), "1").unwrap().parts(), &[1, 0, 0]);
        let err = parse_weight(Some(3), "2,x,0").unwrap_err().to_string();
        assert!(err.contains("\"x\""), "{err}");
        assert!(parse_weight(Some(2), "1,1,0,0").is_err());
    }

    #[test]
    fn rationals_round_trip() {
        for s in ["0/1", "-3/2", "7/1"] {
            assert_eq!(rational_string(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(rational_string(&parse_rational("4").unwrap()), "4/1");
        assert!(parse_rational("1/0x").is_err());
    }

    #[test]
    fn model_round_trip() {
        let m = model_sym_dual(2, 2, DEFAULT_MAX_MODEL_DIM).unwrap();
        let text = model_json(&m).to_string();
        let back = parse_model(&text).unwrap();
        assert_eq!(model_json(&back).to_string(), text);
    }

    #[test]
    fn multiset_round_trip() {
        let m = parse_multiset(
            r#"{"n":3,"summands":[{"lambda":[2,1,0],"mult":2},{"lambda":[1],"mult":1}]}"#,
        )
        .unwrap();
        assert_eq!(m.total_count(), 3);
        assert_eq!(parse_multiset(&multiset_json(&m).to_string()).unwrap(), m);
    }
}
