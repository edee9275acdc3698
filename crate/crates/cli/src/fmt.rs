//! Multivector input/output: plain text via the display form, JSON as a
//! `{"dim": n, "coeffs": [...]}` record with bit-exact float round-trips.

use crate::eval::{eval_str, infer_dim, EvalContext, EvalError};
use mvfn_core::{Context, Multivector};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
pub struct MvJson {
    pub dim: usize,
    pub coeffs: Vec<f64>,
}

pub fn format_text(m: &Multivector) -> String {
    m.to_string()
}

pub fn format_json(m: &Multivector) -> String {
    let rec = MvJson {
        dim: m.dim(),
        coeffs: m.coeffs().to_vec(),
    };
    serde_json::to_string(&rec).expect("plain struct serializes")
}

fn from_json(s: &str) -> Result<Multivector, EvalError> {
    let rec: MvJson = serde_json::from_str(s).map_err(|e| EvalError::Json(e.to_string()))?;
    // A record that decodes but fails validation (coefficient count, dim
    // range) is still a bad input literal, not an evaluation failure.
    Multivector::new(rec.dim, &rec.coeffs).map_err(|e| EvalError::Json(e.to_string()))
}

/// Parse either the JSON record or a coefficient expression. Expressions
/// evaluate in the smallest dimension that gives every basis name a meaning.
pub fn parse_mv(s: &str, ctx: &Context) -> Result<Multivector, EvalError> {
    let t = s.trim_start();
    if t.starts_with('{') {
        return from_json(s);
    }
    let dim = infer_dim(s)?;
    let ecx = EvalContext::with_context(dim, *ctx)?;
    eval_str(s, &ecx)
}

/// Parse into a fixed dimension. JSON records of a smaller dimension embed;
/// larger ones are an error.
pub fn parse_mv_with_dim(s: &str, dim: usize, ctx: &Context) -> Result<Multivector, EvalError> {
    let t = s.trim_start();
    if t.starts_with('{') {
        let m = from_json(s)?;
        return Ok(m.embed_in(dim)?);
    }
    let ecx = EvalContext::with_context(dim, *ctx)?;
    eval_str(s, &ecx)
}
