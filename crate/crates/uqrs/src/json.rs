//! JSON encodings. Every basis and matrix index is 1-based; scalars are
//! strings in their canonical display form.

use std::fmt::Display;

use serde_json::{json, Map, Value};
use uqrs_core::linalg::{Matrix, SparseVec};
use uqrs_core::report::Report;
use uqrs_core::rmatrix::SpectralRMatrix;
use uqrs_core::scalars::Scalar;
use uqrs_core::uqrs::{Representation, Weight};
use uqrs_core::wedge::QuotientModule;

fn scalar<F: Display>(c: &F) -> Value {
    Value::String(c.to_string())
}

/// `{"rows", "cols", "entries": [[i, j, "c"], …]}`, entries sorted by `(i, j)`.
pub fn matrix<F: Scalar>(m: &Matrix<F>) -> Value {
    let entries: Vec<Value> = m.entries().map(|(i, j, c)| json!([i + 1, j + 1, scalar(c)])).collect();
    json!({ "rows": m.nrows(), "cols": m.ncols(), "entries": entries })
}

/// `[[i, "c"], …]`, sorted by `i`.
pub fn vector<F: Scalar>(v: &SparseVec<F>) -> Value {
    Value::Array(v.iter().map(|(i, c)| json!([i + 1, scalar(c)])).collect())
}

fn generators<F: Scalar>(rep: &Representation<F>) -> Value {
    let mut gens = Map::new();
    for (g, m) in rep.generators() {
        gens.insert(g.to_string(), matrix(m));
    }
    Value::Object(gens)
}

pub fn representation<F: Scalar>(rep: &Representation<F>) -> Value {
    json!({ "n": rep.n(), "dim": rep.dim(), "generators": generators(rep) })
}

pub fn spectral<F: Scalar>(rz: &SpectralRMatrix<F>) -> Value {
    json!({ "n": rz.n, "A": matrix(&rz.a), "B": matrix(&rz.b) })
}

pub fn wedge_module<F: Scalar>(m: &QuotientModule<F>) -> Value {
    json!({
        "n": m.n(),
        "k": m.k(),
        "dim": m.dim(),
        "labels": m.labels(),
        "generators": generators(m.induced()),
    })
}

pub fn weight(w: &Weight) -> Value {
    json!(w.coords)
}

/// `{"suite", "passed", "checks": [...], "witnesses": [...]}`; a witness is
/// `{"relation", "witness_basis_index", "lhs", "rhs"}`.
pub fn report<F: Scalar>(r: &Report<F>) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut o = Map::new();
            o.insert("name".into(), json!(c.name));
            o.insert("passed".into(), json!(c.passed));
            if let Some(d) = &c.detail {
                o.insert("detail".into(), json!(d));
            }
            Value::Object(o)
        })
        .collect();
    let witnesses: Vec<Value> = r
        .checks
        .iter()
        .filter_map(|c| c.witness.as_ref())
        .map(|w| {
            json!({
                "relation": w.relation,
                "witness_basis_index": w.witness_basis_index + 1,
                "lhs": vector(&w.lhs),
                "rhs": vector(&w.rhs),
            })
        })
        .collect();
    json!({ "suite": r.suite, "passed": r.passed(), "checks": checks, "witnesses": witnesses })
}
