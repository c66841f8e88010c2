//! Three cliffkit operations exported to JavaScript. The plain functions
//! return JSON strings so they can be tested natively; the `wasm_*`
//! wrappers turn errors into thrown strings.

use cliffkit::algebra::Signature;
use cliffkit::cech::{self, Complex};
use cliffkit::groups::{self, PseudoOrthogonalMatrix};
use cliffkit::repr;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Classification of every `C(p,q)` with `p + q <= max_n`, with the
/// target of the compiled model alongside.
pub fn classification_table(max_n: usize) -> Result<String, String> {
    if max_n > 8 {
        return Err("tables stop at p + q = 8".into());
    }
    let rows: Vec<Value> = Signature::all_up_to(max_n)
        .into_iter()
        .map(|sig| {
            let rep = repr::compile_rep(sig);
            json!({
                "p": sig.p,
                "q": sig.q,
                "classified": repr::classify(sig).to_string(),
                "compiled": rep.target().to_string(),
                "relations": rep.verify_relations().is_ok(),
            })
        })
        .collect();
    Ok(Value::Array(rows).to_string())
}

/// Cartan-Dieudonne factorization of a pseudo-orthogonal matrix given as
/// nested arrays of rational strings.
pub fn reflections(p: usize, q: usize, matrix_json: &str) -> Result<String, String> {
    if p + q > 8 {
        return Err("at most 8 generators".into());
    }
    let sig = Signature::new(p, q);
    let v: Value = serde_json::from_str(matrix_json).map_err(|e| e.to_string())?;
    let m = PseudoOrthogonalMatrix::from_json(sig, &v).map_err(|e| e.to_string())?;
    let d = groups::cartan_dieudonne(&m).map_err(|e| e.to_string())?;
    let exact = d.recompose(sig).map_err(|e| e.to_string())? == m;
    Ok(json!({
        "reflections": d.vectors.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "fallbacks": d.fallbacks,
        "determinant": m.determinant().to_string(),
        "recomposed": exact,
    })
    .to_string())
}

/// Z2 Betti numbers and Euler characteristic of a simplicial complex in
/// the `{"vertices", "simplices"}` format.
pub fn betti_numbers(complex_json: &str) -> Result<String, String> {
    let v: Value = serde_json::from_str(complex_json).map_err(|e| e.to_string())?;
    let c = Complex::from_json(&v).map_err(|e| e.to_string())?;
    let betti: Vec<usize> = (0..=3).map(|k| cech::z2_betti(&c, k)).collect();
    Ok(json!({"betti": betti, "euler": c.euler_characteristic()}).to_string())
}

#[wasm_bindgen]
pub fn wasm_classification_table(max_n: usize) -> Result<String, JsValue> {
    classification_table(max_n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn wasm_reflections(p: usize, q: usize, matrix_json: &str) -> Result<String, JsValue> {
    reflections(p, q, matrix_json).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn wasm_betti_numbers(complex_json: &str) -> Result<String, JsValue> {
    betti_numbers(complex_json).map_err(|e| JsValue::from_str(&e))
}
