//! WebAssembly bindings for the browser demo in `www/`. Every export returns
//! a JSON string; the `*_json` functions hold the logic and run natively too.

use serde_json::{json, Value};
use signed_spectra::bicyclic::{self, MAX_FAMILY_ORDER};
use signed_spectra::perturb::{self, Operation};
use signed_spectra::switching::{self, BalanceCertificate};
use signed_spectra::{spectra, SignedGraph};
use wasm_bindgen::prelude::*;


fn parse(text: &str) -> Result<SignedGraph, String> {
    SignedGraph::parse_sg(text).map_err(|e| format!("{}: {e}", e.name()))
}

fn err(e: signed_spectra::Error) -> String {
    format!("{}: {e}", e.name())
}

/// Index of each family for every `n` in the range, clipped to the orders
/// where all five exist.
pub fn family_curves_json(n_min: usize, n_max: usize) -> Result<Value, String> {
    let lo = n_min.max(6);
    let hi = n_max.min(MAX_FAMILY_ORDER);
    if lo > hi {
        return Err(format!("empty range {n_min}..={n_max}"));
    }
    let ns: Vec<usize> = (lo..=hi).collect();
    let mut series = Vec::new();
    for i in 1..=5 {
        let ys = ns.iter().map(|&n| bicyclic::family_index(i, n)).collect::<Result<Vec<f64>, _>>().map_err(err)?;
        series.push(ys);
    }
    Ok(json!({ "n": ns, "series": series }))
}

pub fn analyze_json(text: &str) -> Result<Value, String> {
    let g = parse(text)?;
    let spectrum = spectra::eigenvalues(&g).map_err(err)?.values;
    let charpoly = spectra::charpoly_exact(&g);
    let balance = match switching::is_balanced(&g) {
        BalanceCertificate::Balanced(theta) => json!({ "balanced": true, "switching": theta.to_string() }),
        BalanceCertificate::Unbalanced(cycles) => json!({ "balanced": false, "cycle": cycles[0].vertices }),
    };
    let shape = bicyclic::base(&g).ok().map(|(_, s)| s.kind.to_string());
    Ok(json!({
        "n": g.order(),
        "m": g.size(),
        "index": spectrum.first(),
        "spectrum": spectrum,
        "charpoly": charpoly.to_string(),
        "coefficients": charpoly.to_coeff_line(),
        "balance": balance,
        "bicyclic": shape,
    }))
}

pub fn alpha_json(text: &str, u: usize, v: usize) -> Result<Value, String> {
    let g = parse(text)?;
    let r = perturb::perturb(&g, &Operation::Alpha { u, v }).map_err(err)?;
    Ok(json!({
        "before": r.input.to_sg(),
        "after": r.output.to_sg(),
        "lambda_before": r.lambda_before,
        "lambda_after": r.lambda_after,
        "hypothesis": r.hypothesis.tag(),
        "monotone": r.monotone,
        "guarantee_held": r.guarantee_held(),
    }))
}

fn export(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn family_curves(n_min: usize, n_max: usize) -> Result<String, JsError> {
    export(family_curves_json(n_min, n_max))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    export(analyze_json(text))
}

#[wasm_bindgen]
pub fn alpha(text: &str, u: usize, v: usize) -> Result<String, JsError> {
    export(alpha_json(text, u, v))
}

#[wasm_bindgen]
pub fn family_graph(which: usize, n: usize) -> Result<String, JsError> {
    bicyclic::construct_family(which, n).map(|g| g.to_sg()).map_err(|e| JsError::new(&err(e)))
}
