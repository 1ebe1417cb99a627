//! Browser bindings for the static page in `www/`.
//!
//! Every export returns a JSON string. The plain functions behind them are
//! ordinary Rust so they can be tested without a browser.

use isotemporal::counting::{burnside_class_count, isotemporal_class_count};
use isotemporal::{detect_symmetries, enumerate_pm_classes, PmForm, SymmetryProfile};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest n the page will enumerate; 2^14 forms keep the tab responsive.
pub const CENSUS_CAP: usize = 14;
/// Largest n in the sequence table.
pub const SEQUENCE_CAP: u64 = 64;

#[derive(Debug, Serialize)]
pub struct FormReport {
    pub form: String,
    pub n: usize,
    pub canonical: String,
    pub footprint: Vec<usize>,
    /// One realizing labeling: `ranks[i]` is the rank of edge `e_i`.
    pub ranks: Vec<u32>,
    pub signature: String,
    pub profile: SymmetryProfile,
}

#[derive(Debug, Serialize)]
pub struct CensusRow {
    pub form: String,
    pub orbit: u64,
    pub signature: String,
}

#[derive(Debug, Serialize)]
pub struct SequenceRow {
    pub n: u64,
    pub formula: String,
    pub burnside: String,
}

pub fn form_report(text: &str) -> Result<FormReport, String> {
    let form: PmForm = text.trim().parse().map_err(|e| format!("{e}"))?;
    let profile = detect_symmetries(&form);
    Ok(FormReport {
        form: form.to_string(),
        n: form.len(),
        canonical: form.canonical().to_string(),
        footprint: form.footprint().positions(),
        ranks: form.realize().ranks().to_vec(),
        signature: profile.signature().to_string(),
        profile,
    })
}

pub fn census(n: usize) -> Result<Vec<CensusRow>, String> {
    let census = enumerate_pm_classes(n, CENSUS_CAP).map_err(|e| format!("{e}"))?;
    Ok(census
        .classes
        .into_iter()
        .map(|c| CensusRow {
            form: c.form.to_string(),
            orbit: c.orbit_size,
            signature: c.profile.signature().to_string(),
        })
        .collect())
}

pub fn sequence(from: u64, to: u64) -> Result<Vec<SequenceRow>, String> {
    if from < 3 || from > to || to > SEQUENCE_CAP {
        return Err(format!("need 3 <= from <= to <= {SEQUENCE_CAP}"));
    }
    (from..=to)
        .map(|n| {
            Ok(SequenceRow {
                n,
                formula: isotemporal_class_count(n)
                    .map_err(|e| e.to_string())?
                    .to_string(),
                burnside: burnside_class_count(n)
                    .map_err(|e| e.to_string())?
                    .to_string(),
            })
        })
        .collect()
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.map(|v| serde_json::to_string(&v).expect("serializable"))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = formReport)]
pub fn form_report_js(form: &str) -> Result<String, JsValue> {
    to_js(form_report(form))
}

#[wasm_bindgen(js_name = census)]
pub fn census_js(n: usize) -> Result<String, JsValue> {
    to_js(census(n))
}

#[wasm_bindgen(js_name = sequence)]
pub fn sequence_js(from: u64, to: u64) -> Result<String, JsValue> {
    to_js(sequence(from, to))
}
