//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes plain values and returns a JSON string. The `*_json`
//! functions hold the logic so they can be tested natively.

use alternator::augment::{augment_regions, region_incidences};
use alternator::codec::{emit_pd, Document, PdCode};
use alternator::gen::random_diagram;
use alternator::merge::full_pipeline;
use alternator::samples;
use alternator::verify::verify;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parse(pd: &str) -> Result<(PdCode, alternator::Diagram), String> {
    let code = PdCode::parse(pd).map_err(|e| e.to_string())?;
    let d = code.to_diagram().map_err(|e| e.to_string())?;
    Ok((code, d))
}

pub fn classify_json(pd: &str) -> Result<String, String> {
    let (code, d) = parse(pd)?;
    let labels = code.labels(&d);
    let mut edges: Vec<Value> = (0..d.edge_count())
        .map(|e| {
            let l = d.edge_labels(e);
            json!({ "label": labels[e], "ends": l.ends, "class": l.class })
        })
        .collect();
    edges.sort_by_key(|e| e["label"].as_u64());
    let faces = d
        .faces()
        .iter()
        .map(|f| {
            let inc = region_incidences(&d, f.id).map_err(|e| e.to_string())?;
            Ok(json!({
                "size": f.darts.len(),
                "signs": inc.iter().map(|i| json!([labels[i.edge], i.sign])).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({
        "crossings": d.crossing_count(),
        "alternating": d.is_alternating(),
        "non_alternating": d.non_alternating_edges().len(),
        "edges": edges,
        "faces": faces,
    })
    .to_string())
}

pub fn augment_json(pd: &str, merge: bool) -> Result<String, String> {
    let (_, d) = parse(pd)?;
    let out = if merge {
        full_pipeline(&d).map_err(|e| e.to_string())?
    } else {
        augment_regions(&d).map_err(|e| e.to_string())?
    };
    let expected = if merge { usize::from(!d.is_alternating()) } else { out.circles().len() };
    let report = verify(&d, &out, expected);
    Ok(json!({
        "pd": emit_pd(out.diagram()),
        "circles": out.circles().len(),
        "crossings": [d.crossing_count(), out.diagram().crossing_count()],
        "moves": out.log(),
        "report": report,
        "document": Document::new(&out, Some(&report)),
    })
    .to_string())
}

pub fn generate_json(strands: usize, length: usize, seed: u64) -> Result<String, String> {
    let d = random_diagram(strands, length, seed).map_err(|e| e.to_string())?;
    Ok(json!({ "pd": emit_pd(&d), "alternating": d.is_alternating() }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Edge classes and per-face incidence signs.
#[wasm_bindgen]
pub fn classify(pd: &str) -> Result<String, JsError> {
    js(classify_json(pd))
}

/// Augmented diagram, merged to one circle when `merge` is set, with its
/// verification report.
#[wasm_bindgen]
pub fn augment(pd: &str, merge: bool) -> Result<String, JsError> {
    js(augment_json(pd, merge))
}

/// PD code of a seeded random braid closure.
#[wasm_bindgen]
pub fn generate(strands: usize, length: usize, seed: u32) -> Result<String, JsError> {
    js(generate_json(strands, length, u64::from(seed)))
}

/// Named sample PD codes as `[[name, pd], ...]`.
#[wasm_bindgen]
pub fn sample_list() -> String {
    json!(samples::ALL).to_string()
}
