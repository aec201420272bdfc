//! Browser front end. Each export takes the field as `(p, e, modulus)` with an
//! empty modulus meaning the default one, and returns a JSON string.
//! The `*_json` functions are ordinary Rust so they can be tested natively;
//! the `#[wasm_bindgen]` wrappers only convert the error type.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use invstab::encoding::{build_field, parse_element};
use invstab::iteration::denominator;
use invstab::report::{FieldRecord, TraceRowRecord};
use invstab::{decide_inverse_stability, init_states, step_state, trace_table, FieldCtx, Outcome};

/// Largest field the stability map will enumerate.
pub const MAP_LIMIT: u128 = 4096;
/// Largest degree `p^n` the demo will build.
pub const DEGREE_LIMIT: u128 = 3125;
/// Rabin confirmation is only run up to this degree.
pub const RABIN_LIMIT: usize = 729;

fn field(p: u32, e: u32, modulus: &str) -> Result<FieldCtx, String> {
    let m = modulus.trim();
    build_field(p as u64, e as usize, (!m.is_empty()).then_some(m)).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TableView {
    field: FieldRecord,
    xi: String,
    rows: Vec<TraceRowRecord>,
}

pub fn trace_table_json(
    p: u32,
    e: u32,
    modulus: &str,
    xi: &str,
    n_max: u32,
) -> Result<String, String> {
    let k = field(p, e, modulus)?;
    let xi = parse_element(&k, xi).map_err(|e| e.to_string())?;
    let rows = trace_table(&xi, n_max as usize).map_err(|e| e.to_string())?;
    to_json(&TableView {
        field: FieldRecord::from_ctx(&k),
        xi: xi.to_string(),
        rows: rows.iter().map(TraceRowRecord::from).collect(),
    })
}

#[derive(Serialize)]
struct Cell {
    xi: String,
    trace: String,
    outcome: &'static str,
    witness_n: Option<usize>,
    period: Option<usize>,
}

#[derive(Serialize)]
struct MapView {
    field: FieldRecord,
    stable: usize,
    cells: Vec<Cell>,
}

pub fn stability_map_json(p: u32, e: u32, modulus: &str) -> Result<String, String> {
    let k = field(p, e, modulus)?;
    if k.order() > MAP_LIMIT {
        return Err(format!(
            "the map is limited to fields of at most {MAP_LIMIT} elements"
        ));
    }
    let cells = k
        .elements()
        .map(|xi| {
            let v = decide_inverse_stability(&xi).map_err(|e| e.to_string())?;
            Ok(Cell {
                xi: xi.to_string(),
                trace: xi.abs_trace().to_string(),
                outcome: v.outcome.as_str(),
                witness_n: v.witness_n,
                period: v.period(),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let stable = cells
        .iter()
        .filter(|c| c.outcome == Outcome::Stable.as_str())
        .count();
    to_json(&MapView {
        field: FieldRecord::from_ctx(&k),
        stable,
        cells,
    })
}

#[derive(Serialize)]
struct GenerateView {
    degree: usize,
    pretty: String,
    criterion_irreducible: bool,
    rabin_irreducible: Option<bool>,
}

pub fn generate_json(p: u32, e: u32, modulus: &str, xi: &str, n: u32) -> Result<String, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let k = field(p, e, modulus)?;
    let xi = parse_element(&k, xi).map_err(|e| e.to_string())?;
    let d = denominator(&xi, n as usize, DEGREE_LIMIT)
        .map_err(|e| e.to_string())?
        .monic();
    let mut s = init_states(&xi).0;
    let mut criterion = true;
    while s.n <= n as usize {
        let ratio = s.ratio().map_err(|e| e.to_string())?;
        if ratio.abs_trace().is_zero() {
            criterion = false;
            break;
        }
        s = step_state(&s, &xi).map_err(|e| e.to_string())?;
    }
    let degree = d.degree().expect("D_n is nonzero");
    let rabin = if degree <= RABIN_LIMIT {
        Some(d.is_irreducible().map_err(|e| e.to_string())?)
    } else {
        None
    };
    to_json(&GenerateView {
        degree,
        pretty: d.pretty(),
        criterion_irreducible: criterion,
        rabin_irreducible: rabin,
    })
}

#[wasm_bindgen(js_name = traceTable)]
pub fn trace_table_js(
    p: u32,
    e: u32,
    modulus: &str,
    xi: &str,
    n_max: u32,
) -> Result<String, JsError> {
    trace_table_json(p, e, modulus, xi, n_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = stabilityMap)]
pub fn stability_map_js(p: u32, e: u32, modulus: &str) -> Result<String, JsError> {
    stability_map_json(p, e, modulus).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = generate)]
pub fn generate_js(p: u32, e: u32, modulus: &str, xi: &str, n: u32) -> Result<String, JsError> {
    generate_json(p, e, modulus, xi, n).map_err(|e| JsError::new(&e))
}
