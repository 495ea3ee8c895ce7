//! Browser bindings. Every entry point takes a ring source, either a fixture
//! name or the text of a ring file, and returns JSON text.

use serde_json::json;
use wasm_bindgen::prelude::*;

use spectra2ring::fixtures;
use spectra2ring::json;
use spectra2ring::localization as loc;
use spectra2ring::spectrum::enumerate_primes;
use spectra2ring::support::SupportContext;
use spectra2ring::two_ring::TwoRing;

fn load(src: &str) -> Result<TwoRing, String> {
    let src = src.trim();
    let ring = match fixtures::by_name(src) {
        Some(r) => r,
        None if !src.starts_with('{') => return Err(format!("unknown fixture {src:?}")),
        None => json::ring_from_json(src).map_err(|e| e.to_string())?,
    };
    ring.require_axioms().map_err(|e| e.to_string())?;
    TwoRing::new(ring).map_err(|e| e.to_string())
}

pub fn fixtures_json() -> String {
    serde_json::to_string(&fixtures::FIXTURE_NAMES).expect("names serialize")
}

/// Spectrum with keys, covering pairs for the Hasse diagram and the ring file.
pub fn spectrum_json(src: &str) -> Result<String, String> {
    let t = load(src)?;
    let spec = enumerate_primes(&t);
    let covering: Vec<[usize; 2]> = spec.covering_relations().into_iter().map(|(a, b)| [a, b]).collect();
    let v = json!({
        "covering": covering,
        "keys": spec.keys,
        "ring": json::ring_to_value(t.ring()),
        "spec": json::spec_value(&t, &spec),
    });
    Ok(v.to_string())
}

/// `selector` is a prime index (`"0"`) or a morphism (`"x:0->1"`).
pub fn localize_json(src: &str, selector: &str) -> Result<String, String> {
    let t = load(src)?;
    let spec = enumerate_primes(&t);
    let selector = selector.trim();
    let (sys, label) = match selector.parse::<usize>() {
        Ok(i) => {
            let p = spec.primes.get(i).ok_or_else(|| format!("no prime with index {i}"))?;
            (loc::prime_complement(&t, p).map_err(|e| e.to_string())?, format!("complement of {}", spec.keys[i]))
        }
        Err(_) => {
            let r = json::parse_morphism(&t, selector).map_err(|e| e.to_string())?;
            (loc::system_of(&t, &r), format!("powers of {selector}"))
        }
    };
    let l = loc::localize(&t, &sys).map_err(|e| e.to_string())?;
    let sl = loc::spec_localization(&t, &spec, &sys, &l).map_err(|e| e.to_string())?;
    Ok(json::localization_value(&t, &label, &l, &sl).to_string())
}

pub fn rho_json(src: &str) -> Result<String, String> {
    let t = load(src)?;
    let ctx = SupportContext::new(&t);
    json::rho_value(&ctx).map(|v| v.to_string()).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn fixtures() -> String {
    fixtures_json()
}

#[wasm_bindgen]
pub fn spectrum(src: &str) -> Result<String, JsError> {
    spectrum_json(src).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn localize(src: &str, selector: &str) -> Result<String, JsError> {
    localize_json(src, selector).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn rho_table(src: &str) -> Result<String, JsError> {
    rho_json(src).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dump(name: &str) -> Option<String> {
    fixtures::by_name(name).map(|r| json::ring_to_json(&r))
}
