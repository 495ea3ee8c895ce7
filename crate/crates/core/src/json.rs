//! Text formats: ring files, spectra, localizations, comparison tables and DOT.
//!
//! Every JSON value goes through `serde_json::Value`, whose maps are ordered,
//! so emitted keys are always sorted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grading::{GradingGroup, SignForm};
use crate::ideals::HomogeneousIdeal;
use crate::localization::{Localization, SpecLocalization};
use crate::ring::{BasisElement, GradedRing};
use crate::spectrum::SpecSpace;
use crate::support::SupportContext;
use crate::two_ring::{Morphism, TwoRing};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    basis: Vec<BasisFile>,
    char: u32,
    eps: Vec<Vec<u8>>,
    group: Vec<u32>,
    mult: BTreeMap<String, Vec<(u64, usize)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisFile {
    degree: Vec<i64>,
    name: String,
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::MalformedRing(e.to_string())
}

pub fn ring_to_value(ring: &GradedRing) -> Value {
    let group = ring.group();
    let basis = ring
        .basis()
        .iter()
        .map(|b| BasisFile {
            degree: group.tuple_of(b.degree).into_iter().map(i64::from).collect(),
            name: b.name.clone(),
        })
        .collect();
    let mut mult = BTreeMap::new();
    for (i, row) in ring.structure_constants().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let terms: Vec<(u64, usize)> = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (u64::from(c), k))
                .collect();
            if !terms.is_empty() {
                mult.insert(format!("{i},{j}"), terms);
            }
        }
    }
    let file = RingFile {
        basis,
        char: ring.characteristic(),
        eps: ring.sign_form().matrix().to_vec(),
        group: group.factors().to_vec(),
        mult,
    };
    serde_json::to_value(file).expect("ring files serialize")
}

pub fn ring_to_json(ring: &GradedRing) -> String {
    pretty(&ring_to_value(ring))
}

/// Parses a ring file. Coefficients are reduced modulo the characteristic and
/// repeated terms are summed. Ring axioms are not checked here.
pub fn ring_from_json(text: &str) -> Result<GradedRing> {
    let file: RingFile = serde_json::from_str(text).map_err(malformed)?;
    let group = GradingGroup::new(file.group).map_err(malformed)?;
    let eps = SignForm::new(&group, file.eps).map_err(malformed)?;
    let p = file.char;
    if !crate::ring::is_prime(p) {
        return Err(malformed(format!("characteristic {p} is not prime")));
    }
    let basis = file
        .basis
        .into_iter()
        .map(|b| {
            Ok(BasisElement {
                degree: group.index_of(&b.degree).map_err(malformed)?,
                name: b.name,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let n = basis.len();
    let mut mult = vec![vec![vec![0u32; n]; n]; n];
    for (key, terms) in &file.mult {
        let (i, j) = key
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| malformed(format!("bad multiplication key {key:?}")))?;
        if i >= n || j >= n {
            return Err(malformed(format!("multiplication key {key:?} out of range")));
        }
        for &(c, k) in terms {
            if k >= n {
                return Err(malformed(format!("basis index {k} out of range in {key:?}")));
            }
            let cell = &mut mult[i][j][k];
            *cell = ((u64::from(*cell) + c % u64::from(p)) % u64::from(p)) as u32;
        }
    }
    GradedRing::new(p, group, eps, basis, mult)
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn morphism_value(t: &TwoRing, m: &Morphism) -> Value {
    let ring = t.ring();
    let val: BTreeMap<String, u32> = m
        .val
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (ring.basis()[i].name.clone(), c))
        .collect();
    json!({
        "src": t.group().format(m.src),
        "tgt": t.group().format(m.tgt),
        "val": val,
    })
}

pub fn ideal_value(t: &TwoRing, ideal: &HomogeneousIdeal) -> Value {
    let gens: Vec<Value> = ideal.generators(t).iter().map(|m| morphism_value(t, m)).collect();
    json!({ "generators": gens, "key": ideal.key(t) })
}

pub fn spec_value(t: &TwoRing, spec: &SpecSpace) -> Value {
    let primes: Vec<Value> = spec.primes.iter().map(|p| ideal_value(t, p)).collect();
    let specialization: Vec<[usize; 2]> = spec.specialization().into_iter().map(|(a, b)| [a, b]).collect();
    json!({
        "closed_sets": spec.closed_sets(),
        "primes": primes,
        "specialization": specialization,
    })
}

pub fn spec_to_json(t: &TwoRing, spec: &SpecSpace) -> String {
    pretty(&spec_value(t, spec))
}

/// Specialization order as a DOT digraph; edges are covering relations `p ⊊ q`.
pub fn emit_dot(spec: &SpecSpace) -> String {
    let mut out = String::from("digraph spec {\n");
    for (i, k) in spec.keys.iter().enumerate() {
        let label = k.replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  p{i} [label=\"{label}\"];").unwrap();
    }
    for (a, b) in spec.covering_relations() {
        writeln!(out, "  p{a} -> p{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The localized ring, its spectrum, a fraction for every basis element and the
/// original prime corresponding to each local prime.
pub fn localization_value(t: &TwoRing, system: &str, l: &Localization, sl: &SpecLocalization) -> Value {
    let lt = &l.two_ring;
    let reps: Vec<Value> = l
        .basis_reps
        .iter()
        .zip(lt.ring().basis())
        .map(|(f, b)| {
            json!({
                "denominator": morphism_value(t, &f.s),
                "name": b.name,
                "numerator": morphism_value(t, &f.r),
            })
        })
        .collect();
    json!({
        "original_primes": sl.backward,
        "representatives": reps,
        "ring": ring_to_value(lt.ring()),
        "spectrum": spec_value(lt, &sl.local_spec),
        "system": system,
    })
}

/// `{prime key → key of ρ(σ(prime))}`.
pub fn rho_value(ctx: &SupportContext) -> Result<Value> {
    let images = ctx.rho_sigma()?;
    let table: BTreeMap<&str, &str> = ctx
        .spec
        .keys
        .iter()
        .zip(&images)
        .map(|(k, &i)| (k.as_str(), ctx.spec.keys[i].as_str()))
        .collect();
    Ok(serde_json::to_value(table).expect("maps serialize"))
}

/// Parses `"<element>:<src>-><tgt>"`, e.g. `"x:0->1"`.
pub fn parse_morphism(t: &TwoRing, s: &str) -> Result<Morphism> {
    let (elem, ends) = s
        .rsplit_once(':')
        .ok_or_else(|| Error::Parse(format!("expected <element>:<src>-><tgt>, got {s:?}")))?;
    let (src, tgt) = ends
        .split_once("->")
        .ok_or_else(|| Error::Parse(format!("expected <src>-><tgt>, got {ends:?}")))?;
    let src = t.group().parse(src)?;
    let tgt = t.group().parse(tgt)?;
    let val = t.ring().parse_element(elem)?;
    t.morphism(src, tgt, val)
}
