//! Invariant suites run by `spectra2ring verify`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideals::{self, HomogeneousIdeal};
use crate::localization::{self as loc, LeftFraction};
use crate::ring::GradedRing;
use crate::spectrum::{self, SpecSpace};
use crate::support::{GradedComplex, SupportContext};
use crate::two_ring::TwoRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Ideals,
    Loc,
    Support,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "ideals" => Ok(Suite::Ideals),
            "loc" => Ok(Suite::Loc),
            "support" => Ok(Suite::Support),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub failures: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "ok   {}", self.name)
        } else {
            write!(f, "FAIL {}: {}", self.name, self.failures.join("; "))
        }
    }
}

fn check(name: &'static str, f: impl FnOnce() -> Result<Vec<String>>) -> Check {
    let failures = match f() {
        Ok(v) => v,
        Err(e) => vec![e.to_string()],
    };
    Check { name, failures }
}

fn when(cond: bool, msg: impl Into<String>) -> Vec<String> {
    if cond {
        Vec::new()
    } else {
        vec![msg.into()]
    }
}

/// Runs `suite` on `ring`. A ring failing its axioms yields a single failed check.
pub fn run(ring: &GradedRing, suite: Suite) -> Vec<Check> {
    let report = ring.check_ring_axioms();
    let mut out = vec![Check {
        name: "ring axioms",
        failures: if report.is_ok() { vec![] } else { vec![report.describe(ring)] },
    }];
    if !report.is_ok() {
        return out;
    }
    let t = match TwoRing::new(ring.clone()) {
        Ok(t) => t,
        Err(e) => {
            out[0].failures.push(e.to_string());
            return out;
        }
    };
    let spec = spectrum::enumerate_primes(&t);
    if matches!(suite, Suite::All | Suite::Ideals) {
        out.extend(ideal_suite(&t, &spec));
    }
    if matches!(suite, Suite::All | Suite::Loc) {
        out.extend(loc_suite(&t, &spec));
    }
    if matches!(suite, Suite::All | Suite::Support) {
        out.extend(support_suite(&t));
    }
    out
}

pub fn ideal_suite(t: &TwoRing, spec: &SpecSpace) -> Vec<Check> {
    let all = ideals::enumerate_ideals(t);
    vec![
        check("coherence", || Ok(t.coherence_report())),
        check("pseudo-commutativity", || {
            for r in t.all_morphisms() {
                for h in 0..t.order() {
                    for s in t.hom_elements(r.tgt, h) {
                        t.pseudo_commute(&r, &s)?;
                    }
                }
            }
            Ok(vec![])
        }),
        check("ideal enumeration", || {
            let mut bad = Vec::new();
            for i in &all {
                if !ideals::is_ideal(t, i) {
                    bad.push(format!("{} is not an ideal", i.key(t)));
                }
            }
            bad.extend(when(all.contains(&HomogeneousIdeal::zero(t)), "zero ideal missing"));
            bad.extend(when(all.contains(&HomogeneousIdeal::whole(t)), "whole ideal missing"));
            for r in t.all_morphisms() {
                let g = ideals::ideal_generate(t, std::slice::from_ref(&r));
                bad.extend(when(all.contains(&g), "principal ideal missing"));
            }
            Ok(bad)
        }),
        check("ideal lattice", || lattice_laws(t, spec, &all)),
        check("annihilators", || {
            for s in t.all_morphisms() {
                ideals::annihilator(t, &s)?;
            }
            Ok(vec![])
        }),
        check("spectral space", || Ok(spectrum::verify_spectral(t, spec))),
        check("ring-level correspondence", || {
            spectrum::ring_spec_correspondence(t, spec)?;
            Ok(vec![])
        }),
    ]
}

/// Products, sums and the closed-set rules over the whole ideal lattice.
pub fn lattice_laws(t: &TwoRing, spec: &SpecSpace, all: &[HomogeneousIdeal]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let key = |i: &HomogeneousIdeal| i.key(t);
    for a in all {
        for b in all {
            let ab = ideals::ideal_product(t, a, b)?;
            let ba = ideals::ideal_product(t, b, a)?;
            let comp = ideals::ideal_product_composites(t, a, b)?;
            let tens = ideals::ideal_product_tensor(t, a, b)?;
            if ab != ba || ab != comp || ab != tens {
                bad.push(format!("products of {} and {} disagree", key(a), key(b)));
            }
            let sum = ideals::ideal_sum(t, a, b)?;
            let mut gens = a.members(t);
            gens.extend(b.members(t));
            if sum != ideals::ideal_generate(t, &gens) || !a.is_subideal_of(&sum) || !b.is_subideal_of(&sum) {
                bad.push(format!("join of {} and {} is not the Hom-wise sum", key(a), key(b)));
            }
            if spec.v_set(a).union(spec.v_set(b)) != spec.v_set(&ab) {
                bad.push(format!("V({}) ∪ V({}) ≠ V(product)", key(a), key(b)));
            }
            if spec.v_set(a).intersection(spec.v_set(b)) != spec.v_set(&sum) {
                bad.push(format!("V({}) ∩ V({}) ≠ V(sum)", key(a), key(b)));
            }
            for c in all {
                let lhs = ideals::ideal_product(t, a, &ideals::ideal_sum(t, b, c)?)?;
                let rhs = ideals::ideal_sum(t, &ab, &ideals::ideal_product(t, a, c)?)?;
                if lhs != rhs {
                    bad.push(format!("distributivity fails for {}, {}, {}", key(a), key(b), key(c)));
                }
            }
        }
    }
    // Arbitrary (finite) families: intersection of all V(I) is V(ΣI).
    let total = all.iter().try_fold(HomogeneousIdeal::zero(t), |acc, i| ideals::ideal_sum(t, &acc, i))?;
    let meet = all.iter().fold(spec.all(), |acc, i| acc.intersection(spec.v_set(i)));
    bad.extend(when(meet == spec.v_set(&total), "∩V(I) ≠ V(ΣI) over the lattice"));
    Ok(bad)
}

/// How many fractions per hom-set the fraction-level checks visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    /// Fractions drawn from each hom-set, evenly spaced in the canonical order.
    pub fractions: usize,
    /// Second arguments of sums and composites, as class representatives.
    pub partners: usize,
}

impl Sampling {
    pub const EXHAUSTIVE: Sampling = Sampling { fractions: usize::MAX, partners: usize::MAX };
    /// Used by the `loc` suite so that rings of order 81 finish in seconds.
    pub const SUITE: Sampling = Sampling { fractions: 64, partners: 12 };
}

fn sample(fs: Vec<LeftFraction>, limit: usize) -> Vec<LeftFraction> {
    if fs.len() <= limit {
        return fs;
    }
    let step = fs.len().div_ceil(limit);
    fs.into_iter().step_by(step).collect()
}

pub fn loc_suite(t: &TwoRing, spec: &SpecSpace) -> Vec<Check> {
    let all = ideals::enumerate_ideals(t);
    let systems = match loc::standard_systems(t, spec) {
        Ok(s) => s,
        Err(e) => return vec![Check { name: "multiplicative systems", failures: vec![e.to_string()] }],
    };
    vec![
        check("multiplicative systems", || {
            Ok(systems
                .iter()
                .filter(|s| !loc::is_multiplicative(t, s))
                .map(|s| format!("{s:?} is not multiplicative"))
                .collect())
        }),
        check("Ore completion and cancellation", || {
            for sys in &systems {
                ore_and_cancel(t, sys)?;
            }
            Ok(vec![])
        }),
        check("fraction equality", || {
            let mut bad = Vec::new();
            for sys in &systems {
                bad.extend(equality_agreement(t, sys, Sampling::SUITE)?);
            }
            Ok(bad)
        }),
        check("representative independence", || {
            let mut bad = Vec::new();
            for sys in &systems {
                bad.extend(representative_independence(t, sys, Sampling::SUITE)?);
            }
            Ok(bad)
        }),
        check("localization", || {
            for sys in &systems {
                let l = loc::localize(t, sys)?;
                loc::verify_localization(t, sys, &l)?;
                loc::spec_localization(t, spec, sys, &l)?;
                for x in 0..t.order() {
                    for y in 0..t.order() {
                        loc::right_left_bijection(t, sys, &l, x, y)?;
                    }
                }
                for i in &all {
                    loc::quotient_localize_commute_with(t, &l, i, sys)?;
                }
            }
            Ok(vec![])
        }),
        check("local rings at primes", || {
            for p in &spec.primes {
                loc::saturation_and_local_check(t, p)?;
            }
            Ok(vec![])
        }),
    ]
}

/// Left and right Ore squares and both cancellations for every `s ∈ S`.
pub fn ore_and_cancel(t: &TwoRing, sys: &loc::MultSystem) -> Result<()> {
    for s in sys.members(t) {
        for k in 0..t.order() {
            for r in t.hom_elements(s.src, k) {
                loc::ore_complete(t, sys, &r, &s)?;
            }
            for r in t.hom_elements(k, s.tgt) {
                loc::right_ore_complete(t, sys, &r, &s)?;
            }
            for r in t.hom_elements(k, s.src) {
                if t.is_zero_morphism(&t.compose(&s, &r)?) {
                    loc::cancel_left(t, sys, &r, &s)?;
                }
            }
            for r in t.hom_elements(s.tgt, k) {
                if t.is_zero_morphism(&t.compose(&r, &s)?) {
                    loc::cancel_right(t, sys, &r, &s)?;
                }
            }
        }
    }
    Ok(())
}

/// The partition of every hom-set of fractions under the fast equality test,
/// checked against the exhaustive test: each fraction is equal to its own
/// class representative and to no other.
pub fn equality_agreement(t: &TwoRing, sys: &loc::MultSystem, sampling: Sampling) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for x in 0..t.order() {
        for y in 0..t.order() {
            let fs = sample(loc::all_fractions(t, sys, x, y), sampling.fractions);
            let classes = group_classes(t, sys, &fs)?;
            for (i, class) in classes.iter().enumerate() {
                for f in class {
                    for (j, other) in classes.iter().enumerate() {
                        if loc::fraction_eq_exhaustive(t, sys, other[0], f)? != (i == j) {
                            bad.push(format!("equality tests disagree on {x}→{y}"));
                        }
                    }
                }
            }
        }
    }
    bad.dedup();
    Ok(bad)
}

/// Sums and composites computed from equal fractions, with the literal Ore
/// completion on one side and exhaustive search on the other, agree. The
/// second argument ranges over class representatives.
pub fn representative_independence(t: &TwoRing, sys: &loc::MultSystem, sampling: Sampling) -> Result<Vec<String>> {
    let search = |r: &crate::two_ring::Morphism, s: &crate::two_ring::Morphism| {
        loc::ore_search(t, sys, r, s).ok_or_else(|| Error::StructureCheck("no Ore square".into()))
    };
    let n = t.order();
    let reps = |x: usize, y: usize| -> Result<Vec<LeftFraction>> {
        let fs = sample(loc::all_fractions(t, sys, x, y), sampling.fractions);
        Ok(group_classes(t, sys, &fs)?.into_iter().take(sampling.partners).map(|c| c[0].clone()).collect())
    };
    let mut bad = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let fs = sample(loc::all_fractions(t, sys, x, y), sampling.fractions);
            let classes = group_classes(t, sys, &fs)?;
            let targets: Vec<(usize, Vec<LeftFraction>)> =
                (0..n).map(|z| reps(y, z).map(|r| (z, r))).collect::<Result<_>>()?;
            for class in &classes {
                let a = class[0];
                for a2 in class {
                    for b in classes.iter().take(sampling.partners).map(|c| c[0]) {
                        let u = loc::fraction_add(t, sys, a, b)?;
                        let v = loc::fraction_add_with(t, a2, b, &search)?;
                        if !loc::fraction_eq(t, sys, &u, &v)? {
                            bad.push(format!("sum depends on representative at {x}→{y}"));
                        }
                    }
                    for (z, gs) in &targets {
                        for g in gs {
                            let u = loc::fraction_compose(t, sys, g, a)?;
                            let v = loc::fraction_compose_with(t, g, a2, &search)?;
                            if !loc::fraction_eq(t, sys, &u, &v)? {
                                bad.push(format!("composite depends on representative at {x}→{y}→{z}"));
                            }
                        }
                    }
                }
            }
        }
    }
    bad.sort();
    bad.dedup();
    Ok(bad)
}

fn group_classes<'a>(t: &TwoRing, sys: &loc::MultSystem, fs: &'a [LeftFraction]) -> Result<Vec<Vec<&'a LeftFraction>>> {
    let mut classes: Vec<Vec<&LeftFraction>> = Vec::new();
    for f in fs {
        let mut placed = false;
        for c in classes.iter_mut() {
            if loc::fraction_eq(t, sys, c[0], f)? {
                c.push(f);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![f]);
        }
    }
    Ok(classes)
}

pub fn support_suite(t: &TwoRing) -> Vec<Check> {
    let ctx = SupportContext::new(t);
    let blocks = ctx.test_blocks();
    vec![
        check("ρσ = id", || {
            let images = ctx.rho_sigma()?;
            Ok(when(images.iter().enumerate().all(|(i, &j)| i == j), format!("ρσ permutes primes: {images:?}")))
        }),
        check("cone supports", || {
            let mut bad = ctx.basis_check();
            for r in t.all_morphisms() {
                if ctx.supph(&GradedComplex::cone(&r)).is_empty() != t.is_invertible(&r) {
                    bad.push(format!("cone({}) has empty support iff invertible fails", t.ring().format_element(&r.val)));
                }
            }
            Ok(bad)
        }),
        check("module supports", || {
            let mut bad = Vec::new();
            for b in &blocks {
                if ctx.supph(b) != ctx.supph_local(b) {
                    bad.push("V(Ann) and localization supports differ".into());
                }
            }
            Ok(bad)
        }),
        check("thick ideals", || Ok(ctx.thick_family_check(&blocks, 2))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_pass() {
        for (name, ring) in fixtures::all() {
            for c in run(&ring, Suite::All) {
                assert!(c.passed(), "{name}: {c}");
            }
        }
    }

    #[test]
    fn broken_ring_fails() {
        let checks = run(&fixtures::broken_d2(), Suite::All);
        assert_eq!(checks.len(), 1);
        assert!(!checks[0].passed());
    }

    #[test]
    fn suite_names() {
        assert_eq!("loc".parse::<Suite>().unwrap(), Suite::Loc);
        assert!("nope".parse::<Suite>().is_err());
    }
}
