//! Acceptance suite. Each test prints one PASS/FAIL line for its criterion.
//! Derived values come from the naive oracles at the top of this file, which
//! work on explicit element sets and share no code with the library's ideal
//! machinery.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;

use spectra2ring::fixtures::{self, DEFAULT_SEED};
use spectra2ring::ideals;
use spectra2ring::linalg::Subspace;
use spectra2ring::localization as loc;
use spectra2ring::ring::GradedRing;
use spectra2ring::spectrum::{self, PointSet, SpecSpace};
use spectra2ring::support::{self, GradedComplex, SupportContext};
use spectra2ring::two_ring::{Morphism, Side, TwoRing};
use spectra2ring::verify::{self, Sampling};

const RANDOM_RINGS: usize = 50;
const MAX_CARD: u128 = 81;

fn report(n: usize, title: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {status} {title}");
    if let Err(e) = outcome {
        std::panic::resume_unwind(e);
    }
}

fn companion(r: &GradedRing) -> TwoRing {
    TwoRing::new(r.clone()).expect("fixture is a ring")
}

fn fixture_rings() -> Vec<(&'static str, TwoRing)> {
    fixtures::all().into_iter().map(|(n, r)| (n, companion(&r))).collect()
}

fn random_rings() -> Vec<TwoRing> {
    let seed = fixtures::seed_from_env(DEFAULT_SEED);
    let rings = fixtures::random_rings(seed, RANDOM_RINGS, MAX_CARD);
    assert_eq!(rings.len(), RANDOM_RINGS);
    rings
        .iter()
        .map(|r| {
            assert!(r.cardinality() <= MAX_CARD);
            companion(r)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Element-set oracles.

type ElementSet = BTreeSet<Vec<u32>>;

fn homogeneous(ring: &GradedRing) -> Vec<Vec<u32>> {
    ring.group().elements().flat_map(|d| ring.homogeneous_elements(d)).collect()
}

/// Smallest homogeneous ideal containing `gens`, by saturation of element sets.
fn naive_closure(ring: &GradedRing, gens: &ElementSet) -> ElementSet {
    let hom = homogeneous(ring);
    let mut set: ElementSet = gens.clone();
    set.insert(ring.zero());
    loop {
        let mut next = set.clone();
        for a in &set {
            for h in &hom {
                next.insert(ring.mul(h, a));
                next.insert(ring.mul(a, h));
            }
            for b in &set {
                if ring.degree_of(a) == ring.degree_of(b) || ring.degree_of(a).is_none() || ring.degree_of(b).is_none() {
                    next.insert(ring.add(a, b));
                }
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// All homogeneous ideals of `ring`, by breadth-first extension from zero.
fn naive_ideals(ring: &GradedRing) -> Vec<ElementSet> {
    let hom = homogeneous(ring);
    let zero = naive_closure(ring, &ElementSet::new());
    let mut seen: HashSet<ElementSet> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(i) = frontier.pop() {
        for h in hom.iter().filter(|h| !i.contains(*h)) {
            let mut gens = i.clone();
            gens.insert(h.clone());
            let j = naive_closure(ring, &gens);
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<ElementSet> = seen.into_iter().collect();
    out.sort();
    out
}

fn naive_is_prime(ring: &GradedRing, i: &ElementSet) -> bool {
    let outside: Vec<Vec<u32>> = homogeneous(ring).into_iter().filter(|h| !i.contains(h)).collect();
    !i.contains(&ring.one())
        && outside.iter().all(|a| outside.iter().all(|b| !i.contains(&ring.mul(a, b))))
}

fn naive_primes(ring: &GradedRing) -> Vec<ElementSet> {
    naive_ideals(ring).into_iter().filter(|i| naive_is_prime(ring, i)).collect()
}

/// Homogeneous elements of a subspace of `R`.
fn homogeneous_part(ring: &GradedRing, s: &Subspace) -> ElementSet {
    s.elements().into_iter().filter(|v| v.iter().all(|&c| c == 0) || ring.degree_of(v).is_some()).collect()
}

fn naive_inverse(t: &TwoRing, m: &Morphism) -> Option<Morphism> {
    t.hom_elements(m.tgt, m.src).into_iter().find(|n| {
        t.compose(n, m).unwrap() == t.identity(m.src) && t.compose(m, n).unwrap() == t.identity(m.tgt)
    })
}

fn naive_isos(t: &TwoRing, g: usize, h: usize) -> Vec<Morphism> {
    t.hom_elements(g, h).into_iter().filter(|m| naive_inverse(t, m).is_some()).collect()
}

/// `b ∘ (ℓ⊗r) ∘ a` for some object `ℓ` and isomorphisms `a`, `b`.
fn naive_is_translate(t: &TwoRing, r: &Morphism, r2: &Morphism) -> bool {
    t.group().elements().any(|ell| {
        let tw = t.twist(r, ell, Side::Left);
        naive_isos(t, r2.src, tw.src).iter().any(|a| {
            let x = t.compose(&tw, a).unwrap();
            naive_isos(t, tw.tgt, r2.tgt).iter().any(|b| t.compose(b, &x).unwrap() == *r2)
        })
    })
}

/// Primes containing `r`, from element sets.
fn naive_v(t: &TwoRing, spec: &SpecSpace, r: &Morphism) -> PointSet {
    PointSet::from_indices((0..spec.len()).filter(|&i| spec.primes[i].contains(t, r)))
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_01_fixture_spectra() {
    report(1, "fixture spectra", || {
        let expected = [("Z0", 0), ("D2", 1), ("P2", 2), ("U2", 1), ("E3", 1)];
        for ((name, t), (ename, n)) in fixture_rings().iter().zip(expected) {
            assert_eq!(*name, ename);
            let spec = spectrum::enumerate_primes(t);
            assert_eq!(spec.len(), n, "{name}: library spectrum");
            assert_eq!(naive_primes(t.ring()).len(), n, "{name}: brute-force primes");
        }
        let d2 = companion(&fixtures::d2());
        assert_eq!(spectrum::enumerate_primes(&d2).keys, vec!["(x)"]);
        let u2 = companion(&fixtures::u2());
        assert_eq!(spectrum::enumerate_primes(&u2).keys, vec!["(0)"]);
        let p2 = companion(&fixtures::p2());
        let spec = spectrum::enumerate_primes(&p2);
        assert!(spec.specialization().is_empty(), "P2 primes are incomparable");
        assert!(!spec.primes[0].is_subideal_of(&spec.primes[1]) && !spec.primes[1].is_subideal_of(&spec.primes[0]));
    });
}

#[test]
fn criterion_02_correspondence() {
    report(2, "2-ring primes correspond to ring-level primes", || {
        let rings: Vec<TwoRing> = fixture_rings().into_iter().map(|(_, t)| t).chain(random_rings()).collect();
        for t in &rings {
            let spec = spectrum::enumerate_primes(t);
            let oracle = naive_primes(t.ring());
            assert_eq!(oracle.len(), spec.len());
            let mut hit = BTreeSet::new();
            for q in &oracle {
                let j = Subspace::span(t.characteristic(), t.ring().dim(), q);
                let closed = spectrum::close_ring_ideal(t, &j);
                let i = spec.index_of(&closed).expect("closure of a ring prime is a 2-ring prime");
                assert_eq!(homogeneous_part(t.ring(), &spectrum::restrict_to_ring(t, &closed)), *q);
                hit.insert(i);
            }
            assert_eq!(hit.len(), spec.len());
            spectrum::ring_spec_correspondence(t, &spec).unwrap();
        }
    });
}

#[test]
fn criterion_03_ideal_lattice() {
    report(3, "ideal lattice laws", || {
        for (name, t) in fixture_rings() {
            let spec = spectrum::enumerate_primes(&t);
            let all = ideals::enumerate_ideals(&t);
            // The lattice seen at ring level matches the naive enumeration.
            let ring_level: BTreeSet<ElementSet> =
                all.iter().map(|i| homogeneous_part(t.ring(), &spectrum::restrict_to_ring(&t, i))).collect();
            assert_eq!(ring_level, naive_ideals(t.ring()).into_iter().collect(), "{name}");
            assert!(verify::lattice_laws(&t, &spec, &all).unwrap().is_empty(), "{name}");
            for a in &all {
                for b in &all {
                    let sum = ideals::ideal_sum(&t, a, b).unwrap();
                    for (k, slot) in sum.slots().iter().enumerate() {
                        assert_eq!(*slot, a.slots()[k].sum(&b.slots()[k]), "{name}: join is not Hom-wise");
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_04_pseudo_commutativity() {
    report(4, "pseudo-commutativity witnesses", || {
        for (name, t) in fixture_rings() {
            for r in t.all_morphisms() {
                for h in 0..t.order() {
                    for s in t.hom_elements(r.tgt, h) {
                        let w = t.pseudo_commute(&r, &s).unwrap();
                        let lhs = t.compose_all(&[&w.v, &w.r_prime, &w.s_prime, &w.u]).unwrap();
                        assert_eq!(lhs, t.compose(&s, &r).unwrap(), "{name}");
                        assert!(naive_inverse(&t, &w.u).is_some() && naive_inverse(&t, &w.v).is_some());
                        assert!(naive_is_translate(&t, &r, &w.r_prime), "{name}: r′ is not a translate");
                        assert!(naive_is_translate(&t, &s, &w.s_prime), "{name}: s′ is not a translate");
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_05_calculus_of_fractions() {
    report(5, "Ore completions, cancellation, representative independence", || {
        for (name, t) in fixture_rings() {
            let spec = spectrum::enumerate_primes(&t);
            for (i, p) in spec.primes.iter().enumerate() {
                let sp = loc::prime_complement(&t, p).unwrap();
                for m in t.all_morphisms() {
                    assert_eq!(sp.contains(&t, &m), !p.contains(&t, &m), "{name}: S_p{i}");
                }
            }
            for sys in loc::standard_systems(&t, &spec).unwrap() {
                for s in sys.members(&t) {
                    for k in 0..t.order() {
                        for r in t.hom_elements(s.src, k) {
                            let sq = loc::ore_complete(&t, &sys, &r, &s).unwrap();
                            assert_eq!(t.compose(&sq.s_prime, &r).unwrap(), t.compose(&sq.r_prime, &s).unwrap());
                            assert!(sys.contains(&t, &sq.s_prime));
                        }
                        for r in t.hom_elements(k, s.tgt) {
                            let sq = loc::right_ore_complete(&t, &sys, &r, &s).unwrap();
                            assert_eq!(t.compose(&r, &sq.s_prime).unwrap(), t.compose(&s, &sq.r_prime).unwrap());
                            assert!(sys.contains(&t, &sq.s_prime));
                        }
                        for r in t.hom_elements(k, s.src) {
                            if t.is_zero_morphism(&t.compose(&s, &r).unwrap()) {
                                let u = loc::cancel_left(&t, &sys, &r, &s).unwrap();
                                assert!(sys.contains(&t, &u) && t.is_zero_morphism(&t.compose(&r, &u).unwrap()));
                            }
                        }
                        for r in t.hom_elements(s.tgt, k) {
                            if t.is_zero_morphism(&t.compose(&r, &s).unwrap()) {
                                let u = loc::cancel_right(&t, &sys, &r, &s).unwrap();
                                assert!(sys.contains(&t, &u) && t.is_zero_morphism(&t.compose(&u, &r).unwrap()));
                            }
                        }
                    }
                }
                for x in 0..t.order() {
                    for y in 0..t.order() {
                        let fs = loc::all_fractions(&t, &sys, x, y);
                        for a in &fs {
                            for b in &fs {
                                assert_eq!(
                                    loc::fraction_eq(&t, &sys, a, b).unwrap(),
                                    loc::fraction_eq_exhaustive(&t, &sys, a, b).unwrap(),
                                    "{name}"
                                );
                            }
                        }
                    }
                }
                let bad = verify::equality_agreement(&t, &sys, Sampling::EXHAUSTIVE).unwrap();
                assert!(bad.is_empty(), "{name}: {bad:?}");
                let bad = verify::representative_independence(&t, &sys, Sampling::EXHAUSTIVE).unwrap();
                assert!(bad.is_empty(), "{name}: {bad:?}");
            }
        }
    });
}

#[test]
fn criterion_06_spec_of_localization() {
    report(6, "spectrum of a localization", || {
        for (name, t) in fixture_rings() {
            let spec = spectrum::enumerate_primes(&t);
            for sys in loc::standard_systems(&t, &spec).unwrap() {
                let avoiding: Vec<usize> = (0..spec.len())
                    .filter(|&i| sys.members(&t).iter().all(|s| !spec.primes[i].contains(&t, s)))
                    .collect();
                let l = loc::localize(&t, &sys).unwrap();
                let sl = loc::spec_localization(&t, &spec, &sys, &l).unwrap();
                assert_eq!(sl.avoiding, avoiding, "{name}");
                assert_eq!(sl.local_spec.len(), avoiding.len());
                let back: BTreeSet<usize> = sl.backward.iter().copied().collect();
                assert_eq!(back, avoiding.iter().copied().collect());
                // Basic opens: V(⟨loc r⟩) corresponds to V(⟨r⟩) ∩ avoiding.
                for r in t.all_morphisms() {
                    let local = sl.local_spec.v_morphism(&l.two_ring, &l.loc_morphism(&r));
                    let pulled: BTreeSet<usize> = local.indices().into_iter().map(|j| sl.backward[j]).collect();
                    let expected: BTreeSet<usize> =
                        avoiding.iter().copied().filter(|&i| spec.primes[i].contains(&t, &r)).collect();
                    assert_eq!(pulled, expected, "{name}");
                }
            }
            for r in t.all_morphisms() {
                let sys = loc::system_of(&t, &r);
                let expected = PointSet::from_indices((0..spec.len()).filter(|&i| !spec.primes[i].contains(&t, &r)));
                assert_eq!(loc::avoiding_set(&t, &spec, &sys), expected, "{name}: D_r");
            }
        }
        let d2 = companion(&fixtures::d2());
        let x = d2.morphism(0, 1, d2.ring().parse_element("x").unwrap()).unwrap();
        let l = loc::localize(&d2, &loc::system_of(&d2, &x)).unwrap();
        assert!(l.two_ring.is_zero());
        assert!(spectrum::enumerate_primes(&l.two_ring).is_empty());
    });
}

#[test]
fn criterion_07_quotient_localization() {
    report(7, "quotients commute with localization", || {
        for r in [fixtures::d2(), fixtures::p2()] {
            let t = companion(&r);
            let spec = spectrum::enumerate_primes(&t);
            for i in ideals::enumerate_ideals(&t) {
                for sys in loc::standard_systems(&t, &spec).unwrap() {
                    let hom = loc::quotient_localize_commute(&t, &i, &sys).unwrap();
                    // Both sides rebuilt here; the comparison is bijective in each degree.
                    let l = loc::localize(&t, &sys).unwrap();
                    let si = loc::localize_ideal(&t, &sys, &l, &i).unwrap();
                    let (a, _) = ideals::quotient(&l.two_ring, &si).unwrap();
                    let (q, proj) = ideals::quotient(&t, &i).unwrap();
                    let b = loc::localize(&q, &loc::quotient_system(&t, &sys, &q, &proj)).unwrap().two_ring;
                    for d in t.group().elements() {
                        let src = a.ring().homogeneous_elements(d);
                        let imgs: ElementSet = src.iter().map(|v| hom.apply(b.ring(), v)).collect();
                        let tgt: ElementSet = b.ring().homogeneous_elements(d).into_iter().collect();
                        assert_eq!(imgs.len(), src.len());
                        assert_eq!(imgs, tgt);
                    }
                    for x in a.ring().nonzero_homogeneous() {
                        for y in a.ring().nonzero_homogeneous() {
                            let lhs = hom.apply(b.ring(), &a.ring().mul(&x.1, &y.1));
                            let rhs = b.ring().mul(&hom.apply(b.ring(), &x.1), &hom.apply(b.ring(), &y.1));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_08_annihilators() {
    report(8, "annihilator characterizations agree", || {
        for (name, t) in fixture_rings() {
            for s in t.all_morphisms() {
                let left = ideals::annihilator_left(&t, &s);
                let right = ideals::annihilator_right(&t, &s);
                let generated = ideals::annihilator_generated(&t, &s);
                assert_eq!(left, right, "{name}");
                assert!(ideals::matches_element_sets(&t, &generated, &left), "{name}");
                // Oracle: r annihilates s exactly when r·s = 0 in R.
                for r in t.all_morphisms() {
                    let expected = t.ring().mul(&r.val, &s.val).iter().all(|&c| c == 0);
                    assert_eq!(generated.contains(&t, &r), expected, "{name}");
                }
                assert_eq!(ideals::annihilator(&t, &s).unwrap(), generated);
            }
        }
    });
}

#[test]
fn criterion_09_spectral_spaces() {
    report(9, "spectral-space verification", || {
        let rings: Vec<TwoRing> = fixture_rings().into_iter().map(|(_, t)| t).chain(random_rings()).collect();
        for t in &rings {
            let spec = spectrum::enumerate_primes(t);
            assert!(spectrum::verify_spectral(t, &spec).is_empty());
            let n = spec.len();
            let closure = |i: usize| PointSet::from_indices((0..n).filter(|&j| spec.primes[i].is_subideal_of(&spec.primes[j])));
            for i in 0..n {
                for j in 0..i {
                    assert_ne!(closure(i), closure(j), "T0 fails");
                }
            }
            let closed: Vec<PointSet> = spec.space.closed.iter().copied().collect();
            for z in &closed {
                let reducible = z.is_empty()
                    || closed.iter().any(|a| {
                        closed.iter().any(|b| a != z && b != z && a.is_subset(*z) && b.is_subset(*z) && a.union(*b) == *z)
                    });
                let generic: Vec<usize> = z.indices().into_iter().filter(|&i| closure(i) == *z).collect();
                if !reducible {
                    assert_eq!(generic.len(), 1, "irreducible closed set without a unique generic point");
                }
            }
            let ms = t.all_morphisms();
            for r in &ms {
                for s in &ms {
                    let both = spec.d_set(t, r).intersection(spec.d_set(t, s));
                    let rt = t.twist(r, t.group().sub(s.tgt, r.src), Side::Right);
                    assert_eq!(both, spec.d_set(t, &t.compose(&rt, s).unwrap()));
                    assert_eq!(both, spec.d_set(t, &t.tensor(r, s)));
                }
            }
            let w = spectrum::finite_subcover(t, &spec, &ms).expect("finite subcover");
            assert!(w.check(t, &ms));
        }
    });
}

#[test]
fn criterion_10_support() {
    report(10, "support pipeline", || {
        for (name, t) in fixture_rings() {
            let ctx = SupportContext::new(&t);
            let spec = &ctx.spec;
            for r in t.all_morphisms() {
                let s = ctx.supph(&GradedComplex::cone(&r));
                assert_eq!(s, naive_v(&t, spec, &r), "{name}: supph cone(r) ≠ V(⟨r⟩)");
                assert_eq!(s.is_empty(), naive_inverse(&t, &r).is_some(), "{name}");
            }
            let identity: Vec<usize> = (0..spec.len()).collect();
            assert_eq!(ctx.rho_sigma().unwrap(), identity, "{name}: ρσ ≠ id");
            let blocks = ctx.test_blocks();
            let primes = support::ring_primes(&t, spec);
            for b in &blocks {
                assert_eq!(ctx.supph(b), ctx.supph_local(b), "{name}");
                for k in b.lo..=b.hi() {
                    let h = b.homology(t.ring(), k);
                    assert_eq!(
                        support::module_supp(t.ring(), &primes, &h),
                        support::module_supp_local(t.ring(), &primes, &h),
                        "{name}"
                    );
                }
            }
            let bad = ctx.thick_family_check(&blocks, 3);
            assert!(bad.is_empty(), "{name}: {bad:?}");
        }
    });
}

#[test]
fn criterion_11_basis() {
    report(11, "cone supports form a basis of closed sets", || {
        for (name, t) in fixture_rings() {
            let ctx = SupportContext::new(&t);
            assert!(ctx.basis_check().is_empty(), "{name}");
            let supports: Vec<PointSet> = t.all_morphisms().iter().map(|r| ctx.supph(&GradedComplex::cone(r))).collect();
            for z in &ctx.spec.space.closed {
                let meet = supports.iter().filter(|s| z.is_subset(**s)).fold(ctx.spec.all(), |a, s| a.intersection(*s));
                assert_eq!(meet, *z, "{name}: closed set is not an intersection of cone supports");
            }
            for s in &supports {
                assert!(ctx.spec.space.closed.contains(s), "{name}: cone support is not closed");
            }
        }
        let d2 = companion(&fixtures::d2());
        let x = d2.morphism(0, 1, d2.ring().parse_element("x").unwrap()).unwrap();
        assert_eq!(SupportContext::new(&d2).supph(&GradedComplex::cone(&x)), PointSet::singleton(0));
        let u2 = companion(&fixtures::u2());
        let ctx = SupportContext::new(&u2);
        assert!(ctx.supph(&GradedComplex::cone(&u2.identity(0))).is_empty());
        assert_eq!(ctx.supph(&GradedComplex::cone(&u2.zero_morphism(0, 1))), ctx.spec.all());
    });
}

// ---------------------------------------------------------------------------
// CLI.

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spectra2ring"))
}

fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    bin().args(args).output().unwrap().status.code().unwrap()
}

/// Every golden file and the command that produces it.
fn golden_commands() -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    for (name, t) in fixture_rings() {
        let n = name.to_string();
        out.push((format!("spec_{name}.json"), vec!["spec".into(), "--ring".into(), n.clone()]));
        out.push((format!("spec_{name}.dot"), vec!["spec".into(), "--ring".into(), n.clone(), "--format".into(), "dot".into()]));
        out.push((format!("rho_{name}.json"), vec!["rho".into(), "--ring".into(), n.clone()]));
        for i in 0..spectrum::enumerate_primes(&t).len() {
            out.push((
                format!("localize_{name}_at{i}.json"),
                vec!["localize".into(), "--ring".into(), n.clone(), "--at".into(), i.to_string()],
            ));
        }
    }
    for (ring, sel, label) in [("D2", "x:0->1", "x"), ("P2", "e1:0->0", "e1"), ("U2", "x:0->1", "x"), ("E3", "theta:0->1", "theta")] {
        out.push((
            format!("localize_{ring}_away_{label}.json"),
            vec!["localize".into(), "--ring".into(), ring.into(), "--away".into(), sel.into()],
        ));
    }
    out
}

#[test]
fn criterion_12_cli() {
    report(12, "CLI goldens and exit codes", || {
        let golden = tests_dir().join("golden");
        let commands = golden_commands();
        let mut expected_files: Vec<String> = commands.iter().map(|(f, _)| f.clone()).collect();
        expected_files.sort();
        let mut present: Vec<String> = std::fs::read_dir(&golden)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        present.sort();
        assert_eq!(present, expected_files, "golden directory has unexpected contents");
        for (file, args) in &commands {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let want = std::fs::read_to_string(golden.join(file)).unwrap();
            assert_eq!(run_ok(&args), want, "{file}");
        }
        for (name, _) in fixture_rings() {
            assert_eq!(exit_code(&["verify", "--ring", name, "--suite", "all"]), 0, "{name}");
        }
        let broken = tests_dir().join("data/broken_idempotent_x.json");
        let broken = broken.to_str().unwrap();
        assert_eq!(exit_code(&["verify", "--ring", broken, "--suite", "all"]), 1);
        assert_eq!(exit_code(&["spec", "--ring", broken]), 3);
        assert_eq!(exit_code(&["spec"]), 2);
        assert_eq!(exit_code(&["spec", "--ring", "nope"]), 2);
        let d2 = tests_dir().join("data/d2.json");
        let d2 = d2.to_str().unwrap();
        assert_eq!(run_ok(&["ring", "dump", "--ring", "D2"]), std::fs::read_to_string(d2).unwrap());
        assert_eq!(run_ok(&["ring", "dump", "--ring", d2]), run_ok(&["ring", "dump", "--ring", "D2"]));
        assert_eq!(run_ok(&["spec", "--ring", d2]), run_ok(&["spec", "--ring", "D2"]));
        assert_eq!(exit_code(&["localize", "--ring", "D2", "--at", "0", "--away", "x:0->1"]), 2);
    });
}
