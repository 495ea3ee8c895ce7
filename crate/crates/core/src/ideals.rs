//! Homogeneous ideals of a companion category.
//!
//! An ideal is stored as one `𝔽_p`-subspace per hom-group `(g,h)`, kept in
//! reduced row echelon form so that equal ideals compare equal.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{self, Subspace};
use crate::ring::RingHom;
use crate::two_ring::{Morphism, Side, TwoRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousIdeal {
    parent: u64,
    slots: Vec<Subspace>,
}

/// Which twists the generation fixpoint closes under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureRule {
    /// `r ↦ g ⊗ r` for objects `g`.
    LeftObjects,
    /// `r ↦ a ⊗ r` and `r ↦ r ⊗ a` for arbitrary morphisms `a`.
    TwoSidedMorphisms,
}

impl HomogeneousIdeal {
    pub fn zero(t: &TwoRing) -> Self {
        let n = t.order();
        HomogeneousIdeal {
            parent: t.id(),
            slots: vec![Subspace::zero(t.characteristic(), t.ring().dim()); n * n],
        }
    }

    pub fn whole(t: &TwoRing) -> Self {
        let n = t.order();
        let slots = (0..n * n)
            .map(|s| {
                let (g, h) = t.slot_pair(s);
                Subspace::span(t.characteristic(), t.ring().dim(), &t.ring().component_basis(t.hom_degree(g, h)))
            })
            .collect();
        HomogeneousIdeal { parent: t.id(), slots }
    }

    /// Assemble an ideal from explicit slot subspaces without checking closure.
    pub fn from_slots(t: &TwoRing, slots: Vec<Subspace>) -> Self {
        assert_eq!(slots.len(), t.order() * t.order());
        HomogeneousIdeal { parent: t.id(), slots }
    }

    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn slot(&self, t: &TwoRing, g: usize, h: usize) -> &Subspace {
        &self.slots[t.slot(g, h)]
    }

    pub fn slots(&self) -> &[Subspace] {
        &self.slots
    }

    pub fn contains(&self, t: &TwoRing, m: &Morphism) -> bool {
        self.slots[t.slot(m.src, m.tgt)].contains(&m.val)
    }

    pub fn is_subideal_of(&self, other: &HomogeneousIdeal) -> bool {
        self.slots.iter().zip(&other.slots).all(|(a, b)| a.is_subspace_of(b))
    }

    pub fn is_proper(&self, t: &TwoRing) -> bool {
        !self.contains(t, &t.identity(t.group().zero()))
    }

    /// Total size `Σ_d dim I(0,d)`.
    pub fn rank(&self, t: &TwoRing) -> usize {
        t.group().elements().map(|d| self.slot(t, 0, d).dim()).sum()
    }

    /// Reduced echelon basis of the slots out of the unit object, as morphisms `0 → d`.
    pub fn generators(&self, t: &TwoRing) -> Vec<Morphism> {
        t.group()
            .elements()
            .flat_map(|d| {
                self.slot(t, 0, d)
                    .basis()
                    .iter()
                    .map(move |v| Morphism { src: 0, tgt: d, val: v.clone() })
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Canonical textual key, e.g. `(x)`, `(0)`, `(e1, e2)`.
    pub fn key(&self, t: &TwoRing) -> String {
        let gens: Vec<String> = self
            .generators(t)
            .iter()
            .map(|m| t.ring().format_element(&m.val))
            .collect();
        if gens.is_empty() {
            "(0)".into()
        } else {
            format!("({})", gens.join(", "))
        }
    }

    /// Sort key for deterministic ordering: size, then key.
    pub fn order_key(&self, t: &TwoRing) -> (usize, String) {
        (self.rank(t), self.key(t))
    }

    /// Every member, slot by slot.
    pub fn members(&self, t: &TwoRing) -> Vec<Morphism> {
        self.slots
            .iter()
            .enumerate()
            .flat_map(|(s, sub)| {
                let (g, h) = t.slot_pair(s);
                sub.elements().into_iter().map(move |val| Morphism { src: g, tgt: h, val })
            })
            .collect()
    }
}

fn check_parent(t: &TwoRing, ideals: &[&HomogeneousIdeal]) -> Result<()> {
    if ideals.iter().all(|i| i.parent == t.id()) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// Closes `slots` under composition and the chosen twists, starting from `queue`.
fn close(t: &TwoRing, slots: &mut [Subspace], mut queue: VecDeque<Morphism>, rule: ClosureRule) {
    let n = t.order();
    let all_basis: Vec<Morphism> = match rule {
        ClosureRule::LeftObjects => Vec::new(),
        ClosureRule::TwoSidedMorphisms => (0..n)
            .flat_map(|g| (0..n).flat_map(move |h| t.hom_basis(g, h)))
            .collect(),
    };
    let push = |slots: &mut [Subspace], queue: &mut VecDeque<Morphism>, m: Morphism| {
        let s = t.slot(m.src, m.tgt);
        if slots[s].insert(&m.val) {
            queue.push_back(m);
        }
    };
    while let Some(m) = queue.pop_front() {
        let mut next = Vec::new();
        for k in 0..n {
            for b in t.hom_basis(m.tgt, k) {
                next.push(t.compose(&b, &m).expect("composable"));
            }
            for b in t.hom_basis(k, m.src) {
                next.push(t.compose(&m, &b).expect("composable"));
            }
        }
        match rule {
            ClosureRule::LeftObjects => {
                for ell in 0..n {
                    next.push(t.twist(&m, ell, Side::Left));
                }
            }
            ClosureRule::TwoSidedMorphisms => {
                for b in &all_basis {
                    next.push(t.tensor(b, &m));
                    next.push(t.tensor(&m, b));
                }
            }
        }
        for x in next {
            push(slots, &mut queue, x);
        }
    }
}

/// The least homogeneous ideal containing `gens`.
pub fn ideal_generate(t: &TwoRing, gens: &[Morphism]) -> HomogeneousIdeal {
    ideal_generate_with(t, gens, ClosureRule::LeftObjects)
}

pub fn ideal_generate_with(t: &TwoRing, gens: &[Morphism], rule: ClosureRule) -> HomogeneousIdeal {
    let mut ideal = HomogeneousIdeal::zero(t);
    extend(t, &mut ideal, gens, rule);
    ideal
}

fn extend(t: &TwoRing, ideal: &mut HomogeneousIdeal, gens: &[Morphism], rule: ClosureRule) {
    let mut queue = VecDeque::new();
    for g in gens {
        let s = t.slot(g.src, g.tgt);
        if ideal.slots[s].insert(&g.val) {
            queue.push_back(g.clone());
        }
    }
    close(t, &mut ideal.slots, queue, rule);
}

/// `⟨I ∪ gens⟩`.
pub fn ideal_extend(t: &TwoRing, ideal: &HomogeneousIdeal, gens: &[Morphism]) -> HomogeneousIdeal {
    let mut out = ideal.clone();
    extend(t, &mut out, gens, ClosureRule::LeftObjects);
    out
}

/// `{ s (ℓ⊗r) u : ℓ object, u iso, s arbitrary }`, slot by slot, as explicit element sets.
pub fn principal_left_form(t: &TwoRing, r: &Morphism) -> Vec<BTreeSet<Vec<u32>>> {
    let n = t.order();
    let mut out = vec![BTreeSet::new(); n * n];
    for ell in 0..n {
        let tw = t.twist(r, ell, Side::Left);
        for g2 in 0..n {
            for u in t.isos(g2, tw.src) {
                let tu = t.compose(&tw, &u).expect("composable");
                for h2 in 0..n {
                    for s in t.hom_elements(tw.tgt, h2) {
                        out[t.slot(g2, h2)].insert(t.compose(&s, &tu).expect("composable").val);
                    }
                }
            }
        }
    }
    out
}

/// `{ v (r⊗k) t : k object, t arbitrary, v iso }`, slot by slot.
pub fn principal_right_form(t: &TwoRing, r: &Morphism) -> Vec<BTreeSet<Vec<u32>>> {
    let n = t.order();
    let mut out = vec![BTreeSet::new(); n * n];
    for k in 0..n {
        let tw = t.twist(r, k, Side::Right);
        for h2 in 0..n {
            for v in t.isos(tw.tgt, h2) {
                let vt = t.compose(&v, &tw).expect("composable");
                for g2 in 0..n {
                    for a in t.hom_elements(g2, tw.src) {
                        out[t.slot(g2, h2)].insert(t.compose(&vt, &a).expect("composable").val);
                    }
                }
            }
        }
    }
    out
}

/// Whether explicit element sets describe exactly the given ideal.
pub fn matches_element_sets(t: &TwoRing, ideal: &HomogeneousIdeal, sets: &[BTreeSet<Vec<u32>>]) -> bool {
    sets.iter().enumerate().all(|(s, set)| {
        let sub = &ideal.slots[s];
        set.len() == sub.cardinality() && set.iter().all(|v| sub.contains(v))
    }) && sets.len() == t.order() * t.order()
}

pub fn ideal_sum(t: &TwoRing, a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    check_parent(t, &[a, b])?;
    let slots = a.slots.iter().zip(&b.slots).map(|(x, y)| x.sum(y)).collect();
    Ok(HomogeneousIdeal { parent: t.id(), slots })
}

pub fn ideal_intersection(t: &TwoRing, a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    check_parent(t, &[a, b])?;
    let slots = a.slots.iter().zip(&b.slots).map(|(x, y)| x.intersect(y)).collect();
    Ok(HomogeneousIdeal { parent: t.id(), slots })
}

/// Finite sums of composites `s ∘ u` with `s ∈ a`, `u ∈ b`.
pub fn ideal_product_composites(t: &TwoRing, a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    check_parent(t, &[a, b])?;
    let n = t.order();
    let mut out = HomogeneousIdeal::zero(t);
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                for u in b.slot(t, g, h).basis() {
                    for s in a.slot(t, h, k).basis() {
                        out.slots[t.slot(g, k)].insert(&t.ring().mul(s, u));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `⟨ s ⊗ u : s ∈ a, u ∈ b ⟩`.
pub fn ideal_product_tensor(t: &TwoRing, a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    check_parent(t, &[a, b])?;
    let mut gens = Vec::new();
    let n = t.order();
    for s1 in 0..n * n {
        let (g1, h1) = t.slot_pair(s1);
        for s2 in 0..n * n {
            let (g2, h2) = t.slot_pair(s2);
            for x in a.slots[s1].basis() {
                for y in b.slots[s2].basis() {
                    let mx = Morphism { src: g1, tgt: h1, val: x.clone() };
                    let my = Morphism { src: g2, tgt: h2, val: y.clone() };
                    gens.push(t.tensor(&mx, &my));
                }
            }
        }
    }
    Ok(ideal_generate(t, &gens))
}

/// `IJ`, computed as composites.
pub fn ideal_product(t: &TwoRing, a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    ideal_product_composites(t, a, b)
}

/// `{ r : (ℓ⊗r) u s = 0 for some object ℓ and iso u }`.
pub fn annihilator_left(t: &TwoRing, s: &Morphism) -> Vec<BTreeSet<Vec<u32>>> {
    let n = t.order();
    let mut out = vec![BTreeSet::new(); n * n];
    for r in t.all_morphisms() {
        let hit = (0..n).any(|ell| {
            let tw = t.twist(&r, ell, Side::Left);
            t.isos(s.tgt, tw.src).iter().any(|u| {
                let x = t.compose_all(&[&tw, u, s]).expect("composable");
                t.is_zero_morphism(&x)
            })
        });
        if hit {
            out[t.slot(r.src, r.tgt)].insert(r.val);
        }
    }
    out
}

/// `{ r : s u (ℓ⊗r) = 0 for some object ℓ and iso u }`.
pub fn annihilator_right(t: &TwoRing, s: &Morphism) -> Vec<BTreeSet<Vec<u32>>> {
    let n = t.order();
    let mut out = vec![BTreeSet::new(); n * n];
    for r in t.all_morphisms() {
        let hit = (0..n).any(|ell| {
            let tw = t.twist(&r, ell, Side::Left);
            t.isos(tw.tgt, s.src).iter().any(|u| {
                let x = t.compose_all(&[s, u, &tw]).expect("composable");
                t.is_zero_morphism(&x)
            })
        });
        if hit {
            out[t.slot(r.src, r.tgt)].insert(r.val);
        }
    }
    out
}

/// The ideal generated by `{ r : r ∘ s = 0 }`.
pub fn annihilator_generated(t: &TwoRing, s: &Morphism) -> HomogeneousIdeal {
    let gens: Vec<Morphism> = (0..t.order())
        .flat_map(|k| t.hom_elements(s.tgt, k))
        .filter(|r| t.is_zero_morphism(&t.compose(r, s).expect("composable")))
        .collect();
    ideal_generate(t, &gens)
}

/// `Ann(s)` from its left description, checked to be an ideal.
pub fn annihilator(t: &TwoRing, s: &Morphism) -> Result<HomogeneousIdeal> {
    let sets = annihilator_left(t, s);
    let ideal = from_element_sets(t, &sets)?;
    if !is_ideal(t, &ideal) {
        return Err(Error::StructureCheck("annihilator is not an ideal".into()));
    }
    Ok(ideal)
}

/// Recognize explicit per-slot element sets as subgroups.
pub fn from_element_sets(t: &TwoRing, sets: &[BTreeSet<Vec<u32>>]) -> Result<HomogeneousIdeal> {
    let p = t.characteristic();
    let dim = t.ring().dim();
    let slots = sets
        .iter()
        .map(|set| {
            Subspace::from_element_set(p, dim, set)
                .ok_or_else(|| Error::StructureCheck("element set is not a subgroup".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomogeneousIdeal::from_slots(t, slots))
}

/// Every defining property: slots inside their hom-groups, two-sided
/// composition, tensoring with objects on both sides, and self-duality.
pub fn is_ideal(t: &TwoRing, ideal: &HomogeneousIdeal) -> bool {
    if ideal.parent != t.id() {
        return false;
    }
    let n = t.order();
    for s in 0..n * n {
        let (g, h) = t.slot_pair(s);
        for v in ideal.slots[s].basis() {
            if !t.ring().in_component(v, t.hom_degree(g, h)) {
                return false;
            }
            let m = Morphism { src: g, tgt: h, val: v.clone() };
            for k in 0..n {
                let left = t.hom_basis(h, k).into_iter().all(|b| ideal.contains(t, &t.compose(&b, &m).expect("c")));
                let right = t.hom_basis(k, g).into_iter().all(|b| ideal.contains(t, &t.compose(&m, &b).expect("c")));
                let twists = ideal.contains(t, &t.twist(&m, k, Side::Left)) && ideal.contains(t, &t.twist(&m, k, Side::Right));
                if !(left && right && twists) {
                    return false;
                }
            }
            if !ideal.contains(t, &t.dual(&m)) {
                return false;
            }
        }
    }
    true
}

/// Proper, and `s∘r ∈ I ⇒ s ∈ I or r ∈ I` over every composable pair.
pub fn is_prime(t: &TwoRing, ideal: &HomogeneousIdeal) -> bool {
    prime_witness(t, ideal).is_none() && ideal.is_proper(t)
}

/// A composable pair `(r, s)` outside `I` with `s∘r ∈ I`, if any.
pub fn prime_witness(t: &TwoRing, ideal: &HomogeneousIdeal) -> Option<(Morphism, Morphism)> {
    let n = t.order();
    let outside: Vec<Vec<Morphism>> = (0..n * n)
        .map(|s| {
            let (g, h) = t.slot_pair(s);
            t.hom_elements(g, h).into_iter().filter(|m| !ideal.contains(t, m)).collect()
        })
        .collect();
    for g in 0..n {
        for h in 0..n {
            for r in &outside[t.slot(g, h)] {
                for k in 0..n {
                    for s in &outside[t.slot(h, k)] {
                        if ideal.contains(t, &t.compose(s, r).expect("composable")) {
                            return Some((r.clone(), s.clone()));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Candidate generators: nonzero homogeneous values at `0 → d`, up to scalars.
fn candidates(t: &TwoRing) -> Vec<Morphism> {
    t.ring()
        .nonzero_homogeneous()
        .into_iter()
        .filter(|(_, v)| v.iter().find(|&&c| c != 0) == Some(&1))
        .map(|(d, val)| Morphism { src: 0, tgt: d, val })
        .collect()
}

/// All homogeneous ideals, in canonical order.
pub fn enumerate_ideals(t: &TwoRing) -> Vec<HomogeneousIdeal> {
    let cands = candidates(t);
    let zero = HomogeneousIdeal::zero(t);
    let mut seen: HashSet<HomogeneousIdeal> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(ideal) = queue.pop_front() {
        for c in cands.iter().filter(|c| !ideal.contains(t, c)) {
            let next = ideal_extend(t, &ideal, std::slice::from_ref(c));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    sort_ideals(t, seen.into_iter().collect())
}

pub fn sort_ideals(t: &TwoRing, mut ideals: Vec<HomogeneousIdeal>) -> Vec<HomogeneousIdeal> {
    ideals.sort_by_cached_key(|i| i.order_key(t));
    ideals
}

/// Proper ideals not strictly contained in another proper ideal.
pub fn maximal_ideals(t: &TwoRing, all: &[HomogeneousIdeal]) -> Vec<HomogeneousIdeal> {
    let proper: Vec<&HomogeneousIdeal> = all.iter().filter(|i| i.is_proper(t)).collect();
    proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j != *i && i.is_subideal_of(j)))
        .map(|i| (*i).clone())
        .collect()
}

/// `T/I` as the companion category of `R/J` with `J_d = I(0,d)`, plus the projection.
pub fn quotient(t: &TwoRing, ideal: &HomogeneousIdeal) -> Result<(TwoRing, RingHom)> {
    check_parent(t, &[ideal])?;
    let mut j = Subspace::zero(t.characteristic(), t.ring().dim());
    for d in t.group().elements() {
        j = j.sum(ideal.slot(t, 0, d));
    }
    let (q, hom) = t.ring().quotient(&j)?;
    Ok((TwoRing::new(q)?, hom))
}

/// `F^{-1}(K)` for a ring map `F` inducing a functor `src → tgt`.
pub fn preimage(src: &TwoRing, tgt: &TwoRing, f: &RingHom, k: &HomogeneousIdeal) -> HomogeneousIdeal {
    let n = src.order();
    let slots = (0..n * n)
        .map(|s| {
            let (g, h) = src.slot_pair(s);
            let (fg, fh) = (f.group_map[g], f.group_map[h]);
            let target = k.slot(tgt, fg, fh);
            let basis = src.ring().component_basis(src.hom_degree(g, h));
            let images: Vec<Vec<u32>> = basis.iter().map(|b| target.reduce(&f.apply(tgt.ring(), b))).collect();
            let ker = linalg::kernel(src.characteristic(), &images, tgt.ring().dim());
            let vecs: Vec<Vec<u32>> = ker
                .basis()
                .iter()
                .map(|c| {
                    let mut v = src.ring().zero();
                    for (b, &x) in basis.iter().zip(c) {
                        linalg::add_scaled(src.characteristic(), &mut v, b, x);
                    }
                    v
                })
                .collect();
            Subspace::span(src.characteristic(), src.ring().dim(), &vecs)
        })
        .collect();
    HomogeneousIdeal { parent: src.id(), slots }
}

/// `⟨F(I)⟩` in the target.
pub fn image(src: &TwoRing, tgt: &TwoRing, f: &RingHom, ideal: &HomogeneousIdeal) -> HomogeneousIdeal {
    let gens: Vec<Morphism> = ideal
        .members(src)
        .into_iter()
        .map(|m| Morphism { src: f.group_map[m.src], tgt: f.group_map[m.tgt], val: f.apply(tgt.ring(), &m.val) })
        .collect();
    ideal_generate(tgt, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::two_ring::companion_category;

    fn mor(t: &TwoRing, s: &str, g: usize, h: usize) -> Morphism {
        t.morphism(g, h, t.ring().parse_element(s).unwrap()).unwrap()
    }

    fn fixture_companions() -> Vec<(&'static str, TwoRing)> {
        fixtures::all()
            .into_iter()
            .map(|(n, r)| (n, companion_category(&r).unwrap()))
            .collect()
    }

    #[test]
    fn generation_examples() {
        let d2 = companion_category(&fixtures::d2()).unwrap();
        assert_eq!(ideal_generate(&d2, &[]), HomogeneousIdeal::zero(&d2));
        let x = ideal_generate(&d2, &[mor(&d2, "x", 0, 1)]);
        for m in d2.all_morphisms() {
            let is_x_multiple = m.val == vec![0, 0] || m.val == vec![0, 1];
            assert_eq!(x.contains(&d2, &m), is_x_multiple);
        }
        assert!(!x.contains(&d2, &d2.identity(0)));
        let u2 = companion_category(&fixtures::u2()).unwrap();
        assert_eq!(ideal_generate(&u2, &[mor(&u2, "x", 0, 1)]), HomogeneousIdeal::whole(&u2));
    }

    #[test]
    fn sums_and_products() {
        let p2 = companion_category(&fixtures::p2()).unwrap();
        let e1 = ideal_generate(&p2, &[mor(&p2, "e1", 0, 0)]);
        let e2 = ideal_generate(&p2, &[mor(&p2, "e2", 0, 0)]);
        assert_eq!(ideal_sum(&p2, &e1, &e2).unwrap(), HomogeneousIdeal::whole(&p2));
        assert_eq!(ideal_product(&p2, &e1, &e2).unwrap(), HomogeneousIdeal::zero(&p2));
        let d2 = companion_category(&fixtures::d2()).unwrap();
        let x = ideal_generate(&d2, &[mor(&d2, "x", 0, 1)]);
        assert_eq!(ideal_sum(&d2, &x, &x).unwrap(), x);
        assert_eq!(ideal_sum(&d2, &x, &HomogeneousIdeal::zero(&d2)).unwrap(), x);
        assert_eq!(ideal_product(&d2, &x, &x).unwrap(), HomogeneousIdeal::zero(&d2));
        assert_eq!(ideal_product(&d2, &x, &HomogeneousIdeal::whole(&d2)).unwrap(), x);
        assert_eq!(ideal_sum(&d2, &x, &e1), Err(Error::ParentMismatch));
    }

    #[test]
    fn annihilator_examples() {
        let u2 = companion_category(&fixtures::u2()).unwrap();
        assert_eq!(annihilator(&u2, &u2.identity(0)).unwrap(), HomogeneousIdeal::zero(&u2));
        let d2 = companion_category(&fixtures::d2()).unwrap();
        let x = mor(&d2, "x", 0, 1);
        assert_eq!(annihilator(&d2, &x).unwrap(), ideal_generate(&d2, std::slice::from_ref(&x)));
        assert_eq!(annihilator(&d2, &d2.zero_morphism(0, 1)).unwrap(), HomogeneousIdeal::whole(&d2));
    }

    #[test]
    fn annihilator_three_ways() {
        for (_, t) in fixture_companions() {
            for s in t.all_morphisms() {
                let left = annihilator(&t, &s).unwrap();
                let right = from_element_sets(&t, &annihilator_right(&t, &s)).unwrap();
                assert_eq!(left, right);
                assert_eq!(left, annihilator_generated(&t, &s));
            }
        }
    }

    #[test]
    fn primality_examples() {
        let d2 = companion_category(&fixtures::d2()).unwrap();
        assert!(!is_prime(&d2, &HomogeneousIdeal::whole(&d2)));
        assert!(is_prime(&d2, &ideal_generate(&d2, &[mor(&d2, "x", 0, 1)])));
        let zero = HomogeneousIdeal::zero(&d2);
        assert!(!is_prime(&d2, &zero));
        let (r, s) = prime_witness(&d2, &zero).unwrap();
        assert!(r.val == vec![0, 1] && s.val == vec![0, 1]);
    }

    #[test]
    fn enumeration_yields_ideals() {
        for (name, t) in fixture_companions() {
            let all = enumerate_ideals(&t);
            for i in &all {
                assert!(is_ideal(&t, i), "{name}");
                // Every ideal is generated by finitely many of its members.
                assert_eq!(&ideal_generate(&t, &i.generators(&t)), i);
            }
            assert!(all.contains(&HomogeneousIdeal::whole(&t)));
        }
        let d2 = companion_category(&fixtures::d2()).unwrap();
        assert_eq!(enumerate_ideals(&d2).len(), 3);
    }

    #[test]
    fn closure_rules_agree() {
        for (_, t) in fixture_companions() {
            for m in t.all_morphisms() {
                let weak = ideal_generate_with(&t, std::slice::from_ref(&m), ClosureRule::LeftObjects);
                let strong = ideal_generate_with(&t, std::slice::from_ref(&m), ClosureRule::TwoSidedMorphisms);
                assert_eq!(weak, strong);
            }
        }
    }

    #[test]
    fn principal_ideal_descriptions() {
        for (_, t) in fixture_companions() {
            for m in t.all_morphisms() {
                let ideal = ideal_generate(&t, std::slice::from_ref(&m));
                assert!(matches_element_sets(&t, &ideal, &principal_left_form(&t, &m)));
                assert!(matches_element_sets(&t, &ideal, &principal_right_form(&t, &m)));
            }
        }
    }

    #[test]
    fn maximal_ideals_are_prime() {
        for (_, t) in fixture_companions() {
            let all = enumerate_ideals(&t);
            for m in maximal_ideals(&t, &all) {
                assert!(is_prime(&t, &m));
            }
        }
    }

    #[test]
    fn primality_via_translated_pairs() {
        // Arbitrary pairs made composable by a right twist of the second factor.
        for (_, t) in fixture_companions() {
            let grp = t.group().clone();
            let ms = t.all_morphisms();
            for ideal in enumerate_ideals(&t) {
                let mut translated = ideal.is_proper(&t);
                'outer: for r in &ms {
                    for s in &ms {
                        let s2 = t.twist(s, grp.sub(r.tgt, s.src), Side::Right);
                        let prod = t.compose(&s2, r).unwrap();
                        if ideal.contains(&t, &prod) && !ideal.contains(&t, r) && !ideal.contains(&t, s) {
                            translated = false;
                            break 'outer;
                        }
                    }
                }
                assert_eq!(translated, is_prime(&t, &ideal));
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let d2 = companion_category(&fixtures::d2()).unwrap();
        let (q0, _) = quotient(&d2, &HomogeneousIdeal::zero(&d2)).unwrap();
        assert_eq!(q0.ring(), d2.ring());
        let x = ideal_generate(&d2, &[mor(&d2, "x", 0, 1)]);
        let (q, hom) = quotient(&d2, &x).unwrap();
        assert_eq!(q.ring().dim(), 1);
        assert_eq!(q.ring().component_dim(1), 0);
        hom.check(d2.ring(), q.ring()).unwrap();
        assert!(q.coherence_report().is_empty());
        let (qq, _) = quotient(&d2, &HomogeneousIdeal::whole(&d2)).unwrap();
        assert!(qq.is_zero());
    }

    #[test]
    fn quotient_ideals_correspond_to_ideals_above() {
        for (_, t) in fixture_companions() {
            let all = enumerate_ideals(&t);
            for i in &all {
                let (q, hom) = quotient(&t, i).unwrap();
                let above: HashSet<&HomogeneousIdeal> = all.iter().filter(|j| i.is_subideal_of(j)).collect();
                let pulled: HashSet<HomogeneousIdeal> =
                    enumerate_ideals(&q).iter().map(|k| preimage(&t, &q, &hom, k)).collect();
                assert_eq!(pulled.len(), enumerate_ideals(&q).len());
                assert_eq!(pulled.iter().collect::<HashSet<_>>(), above);
                for k in enumerate_ideals(&q) {
                    assert_eq!(image(&t, &q, &hom, &preimage(&t, &q, &hom, &k)), k);
                }
            }
        }
    }
}
