//! Zariski spectrum of a companion category.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{self, HomogeneousIdeal};
use crate::linalg::{Coordinatizer, Subspace};
use crate::ring::{GradedRing, RingHom};
use crate::two_ring::{Morphism, Side, TwoRing};

/// A subset of at most 64 points.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(pub u64);

impl PointSet {
    pub fn empty() -> Self {
        PointSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= 64, "too many points");
        PointSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        PointSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn union(self, o: Self) -> Self {
        PointSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        PointSet(self.0 & o.0)
    }

    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// A finite topological space given by its closed sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    pub points: usize,
    pub closed: BTreeSet<PointSet>,
}

impl FiniteSpace {
    /// Closes a family of subsets under finite unions and arbitrary intersections.
    pub fn generated_by(points: usize, family: impl IntoIterator<Item = PointSet>) -> Self {
        let full = PointSet::full(points);
        let mut closed: BTreeSet<PointSet> = BTreeSet::from([PointSet::empty(), full]);
        closed.extend(family);
        loop {
            let cur: Vec<PointSet> = closed.iter().copied().collect();
            let before = closed.len();
            for (i, a) in cur.iter().enumerate() {
                for b in &cur[i + 1..] {
                    closed.insert(a.union(*b));
                    closed.insert(a.intersection(*b));
                }
            }
            if closed.len() == before {
                return FiniteSpace { points, closed };
            }
        }
    }

    /// Intersections of members of `family`, with the empty intersection.
    pub fn intersections_of(points: usize, family: impl IntoIterator<Item = PointSet>) -> BTreeSet<PointSet> {
        let mut out = BTreeSet::from([PointSet::full(points)]);
        for f in family {
            let cur: Vec<PointSet> = out.iter().copied().collect();
            out.extend(cur.into_iter().map(|c| c.intersection(f)));
            out.insert(f);
        }
        out
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        self.closed
            .iter()
            .filter(|c| s.is_subset(**c))
            .fold(PointSet::full(self.points), |acc, c| acc.intersection(*c))
    }

    /// Problems with the axioms of a topology on closed sets.
    pub fn topology_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let full = PointSet::full(self.points);
        if !self.closed.contains(&PointSet::empty()) || !self.closed.contains(&full) {
            out.push("empty set or whole space is not closed".into());
        }
        for a in &self.closed {
            if !a.is_subset(full) {
                out.push(format!("closed set {a:?} has points outside the space"));
            }
            for b in &self.closed {
                if !self.closed.contains(&a.union(*b)) || !self.closed.contains(&a.intersection(*b)) {
                    out.push(format!("closed sets {a:?}, {b:?} not closed under union and intersection"));
                }
            }
        }
        out
    }

    /// Pairs of distinct points with equal closures.
    pub fn t0_violations(&self) -> Vec<(usize, usize)> {
        let cl: Vec<PointSet> = (0..self.points).map(|i| self.closure(PointSet::singleton(i))).collect();
        let mut out = Vec::new();
        for i in 0..self.points {
            for j in i + 1..self.points {
                if cl[i] == cl[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, z: PointSet) -> bool {
        if z.is_empty() || !self.closed.contains(&z) {
            return false;
        }
        let proper: Vec<PointSet> = self.closed.iter().copied().filter(|c| c.is_subset(z) && *c != z).collect();
        !proper.iter().any(|a| proper.iter().any(|b| a.union(*b) == z))
    }

    pub fn irreducible_closed_sets(&self) -> Vec<PointSet> {
        self.closed.iter().copied().filter(|z| self.is_irreducible(*z)).collect()
    }

    /// Points whose closure is `z`.
    pub fn generic_points(&self, z: PointSet) -> Vec<usize> {
        z.indices().into_iter().filter(|&i| self.closure(PointSet::singleton(i)) == z).collect()
    }

    /// T₀ plus unique generic points of irreducible closed sets.
    pub fn sobriety_violations(&self) -> Vec<String> {
        let mut out = self.topology_violations();
        for (i, j) in self.t0_violations() {
            out.push(format!("points {i} and {j} are topologically indistinguishable"));
        }
        for z in self.irreducible_closed_sets() {
            let g = self.generic_points(z);
            if g.len() != 1 {
                out.push(format!("irreducible closed set {z:?} has generic points {g:?}"));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SpecSpace {
    parent: u64,
    pub primes: Vec<HomogeneousIdeal>,
    pub keys: Vec<String>,
    pub space: FiniteSpace,
}

pub fn enumerate_primes(t: &TwoRing) -> SpecSpace {
    spec_from_ideals(t, &ideals::enumerate_ideals(t))
}

/// The spectrum, given the full ideal lattice.
pub fn spec_from_ideals(t: &TwoRing, all: &[HomogeneousIdeal]) -> SpecSpace {
    let primes: Vec<HomogeneousIdeal> = all.iter().filter(|i| ideals::is_prime(t, i)).cloned().collect();
    let primes = ideals::sort_ideals(t, primes);
    let keys = primes.iter().map(|p| p.key(t)).collect();
    let mut spec = SpecSpace { parent: t.id(), primes, keys, space: FiniteSpace { points: 0, closed: BTreeSet::new() } };
    let n = spec.primes.len();
    let basic: Vec<PointSet> = t.all_morphisms().iter().map(|r| spec.v_morphism(t, r)).collect();
    spec.space = FiniteSpace::generated_by(n, basic);
    spec
}

impl SpecSpace {
    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn index_of(&self, p: &HomogeneousIdeal) -> Option<usize> {
        self.primes.iter().position(|q| q == p)
    }

    /// `V(I) = { p : I ⊆ p }`.
    pub fn v_set(&self, ideal: &HomogeneousIdeal) -> PointSet {
        PointSet::from_indices((0..self.len()).filter(|&i| ideal.is_subideal_of(&self.primes[i])))
    }

    /// `V(⟨r⟩)`, by membership.
    pub fn v_morphism(&self, t: &TwoRing, r: &Morphism) -> PointSet {
        PointSet::from_indices((0..self.len()).filter(|&i| self.primes[i].contains(t, r)))
    }

    /// `D_r = { p : r ∉ p }`.
    pub fn d_set(&self, t: &TwoRing, r: &Morphism) -> PointSet {
        self.v_morphism(t, r).complement(self.len())
    }

    /// Strict inclusions `p_i ⊊ p_j`, i.e. `p_j` is a specialization of `p_i`.
    pub fn specialization(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.primes[i].is_subideal_of(&self.primes[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Pairs `(i, j)` with `p_i ⊊ p_j` and nothing strictly between.
    pub fn covering_relations(&self) -> Vec<(usize, usize)> {
        let spec = self.specialization();
        spec.iter()
            .copied()
            .filter(|&(i, j)| !(0..self.len()).any(|k| spec.contains(&(i, k)) && spec.contains(&(k, j))))
            .collect()
    }

    pub fn closed_sets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.space.closed.iter().map(|c| c.indices()).collect();
        out.sort();
        out
    }
}

/// One summand `s ∘ (ℓ ⊗ r_i) ∘ u` of a unit decomposition.
#[derive(Clone, Debug)]
pub struct CoverTerm {
    pub index: usize,
    pub ell: usize,
    pub u: Morphism,
    pub s: Morphism,
}

#[derive(Clone, Debug)]
pub struct SubcoverWitness {
    pub subcover: Vec<usize>,
    pub terms: Vec<CoverTerm>,
}

impl SubcoverWitness {
    /// Recomputes `Σ s (ℓ⊗r_i) u` and compares with `id_0`.
    pub fn check(&self, t: &TwoRing, family: &[Morphism]) -> bool {
        let zero = t.group().zero();
        let mut total = t.zero_morphism(zero, zero);
        for term in &self.terms {
            if !self.subcover.contains(&term.index) || !t.is_invertible(&term.u) {
                return false;
            }
            let tw = t.twist(&family[term.index], term.ell, Side::Left);
            let Ok(x) = t.compose_all(&[&term.s, &tw, &term.u]) else {
                return false;
            };
            if x.src != zero || x.tgt != zero {
                return false;
            }
            total = t.add(&total, &x).expect("same hom-group");
        }
        total == t.identity(zero)
    }
}

/// For a family whose basic opens cover the spectrum, a finite subcover and
/// an explicit decomposition of the identity. `None` if the family does not cover.
pub fn finite_subcover(t: &TwoRing, spec: &SpecSpace, family: &[Morphism]) -> Option<SubcoverWitness> {
    let all = spec.all();
    let opens: Vec<PointSet> = family.iter().map(|r| spec.d_set(t, r)).collect();
    let mut covered = PointSet::empty();
    let mut subcover = Vec::new();
    while covered != all {
        let (best, gain) = opens
            .iter()
            .enumerate()
            .map(|(i, o)| (i, o.union(covered).len() - covered.len()))
            .max_by_key(|&(i, g)| (g, std::cmp::Reverse(i)))?;
        if gain == 0 {
            return None;
        }
        covered = covered.union(opens[best]);
        subcover.push(best);
    }
    subcover.sort();
    let zero = t.group().zero();
    let mut values = Vec::new();
    let mut data = Vec::new();
    for &i in &subcover {
        for ell in 0..t.order() {
            let tw = t.twist(&family[i], ell, Side::Left);
            for u in t.isos(zero, tw.src) {
                for s in t.hom_basis(tw.tgt, zero) {
                    values.push(t.compose_all(&[&s, &tw, &u]).expect("composable").val);
                    data.push(CoverTerm { index: i, ell, u: u.clone(), s });
                }
            }
        }
    }
    let coords = Coordinatizer::new(t.characteristic(), t.ring().dim(), &values).coordinates(&t.identity(zero).val)?;
    let terms = data
        .into_iter()
        .zip(coords)
        .filter(|(_, c)| *c != 0)
        .map(|(mut term, c)| {
            term.s = t.scale(&term.s, c);
            term
        })
        .collect();
    Some(SubcoverWitness { subcover, terms })
}

/// Full spectral-space check of a spectrum.
pub fn verify_spectral(t: &TwoRing, spec: &SpecSpace) -> Vec<String> {
    let mut out = spec.space.sobriety_violations();
    let ms = t.all_morphisms();
    for r in &ms {
        for s in &ms {
            let shift = t.group().sub(s.tgt, r.src);
            let rt = t.twist(r, shift, Side::Right);
            let comp = t.compose(&rt, s).expect("composable");
            if spec.d_set(t, r).intersection(spec.d_set(t, s)) != spec.d_set(t, &comp) {
                out.push(format!("basic open intersection fails for {r:?}, {s:?}"));
            }
        }
    }
    let non_invertible: Vec<Morphism> = ms.iter().filter(|m| !t.is_invertible(m)).cloned().collect();
    for family in [&ms, &non_invertible] {
        let covers = family.iter().fold(PointSet::empty(), |a, r| a.union(spec.d_set(t, r))) == spec.all();
        match finite_subcover(t, spec, family) {
            Some(w) if covers && w.check(t, family) => {}
            None if !covers => {}
            _ => out.push("finite subcover extraction failed".into()),
        }
    }
    let basic: Vec<PointSet> = ms.iter().map(|r| spec.d_set(t, r)).collect();
    let opens: BTreeSet<PointSet> = spec.space.closed.iter().map(|c| c.complement(spec.len())).collect();
    for o in &opens {
        let union = basic.iter().filter(|b| b.is_subset(*o)).fold(PointSet::empty(), |a, b| a.union(*b));
        if union != *o {
            out.push(format!("open set {o:?} is not a union of basic opens"));
        }
    }
    out
}

/// The map `Spec(tgt) → Spec(src)`, `q ↦ F⁻¹q`, as prime indices.
pub fn spec_of_morphism(
    src: &TwoRing,
    src_spec: &SpecSpace,
    tgt: &TwoRing,
    tgt_spec: &SpecSpace,
    f: &RingHom,
) -> Result<Vec<usize>> {
    f.check(src.ring(), tgt.ring())?;
    let map = tgt_spec
        .primes
        .iter()
        .map(|q| {
            let p = ideals::preimage(src, tgt, f, q);
            src_spec
                .index_of(&p)
                .ok_or_else(|| Error::StructureCheck(format!("preimage {} is not prime", p.key(src))))
        })
        .collect::<Result<Vec<_>>>()?;
    for r in src.all_morphisms() {
        let fr = Morphism { src: f.group_map[r.src], tgt: f.group_map[r.tgt], val: f.apply(tgt.ring(), &r.val) };
        let d_fr = tgt_spec.d_set(tgt, &fr);
        let d_r = src_spec.d_set(src, &r);
        let pulled = PointSet::from_indices((0..tgt_spec.len()).filter(|&i| d_r.contains(map[i])));
        if pulled != d_fr {
            return Err(Error::StructureCheck("preimage of a basic open is not basic".into()));
        }
    }
    Ok(map)
}

/// Homogeneous two-sided ideals of a graded ring, found by closure at ring level.
pub fn ring_homogeneous_ideals(r: &GradedRing) -> Vec<Subspace> {
    let p = r.characteristic();
    let basis: Vec<Vec<u32>> = (0..r.dim()).map(|i| r.basis_vector(i)).collect();
    let close = |j: &mut Subspace, v: &[u32]| {
        let mut queue = VecDeque::new();
        if j.insert(v) {
            queue.push_back(v.to_vec());
        }
        while let Some(w) = queue.pop_front() {
            for b in &basis {
                for x in [r.mul(b, &w), r.mul(&w, b)] {
                    if j.insert(&x) {
                        queue.push_back(x);
                    }
                }
            }
        }
    };
    let cands: Vec<Vec<u32>> = r
        .nonzero_homogeneous()
        .into_iter()
        .map(|(_, v)| v)
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let zero = Subspace::zero(p, r.dim());
    let mut seen = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(j) = queue.pop_front() {
        for c in cands.iter().filter(|c| !j.contains(c)) {
            let mut next = j.clone();
            close(&mut next, c);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort_by_key(|j| (j.dim(), j.basis().to_vec()));
    out
}

/// Proper, and `ab ∈ J ⇒ a ∈ J or b ∈ J` for homogeneous `a`, `b`.
pub fn ring_is_prime(r: &GradedRing, j: &Subspace) -> bool {
    if r.is_zero_ring() || j.contains(&r.one()) {
        return false;
    }
    let outside: Vec<Vec<u32>> = r.nonzero_homogeneous().into_iter().map(|(_, v)| v).filter(|v| !j.contains(v)).collect();
    outside.iter().all(|a| outside.iter().all(|b| !j.contains(&r.mul(a, b))))
}

pub fn ring_homogeneous_primes(r: &GradedRing) -> Vec<Subspace> {
    ring_homogeneous_ideals(r).into_iter().filter(|j| ring_is_prime(r, j)).collect()
}

/// Ring ideal ↦ the 2-ring ideal generated by its elements as morphisms out of `0`.
pub fn close_ring_ideal(t: &TwoRing, j: &Subspace) -> HomogeneousIdeal {
    let gens: Vec<Morphism> = t
        .group()
        .elements()
        .flat_map(|d| {
            let comp = Subspace::span(t.characteristic(), t.ring().dim(), &t.ring().component_basis(d));
            j.intersect(&comp).basis().iter().map(|v| Morphism { src: 0, tgt: d, val: v.clone() }).collect::<Vec<_>>()
        })
        .collect();
    ideals::ideal_generate(t, &gens)
}

/// 2-ring ideal ↦ `⊕_d I(0,d)`.
pub fn restrict_to_ring(t: &TwoRing, ideal: &HomogeneousIdeal) -> Subspace {
    t.group()
        .elements()
        .fold(Subspace::zero(t.characteristic(), t.ring().dim()), |acc, d| acc.sum(ideal.slot(t, 0, d)))
}

#[derive(Clone, Debug)]
pub struct SpecCorrespondence {
    pub ring_primes: Vec<Subspace>,
    /// `ring_primes[i]` corresponds to `spec.primes[to_two_ring[i]]`.
    pub to_two_ring: Vec<usize>,
}

/// Compares ring-level primes with 2-ring primes and checks that the two
/// maps are mutually inverse homeomorphisms.
pub fn ring_spec_correspondence(t: &TwoRing, spec: &SpecSpace) -> Result<SpecCorrespondence> {
    let fail = |m: &str| Err(Error::StructureCheck(m.into()));
    let ring_ideals = ring_homogeneous_ideals(t.ring());
    let ring_primes: Vec<Subspace> = ring_ideals.iter().filter(|j| ring_is_prime(t.ring(), j)).cloned().collect();
    let mut to_two_ring = Vec::new();
    for j in &ring_primes {
        let closed = close_ring_ideal(t, j);
        let Some(i) = spec.index_of(&closed) else {
            return fail("closure of a ring prime is not a prime");
        };
        if restrict_to_ring(t, &closed) != *j {
            return fail("restriction does not invert closure");
        }
        to_two_ring.push(i);
    }
    let hit: BTreeSet<usize> = to_two_ring.iter().copied().collect();
    if hit.len() != spec.len() || to_two_ring.len() != spec.len() {
        return fail("prime correspondence is not bijective");
    }
    for p in &spec.primes {
        if close_ring_ideal(t, &restrict_to_ring(t, p)) != *p {
            return fail("closure does not invert restriction");
        }
    }
    for j in &ring_ideals {
        let ring_v = PointSet::from_indices(
            ring_primes.iter().enumerate().filter(|(_, q)| j.is_subspace_of(q)).map(|(i, _)| to_two_ring[i]),
        );
        if ring_v != spec.v_set(&close_ring_ideal(t, j)) {
            return fail("closed sets do not correspond");
        }
    }
    Ok(SpecCorrespondence { ring_primes, to_two_ring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::two_ring::companion_category;

    fn spec_of(r: &GradedRing) -> (TwoRing, SpecSpace) {
        let t = companion_category(r).unwrap();
        let s = enumerate_primes(&t);
        (t, s)
    }

    fn mor(t: &TwoRing, s: &str, g: usize, h: usize) -> Morphism {
        t.morphism(g, h, t.ring().parse_element(s).unwrap()).unwrap()
    }

    #[test]
    fn fixture_spectra() {
        let sizes: Vec<(&str, usize)> = fixtures::all().iter().map(|(n, r)| (*n, spec_of(r).1.len())).collect();
        assert_eq!(sizes, vec![("Z0", 0), ("D2", 1), ("P2", 2), ("U2", 1), ("E3", 1)]);
        let (_, d2) = spec_of(&fixtures::d2());
        assert_eq!(d2.keys, vec!["(x)"]);
        let (_, p2) = spec_of(&fixtures::p2());
        assert_eq!(p2.keys, vec!["(e1)", "(e2)"]);
        assert!(p2.specialization().is_empty());
        assert_eq!(p2.closed_sets(), vec![vec![], vec![0], vec![0, 1], vec![1]]);
        let (_, u2) = spec_of(&fixtures::u2());
        assert_eq!(u2.keys, vec!["(0)"]);
    }

    #[test]
    fn v_and_d_examples() {
        for (_, r) in fixtures::all() {
            let (t, s) = spec_of(&r);
            assert_eq!(s.v_set(&HomogeneousIdeal::zero(&t)), s.all());
            assert_eq!(s.v_set(&HomogeneousIdeal::whole(&t)), PointSet::empty());
        }
        let (t, s) = spec_of(&fixtures::p2());
        assert_eq!(s.d_set(&t, &mor(&t, "e1", 0, 0)), PointSet::singleton(1));
        let (t, s) = spec_of(&fixtures::d2());
        assert_eq!(s.d_set(&t, &mor(&t, "x", 0, 1)), PointSet::empty());
    }

    #[test]
    fn closed_sets_match_all_v_sets() {
        for (_, r) in fixtures::all() {
            let (t, s) = spec_of(&r);
            let vs: BTreeSet<PointSet> = ideals::enumerate_ideals(&t).iter().map(|i| s.v_set(i)).collect();
            assert_eq!(vs, s.space.closed);
            let basic = t.all_morphisms().iter().map(|m| s.v_morphism(&t, m)).collect::<Vec<_>>();
            assert_eq!(FiniteSpace::intersections_of(s.len(), basic), s.space.closed);
        }
    }

    #[test]
    fn fixtures_are_spectral() {
        for (name, r) in fixtures::all() {
            let (t, s) = spec_of(&r);
            assert_eq!(verify_spectral(&t, &s), Vec::<String>::new(), "{name}");
        }
    }

    #[test]
    fn doctored_space_is_reported() {
        let indiscrete = FiniteSpace::generated_by(2, []);
        let v = indiscrete.sobriety_violations();
        assert!(v.iter().any(|m| m.contains("indistinguishable")));
        assert!(v.iter().any(|m| m.contains("generic points [0, 1]")));
        let sierpinski = FiniteSpace::generated_by(2, [PointSet::singleton(1)]);
        assert!(sierpinski.sobriety_violations().is_empty());
    }

    #[test]
    fn subcover_witness_in_p2() {
        let (t, s) = spec_of(&fixtures::p2());
        let family = vec![mor(&t, "e1", 0, 0), mor(&t, "e2", 0, 0)];
        let w = finite_subcover(&t, &s, &family).unwrap();
        assert_eq!(w.subcover, vec![0, 1]);
        assert!(w.check(&t, &family));
        assert!(finite_subcover(&t, &s, &family[..1]).is_none());
    }

    #[test]
    fn morphism_examples() {
        let (t, s) = spec_of(&fixtures::d2());
        let id = RingHom::identity(t.ring());
        assert_eq!(spec_of_morphism(&t, &s, &t, &s, &id).unwrap(), vec![0]);
        let x = ideals::ideal_generate(&t, &[mor(&t, "x", 0, 1)]);
        let (q, hom) = ideals::quotient(&t, &x).unwrap();
        let qs = enumerate_primes(&q);
        assert_eq!(qs.len(), 1);
        assert_eq!(spec_of_morphism(&t, &s, &q, &qs, &hom).unwrap(), vec![0]);

        let (p, ps) = spec_of(&fixtures::p2());
        let e2 = ideals::ideal_generate(&p, &[mor(&p, "e2", 0, 0)]);
        let (f, hom) = ideals::quotient(&p, &e2).unwrap();
        let fs = enumerate_primes(&f);
        let map = spec_of_morphism(&p, &ps, &f, &fs, &hom).unwrap();
        assert_eq!(ps.keys[map[0]], "(e2)");
    }

    #[test]
    fn correspondence_on_fixtures() {
        for (_, r) in fixtures::all() {
            let (t, s) = spec_of(&r);
            let c = ring_spec_correspondence(&t, &s).unwrap();
            assert_eq!(c.ring_primes.len(), s.len());
        }
        let d2 = fixtures::d2();
        let primes = ring_homogeneous_primes(&d2);
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].basis(), &[vec![0, 1]]);
        assert_eq!(ring_homogeneous_primes(&fixtures::u2()), vec![Subspace::zero(2, 2)]);
        assert!(ring_homogeneous_primes(&fixtures::z0()).is_empty());
    }

    #[test]
    fn point_sets() {
        let a = PointSet::from_indices([0, 2]);
        assert_eq!(a.complement(3), PointSet::singleton(1));
        assert_eq!(a.len(), 2);
        assert!(PointSet::singleton(2).is_subset(a));
        assert_eq!(format!("{a:?}"), "{0, 2}");
    }
}
