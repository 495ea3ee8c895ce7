//! Graded modules, bounded complexes of free modules, homological support,
//! and the comparison between primes and thick ideals.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grading::Degree;
use crate::ideals::{self, HomogeneousIdeal};
use crate::linalg::{self, Subspace};
use crate::ring::GradedRing;
use crate::spectrum::{self, PointSet, SpecSpace};
use crate::two_ring::{Morphism, TwoRing};

/// A subquotient `Z/B` of the free module `⊕ R e_i`, with `e_i` in degree `gens[i]`.
///
/// Elements of the free module are stored as concatenated coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub gens: Vec<Degree>,
    z: Subspace,
    b: Subspace,
}

fn free_dim(ring: &GradedRing, k: usize) -> usize {
    ring.dim() * k
}

/// `a · (Σ c_i e_i) = Σ (a c_i) e_i`.
fn act(ring: &GradedRing, a: &[u32], v: &[u32]) -> Vec<u32> {
    let n = ring.dim();
    v.chunks(n.max(1)).take(v.len() / n.max(1)).flat_map(|c| ring.mul(a, c)).collect()
}

/// The degree-`d` part of the free module on `gens`.
fn free_component(ring: &GradedRing, gens: &[Degree], d: Degree) -> Subspace {
    let n = ring.dim();
    let grp = ring.group();
    let mut vecs = Vec::new();
    for (i, &g) in gens.iter().enumerate() {
        for &k in ring.component(grp.sub(d, g)) {
            let mut v = vec![0; n * gens.len()];
            v[i * n + k] = 1;
            vecs.push(v);
        }
    }
    Subspace::span(ring.characteristic(), n * gens.len(), &vecs)
}

/// Closure of a set of vectors under the action of `R`.
fn submodule(ring: &GradedRing, k: usize, gens: &[Vec<u32>]) -> Subspace {
    let basis: Vec<Vec<u32>> = (0..ring.dim()).map(|i| ring.basis_vector(i)).collect();
    let vecs: Vec<Vec<u32>> = gens.iter().flat_map(|g| basis.iter().map(|b| act(ring, b, g))).collect();
    Subspace::span(ring.characteristic(), free_dim(ring, k), &vecs)
}

impl GradedModule {
    pub fn zero(ring: &GradedRing) -> Self {
        let z = Subspace::zero(ring.characteristic(), 0);
        GradedModule { gens: Vec::new(), z: z.clone(), b: z }
    }

    /// `⊕ R e_i / ⟨relations⟩`; relation `j` is `Σ_i a_ij e_i`, homogeneous of degree `deg_j`.
    pub fn from_presentation(ring: &GradedRing, gens: Vec<Degree>, relations: &[(Degree, Vec<Vec<u32>>)]) -> Result<Self> {
        let n = ring.dim();
        let grp = ring.group();
        let mut rels = Vec::new();
        for (deg, coeffs) in relations {
            if coeffs.len() != gens.len() {
                return Err(Error::DimensionMismatch { expected: gens.len(), found: coeffs.len() });
            }
            let mut v = Vec::with_capacity(n * gens.len());
            for (a, &g) in coeffs.iter().zip(&gens) {
                if a.len() != n || !ring.in_component(a, grp.sub(*deg, g)) {
                    return Err(Error::Precondition("relation entry has the wrong degree".into()));
                }
                v.extend_from_slice(a);
            }
            rels.push(v);
        }
        let b = submodule(ring, gens.len(), &rels);
        let z = Subspace::span(ring.characteristic(), n * gens.len(), &(0..n * gens.len()).map(|i| unit(n * gens.len(), i)).collect::<Vec<_>>());
        Ok(GradedModule { gens, z, b })
    }

    /// `R` with one generator in degree `g`, i.e. the twist `R(−g)`.
    pub fn free(ring: &GradedRing, g: Degree) -> Self {
        GradedModule::from_presentation(ring, vec![g], &[]).expect("free module")
    }

    pub fn is_zero(&self) -> bool {
        self.z.dim() == self.b.dim()
    }

    /// `dim_𝔽p M_d` for every degree.
    pub fn dims(&self, ring: &GradedRing) -> Vec<usize> {
        ring.group()
            .elements()
            .map(|d| {
                let f = free_component(ring, &self.gens, d);
                self.z.intersect(&f).dim() - self.b.intersect(&f).dim()
            })
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.z.dim() - self.b.dim()
    }

    /// Homogeneous `a` with `a·M = 0`, found by trying every homogeneous element.
    pub fn annihilator(&self, ring: &GradedRing) -> Subspace {
        let mut ann = Subspace::zero(ring.characteristic(), ring.dim());
        for d in ring.group().elements() {
            for a in ring.homogeneous_elements(d) {
                if self.z.basis().iter().all(|z| self.b.contains(&act(ring, &a, z))) {
                    ann.insert(&a);
                }
            }
        }
        ann
    }

    /// Nonzero homogeneous classes, one representative each.
    fn homogeneous_classes(&self, ring: &GradedRing) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for d in ring.group().elements() {
            let f = free_component(ring, &self.gens, d);
            let zd = self.z.intersect(&f);
            let mut seen = BTreeSet::new();
            for v in zd.elements() {
                let class = self.b.reduce(&v);
                if !linalg::is_zero(&class) && seen.insert(class) {
                    out.push(v);
                }
            }
        }
        out
    }
}

fn unit(len: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Ring-level homogeneous primes matching the 2-ring spectrum, by index.
pub fn ring_primes(t: &TwoRing, spec: &SpecSpace) -> Vec<Subspace> {
    spec.primes.iter().map(|p| spectrum::restrict_to_ring(t, p)).collect()
}

/// `V(Ann M)`.
pub fn module_supp(ring: &GradedRing, primes: &[Subspace], m: &GradedModule) -> PointSet {
    let ann = m.annihilator(ring);
    PointSet::from_indices((0..primes.len()).filter(|&i| ann.is_subspace_of(&primes[i])))
}

/// `{ p : M_p ≠ 0 }`: some nonzero homogeneous `m` survives every `s ∉ p`.
pub fn module_supp_local(ring: &GradedRing, primes: &[Subspace], m: &GradedModule) -> PointSet {
    let classes = m.homogeneous_classes(ring);
    let homogeneous = ring.nonzero_homogeneous();
    PointSet::from_indices((0..primes.len()).filter(|&i| {
        let outside: Vec<&Vec<u32>> = homogeneous.iter().map(|(_, v)| v).filter(|v| !primes[i].contains(v)).collect();
        classes.iter().any(|c| outside.iter().all(|s| !m.b.contains(&act(ring, s, c))))
    }))
}

/// A bounded complex of free modules `F^n = ⊕_i R(g_{n,i})` with
/// `R(g)_d = R_{g+d}`. The differential acts by right multiplication: entry
/// `(i, j)` of `d^n` is the value of a morphism `g_{n,i} → g_{n+1,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    pub lo: i32,
    pub terms: Vec<Vec<Degree>>,
    pub diffs: Vec<Vec<Vec<Vec<u32>>>>,
}

impl GradedComplex {
    pub fn new(ring: &GradedRing, lo: i32, terms: Vec<Vec<Degree>>, diffs: Vec<Vec<Vec<Vec<u32>>>>) -> Result<Self> {
        let c = GradedComplex { lo, terms, diffs };
        c.validate(ring)?;
        Ok(c)
    }

    pub fn zero() -> Self {
        GradedComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `R(g)` placed in cohomological degree `n`.
    pub fn free(g: Degree, n: i32) -> Self {
        GradedComplex { lo: n, terms: vec![vec![g]], diffs: Vec::new() }
    }

    /// `[R(g) → R(h)]` in degrees −1 and 0.
    pub fn cone(r: &Morphism) -> Self {
        GradedComplex { lo: -1, terms: vec![vec![r.src], vec![r.tgt]], diffs: vec![vec![vec![r.val.clone()]]] }
    }

    fn validate(&self, ring: &GradedRing) -> Result<()> {
        let fail = |m: &str| Err(Error::StructureCheck(m.into()));
        if self.diffs.len() != self.terms.len().saturating_sub(1) {
            return fail("wrong number of differentials");
        }
        let grp = ring.group();
        for (k, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if d.len() != src.len() || d.iter().any(|row| row.len() != tgt.len()) {
                return fail("differential has the wrong shape");
            }
            for (i, row) in d.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if !ring.in_component(e, grp.sub(tgt[j], src[i])) {
                        return fail("differential entry has the wrong degree");
                    }
                }
            }
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            let c = self.lo + k as i32;
            for v in basis_of(ring, self.terms[k].len()) {
                let dd = self.apply(ring, c + 1, &self.apply(ring, c, &v));
                if !linalg::is_zero(&dd) {
                    return fail("d∘d is not zero");
                }
            }
        }
        Ok(())
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, n: i32) -> &[Degree] {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[k as usize]
        }
    }

    /// `d^n(v)`.
    pub fn apply(&self, ring: &GradedRing, n: i32, v: &[u32]) -> Vec<u32> {
        let dim = ring.dim();
        let tgt = self.term(n + 1).len();
        let mut out = vec![0; dim * tgt];
        let k = n - self.lo;
        if k < 0 || k as usize >= self.diffs.len() {
            return out;
        }
        let d = &self.diffs[k as usize];
        for (i, row) in d.iter().enumerate() {
            let m = &v[i * dim..(i + 1) * dim];
            for (j, e) in row.iter().enumerate() {
                let prod = ring.mul(m, e);
                linalg::add_scaled(ring.characteristic(), &mut out[j * dim..(j + 1) * dim], &prod, 1);
            }
        }
        out
    }

    /// `H^n = ker d^n / im d^{n−1}`.
    pub fn homology(&self, ring: &GradedRing, n: i32) -> GradedModule {
        let p = ring.characteristic();
        let here = self.term(n);
        let gens: Vec<Degree> = here.iter().map(|&g| ring.group().neg(g)).collect();
        let ambient = free_dim(ring, here.len());
        let images: Vec<Vec<u32>> = basis_of(ring, here.len()).iter().map(|v| self.apply(ring, n, v)).collect();
        let z = linalg::kernel(p, &images, free_dim(ring, self.term(n + 1).len()));
        let below: Vec<Vec<u32>> = basis_of(ring, self.term(n - 1).len()).iter().map(|v| self.apply(ring, n - 1, v)).collect();
        let b = Subspace::span(p, ambient, &below);
        GradedModule { gens, z, b }
    }

    pub fn is_acyclic(&self, ring: &GradedRing) -> bool {
        (self.lo..=self.hi()).all(|n| self.homology(ring, n).is_zero())
    }

    /// `C[k]^n = C^{n+k}`, differential multiplied by `(−1)^k`.
    pub fn shift(&self, ring: &GradedRing, k: i32) -> Self {
        let c = ring.sign_scalar((k.rem_euclid(2)) as u8);
        GradedComplex {
            lo: self.lo - k,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| map_entries(d, |e| ring.scale(e, c))).collect(),
        }
    }

    /// `C ⊗ R(ℓ)`: every summand `R(g)` becomes `R(g+ℓ)`; entries are right twists and keep their values.
    pub fn twist(&self, ring: &GradedRing, ell: Degree) -> Self {
        let grp = ring.group();
        GradedComplex {
            lo: self.lo,
            terms: self.terms.iter().map(|t| t.iter().map(|&g| grp.add(g, ell)).collect()).collect(),
            diffs: self.diffs.clone(),
        }
    }

    /// `C ⊗ R(ℓ)[k]`.
    pub fn tensor_free(&self, ring: &GradedRing, ell: Degree, k: i32) -> Self {
        self.twist(ring, ell).shift(ring, k)
    }

    pub fn direct_sum(&self, ring: &GradedRing, other: &GradedComplex) -> Self {
        if self.terms.is_empty() {
            return other.clone();
        }
        if other.terms.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let zero = ring.zero();
        let terms: Vec<Vec<Degree>> =
            (lo..=hi).map(|n| self.term(n).iter().chain(other.term(n)).copied().collect()).collect();
        let diffs = (lo..hi)
            .map(|n| {
                let (a1, a2) = (self.term(n).len(), other.term(n).len());
                let (b1, b2) = (self.term(n + 1).len(), other.term(n + 1).len());
                let mut m = vec![vec![zero.clone(); b1 + b2]; a1 + a2];
                for i in 0..a1 {
                    for j in 0..b1 {
                        m[i][j] = self.entry(n, i, j);
                    }
                }
                for i in 0..a2 {
                    for j in 0..b2 {
                        m[a1 + i][b1 + j] = other.entry(n, i, j);
                    }
                }
                m
            })
            .collect();
        GradedComplex { lo, terms, diffs }
    }

    fn entry(&self, n: i32, i: usize, j: usize) -> Vec<u32> {
        let k = (n - self.lo) as usize;
        self.diffs[k][i][j].clone()
    }

    /// `(−1)^{ε(g_i,|a|)}·a` on the summand `R(g_i)`: a chain map `C → C(|a|)`.
    pub fn multiplication_map(&self, ring: &GradedRing, a: &[u32]) -> Option<ChainMap> {
        let deg = ring.degree_of(a)?;
        let maps = self
            .terms
            .iter()
            .map(|t| {
                (0..t.len())
                    .map(|i| {
                        (0..t.len())
                            .map(|j| if i == j { ring.signed(a, ring.eps(t[i], deg)) } else { ring.zero() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Some(ChainMap { source: self.clone(), target: self.twist(ring, deg), maps })
    }
}

fn map_entries(d: &[Vec<Vec<u32>>], f: impl Fn(&Vec<u32>) -> Vec<u32>) -> Vec<Vec<Vec<u32>>> {
    d.iter().map(|row| row.iter().map(&f).collect()).collect()
}

fn basis_of(ring: &GradedRing, k: usize) -> Vec<Vec<u32>> {
    let len = free_dim(ring, k);
    (0..len).map(|i| unit(len, i)).collect()
}

/// Degree-0 chain map between complexes with the same index range; `maps[k]`
/// acts on `source.terms[k]` by right multiplication.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: GradedComplex,
    pub target: GradedComplex,
    pub maps: Vec<Vec<Vec<Vec<u32>>>>,
}

impl ChainMap {
    fn apply(&self, ring: &GradedRing, n: i32, v: &[u32]) -> Vec<u32> {
        let k = (n - self.source.lo) as usize;
        let tmp = GradedComplex {
            lo: 0,
            terms: vec![self.source.terms[k].clone(), self.target.terms[k].clone()],
            diffs: vec![self.maps[k].clone()],
        };
        tmp.apply(ring, 0, v)
    }

    pub fn is_chain_map(&self, ring: &GradedRing) -> bool {
        let (s, t) = (&self.source, &self.target);
        if s.lo != t.lo || s.terms.len() != t.terms.len() {
            return false;
        }
        (s.lo..=s.hi()).all(|n| {
            basis_of(ring, s.term(n).len()).iter().all(|v| {
                let a = t.apply(ring, n, &self.apply(ring, n, v));
                let b = if n < s.hi() { self.apply(ring, n + 1, &s.apply(ring, n, v)) } else { a.clone() };
                a == b
            })
        })
    }

    /// `cone(f)^n = C^{n+1} ⊕ D^n` with `d = [[−d_C, 0], [f, d_D]]`.
    pub fn cone(&self, ring: &GradedRing) -> Result<GradedComplex> {
        let (c, d) = (&self.source, &self.target);
        let lo = c.lo - 1;
        let hi = d.hi();
        let zero = ring.zero();
        let neg = |e: &Vec<u32>| ring.scale(e, ring.sign_scalar(1));
        let terms: Vec<Vec<Degree>> = (lo..=hi).map(|n| c.term(n + 1).iter().chain(d.term(n)).copied().collect()).collect();
        let diffs = (lo..hi)
            .map(|n| {
                let (a1, a2) = (c.term(n + 1).len(), d.term(n).len());
                let (b1, b2) = (c.term(n + 2).len(), d.term(n + 1).len());
                let mut m = vec![vec![zero.clone(); b1 + b2]; a1 + a2];
                for i in 0..a1 {
                    for j in 0..b1 {
                        m[i][j] = neg(&c.entry(n + 1, i, j));
                    }
                    for j in 0..b2 {
                        m[i][b1 + j] = self.maps[(n + 1 - c.lo) as usize][i][j].clone();
                    }
                }
                for i in 0..a2 {
                    for j in 0..b2 {
                        m[a1 + i][b1 + j] = d.entry(n, i, j);
                    }
                }
                m
            })
            .collect();
        GradedComplex::new(ring, lo, terms, diffs)
    }
}

/// Spectrum data shared by the support computations.
#[derive(Clone, Debug)]
pub struct SupportContext {
    pub two_ring: TwoRing,
    pub spec: SpecSpace,
    pub primes: Vec<Subspace>,
}

impl SupportContext {
    pub fn new(t: &TwoRing) -> Self {
        let spec = spectrum::enumerate_primes(t);
        let primes = ring_primes(t, &spec);
        SupportContext { two_ring: t.clone(), spec, primes }
    }

    pub fn ring(&self) -> &GradedRing {
        self.two_ring.ring()
    }

    /// `∪_n supp H^n(C)`.
    pub fn supph(&self, c: &GradedComplex) -> PointSet {
        (c.lo..=c.hi()).fold(PointSet::empty(), |acc, n| {
            acc.union(module_supp(self.ring(), &self.primes, &c.homology(self.ring(), n)))
        })
    }

    /// Same union, computed with the localization oracle.
    pub fn supph_local(&self, c: &GradedComplex) -> PointSet {
        (c.lo..=c.hi()).fold(PointSet::empty(), |acc, n| {
            acc.union(module_supp_local(self.ring(), &self.primes, &c.homology(self.ring(), n)))
        })
    }

    pub fn sigma(&self, prime: usize) -> SigmaModel<'_> {
        SigmaModel { ctx: self, prime }
    }

    /// `{ r : cone(r) ∉ P }`, checked to be a prime ideal.
    pub fn rho(&self, model: &SigmaModel) -> Result<HomogeneousIdeal> {
        let t = &self.two_ring;
        let n = t.order();
        let mut sets = vec![BTreeSet::new(); n * n];
        for r in t.all_morphisms() {
            if !model.contains(&GradedComplex::cone(&r)) {
                sets[t.slot(r.src, r.tgt)].insert(r.val);
            }
        }
        let ideal = ideals::from_element_sets(t, &sets)?;
        if !ideals::is_ideal(t, &ideal) {
            return Err(Error::NotPrime("ρ(P) is not an ideal".into()));
        }
        if !ideals::is_prime(t, &ideal) {
            return Err(Error::NotPrime(format!("ρ(P) = {} is not prime", ideal.key(t))));
        }
        Ok(ideal)
    }

    /// `ρ(σ(p))` for every prime, as prime indices.
    pub fn rho_sigma(&self) -> Result<Vec<usize>> {
        (0..self.spec.len())
            .map(|i| {
                let q = self.rho(&self.sigma(i))?;
                self.spec.index_of(&q).ok_or_else(|| Error::NotPrime(q.key(&self.two_ring)))
            })
            .collect()
    }

    /// `supph cone(r) = V(⟨r⟩)` for all `r`, and separation of closed sets from points.
    pub fn basis_check(&self) -> Vec<String> {
        let t = &self.two_ring;
        let mut out = Vec::new();
        let ms = t.all_morphisms();
        let supports: Vec<PointSet> = ms.iter().map(|r| self.supph(&GradedComplex::cone(r))).collect();
        for (r, s) in ms.iter().zip(&supports) {
            if *s != self.spec.v_set(&ideals::ideal_generate(t, std::slice::from_ref(r))) {
                out.push(format!("supph cone({}) differs from V(⟨r⟩)", t.ring().format_element(&r.val)));
            }
        }
        for z in &self.spec.space.closed {
            for p in (0..self.spec.len()).filter(|&p| !z.contains(p)) {
                if !supports.iter().any(|s| z.is_subset(*s) && !s.contains(p)) {
                    out.push(format!("no cone separates {z:?} from prime {p}"));
                }
            }
        }
        out
    }

    /// Building blocks: cones of all morphisms and free modules in degrees −1..1.
    pub fn test_blocks(&self) -> Vec<GradedComplex> {
        let t = &self.two_ring;
        let mut out: Vec<GradedComplex> = t.all_morphisms().iter().map(GradedComplex::cone).collect();
        for g in 0..t.order() {
            for n in -1..=1 {
                out.push(GradedComplex::free(g, n));
            }
        }
        out.dedup();
        out
    }

    /// Thick, twist-closed ⊗-ideal behaviour of every `σ(p)` on sums of up to
    /// `max_summands` blocks; returns violations.
    pub fn thick_family_check(&self, blocks: &[GradedComplex], max_summands: usize) -> Vec<String> {
        let ring = self.ring();
        let t = &self.two_ring;
        let mut family: Vec<(GradedComplex, PointSet)> = Vec::new();
        let supp: Vec<PointSet> = blocks.iter().map(|b| self.supph(b)).collect();
        let mut combos: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..max_summands {
            let mut next = Vec::new();
            for c in &combos {
                let start = c.last().copied().unwrap_or(0);
                for i in start..blocks.len() {
                    let mut d = c.clone();
                    d.push(i);
                    next.push(d);
                }
            }
            for c in &next {
                let sum = c.iter().fold(GradedComplex::zero(), |acc, &i| acc.direct_sum(ring, &blocks[i]));
                let expected = c.iter().fold(PointSet::empty(), |acc, &i| acc.union(supp[i]));
                family.push((sum, expected));
            }
            combos = next;
        }
        let mut out = Vec::new();
        let homogeneous = ring.nonzero_homogeneous();
        for (e, expected) in &family {
            let s = self.supph(e);
            if s != *expected {
                out.push("support of a sum is not the union".into());
            }
            for k in [-1, 1] {
                if self.supph(&e.shift(ring, k)) != s {
                    out.push("support not shift invariant".into());
                }
            }
            for ell in 0..t.order() {
                if self.supph(&e.tensor_free(ring, ell, 1)) != s {
                    out.push("support not twist invariant".into());
                }
            }
        }
        // Two-out-of-three on the triangles E → E(|a|) → cone(a).
        for (e, _) in family.iter().filter(|(e, _)| e.terms.len() <= 3) {
            for (_, a) in &homogeneous {
                let f = e.multiplication_map(ring, a).expect("homogeneous");
                if !f.is_chain_map(ring) {
                    out.push("multiplication is not a chain map".into());
                    continue;
                }
                let c = match f.cone(ring) {
                    Ok(c) => c,
                    Err(err) => {
                        out.push(format!("cone construction failed: {err}"));
                        continue;
                    }
                };
                let (s1, s2, s3) = (self.supph(&f.source), self.supph(&f.target), self.supph(&c));
                for i in 0..self.spec.len() {
                    let inside = [!s1.contains(i), !s2.contains(i), !s3.contains(i)];
                    if inside.iter().filter(|&&b| b).count() == 2 {
                        out.push(format!("σ of prime {i} fails two-out-of-three"));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// `σ(p) = { E : p ∉ supph E }`.
#[derive(Clone, Copy, Debug)]
pub struct SigmaModel<'a> {
    ctx: &'a SupportContext,
    pub prime: usize,
}

impl SigmaModel<'_> {
    pub fn contains(&self, e: &GradedComplex) -> bool {
        !self.ctx.supph(e).contains(self.prime)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::two_ring::companion_category;

    fn ctx(r: GradedRing) -> SupportContext {
        SupportContext::new(&companion_category(&r).unwrap())
    }

    fn mor(t: &TwoRing, s: &str, g: usize, h: usize) -> Morphism {
        t.morphism(g, h, t.ring().parse_element(s).unwrap()).unwrap()
    }

    #[test]
    fn cone_of_x_homology() {
        let c = ctx(fixtures::d2());
        let ring = c.ring();
        let x = GradedComplex::cone(&mor(&c.two_ring, "x", 0, 1));
        let h0 = x.homology(ring, 0);
        let h1 = x.homology(ring, -1);
        assert_eq!(h0.dims(ring), vec![0, 1]);
        assert_eq!(h1.dims(ring), vec![0, 1]);
        assert!(GradedComplex::zero().homology(ring, 0).is_zero());
        assert!(GradedComplex::cone(&c.two_ring.identity(0)).is_acyclic(ring));
        assert_eq!(c.supph(&x), PointSet::singleton(0));
    }

    #[test]
    fn module_support_examples() {
        let c = ctx(fixtures::d2());
        let ring = c.ring();
        assert!(module_supp(ring, &c.primes, &GradedModule::zero(ring)).is_empty());
        assert_eq!(module_supp(ring, &c.primes, &GradedModule::free(ring, 0)), c.spec.all());
        let x = ring.parse_element("x").unwrap();
        let quot = GradedModule::from_presentation(ring, vec![0], &[(1, vec![x])]).unwrap();
        assert_eq!(quot.dims(ring), vec![1, 0]);
        assert_eq!(module_supp(ring, &c.primes, &quot), c.spec.all());
        assert_eq!(module_supp_local(ring, &c.primes, &quot), c.spec.all());
    }

    #[test]
    fn supports_of_cones_in_p2() {
        let c = ctx(fixtures::p2());
        let t = &c.two_ring;
        assert_eq!(c.spec.keys, vec!["(e1)", "(e2)"]);
        assert_eq!(c.supph(&GradedComplex::cone(&mor(t, "e1", 0, 0))), PointSet::singleton(0));
        assert_eq!(c.supph(&GradedComplex::cone(&mor(t, "e2", 0, 0))), PointSet::singleton(1));
        assert!(c.sigma(0).contains(&GradedComplex::cone(&mor(t, "e2", 0, 0))));
    }

    #[test]
    fn rho_examples() {
        let c = ctx(fixtures::d2());
        assert_eq!(c.rho(&c.sigma(0)).unwrap().key(&c.two_ring), "(x)");
        let c = ctx(fixtures::p2());
        assert_eq!(c.rho(&c.sigma(0)).unwrap().key(&c.two_ring), "(e1)");
        let c = ctx(fixtures::u2());
        assert_eq!(c.rho(&c.sigma(0)).unwrap(), HomogeneousIdeal::zero(&c.two_ring));
        assert!(!c.sigma(0).contains(&GradedComplex::cone(&c.two_ring.zero_morphism(0, 1))));
    }

    #[test]
    fn fixture_invariants() {
        for (name, r) in fixtures::all() {
            let c = ctx(r);
            assert_eq!(c.rho_sigma().unwrap(), (0..c.spec.len()).collect::<Vec<_>>(), "{name}");
            assert!(c.basis_check().is_empty(), "{name}");
            for m in c.two_ring.all_morphisms() {
                let cone = GradedComplex::cone(&m);
                let s = c.supph(&cone);
                assert_eq!(s.is_empty(), c.two_ring.is_invertible(&m));
                assert_eq!(s, c.supph_local(&cone));
                for ell in 0..c.two_ring.order() {
                    assert_eq!(c.supph(&cone.twist(c.ring(), ell)), s);
                }
            }
        }
    }

    #[test]
    fn thick_family() {
        for (name, r) in fixtures::all() {
            let c = ctx(r);
            let blocks = c.test_blocks();
            assert!(c.thick_family_check(&blocks, 2).is_empty(), "{name}");
        }
    }

    #[test]
    fn chain_map_cones() {
        use crate::fixtures::{Generator, Presentation};
        use crate::grading::{GradingGroup, SignForm};
        let group = GradingGroup::cyclic(2);
        let eps = SignForm::new(&group, vec![vec![1]]).unwrap();
        let odd = Generator { degree: 1, power: 2, constant: 0 };
        let ring = Presentation { p: 3, group, eps, generators: vec![odd.clone(), odd], killed: vec![] }.build().unwrap();
        let c = ctx(ring);
        let ring = c.ring();
        let y = ring.parse_element("y").unwrap();
        let e = GradedComplex::cone(&mor(&c.two_ring, "x", 0, 1)).direct_sum(ring, &GradedComplex::free(1, 0));
        let f = e.multiplication_map(ring, &y).unwrap();
        assert!(f.is_chain_map(ring));
        let cone = f.cone(ring).unwrap();
        assert_eq!(cone.lo, -2);
        let diag = |t: &Vec<Degree>| -> Vec<Vec<Vec<u32>>> {
            (0..t.len()).map(|i| (0..t.len()).map(|j| if i == j { y.clone() } else { ring.zero() }).collect()).collect()
        };
        let unsigned = ChainMap { maps: e.terms.iter().map(diag).collect(), ..f };
        assert!(!unsigned.is_chain_map(ring));
        assert!(unsigned.cone(ring).is_err());
    }

    #[test]
    fn malformed_complexes_rejected() {
        let ring = fixtures::d2();
        let x = ring.parse_element("x").unwrap();
        let bad = GradedComplex::new(&ring, 0, vec![vec![0], vec![0]], vec![vec![vec![x.clone()]]]);
        assert!(bad.is_err());
        let ok = GradedComplex::new(&ring, 0, vec![vec![0], vec![1], vec![0]], vec![vec![vec![x.clone()]], vec![vec![x]]]);
        assert!(ok.is_ok());
    }
}
