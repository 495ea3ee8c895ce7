//! Multiplicative systems, calculus of fractions and localized 2-rings.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{self, HomogeneousIdeal};
use crate::linalg::Subspace;
use crate::ring::{BasisElement, GradedRing, RingHom};
use crate::spectrum::{self, PointSet, SpecSpace};
use crate::two_ring::{Morphism, Side, TwoRing};

/// A homogeneous multiplicative system, stored slot by slot.
#[derive(Clone, PartialEq, Eq)]
pub struct MultSystem {
    parent: u64,
    sets: Vec<BTreeSet<Vec<u32>>>,
}

impl fmt::Debug for MultSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultSystem").field("sizes", &self.sets.iter().map(|s| s.len()).collect::<Vec<_>>()).finish()
    }
}

impl MultSystem {
    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn contains(&self, t: &TwoRing, m: &Morphism) -> bool {
        self.sets[t.slot(m.src, m.tgt)].contains(&m.val)
    }

    pub fn members_in(&self, t: &TwoRing, g: usize, h: usize) -> Vec<Morphism> {
        self.sets[t.slot(g, h)].iter().map(|v| Morphism { src: g, tgt: h, val: v.clone() }).collect()
    }

    pub fn members(&self, t: &TwoRing) -> Vec<Morphism> {
        (0..self.sets.len())
            .flat_map(|s| {
                let (g, h) = t.slot_pair(s);
                self.members_in(t, g, h)
            })
            .collect()
    }

    pub fn contains_zero(&self, t: &TwoRing) -> bool {
        self.contains(t, &t.zero_morphism(0, 0))
    }

    /// Disjoint from the ideal.
    pub fn avoids(&self, t: &TwoRing, ideal: &HomogeneousIdeal) -> bool {
        self.members(t).iter().all(|m| !ideal.contains(t, m))
    }
}

/// The least multiplicative system containing `gens`.
pub fn mult_closure(t: &TwoRing, gens: &[Morphism]) -> MultSystem {
    let n = t.order();
    let mut sys = MultSystem { parent: t.id(), sets: vec![BTreeSet::new(); n * n] };
    let mut queue = VecDeque::new();
    let isos = (0..n).flat_map(|g| (0..n).flat_map(move |h| t.isos(g, h)));
    for m in isos.chain(gens.iter().cloned()) {
        if sys.sets[t.slot(m.src, m.tgt)].insert(m.val.clone()) {
            queue.push_back(m);
        }
    }
    while let Some(m) = queue.pop_front() {
        let mut next = Vec::new();
        for k in 0..n {
            next.push(t.twist(&m, k, Side::Left));
            next.push(t.twist(&m, k, Side::Right));
            for a in sys.members_in(t, m.tgt, k) {
                next.push(t.compose(&a, &m).expect("composable"));
            }
            for a in sys.members_in(t, k, m.src) {
                next.push(t.compose(&m, &a).expect("composable"));
            }
        }
        for x in next {
            if sys.sets[t.slot(x.src, x.tgt)].insert(x.val.clone()) {
                queue.push_back(x);
            }
        }
    }
    sys
}

/// `S_r`.
pub fn system_of(t: &TwoRing, r: &Morphism) -> MultSystem {
    mult_closure(t, std::slice::from_ref(r))
}

/// `S_p`, the complement of a prime; checked to be multiplicative.
pub fn prime_complement(t: &TwoRing, p: &HomogeneousIdeal) -> Result<MultSystem> {
    let n = t.order();
    let sets = (0..n * n)
        .map(|s| {
            let (g, h) = t.slot_pair(s);
            t.hom_elements(g, h).into_iter().filter(|m| !p.contains(t, m)).map(|m| m.val).collect()
        })
        .collect();
    let sys = MultSystem { parent: t.id(), sets };
    if !is_multiplicative(t, &sys) {
        return Err(Error::StructureCheck(format!("complement of {} is not multiplicative", p.key(t))));
    }
    Ok(sys)
}

/// Contains all isomorphisms, closed under composites and twists.
pub fn is_multiplicative(t: &TwoRing, sys: &MultSystem) -> bool {
    let n = t.order();
    let members = sys.members(t);
    let isos_in = (0..n).all(|g| (0..n).all(|h| t.isos(g, h).iter().all(|u| sys.contains(t, u))));
    isos_in
        && members.iter().all(|m| {
            (0..n).all(|k| {
                sys.contains(t, &t.twist(m, k, Side::Left))
                    && sys.contains(t, &t.twist(m, k, Side::Right))
                    && sys.members_in(t, m.tgt, k).iter().all(|a| sys.contains(t, &t.compose(a, m).expect("c")))
            })
        })
}

/// `s′ ∘ r = r′ ∘ s` with `s′ ∈ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreSquare {
    pub s_prime: Morphism,
    pub r_prime: Morphism,
}

fn require_in(t: &TwoRing, sys: &MultSystem, s: &Morphism) -> Result<()> {
    if sys.contains(t, s) {
        Ok(())
    } else {
        Err(Error::Precondition("denominator is not in the multiplicative system".into()))
    }
}

fn invert(t: &TwoRing, m: &Morphism) -> Result<Morphism> {
    t.inverse(m).ok_or_else(|| Error::StructureCheck("structure map is not invertible".into()))
}

/// Completes `r: g→h`, `s: g→ℓ` to a square ending at `h ⊗ g^∨ ⊗ ℓ`,
/// built from the dual of `r` and the evaluation maps.
pub fn ore_complete(t: &TwoRing, sys: &MultSystem, r: &Morphism, s: &Morphism) -> Result<OreSquare> {
    if r.src != s.src {
        return Err(Error::Precondition("Ore completion needs a common source".into()));
    }
    require_in(t, sys, s)?;
    let grp = t.group();
    let (g, h, ell) = (r.src, r.tgt, s.tgt);
    let (gv, hv) = (grp.neg(g), grp.neg(h));
    let lambda_inv = |x| t.identity(x);
    // ℓ → 1ℓ → h h^∨ ℓ → h g^∨ ℓ
    let eps_hv_l = t.twist(&t.evaluation(hv), ell, Side::Right);
    let h_rdual_l = t.twist(&t.twist(&t.dual(r), h, Side::Left), ell, Side::Right);
    let r_prime = t.compose_all(&[&h_rdual_l, &invert(t, &eps_hv_l)?, &lambda_inv(ell)])?;
    // h → 1h → h h^∨ h → h1 → h g^∨ g → h g^∨ ℓ
    let eps_hv_h = t.twist(&t.evaluation(hv), h, Side::Right);
    let h_eps_h = t.twist(&t.evaluation(h), h, Side::Left);
    let h_eps_g = t.twist(&t.evaluation(g), h, Side::Left);
    let hgv_s = t.tensor(&t.identity(grp.add(h, gv)), s);
    let s_prime = t.compose_all(&[&hgv_s, &invert(t, &h_eps_g)?, &h_eps_h, &invert(t, &eps_hv_h)?, &lambda_inv(h)])?;
    let sq = OreSquare { s_prime, r_prime };
    check_ore(t, sys, r, s, &sq)?;
    Ok(sq)
}

fn check_ore(t: &TwoRing, sys: &MultSystem, r: &Morphism, s: &Morphism, sq: &OreSquare) -> Result<()> {
    let lhs = t.compose(&sq.s_prime, r)?;
    let rhs = t.compose(&sq.r_prime, s)?;
    if lhs != rhs || !sys.contains(t, &sq.s_prime) {
        return Err(Error::StructureCheck("Ore square does not commute".into()));
    }
    Ok(())
}

/// Any Ore square for `(r, s)`, by exhaustive search over all targets.
pub fn ore_search(t: &TwoRing, sys: &MultSystem, r: &Morphism, s: &Morphism) -> Option<OreSquare> {
    for m in 0..t.order() {
        for sp in sys.members_in(t, r.tgt, m) {
            let lhs = t.compose(&sp, r).ok()?;
            for rp in t.hom_elements(s.tgt, m) {
                if t.compose(&rp, s).ok()? == lhs {
                    return Some(OreSquare { s_prime: sp, r_prime: rp });
                }
            }
        }
    }
    None
}

/// Right Ore completion: for `r: x→z`, `s: y→z` with `s ∈ S`, finds
/// `s′: w→x ∈ S` and `r′: w→y` with `r s′ = s r′`, through duals.
pub fn right_ore_complete(t: &TwoRing, sys: &MultSystem, r: &Morphism, s: &Morphism) -> Result<OreSquare> {
    if r.tgt != s.tgt {
        return Err(Error::Precondition("right Ore completion needs a common target".into()));
    }
    require_in(t, sys, s)?;
    let sq = ore_complete(t, sys, &t.dual(r), &t.dual(s))?;
    let s_prime = t.dual(&sq.s_prime);
    let mut r_prime = t.dual(&sq.r_prime);
    // r^∨∨ = ±r; correct by the two double-dual signs.
    let sign = |m: &Morphism| t.dual_sign(m.src, m.tgt) * t.dual_sign(t.dual_object(m.tgt), t.dual_object(m.src));
    r_prime = t.scale(&r_prime, sign(r) * sign(s) % t.characteristic().max(1));
    let out = OreSquare { s_prime, r_prime };
    if t.compose(r, &out.s_prime)? != t.compose(s, &out.r_prime)? || !sys.contains(t, &out.s_prime) {
        return Err(Error::StructureCheck("right Ore square does not commute".into()));
    }
    Ok(out)
}

/// For `r: g→h`, `s: h→ℓ ∈ S` with `s r = 0`, an `s′ ∈ S` with `r s′ = 0`,
/// obtained by untwisting the pseudo-commutation diagram.
pub fn cancel_left(t: &TwoRing, sys: &MultSystem, r: &Morphism, s: &Morphism) -> Result<Morphism> {
    require_in(t, sys, s)?;
    if !t.is_zero_morphism(&t.compose(s, r)?) {
        return Err(Error::Precondition("composite is not zero".into()));
    }
    let grp = t.group();
    let w = t.pseudo_commute(r, s)?;
    let m = grp.sub(s.tgt, r.tgt);
    let su = t.compose(&w.s_prime, &w.u)?;
    let eps_m_g = t.twist(&t.evaluation(m), r.src, Side::Right);
    let out = t.compose_all(&[&t.identity(r.src), &eps_m_g, &t.twist(&su, grp.neg(m), Side::Left)])?;
    if !sys.contains(t, &out) || !t.is_zero_morphism(&t.compose(r, &out)?) {
        return Err(Error::StructureCheck("cancellation witness fails".into()));
    }
    Ok(out)
}

/// For `r: g→h`, `s: ℓ→g ∈ S` with `r s = 0`, an `s′ ∈ S` with `s′ r = 0`.
pub fn cancel_right(t: &TwoRing, sys: &MultSystem, r: &Morphism, s: &Morphism) -> Result<Morphism> {
    require_in(t, sys, s)?;
    if !t.is_zero_morphism(&t.compose(r, s)?) {
        return Err(Error::Precondition("composite is not zero".into()));
    }
    let u = cancel_left(t, sys, &t.dual(r), &t.dual(s))?;
    let out = t.dual(&u);
    if !sys.contains(t, &out) || !t.is_zero_morphism(&t.compose(&out, r)?) {
        return Err(Error::StructureCheck("dual cancellation witness fails".into()));
    }
    Ok(out)
}

/// `s⁻¹ r`, a morphism `r.src → s.src` with `r.tgt = s.tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftFraction {
    pub r: Morphism,
    pub s: Morphism,
}

impl LeftFraction {
    pub fn new(t: &TwoRing, sys: &MultSystem, r: Morphism, s: Morphism) -> Result<Self> {
        if r.tgt != s.tgt {
            return Err(Error::EndpointMismatch("numerator and denominator need a common target".into()));
        }
        require_in(t, sys, &s)?;
        Ok(LeftFraction { r, s })
    }

    /// `id⁻¹ r`.
    pub fn of(t: &TwoRing, r: &Morphism) -> Self {
        LeftFraction { r: r.clone(), s: t.identity(r.tgt) }
    }

    pub fn source(&self) -> usize {
        self.r.src
    }

    pub fn target(&self) -> usize {
        self.s.src
    }

    pub fn format(&self, ring: &GradedRing) -> String {
        format!("({})^-1({})", ring.format_element(&self.s.val), ring.format_element(&self.r.val))
    }
}

fn same_endpoints(a: &LeftFraction, b: &LeftFraction) -> Result<()> {
    if a.source() != b.source() || a.target() != b.target() {
        return Err(Error::EndpointMismatch("fractions have different endpoints".into()));
    }
    Ok(())
}

/// Equality by exhaustive search for a common amplification
/// `t₁s₁ = t₂s₂ ∈ S`, `t₁r₁ = t₂r₂`.
pub fn fraction_eq_exhaustive(t: &TwoRing, sys: &MultSystem, a: &LeftFraction, b: &LeftFraction) -> Result<bool> {
    same_endpoints(a, b)?;
    for w in 0..t.order() {
        let t2s: Vec<Morphism> = t.hom_elements(b.s.tgt, w);
        for t1 in t.hom_elements(a.s.tgt, w) {
            let d = t.compose(&t1, &a.s)?;
            if !sys.contains(t, &d) {
                continue;
            }
            let n1 = t.compose(&t1, &a.r)?;
            for t2 in &t2s {
                if t.compose(t2, &b.s)? == d && t.compose(t2, &b.r)? == n1 {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Equality through a common denominator: after an Ore completion,
/// `d⁻¹a = d⁻¹b` iff some `u ∈ S` has `u(a − b) = 0`.
pub fn fraction_eq(t: &TwoRing, sys: &MultSystem, a: &LeftFraction, b: &LeftFraction) -> Result<bool> {
    same_endpoints(a, b)?;
    let sq = ore_complete(t, sys, &a.s, &b.s)?;
    let na = t.compose(&sq.s_prime, &a.r)?;
    let nb = t.compose(&sq.r_prime, &b.r)?;
    let diff = t.add(&na, &t.neg(&nb))?;
    if t.is_zero_morphism(&diff) {
        return Ok(true);
    }
    Ok((0..t.order()).any(|w| {
        sys.members_in(t, diff.tgt, w)
            .iter()
            .any(|u| t.is_zero_morphism(&t.compose(u, &diff).expect("composable")))
    }))
}

type OreFn<'a> = dyn Fn(&Morphism, &Morphism) -> Result<OreSquare> + 'a;

/// `(s⁻¹r)(s₁⁻¹r₁) = (s̃ s)⁻¹(r̃ r₁)` where `s̃ r = r̃ s₁`.
pub fn fraction_compose(t: &TwoRing, sys: &MultSystem, f2: &LeftFraction, f1: &LeftFraction) -> Result<LeftFraction> {
    fraction_compose_with(t, f2, f1, &|r, s| ore_complete(t, sys, r, s))
}

pub fn fraction_compose_with(t: &TwoRing, f2: &LeftFraction, f1: &LeftFraction, ore: &OreFn) -> Result<LeftFraction> {
    if f1.target() != f2.source() {
        return Err(Error::EndpointMismatch("fractions are not composable".into()));
    }
    let sq = ore(&f2.r, &f1.s)?;
    Ok(LeftFraction { r: t.compose(&sq.r_prime, &f1.r)?, s: t.compose(&sq.s_prime, &f2.s)? })
}

/// `(s̃₁ s₁)⁻¹(s̃₁ r₁ + s̃₂ r₂)` where `s̃₁ s₁ = s̃₂ s₂`.
pub fn fraction_add(t: &TwoRing, sys: &MultSystem, a: &LeftFraction, b: &LeftFraction) -> Result<LeftFraction> {
    fraction_add_with(t, a, b, &|r, s| ore_complete(t, sys, r, s))
}

pub fn fraction_add_with(t: &TwoRing, a: &LeftFraction, b: &LeftFraction, ore: &OreFn) -> Result<LeftFraction> {
    same_endpoints(a, b)?;
    let sq = ore(&a.s, &b.s)?;
    let r = t.add(&t.compose(&sq.s_prime, &a.r)?, &t.compose(&sq.r_prime, &b.r)?)?;
    Ok(LeftFraction { r, s: t.compose(&sq.s_prime, &a.s)? })
}

pub fn fraction_scale(t: &TwoRing, a: &LeftFraction, c: u32) -> LeftFraction {
    LeftFraction { r: t.scale(&a.r, c), s: a.s.clone() }
}

/// `(s₁⊗s₂)⁻¹(r₁⊗r₂)`.
pub fn fraction_tensor(t: &TwoRing, a: &LeftFraction, b: &LeftFraction) -> LeftFraction {
    LeftFraction { r: t.tensor(&a.r, &b.r), s: t.tensor(&a.s, &b.s) }
}

/// Every fraction `x → y`, least denominators first.
pub fn all_fractions(t: &TwoRing, sys: &MultSystem, x: usize, y: usize) -> Vec<LeftFraction> {
    let mut out = Vec::new();
    for z in 0..t.order() {
        for s in sys.members_in(t, y, z) {
            for r in t.hom_elements(x, z) {
                out.push(LeftFraction { r, s: s.clone() });
            }
        }
    }
    out.sort_by_cached_key(|f| fraction_order(t, f));
    out
}

fn fraction_order(t: &TwoRing, f: &LeftFraction) -> (usize, Vec<u32>, Vec<u32>) {
    (t.hom_degree(f.s.src, f.s.tgt), f.s.val.clone(), f.r.val.clone())
}

/// One equivalence class of fractions `0 → d`.
#[derive(Clone, Debug)]
struct FractionClass {
    rep: LeftFraction,
    coords: Vec<u32>,
}

/// `S⁻¹T` realized as the companion category of a ring `R′` with `R′_d` the
/// fraction classes `0 → d`.
#[derive(Clone, Debug)]
pub struct Localization {
    pub two_ring: TwoRing,
    pub loc: RingHom,
    /// Representative fraction `0 → d` of each basis element of `R′`.
    pub basis_reps: Vec<LeftFraction>,
    classes: Vec<Vec<FractionClass>>,
    /// Class index of every fraction `0 → d`, per degree.
    index: Vec<HashMap<LeftFraction, usize>>,
    offsets: Vec<usize>,
}

impl Localization {
    pub fn ring(&self) -> &GradedRing {
        self.two_ring.ring()
    }

    /// Class of a fraction `0 → d`, as a vector of `R′`.
    fn class_vector(&self, t: &TwoRing, sys: &MultSystem, f: &LeftFraction) -> Result<Vec<u32>> {
        let d = f.target();
        if f.source() == 0 {
            if let Some(&i) = self.index[d].get(f) {
                return Ok(self.embed(d, &self.classes[d][i].coords));
            }
        }
        for c in &self.classes[d] {
            if fraction_eq(t, sys, &c.rep, f)? {
                return Ok(self.embed(d, &c.coords));
            }
        }
        Err(Error::StructureCheck("fraction has no class".into()))
    }

    fn embed(&self, d: usize, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.offsets[self.offsets.len() - 1]];
        v[self.offsets[d]..self.offsets[d] + coords.len()].copy_from_slice(coords);
        v
    }

    /// `Ψ(f) = f ⊗ id_{−x}` as a morphism of the companion category of `R′`.
    pub fn psi(&self, t: &TwoRing, sys: &MultSystem, f: &LeftFraction) -> Result<Morphism> {
        let x = f.source();
        let untwisted = fraction_tensor(t, f, &LeftFraction::of(t, &t.identity(t.group().neg(x))));
        let val = self.class_vector(t, sys, &untwisted)?;
        Ok(Morphism { src: x, tgt: f.target(), val })
    }

    /// A fraction representing a morphism of the localization.
    pub fn lift(&self, t: &TwoRing, m: &Morphism) -> Result<LeftFraction> {
        let d = t.group().sub(m.tgt, m.src);
        let start = self.offsets[d];
        let len = self.offsets[d + 1] - start;
        let coords = &m.val[start..start + len];
        let class = self.classes[d]
            .iter()
            .find(|c| c.coords == coords)
            .ok_or_else(|| Error::Precondition("not a morphism of the localization".into()))?;
        Ok(fraction_tensor(t, &class.rep, &LeftFraction::of(t, &t.identity(m.src))))
    }

    /// `loc(r)` as a morphism of the localization.
    pub fn loc_morphism(&self, r: &Morphism) -> Morphism {
        Morphism { src: r.src, tgt: r.tgt, val: self.loc.apply(self.ring(), &r.val) }
    }

    /// Number of fraction classes in each degree.
    pub fn class_counts(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

fn frac_name(t: &TwoRing, f: &LeftFraction) -> String {
    let wrap = |s: String| if s.contains('+') { format!("[{s}]") } else { s };
    let r = wrap(t.ring().format_element(&f.r.val));
    if f.s == t.identity(f.s.src) {
        r
    } else {
        format!("{r}/{}", wrap(t.ring().format_element(&f.s.val)))
    }
}

/// Builds `S⁻¹T` by materializing fraction classes.
pub fn localize(t: &TwoRing, sys: &MultSystem) -> Result<Localization> {
    if sys.parent != t.id() {
        return Err(Error::ParentMismatch);
    }
    let p = t.characteristic();
    let grp = t.group().clone();
    let n = t.order();
    let mut classes: Vec<Vec<FractionClass>> = Vec::with_capacity(n);
    let mut index: Vec<HashMap<LeftFraction, usize>> = Vec::with_capacity(n);
    let mut basis_local: Vec<Vec<LeftFraction>> = Vec::with_capacity(n);
    for d in 0..n {
        let mut reps: Vec<LeftFraction> = Vec::new();
        let mut of: HashMap<LeftFraction, usize> = HashMap::new();
        for f in all_fractions(t, sys, 0, d) {
            let mut found = None;
            for (i, c) in reps.iter().enumerate() {
                if fraction_eq(t, sys, c, &f)? {
                    found = Some(i);
                    break;
                }
            }
            let i = found.unwrap_or_else(|| {
                reps.push(f.clone());
                reps.len() - 1
            });
            of.insert(f, i);
        }
        let find = |f: &LeftFraction| -> Result<usize> {
            if let Some(&i) = of.get(f) {
                return Ok(i);
            }
            for (i, c) in reps.iter().enumerate() {
                if fraction_eq(t, sys, c, f)? {
                    return Ok(i);
                }
            }
            Err(Error::StructureCheck("fraction has no class".into()))
        };
        // Greedy basis: span[i] = coordinates of class i once reached.
        let zero = LeftFraction { r: t.zero_morphism(0, d), s: t.identity(d) };
        let mut span: HashMap<usize, Vec<u32>> = HashMap::from([(find(&zero)?, Vec::new())]);
        let mut basis: Vec<LeftFraction> = Vec::new();
        for i in 0..reps.len() {
            if span.contains_key(&i) {
                continue;
            }
            let k = basis.len();
            let b = reps[i].clone();
            let mut next = HashMap::new();
            for (&j, coords) in &span {
                for c in 0..p {
                    let f = fraction_add(t, sys, &reps[j], &fraction_scale(t, &b, c))?;
                    let mut v = coords.clone();
                    v.push(c);
                    next.insert(find(&f)?, v);
                }
            }
            basis.push(b);
            span = next;
            debug_assert!(span.values().all(|v| v.len() == k + 1));
        }
        if span.len() != reps.len() {
            return Err(Error::StructureCheck(format!("fraction classes in degree {d} are not a vector space")));
        }
        let dim = basis.len();
        let cls: Vec<FractionClass> = reps
            .into_iter()
            .enumerate()
            .map(|(i, rep)| {
                let mut coords = span[&i].clone();
                coords.resize(dim, 0);
                FractionClass { rep, coords }
            })
            .collect();
        let mut order: Vec<usize> = (0..cls.len()).collect();
        order.sort_by_cached_key(|&i| fraction_order(t, &cls[i].rep));
        let mut position = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let cls: Vec<FractionClass> = order.iter().map(|&i| cls[i].clone()).collect();
        index.push(of.into_iter().map(|(f, i)| (f, position[i])).collect());
        classes.push(cls);
        basis_local.push(basis);
    }
    let mut offsets = vec![0];
    for b in &basis_local {
        offsets.push(offsets.last().unwrap() + b.len());
    }
    let basis_reps: Vec<LeftFraction> = basis_local.iter().flatten().cloned().collect();
    let names: Vec<BasisElement> = basis_reps
        .iter()
        .map(|f| BasisElement { name: frac_name(t, f), degree: f.target() })
        .collect();
    let names = dedupe_names(names);
    let dim = basis_reps.len();
    // Provisional structure: classes and coordinates are all that class lookup needs.
    let mut partial = Localization {
        two_ring: t.clone(),
        loc: RingHom::identity(t.ring()),
        basis_reps: basis_reps.clone(),
        classes,
        index,
        offsets,
    };
    let mut mult = vec![vec![vec![0; dim]; dim]; dim];
    for (i, a) in basis_reps.iter().enumerate() {
        for (j, b) in basis_reps.iter().enumerate() {
            let d2 = b.target();
            let a_twisted = fraction_tensor(t, a, &LeftFraction::of(t, &t.identity(d2)));
            let prod = fraction_compose(t, sys, &a_twisted, b)?;
            mult[i][j] = partial.class_vector(t, sys, &prod)?;
        }
    }
    let ring = GradedRing::new(p, grp.clone(), t.ring().sign_form().clone(), names, mult)?;
    let two_ring = TwoRing::new(ring)?;
    let images: Vec<Vec<u32>> = (0..t.ring().dim())
        .map(|i| {
            let d = t.ring().basis()[i].degree;
            let r = Morphism { src: 0, tgt: d, val: t.ring().basis_vector(i) };
            partial.class_vector(t, sys, &LeftFraction::of(t, &r))
        })
        .collect::<Result<_>>()?;
    let loc = RingHom::new(t.ring(), two_ring.ring(), grp.elements().collect(), images);
    loc.check(t.ring(), two_ring.ring())?;
    partial.two_ring = two_ring;
    partial.loc = loc;
    Ok(partial)
}

fn dedupe_names(mut names: Vec<BasisElement>) -> Vec<BasisElement> {
    let mut seen: HashSet<String> = HashSet::new();
    for b in &mut names {
        let base = b.name.clone();
        let mut k = 1;
        while !seen.insert(b.name.clone()) {
            k += 1;
            b.name = format!("{base}#{k}");
        }
    }
    names
}

/// Checks that `Ψ` is a bijection on every hom-set preserving composition and tensor.
pub fn verify_localization(t: &TwoRing, sys: &MultSystem, l: &Localization) -> Result<()> {
    let fail = |m: String| Err(Error::StructureCheck(m));
    let lt = &l.two_ring;
    let n = t.order();
    let mut reps: HashMap<(usize, usize), Vec<(LeftFraction, Morphism)>> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            let mut seen: HashMap<Morphism, LeftFraction> = HashMap::new();
            for f in all_fractions(t, sys, x, y) {
                let m = l.psi(t, sys, &f)?;
                if let Some(g) = seen.get(&m) {
                    if !fraction_eq(t, sys, g, &f)? {
                        return fail(format!("Ψ identifies unequal fractions {x}→{y}"));
                    }
                } else {
                    seen.insert(m, f);
                }
            }
            if seen.len() != lt.hom_elements(x, y).len() {
                return fail(format!("Ψ is not surjective on Hom({x},{y})"));
            }
            reps.insert((x, y), seen.into_iter().map(|(m, f)| (f, m)).collect());
        }
    }
    for x in 0..n {
        for y in 0..n {
            for (f, mf) in &reps[&(x, y)] {
                for z in 0..n {
                    for (g, mg) in &reps[&(y, z)] {
                        let gf = fraction_compose(t, sys, g, f)?;
                        if l.psi(t, sys, &gf)? != lt.compose(mg, mf)? {
                            return fail("Ψ does not preserve composition".into());
                        }
                    }
                }
                for x2 in 0..n {
                    for y2 in 0..n {
                        for (g, mg) in &reps[&(x2, y2)] {
                            if l.psi(t, sys, &fraction_tensor(t, f, g))? != lt.tensor(mf, mg) {
                                return fail("Ψ does not preserve tensor".into());
                            }
                        }
                    }
                }
            }
        }
    }
    for r in t.all_morphisms() {
        if l.psi(t, sys, &LeftFraction::of(t, &r))? != l.loc_morphism(&r) {
            return fail("loc disagrees with Ψ".into());
        }
    }
    for s in sys.members(t) {
        if !lt.is_invertible(&l.loc_morphism(&s)) {
            return fail("a member of S is not inverted".into());
        }
    }
    Ok(())
}

/// `S⁻¹I = { [s⁻¹r] : r ∈ I }`, checked to be an ideal.
pub fn localize_ideal(t: &TwoRing, sys: &MultSystem, l: &Localization, ideal: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    let lt = &l.two_ring;
    let n = t.order();
    let mut sets = vec![BTreeSet::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let nums: Vec<Morphism> = ideal.slot(t, x, z).elements().into_iter().map(|val| Morphism { src: x, tgt: z, val }).collect();
                for s in sys.members_in(t, y, z) {
                    for r in &nums {
                        let m = l.psi(t, sys, &LeftFraction { r: r.clone(), s: s.clone() })?;
                        sets[lt.slot(x, y)].insert(m.val);
                    }
                }
            }
        }
    }
    let out = ideals::from_element_sets(lt, &sets)?;
    if !ideals::is_ideal(lt, &out) {
        return Err(Error::StructureCheck("localized ideal is not an ideal".into()));
    }
    Ok(out)
}

/// `loc⁻¹ J`.
pub fn delocalize_ideal(t: &TwoRing, l: &Localization, j: &HomogeneousIdeal) -> HomogeneousIdeal {
    ideals::preimage(t, &l.two_ring, &l.loc, j)
}

/// The verified homeomorphism between `Spec S⁻¹T` and `{p : p ∩ S = ∅}`.
#[derive(Clone, Debug)]
pub struct SpecLocalization {
    pub local_spec: SpecSpace,
    /// Indices of primes of `T` avoiding `S`.
    pub avoiding: Vec<usize>,
    /// `S⁻¹ p` as an index into `local_spec`, aligned with `avoiding`.
    pub forward: Vec<usize>,
    /// `loc⁻¹ q` as an index into the spectrum of `T`, for each local prime.
    pub backward: Vec<usize>,
}

pub fn spec_localization(t: &TwoRing, spec: &SpecSpace, sys: &MultSystem, l: &Localization) -> Result<SpecLocalization> {
    let fail = |m: &str| Err(Error::StructureCheck(m.into()));
    let lt = &l.two_ring;
    let local_ideals = ideals::enumerate_ideals(lt);
    let local_spec = spectrum::spec_from_ideals(lt, &local_ideals);
    for j in &local_ideals {
        if localize_ideal(t, sys, l, &delocalize_ideal(t, l, j))? != *j {
            return fail("S⁻¹ does not invert loc⁻¹ on ideals");
        }
    }
    let avoiding: Vec<usize> = (0..spec.len()).filter(|&i| sys.avoids(t, &spec.primes[i])).collect();
    let mut forward = Vec::new();
    for &i in &avoiding {
        let q = localize_ideal(t, sys, l, &spec.primes[i])?;
        let Some(k) = local_spec.index_of(&q) else {
            return fail("S⁻¹p is not prime");
        };
        if delocalize_ideal(t, l, &q) != spec.primes[i] {
            return fail("loc⁻¹ S⁻¹ p ≠ p");
        }
        forward.push(k);
    }
    let mut backward = Vec::new();
    for q in &local_spec.primes {
        let p = delocalize_ideal(t, l, q);
        let Some(i) = spec.index_of(&p) else {
            return fail("loc⁻¹q is not prime");
        };
        if !avoiding.contains(&i) {
            return fail("loc⁻¹q meets S");
        }
        backward.push(i);
    }
    if forward.len() != local_spec.len() || forward.iter().collect::<HashSet<_>>().len() != forward.len() {
        return fail("S⁻¹ is not a bijection onto the local spectrum");
    }
    for (a, &i) in avoiding.iter().enumerate() {
        if backward[forward[a]] != i {
            return fail("maps are not mutually inverse");
        }
    }
    // Basic opens: S⁻¹p ∈ V(⟨s⁻¹r⟩) iff p ∈ V(⟨r⟩).
    for m in lt.all_morphisms() {
        let f = l.lift(t, &m)?;
        let v_local = local_spec.v_morphism(lt, &m);
        let v_num = spec.v_morphism(t, &f.r);
        for (a, &i) in avoiding.iter().enumerate() {
            if v_local.contains(forward[a]) != v_num.contains(i) {
                return fail("basic closed sets do not correspond");
            }
        }
    }
    Ok(SpecLocalization { local_spec, avoiding, forward, backward })
}

/// The image of `S` in `T/I`, closed up.
pub fn quotient_system(t: &TwoRing, sys: &MultSystem, q: &TwoRing, proj: &RingHom) -> MultSystem {
    let gens: Vec<Morphism> = sys
        .members(t)
        .into_iter()
        .map(|m| Morphism { src: m.src, tgt: m.tgt, val: proj.apply(q.ring(), &m.val) })
        .collect();
    mult_closure(q, &gens)
}

/// The comparison `S⁻¹T / S⁻¹I → (S/I)⁻¹(T/I)`, checked to be an isomorphism.
pub fn quotient_localize_commute(t: &TwoRing, ideal: &HomogeneousIdeal, sys: &MultSystem) -> Result<RingHom> {
    quotient_localize_commute_with(t, &localize(t, sys)?, ideal, sys)
}

/// As [`quotient_localize_commute`], reusing the localization `l = S⁻¹T`.
pub fn quotient_localize_commute_with(t: &TwoRing, l: &Localization, ideal: &HomogeneousIdeal, sys: &MultSystem) -> Result<RingHom> {
    let fail = |m: &str| Err(Error::StructureCheck(m.into()));
    let si = localize_ideal(t, sys, l, ideal)?;
    let (a, _) = ideals::quotient(&l.two_ring, &si)?;
    let (q, proj) = ideals::quotient(t, ideal)?;
    let qsys = quotient_system(t, sys, &q, &proj);
    let lb = localize(&q, &qsys)?;
    let j = spectrum::restrict_to_ring(&l.two_ring, &si);
    let keep: Vec<usize> = (0..l.ring().dim()).filter(|i| !j.pivots().contains(i)).collect();
    let push = |m: &Morphism| Morphism { src: m.src, tgt: m.tgt, val: proj.apply(q.ring(), &m.val) };
    let images = keep
        .iter()
        .map(|&i| {
            let f = &l.basis_reps[i];
            lb.class_vector(&q, &qsys, &LeftFraction { r: push(&f.r), s: push(&f.s) })
        })
        .collect::<Result<Vec<_>>>()?;
    let b = &lb.two_ring;
    let hom = RingHom::new(a.ring(), b.ring(), t.group().elements().collect(), images);
    hom.check(a.ring(), b.ring())?;
    let apply = |m: &Morphism| Morphism { src: m.src, tgt: m.tgt, val: hom.apply(b.ring(), &m.val) };
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            let imgs: HashSet<Morphism> = a.hom_elements(x, y).iter().map(apply).collect();
            if imgs.len() != a.hom_elements(x, y).len() || imgs.len() != b.hom_elements(x, y).len() {
                return fail("comparison is not bijective on a hom-set");
            }
        }
    }
    let ms = a.all_morphisms();
    for f in &ms {
        for g in &ms {
            if f.tgt == g.src && apply(&a.compose(g, f)?) != b.compose(&apply(g), &apply(f))? {
                return fail("comparison does not preserve composition");
            }
            if apply(&a.tensor(f, g)) != b.tensor(&apply(f), &apply(g)) {
                return fail("comparison does not preserve tensor");
            }
        }
    }
    Ok(hom)
}

/// Saturation of `S_p`, inverted morphisms, and locality of `T_p`.
pub fn saturation_and_local_check(t: &TwoRing, p: &HomogeneousIdeal) -> Result<()> {
    let fail = |m: &str| Err(Error::StructureCheck(m.into()));
    let sys = prime_complement(t, p)?;
    let n = t.order();
    for g in 0..n {
        for h in 0..n {
            for r in t.hom_elements(g, h) {
                for l in 0..n {
                    for s in t.hom_elements(h, l) {
                        if !sys.contains(t, &t.compose(&s, &r)?) || sys.contains(t, &s) {
                            continue;
                        }
                        for m in 0..n {
                            for u in t.hom_elements(l, m) {
                                if sys.contains(t, &t.compose(&u, &s)?) {
                                    return fail("S_p is not saturated");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let l = localize(t, &sys)?;
    for r in t.all_morphisms() {
        if sys.contains(t, &r) != l.two_ring.is_invertible(&l.loc_morphism(&r)) {
            return fail("S_p is not the class of inverted morphisms");
        }
    }
    let lt = &l.two_ring;
    let sets: Vec<BTreeSet<Vec<u32>>> = (0..n * n)
        .map(|s| {
            let (g, h) = lt.slot_pair(s);
            lt.hom_elements(g, h).into_iter().filter(|m| !lt.is_invertible(m)).map(|m| m.val).collect()
        })
        .collect();
    let non_inv = ideals::from_element_sets(lt, &sets)?;
    if !ideals::is_ideal(lt, &non_inv) {
        return fail("non-invertible morphisms do not form an ideal");
    }
    let all = ideals::enumerate_ideals(lt);
    if ideals::maximal_ideals(lt, &all) != vec![non_inv] {
        return fail("local 2-ring does not have the non-invertibles as unique maximal ideal");
    }
    Ok(())
}

/// `r s⁻¹`, a morphism `s.src → r.tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightFraction {
    pub s: Morphism,
    pub r: Morphism,
}

/// Equality by common amplification `s₁u = s₂v ∈ S`, `r₁u = r₂v`.
pub fn right_fraction_eq(t: &TwoRing, sys: &MultSystem, a: &RightFraction, b: &RightFraction) -> bool {
    (0..t.order()).any(|w| {
        t.hom_elements(w, a.s.src).iter().any(|u| {
            let d = t.compose(&a.s, u).expect("c");
            sys.contains(t, &d)
                && t.hom_elements(w, b.s.src).iter().any(|v| {
                    t.compose(&b.s, v).expect("c") == d && t.compose(&a.r, u).expect("c") == t.compose(&b.r, v).expect("c")
                })
        })
    })
}

/// `r s⁻¹ = s̃⁻¹ r̃` where `s̃ r = r̃ s`.
pub fn right_to_left(t: &TwoRing, sys: &MultSystem, f: &RightFraction) -> Result<LeftFraction> {
    let sq = ore_complete(t, sys, &f.r, &f.s)?;
    Ok(LeftFraction { r: sq.r_prime, s: sq.s_prime })
}

/// Right-fraction classes `x → y` and the left-fraction class each maps to;
/// checks the correspondence is a bijection.
pub fn right_left_bijection(t: &TwoRing, sys: &MultSystem, l: &Localization, x: usize, y: usize) -> Result<usize> {
    // Group right fractions by image; each group must be one right-fraction
    // class and the groups must exhaust the hom-set of the localization.
    let mut groups: HashMap<Morphism, RightFraction> = HashMap::new();
    for z in 0..t.order() {
        for s in sys.members_in(t, z, x) {
            for r in t.hom_elements(z, y) {
                let f = RightFraction { s: s.clone(), r };
                let image = l.psi(t, sys, &right_to_left(t, sys, &f)?)?;
                match groups.get(&image) {
                    Some(g) if !right_fraction_eq(t, sys, g, &f) => {
                        return Err(Error::StructureCheck(format!("unequal right fractions {x}→{y} share an image")));
                    }
                    Some(_) => {}
                    None => {
                        groups.insert(image, f);
                    }
                }
            }
        }
    }
    let reps: Vec<&RightFraction> = groups.values().collect();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            if right_fraction_eq(t, sys, a, b) {
                return Err(Error::StructureCheck(format!("equal right fractions {x}→{y} have different images")));
            }
        }
    }
    if groups.len() != l.two_ring.hom_elements(x, y).len() {
        return Err(Error::StructureCheck(format!("right and left fractions {x}→{y} do not correspond")));
    }
    Ok(groups.len())
}

/// `S_r` for every morphism and `S_p` for every prime, deduplicated.
pub fn standard_systems(t: &TwoRing, spec: &SpecSpace) -> Result<Vec<MultSystem>> {
    let mut out: Vec<MultSystem> = Vec::new();
    for r in t.all_morphisms() {
        let s = system_of(t, &r);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    for p in &spec.primes {
        let s = prime_complement(t, p)?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Primes meeting no member of `S`, as a point set.
pub fn avoiding_set(t: &TwoRing, spec: &SpecSpace, sys: &MultSystem) -> PointSet {
    PointSet::from_indices((0..spec.len()).filter(|&i| sys.avoids(t, &spec.primes[i])))
}

/// A subspace of `R` spanned by the slots `(0,d)` of an ideal.
pub fn ideal_subspace(t: &TwoRing, ideal: &HomogeneousIdeal) -> Subspace {
    spectrum::restrict_to_ring(t, ideal)
}
