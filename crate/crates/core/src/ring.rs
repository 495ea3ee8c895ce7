//! Finite `G`-graded ε-commutative algebras over a prime field.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::grading::{Degree, GradingGroup, SignForm};
use crate::linalg::{self, Coordinatizer, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub name: String,
    pub degree: Degree,
}

/// A finite graded ring given by a homogeneous basis and a dense structure-constant table.
#[derive(Clone)]
pub struct GradedRing {
    p: u32,
    group: GradingGroup,
    eps: SignForm,
    eps_table: Vec<Vec<u8>>,
    basis: Vec<BasisElement>,
    mult: Vec<Vec<Vec<u32>>>,
    components: Vec<Vec<usize>>,
    unit: Option<Vec<u32>>,
    id: u64,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedRing")
            .field("p", &self.p)
            .field("group", &self.group.factors())
            .field("basis", &self.basis)
            .finish()
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.group == other.group
            && self.eps == other.eps
            && self.basis == other.basis
            && self.mult == other.mult
    }
}

impl Eq for GradedRing {}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl GradedRing {
    /// Builds a ring from structure constants. Only structural sanity is checked
    /// here; the ring axioms are checked by [`GradedRing::check_ring_axioms`].
    pub fn new(
        p: u32,
        group: GradingGroup,
        eps: SignForm,
        basis: Vec<BasisElement>,
        mult: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::MalformedRing(format!("characteristic {p} is not prime")));
        }
        if p > 1 << 15 {
            return Err(Error::MalformedRing(format!("characteristic {p} is too large")));
        }
        let n = basis.len();
        for b in &basis {
            if b.degree >= group.order() {
                return Err(Error::MalformedRing(format!("basis element {} has an invalid degree", b.name)));
            }
        }
        let mut names: Vec<&str> = basis.iter().map(|b| b.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedRing("duplicate basis names".into()));
        }
        if mult.len() != n || mult.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::MalformedRing("multiplication table has the wrong shape".into()));
        }
        if mult.iter().flatten().flatten().any(|&c| c >= p) {
            return Err(Error::MalformedRing("coefficient not reduced modulo p".into()));
        }
        let eps_table = eps.table(&group);
        let mut components = vec![Vec::new(); group.order()];
        for (i, b) in basis.iter().enumerate() {
            components[b.degree].push(i);
        }
        let mut hasher = DefaultHasher::new();
        p.hash(&mut hasher);
        group.factors().hash(&mut hasher);
        eps.matrix().hash(&mut hasher);
        basis.hash(&mut hasher);
        mult.hash(&mut hasher);
        let mut ring = GradedRing {
            p,
            group,
            eps,
            eps_table,
            basis,
            mult,
            components,
            unit: None,
            id: hasher.finish(),
        };
        ring.unit = ring.find_unit();
        Ok(ring)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn sign_form(&self) -> &SignForm {
        &self.eps
    }

    /// `ε(a,b)` on degrees.
    pub fn eps(&self, a: Degree, b: Degree) -> u8 {
        self.eps_table[a][b]
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    /// `|R| = p^dim`.
    pub fn cardinality(&self) -> u128 {
        (self.p as u128).pow(self.dim() as u32)
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<u32>>] {
        &self.mult
    }

    /// Basis indices spanning `R_d`.
    pub fn component(&self, d: Degree) -> &[usize] {
        &self.components[d]
    }

    pub fn component_basis(&self, d: Degree) -> Vec<Vec<u32>> {
        self.components[d].iter().map(|&i| self.basis_vector(i)).collect()
    }

    pub fn component_dim(&self, d: Degree) -> usize {
        self.components[d].len()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }

    pub fn is_zero_ring(&self) -> bool {
        self.dim() == 0
    }

    /// The two-sided unit, if one exists.
    pub fn unit(&self) -> Option<&[u32]> {
        self.unit.as_deref()
    }

    pub fn one(&self) -> Vec<u32> {
        self.unit.clone().expect("ring has a unit")
    }

    /// `(−1)^e` as a residue.
    pub fn sign_scalar(&self, e: u8) -> u32 {
        if e.is_multiple_of(2) {
            1 % self.p
        } else {
            self.p - 1
        }
    }

    pub fn scale(&self, v: &[u32], c: u32) -> Vec<u32> {
        linalg::scaled(self.p, v, c)
    }

    pub fn signed(&self, v: &[u32], e: u8) -> Vec<u32> {
        if e.is_multiple_of(2) {
            v.to_vec()
        } else {
            linalg::negated(self.p, v)
        }
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        linalg::added(self.p, a, b)
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        linalg::added(self.p, a, &linalg::negated(self.p, b))
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.p as u64;
        let mut out = vec![0u64; self.dim()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai as u64 * bj as u64 % m;
                for (o, &t) in out.iter_mut().zip(&self.mult[i][j]) {
                    if t != 0 {
                        *o = (*o + c * t as u64) % m;
                    }
                }
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// The degree of a nonzero homogeneous vector; `None` for zero or mixed vectors.
    pub fn degree_of(&self, v: &[u32]) -> Option<Degree> {
        let mut deg = None;
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                match deg {
                    None => deg = Some(self.basis[i].degree),
                    Some(d) if d != self.basis[i].degree => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    /// Whether `v` lies in `R_d` (zero lies in every component).
    pub fn in_component(&self, v: &[u32], d: Degree) -> bool {
        v.iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || self.basis[i].degree == d)
    }

    /// All `p^{dim R_d}` elements of `R_d`, starting with zero.
    pub fn homogeneous_elements(&self, d: Degree) -> Vec<Vec<u32>> {
        linalg::all_combinations(self.p, self.dim(), &self.component_basis(d))
    }

    /// All nonzero homogeneous elements, by degree.
    pub fn nonzero_homogeneous(&self) -> Vec<(Degree, Vec<u32>)> {
        let mut out = Vec::new();
        for d in self.group.elements() {
            for v in self.homogeneous_elements(d).into_iter().skip(1) {
                out.push((d, v));
            }
        }
        out
    }

    fn find_unit(&self) -> Option<Vec<u32>> {
        let n = self.dim();
        // Unknown u ∈ R_0 with u·b_j = b_j = b_j·u for all j, as one linear system.
        let comp = &self.components[self.group.zero()];
        let columns: Vec<Vec<u32>> = comp
            .iter()
            .map(|&k| {
                let mut col = Vec::with_capacity(2 * n * n);
                for j in 0..n {
                    col.extend_from_slice(&self.mult[k][j]);
                }
                for j in 0..n {
                    col.extend_from_slice(&self.mult[j][k]);
                }
                col
            })
            .collect();
        let mut target = Vec::with_capacity(2 * n * n);
        for _ in 0..2 {
            for j in 0..n {
                target.extend(self.basis_vector(j));
            }
        }
        let coords = Coordinatizer::new(self.p, 2 * n * n, &columns).coordinates(&target)?;
        let mut u = vec![0; n];
        for (&k, &c) in comp.iter().zip(&coords) {
            u[k] = c;
        }
        Some(u)
    }

    /// Exhaustive check of every ring axiom on basis tuples.
    pub fn check_ring_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut violations = Vec::new();
        if !self.eps.is_symmetric() {
            violations.push(Violation::AsymmetricSignForm);
        }
        for i in 0..n {
            for j in 0..n {
                let d = self.group.add(self.basis[i].degree, self.basis[j].degree);
                if !self.in_component(&self.mult[i][j], d) {
                    violations.push(Violation::DegreeAdditivity { left: i, right: j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let lhs = self.mul(ij, &self.basis_vector(k));
                    let rhs = self.mul(&self.basis_vector(i), &self.mult[j][k]);
                    if lhs != rhs {
                        violations.push(Violation::Associativity { a: i, b: j, c: k });
                    }
                }
            }
        }
        if self.unit.is_none() {
            violations.push(Violation::MissingUnit);
        }
        for i in 0..n {
            for j in i..n {
                let e = self.eps(self.basis[i].degree, self.basis[j].degree);
                if self.mult[i][j] != self.signed(&self.mult[j][i], e) {
                    violations.push(Violation::Commutativity { left: i, right: j });
                }
            }
        }
        AxiomReport { violations }
    }

    pub fn require_axioms(&self) -> Result<()> {
        let report = self.check_ring_axioms();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::AxiomViolation(report.describe(self)))
        }
    }

    /// A homogeneous `s` with `s·v = 1 = v·s`, if `v` is homogeneous and invertible.
    pub fn inverse(&self, v: &[u32]) -> Option<Vec<u32>> {
        let one = self.unit()?;
        if self.is_zero_ring() {
            return Some(Vec::new());
        }
        let d = self.degree_of(v)?;
        let nd = self.group.neg(d);
        let cands = self.component_basis(nd);
        let images: Vec<Vec<u32>> = cands.iter().map(|c| self.mul(c, v)).collect();
        let coords = Coordinatizer::new(self.p, self.dim(), &images).coordinates(one)?;
        let mut s = self.zero();
        for (c, &k) in cands.iter().zip(&coords) {
            linalg::add_scaled(self.p, &mut s, c, k);
        }
        (self.mul(v, &s) == one).then_some(s)
    }

    /// Homogeneous units of degree `d`.
    pub fn units_of_degree(&self, d: Degree) -> Vec<Vec<u32>> {
        if self.is_zero_ring() {
            return vec![Vec::new()];
        }
        self.homogeneous_elements(d)
            .into_iter()
            .filter(|v| self.inverse(v).is_some())
            .collect()
    }

    /// Textual form of a vector as a linear combination of basis names.
    pub fn format_element(&self, v: &[u32]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.basis[i].name.clone()
                } else {
                    format!("{c}*{}", self.basis[i].name)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Inverse of [`GradedRing::format_element`]; integers denote multiples of the unit.
    pub fn parse_element(&self, s: &str) -> Result<Vec<u32>> {
        let mut v = self.zero();
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        for raw in s.split('+') {
            let term = raw.trim();
            let (coeff, name) = match term.split_once('*') {
                Some((c, n)) => (parse_coeff(c, self.p)?, n.trim()),
                None => match term.parse::<i64>() {
                    Ok(_) => (parse_coeff(term, self.p)?, ""),
                    Err(_) => (1, term),
                },
            };
            let term_vec = if name.is_empty() {
                self.unit()
                    .map(|u| u.to_vec())
                    .ok_or_else(|| Error::Parse("ring has no unit".into()))?
            } else if let Some(i) = self.basis.iter().position(|b| b.name == name) {
                self.basis_vector(i)
            } else if name.parse::<i64>().is_ok() {
                let u = self.unit().map(|u| u.to_vec()).unwrap_or_default();
                self.scale(&u, parse_coeff(name, self.p)?)
            } else {
                return Err(Error::Parse(format!("unknown basis element {name:?}")));
            };
            linalg::add_scaled(self.p, &mut v, &term_vec, coeff);
        }
        Ok(v)
    }

    /// Quotient by a homogeneous two-sided ideal `j`, with the projection.
    /// The quotient basis is the set of non-pivot positions of `j`.
    pub fn quotient(&self, j: &Subspace) -> Result<(GradedRing, RingHom)> {
        if !self.is_homogeneous_ideal(j) {
            return Err(Error::Precondition("not a homogeneous ideal".into()));
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !j.pivots().contains(i)).collect();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = j.reduce(v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let basis: Vec<BasisElement> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mult: Vec<Vec<Vec<u32>>> = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| project(&self.mult[a][b])).collect())
            .collect();
        let q = GradedRing::new(self.p, self.group.clone(), self.eps.clone(), basis, mult)?;
        let images = (0..self.dim()).map(|i| project(&self.basis_vector(i))).collect();
        let hom = RingHom::new(self, &q, self.group.elements().collect(), images);
        Ok((q, hom))
    }

    /// Whether `j` is the sum of its homogeneous parts and closed under two-sided multiplication.
    pub fn is_homogeneous_ideal(&self, j: &Subspace) -> bool {
        if j.ambient() != self.dim() {
            return false;
        }
        let homogeneous = j.basis().iter().all(|v| self.degree_of(v).is_some());
        homogeneous
            && j.basis().iter().all(|v| {
                (0..self.dim()).all(|i| {
                    let b = self.basis_vector(i);
                    j.contains(&self.mul(&b, v)) && j.contains(&self.mul(v, &b))
                })
            })
    }

    /// Product ring `R × S` over the same grading data.
    pub fn product(&self, other: &GradedRing) -> Result<GradedRing> {
        if self.p != other.p || self.group != other.group || self.eps != other.eps {
            return Err(Error::Precondition("product factors must share p, G and ε".into()));
        }
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut basis = Vec::with_capacity(n);
        for b in &self.basis {
            basis.push(BasisElement { name: format!("{}_1", b.name), degree: b.degree });
        }
        for b in &other.basis {
            basis.push(BasisElement { name: format!("{}_2", b.name), degree: b.degree });
        }
        let mut mult = vec![vec![vec![0; n]; n]; n];
        for i in 0..n1 {
            for j in 0..n1 {
                mult[i][j][..n1].copy_from_slice(&self.mult[i][j]);
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                mult[n1 + i][n1 + j][n1..].copy_from_slice(&other.mult[i][j]);
            }
        }
        GradedRing::new(self.p, self.group.clone(), self.eps.clone(), basis, mult)
    }
}

fn parse_coeff(s: &str, p: u32) -> Result<u32> {
    let c: i64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
    Ok(c.rem_euclid(p as i64) as u32)
}

/// A coefficient vector tagged with its parent ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub ring_id: u64,
    pub coeffs: Vec<u32>,
}

impl RingElement {
    pub fn new(ring: &GradedRing, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != ring.dim() {
            return Err(Error::DimensionMismatch { expected: ring.dim(), found: coeffs.len() });
        }
        Ok(RingElement { ring_id: ring.id(), coeffs })
    }

    pub fn degree(&self, ring: &GradedRing) -> Option<Degree> {
        ring.degree_of(&self.coeffs)
    }
}

pub fn multiply(ring: &GradedRing, a: &RingElement, b: &RingElement) -> Result<RingElement> {
    if a.ring_id != ring.id() || b.ring_id != ring.id() {
        return Err(Error::ParentMismatch);
    }
    Ok(RingElement { ring_id: ring.id(), coeffs: ring.mul(&a.coeffs, &b.coeffs) })
}

pub fn check_ring_axioms(ring: &GradedRing) -> AxiomReport {
    ring.check_ring_axioms()
}

pub fn homogeneous_elements(ring: &GradedRing, d: Degree) -> Vec<RingElement> {
    ring.homogeneous_elements(d)
        .into_iter()
        .map(|coeffs| RingElement { ring_id: ring.id(), coeffs })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    AsymmetricSignForm,
    DegreeAdditivity { left: usize, right: usize },
    Associativity { a: usize, b: usize, c: usize },
    MissingUnit,
    Commutativity { left: usize, right: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, ring: &GradedRing) -> String {
        let name = |i: usize| ring.basis()[i].name.as_str();
        let lines: Vec<String> = self
            .violations
            .iter()
            .map(|v| match *v {
                Violation::AsymmetricSignForm => "sign form is not symmetric".to_string(),
                Violation::DegreeAdditivity { left, right } => {
                    format!("degree additivity fails for {}*{}", name(left), name(right))
                }
                Violation::Associativity { a, b, c } => {
                    format!("associativity fails for ({},{},{})", name(a), name(b), name(c))
                }
                Violation::MissingUnit => "no two-sided unit of degree 0".to_string(),
                Violation::Commutativity { left, right } => {
                    format!("graded commutativity fails for ({},{})", name(left), name(right))
                }
            })
            .collect();
        lines.join("; ")
    }
}

/// A degree-compatible ring homomorphism given on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    pub source_id: u64,
    pub target_id: u64,
    pub group_map: Vec<Degree>,
    pub images: Vec<Vec<u32>>,
}

impl RingHom {
    pub fn new(src: &GradedRing, tgt: &GradedRing, group_map: Vec<Degree>, images: Vec<Vec<u32>>) -> Self {
        RingHom { source_id: src.id(), target_id: tgt.id(), group_map, images }
    }

    pub fn identity(ring: &GradedRing) -> Self {
        let images = (0..ring.dim()).map(|i| ring.basis_vector(i)).collect();
        RingHom::new(ring, ring, ring.group().elements().collect(), images)
    }

    pub fn apply(&self, tgt: &GradedRing, v: &[u32]) -> Vec<u32> {
        let mut out = tgt.zero();
        for (img, &c) in self.images.iter().zip(v) {
            linalg::add_scaled(tgt.characteristic(), &mut out, img, c);
        }
        out
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &RingHom, tgt: &GradedRing) -> RingHom {
        RingHom {
            source_id: self.source_id,
            target_id: after.target_id,
            group_map: self.group_map.iter().map(|&d| after.group_map[d]).collect(),
            images: self.images.iter().map(|v| after.apply(tgt, v)).collect(),
        }
    }

    /// Checks the group homomorphism, degree compatibility, unit and multiplicativity.
    pub fn check(&self, src: &GradedRing, tgt: &GradedRing) -> Result<()> {
        let fail = |m: String| Err(Error::StructureCheck(m));
        if self.source_id != src.id() || self.target_id != tgt.id() {
            return Err(Error::ParentMismatch);
        }
        if src.characteristic() != tgt.characteristic() {
            return fail("characteristics differ".into());
        }
        if self.group_map.len() != src.group().order() || self.images.len() != src.dim() {
            return fail("homomorphism data has the wrong shape".into());
        }
        let (gs, gt) = (src.group(), tgt.group());
        for a in gs.elements() {
            for b in gs.elements() {
                if self.group_map[gs.add(a, b)] != gt.add(self.group_map[a], self.group_map[b]) {
                    return fail("degree map is not a group homomorphism".into());
                }
                if src.eps(a, b) != tgt.eps(self.group_map[a], self.group_map[b]) {
                    return fail("degree map does not preserve ε".into());
                }
            }
        }
        for (i, img) in self.images.iter().enumerate() {
            if img.len() != tgt.dim() {
                return fail("image has the wrong length".into());
            }
            if !tgt.in_component(img, self.group_map[src.basis()[i].degree]) {
                return fail(format!("image of {} has the wrong degree", src.basis()[i].name));
            }
        }
        if let (Some(u), Some(v)) = (src.unit(), tgt.unit()) {
            if self.apply(tgt, u) != v {
                return fail("unit is not preserved".into());
            }
        }
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = self.apply(tgt, &src.structure_constants()[i][j]);
                let rhs = tgt.mul(&self.images[i], &self.images[j]);
                if lhs != rhs {
                    return fail("multiplication is not preserved".into());
                }
            }
        }
        Ok(())
    }
}
