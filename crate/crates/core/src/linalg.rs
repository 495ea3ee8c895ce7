//! Exact linear algebra over a prime field `F_p`.
//!
//! Vectors are plain `Vec<u32>` of residues in `0..p`. Every subgroup of an
//! `F_p`-vector space is a subspace, so hom-group ideals, kernels and images
//! are all handled by [`Subspace`], which keeps a reduced row echelon basis.
//! Equality of two subspaces is therefore equality of their bases.

use std::fmt;

/// Multiplicative inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut acc: u64 = 1 % m;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

/// `dst += c * src`.
pub fn add_scaled(p: u32, dst: &mut [u32], src: &[u32], c: u32) {
    if c == 0 {
        return;
    }
    let c = c as u64;
    let m = p as u64;
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = ((*d as u64 + c * s as u64) % m) as u32;
        }
    }
}

pub fn scaled(p: u32, v: &[u32], c: u32) -> Vec<u32> {
    let m = p as u64;
    v.iter().map(|&x| ((x as u64 * c as u64) % m) as u32).collect()
}

pub fn added(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
}

pub fn negated(p: u32, v: &[u32]) -> Vec<u32> {
    v.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect()
}

pub fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Enumerate every `F_p`-linear combination of `basis` (including zero),
/// in the lexicographic order of the coefficient tuples.
pub fn all_combinations(p: u32, ambient: usize, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let count = (p as usize).pow(basis.len() as u32);
    let mut out = Vec::with_capacity(count);
    let mut coeffs = vec![0u32; basis.len()];
    for _ in 0..count {
        let mut v = vec![0u32; ambient];
        for (b, &c) in basis.iter().zip(&coeffs) {
            add_scaled(p, &mut v, b, c);
        }
        out.push(v);
        for c in coeffs.iter_mut().rev() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
    }
    out
}

/// A subspace of `F_p^ambient`, stored as a reduced row echelon basis sorted
/// by pivot column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("p", &self.p)
            .field("ambient", &self.ambient)
            .field("rows", &self.rows)
            .finish()
    }
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace {
            p,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span<'a, I>(p: u32, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<u32>>,
    {
        let mut s = Subspace::zero(p, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Number of vectors in the subspace.
    pub fn cardinality(&self) -> usize {
        (self.p as usize).pow(self.dim() as u32)
    }

    /// Reduce `v` against the basis; the result vanishes on every pivot
    /// column and is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        for (row, &q) in self.rows.iter().zip(&self.pivots) {
            let c = w[q];
            if c != 0 {
                add_scaled(self.p, &mut w, row, self.p - c);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        is_zero(&self.reduce(v))
    }

    /// Add `v` to the spanning set. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient space");
        let mut w = self.reduce(v);
        let Some(q) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(w[q], self.p);
        w = scaled(self.p, &w, inv);
        for row in self.rows.iter_mut() {
            let c = row[q];
            if c != 0 {
                add_scaled(self.p, row, &w, self.p - c);
            }
        }
        let at = self.pivots.partition_point(|&x| x < q);
        self.rows.insert(at, w);
        self.pivots.insert(at, q);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut big = Subspace::zero(self.p, 2 * n);
        for u in &self.rows {
            let mut row = u.clone();
            row.extend_from_slice(u);
            big.insert(&row);
        }
        for w in &other.rows {
            let mut row = w.clone();
            row.extend(std::iter::repeat_n(0, n));
            big.insert(&row);
        }
        let mut out = Subspace::zero(self.p, n);
        for (row, &q) in big.rows.iter().zip(&big.pivots) {
            if q >= n {
                out.insert(&row[n..]);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// All `p^dim` vectors of the subspace.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        all_combinations(self.p, self.ambient, &self.rows)
    }

    /// Recognize an explicit set of vectors as a subspace. Returns `None` when
    /// the set is not closed under the group operations.
    pub fn from_element_set<'a, I>(p: u32, ambient: usize, set: I) -> Option<Subspace>
    where
        I: IntoIterator<Item = &'a Vec<u32>>,
    {
        let mut s = Subspace::zero(p, ambient);
        let mut count = 0usize;
        let mut seen = std::collections::HashSet::new();
        for v in set {
            if seen.insert(v.clone()) {
                count += 1;
                s.insert(v);
            }
        }
        (count == s.cardinality()).then_some(s)
    }
}

/// Kernel of the linear map sending the `i`-th standard basis vector of
/// `F_p^m` to `images[i]` (all of length `target_dim`).
pub fn kernel(p: u32, images: &[Vec<u32>], target_dim: usize) -> Subspace {
    let m = images.len();
    let mut aug = Subspace::zero(p, target_dim + m);
    for (i, img) in images.iter().enumerate() {
        let mut row = img.clone();
        row.extend(std::iter::repeat_n(0, m));
        row[target_dim + i] = 1;
        aug.insert(&row);
    }
    let mut out = Subspace::zero(p, m);
    for (row, &q) in aug.rows.iter().zip(&aug.pivots) {
        if q >= target_dim {
            out.insert(&row[target_dim..]);
        }
    }
    out
}

/// Solves `v = Σ c_i family_i`. The family may be linearly dependent, in
/// which case some solution is returned.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    p: u32,
    ambient: usize,
    len: usize,
    aug: Subspace,
}

impl Coordinatizer {
    pub fn new(p: u32, ambient: usize, family: &[Vec<u32>]) -> Self {
        let len = family.len();
        let mut aug = Subspace::zero(p, ambient + len);
        for (i, v) in family.iter().enumerate() {
            let mut row = v.clone();
            row.extend(std::iter::repeat_n(0, len));
            row[ambient + i] = 1;
            aug.insert(&row);
        }
        Coordinatizer { p, ambient, len, aug }
    }

    /// Coefficients `c` with `v = sum c_i family_i`, if `v` is in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let mut row = v.to_vec();
        row.extend(std::iter::repeat_n(0, self.len));
        let red = self.aug.reduce(&row);
        if !is_zero(&red[..self.ambient]) {
            return None;
        }
        Some(negated(self.p, &red[self.ambient..]))
    }
}
