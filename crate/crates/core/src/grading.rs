//! Finite abelian grading groups and ℤ/2-valued sign forms.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Index of a group element in the lexicographic enumeration of residue tuples.
pub type Degree = usize;

/// `∏ ℤ/n_i`, with elements addressed by their lexicographic index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct GradingGroup {
    factors: Vec<u32>,
    #[serde(skip)]
    add: Vec<Vec<Degree>>,
    #[serde(skip)]
    neg: Vec<Degree>,
}

impl TryFrom<Vec<u32>> for GradingGroup {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        GradingGroup::new(v)
    }
}

impl From<GradingGroup> for Vec<u32> {
    fn from(g: GradingGroup) -> Self {
        g.factors
    }
}

impl GradingGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("invariant factor {bad} is < 2")));
        }
        let order: usize = factors.iter().map(|&n| n as usize).product();
        if order > 4096 {
            return Err(Error::InvalidGroup(format!("group of order {order} is too large")));
        }
        let mut g = GradingGroup {
            factors,
            add: Vec::new(),
            neg: Vec::new(),
        };
        let elems: Vec<Vec<u32>> = (0..order).map(|i| g.tuple_of(i)).collect();
        g.add = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let t: Vec<u32> = a
                            .iter()
                            .zip(b)
                            .zip(&g.factors)
                            .map(|((x, y), n)| (x + y) % n)
                            .collect();
                        g.index_of_reduced(&t)
                    })
                    .collect()
            })
            .collect();
        g.neg = elems
            .iter()
            .map(|a| {
                let t: Vec<u32> = a.iter().zip(&g.factors).map(|(x, n)| (n - x) % n).collect();
                g.index_of_reduced(&t)
            })
            .collect();
        Ok(g)
    }

    pub fn trivial() -> Self {
        GradingGroup::new(Vec::new()).expect("trivial group")
    }

    pub fn cyclic(n: u32) -> Self {
        GradingGroup::new(vec![n]).expect("cyclic group")
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.neg.len()
    }

    pub fn zero(&self) -> Degree {
        0
    }

    pub fn add(&self, a: Degree, b: Degree) -> Degree {
        self.add[a][b]
    }

    pub fn neg(&self, a: Degree) -> Degree {
        self.neg[a]
    }

    pub fn sub(&self, a: Degree, b: Degree) -> Degree {
        self.add[a][self.neg[b]]
    }

    /// `k·a` for a non-negative integer `k`.
    pub fn mul(&self, k: usize, a: Degree) -> Degree {
        (0..k).fold(0, |acc, _| self.add(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<Degree> {
        0..self.order()
    }

    pub fn tuple_of(&self, mut idx: Degree) -> Vec<u32> {
        let mut t = vec![0; self.factors.len()];
        for (slot, &n) in t.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        t
    }

    fn index_of_reduced(&self, t: &[u32]) -> Degree {
        t.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    /// Index of a residue tuple; coordinates are reduced modulo the factors.
    pub fn index_of(&self, t: &[i64]) -> Result<Degree> {
        if t.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.factors.len(),
                found: t.len(),
            });
        }
        let reduced: Vec<u32> = t
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| x.rem_euclid(n as i64) as u32)
            .collect();
        Ok(self.index_of_reduced(&reduced))
    }

    /// Human-readable form: `0`, `1` for cyclic groups, `(0,1)` otherwise, `()` when trivial.
    pub fn format(&self, d: Degree) -> String {
        let t = self.tuple_of(d);
        if t.len() == 1 {
            t[0].to_string()
        } else {
            let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    /// Inverse of [`GradingGroup::format`]; also accepts bare comma lists and the empty string.
    pub fn parse(&self, s: &str) -> Result<Degree> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let parts: Vec<i64> = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad degree component {x:?}")))
                })
                .collect::<Result<_>>()?
        };
        // `0` names the identity of the trivial group too.
        if self.factors.is_empty() && parts == [0] {
            return Ok(self.zero());
        }
        self.index_of(&parts)
    }
}

/// Every element of `G` once, in lexicographic order of residue tuples.
pub fn enumerate_group(g: &GradingGroup) -> Vec<Vec<u32>> {
    g.elements().map(|d| g.tuple_of(d)).collect()
}

/// The bilinear form `ε(a,b) = aᵀMb mod 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignForm {
    matrix: Vec<Vec<u8>>,
}

impl SignForm {
    pub fn new(group: &GradingGroup, matrix: Vec<Vec<u8>>) -> Result<Self> {
        let k = group.rank();
        if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidSignForm(format!(
                "sign form must be a {k}x{k} matrix"
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 1 {
                    return Err(Error::InvalidSignForm(format!("entry ({i},{j}) is not a bit")));
                }
                let ni = group.factors()[i];
                let nj = group.factors()[j];
                if m == 1 && (ni % 2 == 1 || nj % 2 == 1) {
                    return Err(Error::InvalidSignForm(format!(
                        "entry ({i},{j}) is not well defined on ℤ/{ni} × ℤ/{nj}"
                    )));
                }
            }
        }
        Ok(SignForm { matrix })
    }

    pub fn zero(group: &GradingGroup) -> Self {
        let k = group.rank();
        SignForm {
            matrix: vec![vec![0; k]; k],
        }
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.matrix.len();
        (0..k).all(|i| (0..k).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn sign(&self, a: &[u32], b: &[u32]) -> Result<u8> {
        let k = self.matrix.len();
        if a.len() != k || b.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: if a.len() != k { a.len() } else { b.len() },
            });
        }
        let mut acc = 0u64;
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                acc += ai as u64 * self.matrix[i][j] as u64 * bj as u64;
            }
        }
        Ok((acc % 2) as u8)
    }

    /// Full table `ε(a,b)` indexed by degrees.
    pub fn table(&self, group: &GradingGroup) -> Vec<Vec<u8>> {
        group
            .elements()
            .map(|a| {
                let ta = group.tuple_of(a);
                group
                    .elements()
                    .map(|b| self.sign(&ta, &group.tuple_of(b)).expect("dimensions agree"))
                    .collect()
            })
            .collect()
    }
}

/// `sign(eps, a, b)` for residue tuples.
pub fn sign(eps: &SignForm, a: &[u32], b: &[u32]) -> Result<u8> {
    eps.sign(a, b)
}
