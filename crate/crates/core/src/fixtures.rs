//! Named fixture rings and a seeded generator of random graded ε-commutative rings.
//!
//! Random rings come from presentations rather than raw tables: each generator
//! `x_i` has a degree `d_i` and a relation `x_i^{m_i} = c_i`, generators
//! anticommute according to ε, and an optional monomial ideal is killed.
//! Factors may also be combined as products. Every sample is then filtered
//! through the axiom checker and the size bound.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grading::{Degree, GradingGroup, SignForm};
use crate::ring::{BasisElement, GradedRing};

pub const FIXTURE_NAMES: [&str; 5] = ["Z0", "D2", "P2", "U2", "E3"];

/// Environment variable overriding the seed of random-ring suites.
pub const SEED_ENV: &str = "SPECTRA2RING_SEED";
pub const DEFAULT_SEED: u64 = 20240611;

fn table(n: usize, entries: &[(usize, usize, Vec<u32>)]) -> Vec<Vec<Vec<u32>>> {
    let mut m = vec![vec![vec![0; n]; n]; n];
    for (i, j, v) in entries {
        m[*i][*j] = v.clone();
    }
    m
}

fn basis(items: &[(&str, Degree)]) -> Vec<BasisElement> {
    items
        .iter()
        .map(|(n, d)| BasisElement { name: n.to_string(), degree: *d })
        .collect()
}

/// The zero ring over `𝔽_2`, trivially graded.
pub fn z0() -> GradedRing {
    let g = GradingGroup::trivial();
    let eps = SignForm::zero(&g);
    GradedRing::new(2, g, eps, Vec::new(), Vec::new()).expect("Z0")
}

/// `𝔽_2[x]/(x²)`, `|x| = 1` in `ℤ/2`, `ε ≡ 0`.
pub fn d2() -> GradedRing {
    let g = GradingGroup::cyclic(2);
    let eps = SignForm::zero(&g);
    let mult = table(2, &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])]);
    GradedRing::new(2, g, eps, basis(&[("1", 0), ("x", 1)]), mult).expect("D2")
}

/// `𝔽_2 × 𝔽_2` with idempotents `e1`, `e2`, trivially graded.
pub fn p2() -> GradedRing {
    let g = GradingGroup::trivial();
    let eps = SignForm::zero(&g);
    let mult = table(2, &[(0, 0, vec![1, 0]), (1, 1, vec![0, 1])]);
    GradedRing::new(2, g, eps, basis(&[("e1", 0), ("e2", 0)]), mult).expect("P2")
}

/// `𝔽_2[x]/(x²+1)`, `|x| = 1` in `ℤ/2`, `ε ≡ 0`.
pub fn u2() -> GradedRing {
    let g = GradingGroup::cyclic(2);
    let eps = SignForm::zero(&g);
    let mult = table(
        2,
        &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1]), (1, 1, vec![1, 0])],
    );
    GradedRing::new(2, g, eps, basis(&[("1", 0), ("x", 1)]), mult).expect("U2")
}

/// `𝔽_3[θ]/(θ²)`, `|θ| = 1` in `ℤ/2`, `ε(a,b) = ab`.
pub fn e3() -> GradedRing {
    let g = GradingGroup::cyclic(2);
    let eps = SignForm::new(&g, vec![vec![1]]).expect("ε");
    let mult = table(2, &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])]);
    GradedRing::new(3, g, eps, basis(&[("1", 0), ("theta", 1)]), mult).expect("E3")
}

/// D2 with the planted defect `x·x = x`, which breaks degree additivity.
pub fn broken_d2() -> GradedRing {
    let g = GradingGroup::cyclic(2);
    let eps = SignForm::zero(&g);
    let mult = table(
        2,
        &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1]), (1, 1, vec![0, 1])],
    );
    GradedRing::new(2, g, eps, basis(&[("1", 0), ("x", 1)]), mult).expect("broken D2")
}

pub fn by_name(name: &str) -> Option<GradedRing> {
    match name {
        "Z0" => Some(z0()),
        "D2" => Some(d2()),
        "P2" => Some(p2()),
        "U2" => Some(u2()),
        "E3" => Some(e3()),
        _ => None,
    }
}

pub fn all() -> Vec<(&'static str, GradedRing)> {
    FIXTURE_NAMES
        .iter()
        .map(|&n| (n, by_name(n).expect("known fixture")))
        .collect()
}

/// Seed from [`SEED_ENV`] if set and parseable, else `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// One generator of a monomial presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub degree: Degree,
    /// Exponent of the defining relation `x^m = c`.
    pub power: u32,
    pub constant: u32,
}

/// `𝔽_p⟨x_1..x_k⟩` modulo graded commutativity, `x_i^{m_i} = c_i`, and the
/// monomials in `killed`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p: u32,
    pub group: GradingGroup,
    pub eps: SignForm,
    pub generators: Vec<Generator>,
    pub killed: Vec<Vec<u32>>,
}

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

impl Presentation {
    fn divisible(e: &[u32], m: &[u32]) -> bool {
        e.iter().zip(m).all(|(a, b)| a >= b)
    }

    fn monomials(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for g in &self.generators {
            out = out
                .into_iter()
                .flat_map(|e: Vec<u32>| {
                    (0..g.power).map(move |k| {
                        let mut f = e.clone();
                        f.push(k);
                        f
                    })
                })
                .collect();
        }
        out.retain(|e| !self.killed.iter().any(|m| Self::divisible(e, m)));
        out
    }

    fn name(e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    VAR_NAMES[i].to_string()
                } else {
                    format!("{}^{k}", VAR_NAMES[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(".")
        }
    }

    pub fn build(&self) -> crate::error::Result<GradedRing> {
        let g = &self.group;
        let mons = self.monomials();
        let n = mons.len();
        let degree = |e: &[u32]| {
            e.iter()
                .zip(&self.generators)
                .fold(g.zero(), |acc, (&k, gen)| g.add(acc, g.mul(k as usize, gen.degree)))
        };
        let eps_table = self.eps.table(g);
        let mut mult = vec![vec![vec![0; n]; n]; n];
        for (a, e) in mons.iter().enumerate() {
            for (b, f) in mons.iter().enumerate() {
                // Move each x_i^{f_i} left past x_j^{e_j} for j > i.
                let mut sign = 0u64;
                for i in 0..f.len() {
                    for j in (i + 1)..e.len() {
                        let s = eps_table[self.generators[j].degree][self.generators[i].degree];
                        sign += e[j] as u64 * f[i] as u64 * s as u64;
                    }
                }
                let mut coeff = if sign.is_multiple_of(2) { 1 } else { self.p - 1 };
                let mut prod = Vec::with_capacity(e.len());
                for (i, gen) in self.generators.iter().enumerate() {
                    let mut k = e[i] + f[i];
                    if k >= gen.power {
                        k -= gen.power;
                        coeff = coeff * gen.constant % self.p;
                    }
                    prod.push(k);
                }
                if coeff == 0 || self.killed.iter().any(|m| Self::divisible(&prod, m)) {
                    continue;
                }
                let c = mons.iter().position(|m| *m == prod).expect("reduced monomial");
                mult[a][b][c] = coeff;
            }
        }
        let basis = mons
            .iter()
            .map(|e| BasisElement { name: Self::name(e), degree: degree(e) })
            .collect();
        GradedRing::new(self.p, g.clone(), self.eps.clone(), basis, mult)
    }
}

fn random_group(rng: &mut ChaCha8Rng) -> GradingGroup {
    let choices: [&[u32]; 6] = [&[], &[2], &[2], &[3], &[4], &[2, 2]];
    GradingGroup::new(choices.choose(rng).expect("nonempty").to_vec()).expect("valid group")
}

fn random_form(rng: &mut ChaCha8Rng, g: &GradingGroup) -> SignForm {
    let k = g.rank();
    let mut m = vec![vec![0u8; k]; k];
    for i in 0..k {
        for j in i..k {
            if g.factors()[i].is_multiple_of(2) && g.factors()[j].is_multiple_of(2) && rng.gen_bool(0.5) {
                m[i][j] = 1;
                m[j][i] = 1;
            }
        }
    }
    SignForm::new(g, m).expect("valid form")
}

fn random_presentation(rng: &mut ChaCha8Rng, p: u32, g: &GradingGroup, eps: &SignForm) -> Presentation {
    let table = eps.table(g);
    let nvars = if rng.gen_bool(0.5) { 1 } else { 2 };
    let mut generators = Vec::new();
    for _ in 0..nvars {
        let degree = rng.gen_range(0..g.order());
        let odd = p != 2 && table[degree][degree] == 1;
        let (power, constant) = if odd {
            (2, 0)
        } else {
            let power = rng.gen_range(2..=4);
            let closes = g.mul(power as usize, degree) == g.zero();
            let constant = if closes && rng.gen_bool(0.4) { rng.gen_range(1..p) } else { 0 };
            (power, constant)
        };
        generators.push(Generator { degree, power, constant });
    }
    let mut killed = Vec::new();
    if nvars == 2 && generators.iter().all(|g| g.constant == 0) && rng.gen_bool(0.5) {
        let a = rng.gen_range(1..generators[0].power);
        let b = rng.gen_range(1..generators[1].power);
        killed.push(vec![a, b]);
    }
    Presentation { p, group: g.clone(), eps: eps.clone(), generators, killed }
}

/// One random ring with at most `max_card` elements that passes every axiom check.
pub fn random_ring(rng: &mut ChaCha8Rng, max_card: u128) -> GradedRing {
    loop {
        let p = *[2u32, 2, 2, 3, 3, 5].choose(rng).expect("nonempty");
        let g = random_group(rng);
        let eps = random_form(rng, &g);
        let first = random_presentation(rng, p, &g, &eps).build();
        let ring = if rng.gen_bool(0.25) {
            let second = random_presentation(rng, p, &g, &eps).build();
            match (first, second) {
                (Ok(a), Ok(b)) => a.product(&b),
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        } else {
            first
        };
        if let Ok(r) = ring {
            if r.cardinality() <= max_card && r.check_ring_axioms().is_ok() {
                return r;
            }
        }
    }
}

/// `count` random rings from `seed`; the same seed always yields the same rings.
pub fn random_rings(seed: u64, count: usize, max_card: u128) -> Vec<GradedRing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_ring(&mut rng, max_card)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_rings_are_reproducible_and_valid() {
        let a = random_rings(7, 20, 81);
        let b = random_rings(7, 20, 81);
        assert_eq!(a, b);
        for r in &a {
            assert!(r.cardinality() <= 81);
            assert!(r.check_ring_axioms().is_ok());
        }
    }

    #[test]
    fn presentations_cover_signs() {
        // 𝔽_3[x,y] with two odd generators: xy = -yx and x² = y² = 0.
        let g = GradingGroup::cyclic(2);
        let eps = SignForm::new(&g, vec![vec![1]]).unwrap();
        let gens = vec![
            Generator { degree: 1, power: 2, constant: 0 },
            Generator { degree: 1, power: 2, constant: 0 },
        ];
        let r = Presentation { p: 3, group: g, eps, generators: gens, killed: vec![] }
            .build()
            .unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.check_ring_axioms().is_ok());
        let x = r.parse_element("x").unwrap();
        let y = r.parse_element("y").unwrap();
        assert_eq!(r.mul(&x, &y), r.scale(&r.mul(&y, &x), 2));
    }

    #[test]
    fn raw_random_tables_are_rarely_rings() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = GradingGroup::cyclic(2);
        let mut passing = 0;
        for _ in 0..200 {
            let n = 3;
            let degrees = [0, 0, 1];
            let mult: Vec<Vec<Vec<u32>>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = (degrees[i] + degrees[j]) % 2;
                            (0..n).map(|k| if degrees[k] == d { rng.gen_range(0..2) } else { 0 }).collect()
                        })
                        .collect()
                })
                .collect();
            let basis = (0..n)
                .map(|i| BasisElement { name: format!("b{i}"), degree: degrees[i] })
                .collect();
            let r = GradedRing::new(2, g.clone(), SignForm::zero(&g), basis, mult).unwrap();
            if r.check_ring_axioms().is_ok() {
                passing += 1;
            }
        }
        assert!(passing < 20, "{passing} of 200 raw tables were rings");
    }
}
