//! Minimal monomial generators of the invariant ring.
//!
//! In two variables the generators form a staircase: x-exponents strictly
//! decrease while y-exponents strictly increase, starting at the pure power
//! `x^(n/gcd(n,b))` and ending at `y^(n/gcd(n,c))`. In three variables (with
//! the determinant-one condition) the product `xyz` is always a minimal
//! generator and every other one lives in two of the three variables, so the
//! 3D set is `xyz` plus three 2D staircases glued along the pure powers.

use num_integer::Integer;

use crate::error::Error;
use crate::monomial::Monomial;
use crate::ring::{AmbientRing, OrderSpec};
use crate::weights::WeightSystem;

/// Which part of the generator list a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// 2D case: the single staircase.
    Pure2D,
    /// 3D: the x,y staircase (ends before the pure y power).
    T1,
    /// 3D: the y,z staircase (ends before the pure z power).
    T2,
    /// 3D: the z,x staircase (ends before the pure x power).
    T3,
    /// 3D: the element xyz.
    ABlock,
}

/// A minimal generator: its monomial image in the ambient variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub image: Monomial,
    pub block: Block,
}

impl Generator {
    /// Total degree of the image; this is the grading degree of the matching
    /// presentation variable.
    pub fn degree(&self) -> u64 {
        self.image.polydeg()
    }
}

/// The ordered minimal generating set together with the weight system that
/// produced it.
///
/// 2D: the list is `u_1, ..., u_m` by strictly decreasing x-exponent.
/// 3D: the list is `a = xyz` followed by the cyclic list `B_1, ..., B_m`
/// (x,y block, then y,z block, then z,x block), with `block_sizes`
/// recording `(r, s, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    weights: WeightSystem,
    gens: Vec<Generator>,
    blocks: Option<(usize, usize, usize)>,
}

impl GeneratorSet {
    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn is_3d(&self) -> bool {
        self.blocks.is_some()
    }

    /// Number of two-variable generators (the `u`/`B` list length). The 3D
    /// element `a = xyz` is not counted.
    pub fn m(&self) -> usize {
        if self.is_3d() {
            self.gens.len() - 1
        } else {
            self.gens.len()
        }
    }

    /// 3D block sizes `(r, s, t)`.
    pub fn block_sizes(&self) -> Option<(usize, usize, usize)> {
        self.blocks
    }

    /// Image of the i-th staircase generator, 1-based (`u_i` or `B_i`).
    pub fn b_image(&self, i: usize) -> &Monomial {
        assert!(i >= 1 && i <= self.m(), "generator index out of range");
        if self.is_3d() {
            &self.gens[i].image
        } else {
            &self.gens[i - 1].image
        }
    }

    /// Image of `a = xyz` in the 3D case.
    pub fn a_image(&self) -> Option<&Monomial> {
        self.blocks.map(|_| &self.gens[0].image)
    }

    /// The presentation ring: one graded variable per generator, carrying the
    /// order the relation construction needs. In 3D, variable 0 is `A`.
    pub fn presentation_ring(&self) -> AmbientRing {
        match self.blocks {
            None => {
                let grading = self.gens.iter().map(Generator::degree).collect();
                AmbientRing::new(grading, OrderSpec::Order2D)
            }
            Some((r, s, t)) => {
                let grading = self.gens.iter().map(Generator::degree).collect();
                AmbientRing::new(grading, OrderSpec::Order3D { r, s, t })
            }
        }
    }

    /// The presentation map: substitutes each variable's generator image.
    pub fn pi(&self, mon: &Monomial) -> Monomial {
        assert_eq!(mon.num_vars(), self.gens.len(), "dimension mismatch");
        let dim = self.weights.dim();
        let mut exps = vec![0u64; dim];
        for (gen, &e) in self.gens.iter().zip(mon.exponents()) {
            if e == 0 {
                continue;
            }
            for (acc, &img) in exps.iter_mut().zip(gen.image.exponents()) {
                *acc += u64::from(e) * u64::from(img);
            }
        }
        Monomial::new(
            exps.into_iter()
                .map(|e| u32::try_from(e).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Display names of the generators, e.g. `u1` or `a`, `b1`.
    pub fn gen_names(&self) -> Vec<String> {
        if self.is_3d() {
            let mut names = vec!["a".to_string()];
            names.extend((1..=self.m()).map(|i| format!("b{i}")));
            names
        } else {
            (1..=self.m()).map(|i| format!("u{i}")).collect()
        }
    }

    /// Display names of the presentation variables, e.g. `U1` or `A`, `B1`.
    pub fn var_names(&self) -> Vec<String> {
        if self.is_3d() {
            let mut names = vec!["A".to_string()];
            names.extend((1..=self.m()).map(|i| format!("B{i}")));
            names
        } else {
            (1..=self.m()).map(|i| format!("U{i}")).collect()
        }
    }

    /// Names of the ambient variables.
    pub fn ambient_names(&self) -> Vec<&'static str> {
        if self.weights.dim() == 2 {
            vec!["x", "y"]
        } else {
            vec!["x", "y", "z"]
        }
    }
}

/// Least non-negative `y` with `a*y = rhs (mod n)`, if any.
fn solve_linear_congruence(a: u64, rhs: u64, n: u64) -> Option<u64> {
    let g = a.gcd(&n);
    if rhs % g != 0 {
        return None;
    }
    let n_red = n / g;
    let a_red = (a / g) % n_red;
    let rhs_red = (rhs / g) % n_red;
    // Inverse of a_red mod n_red by extended Euclid.
    let (mut r0, mut r1) = (i128::from(n_red), i128::from(a_red));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "reduced coefficient must be a unit");
    let inv = s0.rem_euclid(i128::from(n_red)) as u64;
    Some((rhs_red as u128 * inv as u128 % n_red as u128) as u64)
}

/// Exponent pairs `(e1, e2)` of the minimal generators of the invariant ring
/// of F[v1, v2] where v1, v2 carry weights `w1, w2`, ordered by strictly
/// decreasing first exponent. Always starts with the pure power of v1 and
/// ends with the pure power of v2.
fn two_var_minimal_exponents(n: u64, w1: u64, w2: u64) -> Vec<(u32, u32)> {
    let a1 = n / n.gcd(&w1);
    // For each first-exponent a, the least second exponent making the pair
    // invariant; larger second exponents are multiples of the pure power away.
    let mut candidates: Vec<(u64, u64)> = Vec::new();
    for a in (1..=a1).rev() {
        let rhs = (n - (a % n) * (w1 % n) % n) % n;
        if let Some(b) = solve_linear_congruence(w2, rhs, n) {
            candidates.push((a, b));
        }
    }
    candidates.push((0, n / n.gcd(&w2)));
    // Keep the staircase: a candidate survives iff every later candidate
    // (smaller first exponent) has a strictly larger second exponent.
    let mut survivors = Vec::with_capacity(candidates.len());
    let mut min_b = u64::MAX;
    for &(a, b) in candidates.iter().rev() {
        if b < min_b {
            min_b = b;
            survivors.push((a, b));
        }
    }
    survivors.reverse();
    survivors
        .into_iter()
        .map(|(a, b)| {
            (
                u32::try_from(a).expect("exponent overflow"),
                u32::try_from(b).expect("exponent overflow"),
            )
        })
        .collect()
}

/// Minimal monomial generators for a two-weight system, ordered by strictly
/// decreasing x-exponent.
pub fn minimal_generators_2d(ws: &WeightSystem) -> Result<GeneratorSet, Error> {
    if ws.dim() != 2 {
        return Err(Error::WeightCount { got: ws.dim() });
    }
    let [b, c] = [ws.weights()[0], ws.weights()[1]];
    let gens = two_var_minimal_exponents(ws.n(), b, c)
        .into_iter()
        .map(|(a, y)| Generator {
            image: Monomial::new(vec![a, y]),
            block: Block::Pure2D,
        })
        .collect();
    let set = GeneratorSet {
        weights: ws.clone(),
        gens,
        blocks: None,
    };
    debug_assert!(check_staircase(&set));
    Ok(set)
}

/// Minimal monomial generators for a three-weight system: `xyz` followed by
/// the three staircase blocks, each pure power appearing in exactly one block.
pub fn minimal_generators_3d(ws: &WeightSystem) -> Result<GeneratorSet, Error> {
    if ws.dim() != 3 {
        return Err(Error::WeightCount { got: ws.dim() });
    }
    let n = ws.n();
    let [b, c, d] = [ws.weights()[0], ws.weights()[1], ws.weights()[2]];
    let xy = two_var_minimal_exponents(n, b, c);
    let yz = two_var_minimal_exponents(n, c, d);
    let zx = two_var_minimal_exponents(n, d, b);
    // The pure power shared by consecutive staircases must agree.
    assert_eq!(xy.last().unwrap().1, yz.first().unwrap().0, "y boundary");
    assert_eq!(yz.last().unwrap().1, zx.first().unwrap().0, "z boundary");
    assert_eq!(zx.last().unwrap().1, xy.first().unwrap().0, "x boundary");

    let mut gens = vec![Generator {
        image: Monomial::new(vec![1, 1, 1]),
        block: Block::ABlock,
    }];
    let r = xy.len() - 1;
    let s = yz.len() - 1;
    let t = zx.len() - 1;
    for &(e1, e2) in &xy[..r] {
        gens.push(Generator {
            image: Monomial::new(vec![e1, e2, 0]),
            block: Block::T1,
        });
    }
    for &(e1, e2) in &yz[..s] {
        gens.push(Generator {
            image: Monomial::new(vec![0, e1, e2]),
            block: Block::T2,
        });
    }
    for &(e1, e2) in &zx[..t] {
        gens.push(Generator {
            image: Monomial::new(vec![e2, 0, e1]),
            block: Block::T3,
        });
    }
    let set = GeneratorSet {
        weights: ws.clone(),
        gens,
        blocks: Some((r, s, t)),
    };
    debug_assert!(check_no_mutual_division(&set));
    Ok(set)
}

fn check_staircase(set: &GeneratorSet) -> bool {
    let gens = set.generators();
    gens.windows(2).all(|w| {
        w[0].image.exp(0) > w[1].image.exp(0) && w[0].image.exp(1) < w[1].image.exp(1)
    }) && gens.iter().all(|g| set.weights().is_invariant(&g.image))
}

fn check_no_mutual_division(set: &GeneratorSet) -> bool {
    let gens = set.generators();
    for (i, a) in gens.iter().enumerate() {
        if !set.weights().is_invariant(&a.image) || a.image.is_one() {
            return false;
        }
        for (j, b) in gens.iter().enumerate() {
            if i != j && a.image.divides(&b.image) {
                return false;
            }
        }
    }
    true
}
