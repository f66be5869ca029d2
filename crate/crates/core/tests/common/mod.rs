//! Shared brute-force oracles, independent of the library's algorithms.
#![allow(dead_code)] // each test binary uses a different subset

use std::collections::HashSet;

use cycinv::{GeneratorSet, Monomial, WeightSystem};

/// Every monomial of the given dimension with total degree in `1..=dmax`.
pub fn monomials_up_to(dim: usize, dmax: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    match dim {
        2 => {
            for d in 1..=dmax {
                for a in 0..=d {
                    out.push(Monomial::new(vec![a, d - a]));
                }
            }
        }
        3 => {
            for d in 1..=dmax {
                for a in 0..=d {
                    for b in 0..=(d - a) {
                        out.push(Monomial::new(vec![a, b, d - a - b]));
                    }
                }
            }
        }
        _ => panic!("unsupported dimension"),
    }
    out
}

/// Minimal generators by the definition: invariant monomials (degree at most
/// n suffices) with no proper invariant divisor besides 1.
pub fn brute_minimal_generators(ws: &WeightSystem) -> Vec<Monomial> {
    let n = u32::try_from(ws.n()).unwrap();
    let mut gens: Vec<Monomial> = Vec::new();
    for mon in monomials_up_to(ws.dim(), n) {
        if !ws.is_invariant(&mon) {
            continue;
        }
        if proper_divisors(&mon)
            .iter()
            .all(|d| !ws.is_invariant(d))
        {
            gens.push(mon);
        }
    }
    gens.sort();
    gens
}

/// All divisors other than 1 and the monomial itself.
fn proper_divisors(mon: &Monomial) -> Vec<Monomial> {
    let exps = mon.exponents();
    let mut out = Vec::new();
    let mut current = vec![0u32; exps.len()];
    loop {
        let is_one = current.iter().all(|&e| e == 0);
        let is_self = current == exps;
        if !is_one && !is_self {
            out.push(Monomial::new(current.clone()));
        }
        // Odometer increment bounded by exps.
        let mut i = 0;
        loop {
            if i == current.len() {
                return out;
            }
            if current[i] < exps[i] {
                current[i] += 1;
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// Sorted images of a generator set, for set comparison against the oracle.
pub fn sorted_images(set: &GeneratorSet) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = set
        .generators()
        .iter()
        .map(|g| g.image.clone())
        .collect();
    v.sort();
    v
}

/// Checks that the products of generators reach exactly the invariant
/// monomials up to degree `dmax` (and nothing else).
pub fn generates_exactly_invariants(set: &GeneratorSet, dmax: u32) -> bool {
    let ws = set.weights();
    let dim = ws.dim();
    let mut reachable: HashSet<Vec<u32>> = HashSet::new();
    reachable.insert(vec![0; dim]);
    let mut frontier: Vec<Monomial> = vec![Monomial::one(dim)];
    while let Some(base) = frontier.pop() {
        for g in set.generators() {
            let next = base.mul(&g.image);
            if next.polydeg() > u64::from(dmax) {
                continue;
            }
            if reachable.insert(next.exponents().to_vec()) {
                frontier.push(next);
            }
        }
    }
    for mon in monomials_up_to(dim, dmax) {
        let reached = reachable.contains(mon.exponents());
        if reached != ws.is_invariant(&mon) {
            return false;
        }
    }
    true
}
