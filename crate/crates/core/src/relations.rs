//! The relation ideal: one binomial `R_{i,j}` per generator pair at index
//! distance at least 2, with quadratic lead `U_iU_j` (resp. `B_iB_j`), plus
//! the S-pair certification that these form a Groebner basis.

use rayon::prelude::*;

use crate::binomial::{s_pair_check_indexed, Binomial, ReducerIndex};
use crate::gens::GeneratorSet;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// How a relation's tail was assembled: the exponents of the factored
/// cofactor (1-based generator indices) and, for cross-block relations, the
/// power of `A` pulled out first. `used_fallback` marks tails where the
/// greedy largest-index-first factorization dead-ended and the bounded
/// depth-first search finished the job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub a_exponent: u32,
    pub exponents: Vec<(usize, u32)>,
    pub used_fallback: bool,
}

/// A single relation `R_{i,j}` in the presentation ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub i: usize,
    pub j: usize,
    pub binomial: Binomial,
    pub factorization: Factorization,
}

impl Relation {
    pub fn render(&self, var_names: &[&str]) -> String {
        format!(
            "R_{{{},{}}} = {}",
            self.i,
            self.j,
            self.binomial.render(var_names)
        )
    }
}

/// Finds non-negative exponents writing `target` as a product over the
/// `allowed` generators (pairs of 1-based index and image), or `None` when no
/// factorization exists.
///
/// Greedy pass first: repeatedly divide by the allowed generator of largest
/// list position that divides the remainder. If the greedy pass leaves a
/// remainder, a depth-first search over exponent vectors (larger positions
/// first, larger exponents first) takes over; the returned flag records
/// whether the fallback was needed.
pub fn factor_into(
    target: &Monomial,
    allowed: &[(usize, &Monomial)],
) -> Option<(Vec<(usize, u32)>, bool)> {
    let mut exps = vec![0u32; allowed.len()];
    let mut rem = target.clone();
    for k in (0..allowed.len()).rev() {
        while allowed[k].1.divides(&rem) {
            rem = rem.try_div(allowed[k].1).unwrap();
            exps[k] += 1;
        }
    }
    if rem.is_one() {
        return Some((collect_exponents(allowed, &exps), false));
    }
    exps.iter_mut().for_each(|e| *e = 0);
    if dfs_factor(target, allowed.len(), allowed, &mut exps) {
        Some((collect_exponents(allowed, &exps), true))
    } else {
        None
    }
}

fn collect_exponents(allowed: &[(usize, &Monomial)], exps: &[u32]) -> Vec<(usize, u32)> {
    allowed
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|((idx, _), &e)| (*idx, e))
        .collect()
}

fn dfs_factor(
    rem: &Monomial,
    k: usize,
    allowed: &[(usize, &Monomial)],
    exps: &mut [u32],
) -> bool {
    if rem.is_one() {
        exps[..k].iter_mut().for_each(|e| *e = 0);
        return true;
    }
    if k == 0 {
        return false;
    }
    let g = allowed[k - 1].1;
    let mut max_e = 0u32;
    let mut probe = rem.clone();
    while g.divides(&probe) {
        probe = probe.try_div(g).unwrap();
        max_e += 1;
    }
    for e in (0..=max_e).rev() {
        let mut r = rem.clone();
        for _ in 0..e {
            r = r.try_div(g).unwrap();
        }
        if dfs_factor(&r, k - 1, allowed, exps) {
            exps[k - 1] = e;
            return true;
        }
    }
    false
}

fn assemble(
    gens: &GeneratorSet,
    ring: &AmbientRing,
    i: usize,
    j: usize,
    lead: Monomial,
    tail: Monomial,
    factorization: Factorization,
) -> Relation {
    let wdeg_lead = ring.wdeg(&lead);
    let wdeg_tail = ring.wdeg(&tail);
    assert_eq!(
        wdeg_lead, wdeg_tail,
        "relation R_{{{i},{j}}} is not homogeneous"
    );
    debug_assert_eq!(gens.pi(&lead), gens.pi(&tail), "presentation map mismatch");
    let binomial =
        Binomial::difference(lead.clone(), tail, ring).expect("relation collapsed to zero");
    assert_eq!(
        binomial.lead(),
        &lead,
        "lead term of R_{{{i},{j}}} is not the variable pair"
    );
    Relation {
        i,
        j,
        binomial,
        factorization,
    }
}

/// Relations of a 2D generator set: for every pair `j - i >= 2`,
/// `R_{i,j} = U_iU_j - U_{i+1} * (factorization of (u_i u_j)/u_{i+1} over the
/// generators strictly between them)`. Returns the empty list when `m <= 2`.
pub fn build_relations_2d(gens: &GeneratorSet) -> Vec<Relation> {
    assert!(!gens.is_3d(), "expected a 2D generator set");
    let m = gens.m();
    let ring = gens.presentation_ring();
    let mut out = Vec::new();
    if m < 3 {
        return out;
    }
    for i in 1..=m {
        for j in (i + 2)..=m {
            let alpha = gens
                .b_image(i)
                .mul(gens.b_image(j))
                .try_div(gens.b_image(i + 1))
                .expect("u_{i+1} must divide u_i * u_j");
            let window: Vec<(usize, &Monomial)> =
                ((i + 1)..j).map(|k| (k, gens.b_image(k))).collect();
            let (exponents, used_fallback) = factor_into(&alpha, &window)
                .unwrap_or_else(|| panic!("no factorization inside the window for R_{{{i},{j}}}"));
            let mut tail = Monomial::var(i, m); // U_{i+1} at 0-based index i
            for &(k, e) in &exponents {
                tail = tail.mul(&Monomial::var(k - 1, m).pow(e));
            }
            let lead = Monomial::var(i - 1, m).mul(&Monomial::var(j - 1, m));
            out.push(assemble(
                gens,
                &ring,
                i,
                j,
                lead,
                tail,
                Factorization {
                    a_exponent: 0,
                    exponents,
                    used_fallback,
                },
            ));
        }
    }
    assert_eq!(out.len(), (m - 1) * (m - 2) / 2, "2D relation count");
    out
}

/// Distance on the vertices of a labelled m-gon.
pub fn cyclic_distance(i: usize, j: usize, m: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(m - d)
}

/// Relations of a 3D generator set: for every pair of cyclic distance at
/// least 2, either the 2D construction inside the common staircase block, or
/// `B_iB_j - A^e * (block factorization of the two-variable remainder)`.
pub fn build_relations_3d(gens: &GeneratorSet) -> Vec<Relation> {
    let (r, s, t) = gens.block_sizes().expect("expected a 3D generator set");
    let m = r + s + t;
    let ring = gens.presentation_ring();
    let nvars = m + 1;

    // The three blocks in their own staircase order; each is the complete 2D
    // generator list for its variable pair.
    let t1: Vec<usize> = (1..=r + 1).collect();
    let t2: Vec<usize> = (r + 1..=r + s + 1).collect();
    let t3: Vec<usize> = (r + s + 1..=m).chain([1]).collect();

    let common_block = |i: usize, j: usize| -> Option<&Vec<usize>> {
        let in_t1 = |k: usize| k <= r + 1;
        let in_t2 = |k: usize| (r + 1..=r + s + 1).contains(&k);
        let in_t3 = |k: usize| k == 1 || k >= r + s + 1;
        if in_t1(i) && in_t1(j) {
            Some(&t1)
        } else if in_t2(i) && in_t2(j) {
            Some(&t2)
        } else if in_t3(i) && in_t3(j) {
            Some(&t3)
        } else {
            None
        }
    };

    let mut out = Vec::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            if cyclic_distance(i, j, m) < 2 {
                continue;
            }
            let lead = Monomial::var(i, nvars).mul(&Monomial::var(j, nvars));
            let relation = if let Some(block) = common_block(i, j) {
                let p = block.iter().position(|&k| k == i).unwrap();
                let q = block.iter().position(|&k| k == j).unwrap();
                let (p, q) = (p.min(q), p.max(q));
                assert!(q - p >= 2, "in-block pair at distance < 2");
                let alpha = gens
                    .b_image(block[p])
                    .mul(gens.b_image(block[q]))
                    .try_div(gens.b_image(block[p + 1]))
                    .expect("successor must divide the in-block product");
                let window: Vec<(usize, &Monomial)> = block[(p + 1)..q]
                    .iter()
                    .map(|&k| (k, gens.b_image(k)))
                    .collect();
                let (exponents, used_fallback) = factor_into(&alpha, &window).unwrap_or_else(
                    || panic!("no factorization inside the window for R_{{{i},{j}}}"),
                );
                let mut tail = Monomial::var(block[p + 1], nvars);
                for &(k, e) in &exponents {
                    tail = tail.mul(&Monomial::var(k, nvars).pow(e));
                }
                assemble(
                    gens,
                    &ring,
                    i,
                    j,
                    lead,
                    tail,
                    Factorization {
                        a_exponent: 0,
                        exponents,
                        used_fallback,
                    },
                )
            } else {
                // Cross-block: the image product covers all three variables.
                let prod = gens.b_image(i).mul(gens.b_image(j));
                let e = *prod.exponents().iter().min().unwrap();
                assert!(e >= 1, "cross-block product must be divisible by xyz");
                let rem = prod
                    .try_div(&Monomial::new(vec![1, 1, 1]).pow(e))
                    .unwrap();
                let block: &[usize] = if rem.exp(2) == 0 {
                    &t1
                } else if rem.exp(0) == 0 {
                    &t2
                } else {
                    assert_eq!(rem.exp(1), 0, "remainder must miss a variable");
                    &t3
                };
                let allowed: Vec<(usize, &Monomial)> =
                    block.iter().map(|&k| (k, gens.b_image(k))).collect();
                let (exponents, used_fallback) = factor_into(&rem, &allowed).unwrap_or_else(
                    || panic!("no block factorization of the remainder for R_{{{i},{j}}}"),
                );
                let mut tail = Monomial::var(0, nvars).pow(e);
                for &(k, ex) in &exponents {
                    tail = tail.mul(&Monomial::var(k, nvars).pow(ex));
                }
                assemble(
                    gens,
                    &ring,
                    i,
                    j,
                    lead,
                    tail,
                    Factorization {
                        a_exponent: e,
                        exponents,
                        used_fallback,
                    },
                )
            };
            out.push(relation);
        }
    }
    assert_eq!(out.len(), m * (m - 3) / 2, "3D relation count");
    out
}

/// Report of the pairwise S-polynomial certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerReport {
    pub pass: bool,
    pub pairs_checked: u64,
    pub pairs_skipped_coprime: u64,
    /// `(i, j)` labels of the relation pairs whose S-polynomial did not
    /// reduce to zero.
    pub failing_pairs: Vec<((usize, usize), (usize, usize))>,
}

/// Runs the S-pair test over every unordered pair of relations. Passing
/// certifies that the relations form a Groebner basis of the ideal they
/// generate.
pub fn groebner_verify(relations: &[Relation], ring: &AmbientRing) -> GroebnerReport {
    let basis: Vec<Binomial> = relations.iter().map(|r| r.binomial.clone()).collect();
    let index = ReducerIndex::new(&basis);
    let per_row: Vec<(u64, u64, Vec<(usize, usize)>)> = (0..basis.len())
        .into_par_iter()
        .map(|p| {
            let mut checked = 0;
            let mut skipped = 0;
            let mut failures = Vec::new();
            for q in (p + 1)..basis.len() {
                let chk = s_pair_check_indexed(&basis[p], &basis[q], &index, ring);
                if chk.skipped_coprime {
                    skipped += 1;
                } else {
                    checked += 1;
                    if !chk.reduces_to_zero {
                        failures.push((p, q));
                    }
                }
            }
            (checked, skipped, failures)
        })
        .collect();
    let mut report = GroebnerReport {
        pass: true,
        pairs_checked: 0,
        pairs_skipped_coprime: 0,
        failing_pairs: Vec::new(),
    };
    for (checked, skipped, failures) in per_row {
        report.pairs_checked += checked;
        report.pairs_skipped_coprime += skipped;
        for (p, q) in failures {
            report
                .failing_pairs
                .push(((relations[p].i, relations[p].j), (relations[q].i, relations[q].j)));
        }
    }
    report.failing_pairs.sort_unstable();
    report.pass = report.failing_pairs.is_empty();
    report
}
