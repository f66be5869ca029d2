//! Hilbert-series cross-checks.
//!
//! Two identities tie the machinery together degree by degree:
//!
//! 1. counting invariant monomials of the ambient ring equals counting
//!    standard monomials of the presentation ring modulo the lead terms
//!    (supports must avoid every lead pair), and
//! 2. the alternating sum of the weighted Betti table is the invariant-count
//!    series times `prod (1 - t^deg)` over the generators.
//!
//! Both are checked with exact integer series arithmetic, truncated at a
//! degree bound.

use num_traits::ToPrimitive;

use crate::betti::BettiTable;
use crate::gens::GeneratorSet;
use crate::relations::Relation;
use crate::weights::WeightSystem;

/// A failed degree: the two sides of an identity at that degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertMismatch {
    pub degree: u64,
    pub lhs: i128,
    pub rhs: i128,
}

/// Number of invariant monomials of each total degree `0..=dmax`, by direct
/// enumeration.
pub fn invariant_series(ws: &WeightSystem, dmax: u64) -> Vec<i128> {
    let n = ws.n();
    let w = ws.weights();
    let mut out = vec![0i128; dmax as usize + 1];
    match w {
        [b, c] => {
            for d in 0..=dmax {
                let mut count = 0i128;
                for a in 0..=d {
                    if (a % n * (b % n) + (d - a) % n * (c % n)) % n == 0 {
                        count += 1;
                    }
                }
                out[d as usize] = count;
            }
        }
        [b, c, e] => {
            for d in 0..=dmax {
                let mut count = 0i128;
                for a in 0..=d {
                    for y in 0..=(d - a) {
                        let z = d - a - y;
                        if (a % n * (b % n) + y % n * (c % n) + z % n * (e % n)) % n == 0 {
                            count += 1;
                        }
                    }
                }
                out[d as usize] = count;
            }
        }
        _ => unreachable!("weight systems have 2 or 3 weights"),
    }
    out
}

/// Number of monomials of each weighted degree `0..=dmax` in the
/// presentation ring whose support avoids every relation lead pair. In 3D
/// the `A` variable is unconstrained (no lead involves it).
pub fn standard_monomial_series(
    gens: &GeneratorSet,
    relations: &[Relation],
    dmax: u64,
) -> Vec<i128> {
    let m = gens.m();
    let degs: Vec<u64> = (1..=m).map(|i| gens.b_image(i).polydeg()).collect();
    let mut forbidden = vec![0u64; m];
    for r in relations {
        forbidden[r.i - 1] |= 1 << (r.j - 1);
        forbidden[r.j - 1] |= 1 << (r.i - 1);
    }
    let size = dmax as usize + 1;
    let mut total = vec![0i128; size];
    // Depth-first over supports that form independent sets of the lead
    // graph; `ways[d]` counts exponent vectors of weighted degree d with
    // every chosen variable appearing at least once.
    let mut stack: Vec<(usize, u64, Vec<i128>)> = Vec::new();
    let mut base = vec![0i128; size];
    base[0] = 1;
    stack.push((0, 0, base));
    while let Some((start, mask, ways)) = stack.pop() {
        for (d, &w) in ways.iter().enumerate() {
            total[d] += w;
        }
        for v in start..m {
            if forbidden[v] & mask != 0 {
                continue;
            }
            let step = degs[v] as usize;
            if step > dmax as usize {
                continue;
            }
            // ways_v[d] = sum over e >= 1 of ways[d - e*step]; computed as a
            // running geometric accumulation.
            let mut ways_v = vec![0i128; size];
            for d in step..size {
                ways_v[d] = ways[d - step] + ways_v[d - step];
            }
            if ways_v.iter().any(|&w| w != 0) {
                stack.push((v + 1, mask | (1 << v), ways_v));
            }
        }
    }
    if gens.is_3d() {
        // Convolve with the free A variable of degree 3.
        let mut with_a = vec![0i128; size];
        for d in 0..size {
            let mut acc = 0i128;
            let mut h = 0usize;
            while 3 * h <= d {
                acc += total[d - 3 * h];
                h += 1;
            }
            with_a[d] = acc;
        }
        return with_a;
    }
    total
}

/// Degree-by-degree comparison of the invariant count against the
/// standard-monomial count, up to `dmax`.
pub fn hilbert_standard_check(
    gens: &GeneratorSet,
    relations: &[Relation],
    dmax: u64,
) -> Result<(), HilbertMismatch> {
    let lhs = invariant_series(gens.weights(), dmax);
    let rhs = standard_monomial_series(gens, relations, dmax);
    for d in 0..=dmax as usize {
        if lhs[d] != rhs[d] {
            return Err(HilbertMismatch {
                degree: d as u64,
                lhs: lhs[d],
                rhs: rhs[d],
            });
        }
    }
    Ok(())
}

/// Truncated product of two integer series.
fn series_mul(a: &[i128], b: &[i128], dmax: u64) -> Vec<i128> {
    let size = dmax as usize + 1;
    let mut out = vec![0i128; size];
    for (i, &ai) in a.iter().enumerate().take(size) {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(size - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Checks that the alternating sum of the weighted quotient table equals the
/// invariant series multiplied by `prod (1 - t^deg g)` over all generators
/// (including `xyz` in 3D), for every degree up to `dmax`.
pub fn hilbert_numerator_check(
    gens: &GeneratorSet,
    weighted_quotient: &BettiTable,
    dmax: u64,
) -> Result<(), HilbertMismatch> {
    let size = dmax as usize + 1;
    let mut numerator = vec![0i128; size];
    for (i, j, rank) in weighted_quotient.entries() {
        if j <= dmax {
            let r = rank
                .to_i128()
                .expect("rank too large for the series check");
            numerator[j as usize] += if i % 2 == 0 { r } else { -r };
        }
    }
    let mut rhs = invariant_series(gens.weights(), dmax);
    for g in gens.generators() {
        let d = g.degree();
        let mut factor = vec![0i128; size];
        factor[0] = 1;
        if d <= dmax {
            factor[d as usize] = -1;
        }
        rhs = series_mul(&rhs, &factor, dmax);
    }
    for d in 0..size {
        if numerator[d] != rhs[d] {
            return Err(HilbertMismatch {
                degree: d as u64,
                lhs: numerator[d],
                rhs: rhs[d],
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::invariant_ring_betti;
    use crate::complex::FieldChar;
    use crate::gens::{minimal_generators_2d, minimal_generators_3d};
    use crate::relations::{build_relations_2d, build_relations_3d};

    fn ws(n: u64, weights: &[u64]) -> WeightSystem {
        WeightSystem::new(n, weights.to_vec()).unwrap()
    }

    #[test]
    fn invariant_counts_z10() {
        let series = invariant_series(&ws(10, &[1, 2]), 10);
        assert_eq!(series[0], 1); // the empty monomial
        assert_eq!(series[5], 1); // y^5
        assert_eq!(series[9], 1); // x^8y
        assert_eq!(series[10], 2); // x^10 and y^10
    }

    #[test]
    fn standard_count_matches_invariants_z10() {
        let gens = minimal_generators_2d(&ws(10, &[1, 2])).unwrap();
        let rels = build_relations_2d(&gens);
        assert_eq!(hilbert_standard_check(&gens, &rels, 30), Ok(()));
    }

    #[test]
    fn standard_count_matches_invariants_z6_3d() {
        let gens = minimal_generators_3d(&ws(6, &[1, 2, 3])).unwrap();
        let rels = build_relations_3d(&gens);
        assert_eq!(hilbert_standard_check(&gens, &rels, 18), Ok(()));
    }

    #[test]
    fn standard_count_matches_in_degenerate_case() {
        let gens = minimal_generators_2d(&ws(6, &[2, 3])).unwrap();
        assert_eq!(hilbert_standard_check(&gens, &[], 18), Ok(()));
    }

    #[test]
    fn numerator_identity_for_both_golden_examples() {
        let out = invariant_ring_betti(&ws(10, &[1, 2]), FieldChar::Zero).unwrap();
        assert_eq!(
            hilbert_numerator_check(&out.generators, &out.weighted, 45),
            Ok(())
        );
        let out = invariant_ring_betti(&ws(6, &[1, 2, 3]), FieldChar::Zero).unwrap();
        assert_eq!(
            hilbert_numerator_check(&out.generators, &out.weighted, 30),
            Ok(())
        );
    }
}
