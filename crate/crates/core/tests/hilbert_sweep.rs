//! Hilbert-series identities swept over small group orders: the
//! standard-monomial count against direct invariant enumeration for every
//! system with n <= 12, and the Betti-numerator identity wherever subset
//! enumeration is affordable.

use cycinv::{
    build_relations_2d, build_relations_3d, hilbert_numerator_check, hilbert_standard_check,
    invariant_ring_betti, minimal_generators_2d, minimal_generators_3d, FieldChar, WeightSystem,
};

#[test]
fn standard_monomial_identity_all_2d_systems_up_to_12() {
    for n in 3..=12u64 {
        for b in 1..n {
            for c in 1..n {
                let ws = WeightSystem::new(n, vec![b, c]).unwrap();
                let gens = minimal_generators_2d(&ws).unwrap();
                let rels = build_relations_2d(&gens);
                assert_eq!(
                    hilbert_standard_check(&gens, &rels, 3 * n),
                    Ok(()),
                    "n = {n}, weights = ({b}, {c})"
                );
            }
        }
    }
}

#[test]
fn standard_monomial_identity_all_3d_systems_up_to_12() {
    for n in 3..=12u64 {
        for b in 1..n {
            for c in 1..n {
                let d = (2 * n - b - c) % n;
                if d == 0 {
                    continue;
                }
                let ws = WeightSystem::new(n, vec![b, c, d]).unwrap();
                let gens = minimal_generators_3d(&ws).unwrap();
                let rels = build_relations_3d(&gens);
                assert_eq!(
                    hilbert_standard_check(&gens, &rels, 3 * n),
                    Ok(()),
                    "n = {n}, weights = ({b}, {c}, {d})"
                );
            }
        }
    }
}

#[test]
fn numerator_identity_where_enumeration_is_affordable() {
    // Subset enumeration costs 2^m homology computations, so the weighted
    // table is only swept for m <= 14 here; the standard-monomial identity
    // above covers every system.
    let mut swept = 0;
    for n in 3..=12u64 {
        for b in 1..n {
            for c in 1..n {
                let ws = WeightSystem::new(n, vec![b, c]).unwrap();
                let gens = minimal_generators_2d(&ws).unwrap();
                if gens.m() > 14 {
                    continue;
                }
                let out = invariant_ring_betti(&ws, FieldChar::Zero).unwrap();
                assert_eq!(
                    hilbert_numerator_check(&out.generators, &out.weighted, 3 * n),
                    Ok(()),
                    "2D n = {n}, weights = ({b}, {c})"
                );
                swept += 1;
            }
        }
        for b in 1..n {
            for c in 1..n {
                let d = (2 * n - b - c) % n;
                if d == 0 {
                    continue;
                }
                let ws = WeightSystem::new(n, vec![b, c, d]).unwrap();
                let gens = minimal_generators_3d(&ws).unwrap();
                if gens.m() > 14 {
                    continue;
                }
                let out = invariant_ring_betti(&ws, FieldChar::Zero).unwrap();
                assert_eq!(
                    hilbert_numerator_check(&out.generators, &out.weighted, 3 * n),
                    Ok(()),
                    "3D n = {n}, weights = ({b}, {c}, {d})"
                );
                swept += 1;
            }
        }
    }
    assert!(swept > 500, "sweep unexpectedly small: {swept}");
}
