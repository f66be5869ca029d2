//! Generator computations against brute-force oracles, and exact homology
//! against an independent rational-elimination implementation.

mod common;

use common::{brute_minimal_generators, generates_exactly_invariants, sorted_images};
use cycinv::{
    clique_complex, minimal_generators_2d, minimal_generators_3d, reduced_homology_dims,
    FieldChar, Graph, Monomial, SimplicialComplex, WeightSystem,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ws(n: u64, weights: &[u64]) -> WeightSystem {
    WeightSystem::new(n, weights.to_vec()).unwrap()
}

#[test]
fn frozen_2d_generator_sets_match_the_oracle() {
    // Expected values computed by brute_minimal_generators and frozen.
    let cases: Vec<(u64, [u64; 2], Vec<Vec<u32>>)> = vec![
        (6, [2, 3], vec![vec![0, 2], vec![3, 0]]),
        (3, [1, 2], vec![vec![0, 3], vec![1, 1], vec![3, 0]]),
        (
            10,
            [1, 2],
            vec![
                vec![0, 5],
                vec![2, 4],
                vec![4, 3],
                vec![6, 2],
                vec![8, 1],
                vec![10, 0],
            ],
        ),
    ];
    for (n, weights, expected) in cases {
        let system = ws(n, &weights);
        let set = minimal_generators_2d(&system).unwrap();
        let sorted = sorted_images(&set);
        let expected: Vec<Monomial> = expected.into_iter().map(Monomial::new).collect();
        assert_eq!(sorted, expected, "n = {n}, weights = {weights:?}");
        assert_eq!(sorted, brute_minimal_generators(&system));
    }
}

#[test]
fn frozen_3d_generator_set_matches_the_oracle() {
    let system = ws(3, &[1, 1, 1]);
    let set = minimal_generators_3d(&system).unwrap();
    assert_eq!(set.m(), 9);
    assert_eq!(sorted_images(&set), brute_minimal_generators(&system));
}

#[test]
fn exhaustive_small_2d_sweep_matches_the_oracle() {
    for n in 3..=8u64 {
        for b in 1..n {
            for c in 1..n {
                let system = ws(n, &[b, c]);
                let set = minimal_generators_2d(&system).unwrap();
                assert_eq!(
                    sorted_images(&set),
                    brute_minimal_generators(&system),
                    "n = {n}, b = {b}, c = {c}"
                );
            }
        }
    }
}

#[test]
fn exhaustive_small_3d_sweep_matches_the_oracle() {
    for n in 3..=8u64 {
        for b in 1..n {
            for c in 1..n {
                let d = (2 * n - b - c) % n;
                if d == 0 {
                    continue;
                }
                let system = ws(n, &[b, c, d]);
                let set = minimal_generators_3d(&system).unwrap();
                assert_eq!(
                    sorted_images(&set),
                    brute_minimal_generators(&system),
                    "n = {n}, weights = ({b}, {c}, {d})"
                );
            }
        }
    }
}

#[test]
fn generators_generate_exactly_the_invariants() {
    for (n, weights) in [
        (10u64, vec![1u64, 2]),
        (7, vec![3, 5]),
        (12, vec![4, 9]),
        (9, vec![2, 7]),
    ] {
        let system = ws(n, &weights);
        let set = minimal_generators_2d(&system).unwrap();
        assert!(
            generates_exactly_invariants(&set, 3 * n as u32),
            "n = {n}, weights = {weights:?}"
        );
    }
    for (n, weights) in [
        (6u64, vec![1u64, 2, 3]),
        (5, vec![1, 1, 3]),
        (8, vec![3, 6, 7]),
        (12, vec![1, 4, 7]),
    ] {
        let system = ws(n, &weights);
        let set = minimal_generators_3d(&system).unwrap();
        assert!(
            generates_exactly_invariants(&set, 3 * n as u32),
            "n = {n}, weights = {weights:?}"
        );
    }
}

/// Independent homology oracle: dense boundary matrices reduced over
/// arbitrary-precision rationals, no fraction-free tricks.
fn homology_dims_rational_oracle(complex: &SimplicialComplex) -> Vec<usize> {
    let faces = complex.faces_by_dim();
    if complex.vertex_count() == 0 || faces.is_empty() {
        return vec![1];
    }
    let maxdim = faces.len() - 1;
    let mut ranks = vec![0usize; maxdim + 2];
    ranks[0] = 1;
    for k in 1..=maxdim {
        let lower = &faces[k - 1];
        let upper = &faces[k];
        let mut mat: Vec<Vec<BigRational>> =
            vec![vec![BigRational::zero(); upper.len()]; lower.len()];
        for (col, &face) in upper.iter().enumerate() {
            let mut sign = BigRational::one();
            let mut rest = face;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let sub = face & !(1u64 << v);
                let row = lower.binary_search(&sub).unwrap();
                mat[row][col] = sign.clone();
                sign = -sign;
            }
        }
        ranks[k] = rational_rank(mat);
    }
    let mut dims = vec![0usize];
    for k in 0..=maxdim {
        dims.push(faces[k].len() - ranks[k] - ranks[k + 1]);
    }
    dims
}

fn rational_rank(mut mat: Vec<Vec<BigRational>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot = mat[rank][col].clone();
        for c in col..cols {
            mat[rank][c] = &mat[rank][c] / &pivot;
        }
        for r in 0..rows {
            if r != rank && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..cols {
                    let delta = &f * &mat[rank][c];
                    mat[r][c] = &mat[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[test]
fn homology_matches_the_rational_oracle_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let vertices = rng.gen_range(1..=6usize);
        let facet_count = rng.gen_range(1..=5usize);
        let mut facets: Vec<u64> = (0..facet_count)
            .map(|_| rng.gen_range(1..(1u64 << vertices)))
            .collect();
        // Make sure every vertex appears.
        for v in 0..vertices {
            if !facets.iter().any(|f| f >> v & 1 == 1) {
                facets.push(1 << v);
            }
        }
        let complex = SimplicialComplex::new(vertices, facets);
        let got = reduced_homology_dims(&complex, FieldChar::Zero).unwrap();
        let expected = homology_dims_rational_oracle(&complex);
        assert_eq!(got, expected, "facets {:?}", complex.facets());
    }
}

#[test]
fn homology_matches_the_oracle_on_random_clique_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let vertices = rng.gen_range(2..=7usize);
        let mut edges = Vec::new();
        for a in 0..vertices {
            for b in (a + 1)..vertices {
                if rng.gen_bool(0.4) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(vertices, &edges).unwrap();
        let complex = clique_complex(&g);
        assert_eq!(
            reduced_homology_dims(&complex, FieldChar::Zero).unwrap(),
            homology_dims_rational_oracle(&complex)
        );
    }
}
