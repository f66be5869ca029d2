//! Simplicial complexes by facet list, clique complexes, and reduced
//! simplicial homology over an exact field (rationals or a prime field).

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::Graph;
pub use crate::ring::FieldChar;

/// A simplicial complex on vertices `0..vertex_count`, stored by its facets
/// (maximal faces) as bitmasks. Downward closure is implicit; isolated
/// vertices appear as singleton facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn new(vertex_count: usize, facets: Vec<u64>) -> Self {
        SimplicialComplex {
            vertex_count,
            facets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn dimension(&self) -> Option<usize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .map(|k| k - 1)
    }

    /// All nonempty faces grouped by dimension: `faces[k]` is the sorted list
    /// of k-dimensional faces.
    pub fn faces_by_dim(&self) -> Vec<Vec<u64>> {
        let mut all: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            // Every nonempty submask of a facet is a face.
            let mut sub = f;
            loop {
                if sub != 0 {
                    all.insert(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let maxdim = match self.dimension() {
            Some(d) => d,
            None => return Vec::new(),
        };
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); maxdim + 1];
        for face in all {
            by_dim[face.count_ones() as usize - 1].push(face);
        }
        for level in &mut by_dim {
            level.sort_unstable();
        }
        by_dim
    }
}

/// The clique complex of a simple graph: facets are the maximal cliques
/// (Bron-Kerbosch with pivoting).
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let m = g.vertex_count();
    let mut facets = Vec::new();
    if m > 0 {
        bron_kerbosch(g, 0, crate::graph::mask_all(m), 0, &mut facets);
    }
    facets.sort_unstable();
    SimplicialComplex::new(m, facets)
}

fn bron_kerbosch(g: &Graph, r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the vertex of p | x with the most neighbours in p.
    let mut pivot = None;
    let mut best = 0u32;
    let mut candidates = p | x;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let score = (g.neighbors_mask(v) & p).count_ones();
        if pivot.is_none() || score > best {
            pivot = Some(v);
            best = score;
        }
    }
    let mut ext = p & !g.neighbors_mask(pivot.unwrap());
    let mut p = p;
    let mut x = x;
    while ext != 0 {
        let v = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        let vbit = 1u64 << v;
        let nv = g.neighbors_mask(v);
        bron_kerbosch(g, r | vbit, p & nv, x & nv, out);
        p &= !vbit;
        x |= vbit;
    }
}

/// Dimensions of the reduced homology groups over the given field, indexed
/// from degree -1: the returned vector holds `dim H~_{-1}, dim H~_0, ...` up
/// to the dimension of the complex.
///
/// The complex on zero vertices (only the empty face) has `dim H~_{-1} = 1`;
/// any complex with a vertex has `dim H~_{-1} = 0`.
pub fn reduced_homology_dims(
    complex: &SimplicialComplex,
    field: FieldChar,
) -> Result<Vec<usize>, Error> {
    let field = field.validate()?;
    let faces = complex.faces_by_dim();
    if complex.vertex_count() == 0 || faces.is_empty() {
        // The empty complex: only the empty face, one reduced class below
        // degree zero.
        return Ok(vec![1]);
    }
    let maxdim = faces.len() - 1;

    // ranks[k] = rank of the boundary map from k-faces to (k-1)-faces,
    // with the augmentation map at k = 0.
    let mut ranks = vec![0usize; maxdim + 2];
    ranks[0] = 1; // augmentation: at least one vertex exists
    for k in 1..=maxdim {
        let rows = build_boundary(&faces[k - 1], &faces[k]);
        let cols = faces[k - 1].len();
        ranks[k] = match field {
            FieldChar::Zero => rank_bareiss(rows, cols),
            FieldChar::Prime(p) => rank_mod_p(rows, cols, p),
        };
    }

    let mut dims = Vec::with_capacity(maxdim + 2);
    dims.push(0); // H~_{-1} = ker(0) / im(augmentation) = 1 - 1
    for k in 0..=maxdim {
        let cycles = faces[k].len() - ranks[k];
        dims.push(cycles - ranks[k + 1]);
    }
    Ok(dims)
}

/// Rows of the boundary matrix: one row per k-face, entries (column, sign)
/// over the (k-1)-faces.
fn build_boundary(lower: &[u64], upper: &[u64]) -> Vec<Vec<(usize, i64)>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    upper
        .iter()
        .map(|&face| {
            let mut row = Vec::new();
            let mut sign = 1i64;
            let mut rest = face;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let sub = face & !(1u64 << v);
                let col = *index.get(&sub).expect("missing boundary face");
                row.push((col, sign));
                sign = -sign;
            }
            row
        })
        .collect()
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
fn rank_bareiss(rows: Vec<Vec<(usize, i64)>>, cols: usize) -> usize {
    let mut mat: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); cols];
            for (c, v) in row {
                dense[c] = BigInt::from(v);
            }
            dense
        })
        .collect();
    // The boundary rows are indexed by upper faces; transpose orientation is
    // irrelevant for rank.
    let nrows = mat.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let pivot = mat[rank][col].clone();
        for r in (rank + 1)..nrows {
            let factor = mat[r][col].clone();
            for c in (col + 1)..cols {
                let val = &pivot * &mat[r][c] - &factor * &mat[rank][c];
                debug_assert!((&val % &prev).is_zero(), "inexact Bareiss division");
                mat[r][c] = &val / &prev;
            }
            mat[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over the prime field F_p by standard elimination.
fn rank_mod_p(rows: Vec<Vec<(usize, i64)>>, cols: usize, p: u64) -> usize {
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut mat: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|row| {
            let mut dense = vec![0u64; cols];
            for (c, v) in row {
                dense[c] = reduce(v);
            }
            dense
        })
        .collect();
    let nrows = mat.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| mat[r][col] % p != 0) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let inv = mod_inverse(mat[rank][col], p);
        for c in col..cols {
            mat[rank][c] = mat[rank][c] * inv % p;
        }
        for r in 0..nrows {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in col..cols {
                    mat[r][c] = (mat[r][c] + (p - factor) * mat[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
