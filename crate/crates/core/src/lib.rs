//! Exact computational algebra for invariant rings of cyclic groups acting
//! diagonally on two- and three-dimensional spaces.
//!
//! The pipeline: a [`WeightSystem`] fixes the group action; [`gens`] computes
//! the minimal monomial generators of the invariant ring; [`relations`] builds
//! the binomial relation ideal and certifies that the stated generators form a
//! Groebner basis; [`betti`] assembles graded Betti tables, both from the
//! closed-form rank formulas and independently from subset-wise simplicial
//! homology of the complement graph (the edge-ideal route), and cross-checks
//! the two.
//!
//! Everything is exact: integer exponents, bigint ranks, no floating point.

pub mod betti;
pub mod binomial;
pub mod complex;
pub mod error;
pub mod gens;
pub mod graph;
pub mod hilbert;
pub mod monomial;
pub mod relations;
pub mod ring;
pub mod weights;

pub use betti::{
    closed_form_betti, closed_form_invariant_2d, closed_form_invariant_3d, hochster_betti,
    invariant_ring_betti, linear_strand_betti, purity_check, BettiTable, Convention, GradingKind,
    InvariantBetti,
};
pub use binomial::{normal_form, s_pair_check, s_pair_reduces, Binomial, SPairCheck};
pub use complex::{clique_complex, reduced_homology_dims, SimplicialComplex};
pub use error::Error;
pub use gens::{minimal_generators_2d, minimal_generators_3d, Block, Generator, GeneratorSet};
pub use graph::{build_xs, Graph};
pub use hilbert::{
    hilbert_numerator_check, hilbert_standard_check, invariant_series, standard_monomial_series,
    HilbertMismatch,
};
pub use monomial::Monomial;
pub use relations::{
    build_relations_2d, build_relations_3d, factor_into, groebner_verify, Factorization,
    GroebnerReport, Relation,
};
pub use ring::{AmbientRing, FieldChar, OrderSpec};
pub use weights::WeightSystem;
