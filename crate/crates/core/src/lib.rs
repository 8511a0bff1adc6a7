//! Exact computation of graded Betti numbers of Stanley-Reisner rings of
//! simplicial complexes, together with the closed-form upper bounds and
//! extremal constructions available for balanced complexes.
//!
//! The crate is organised in five layers:
//!
//! * [`complex`] - simplicial complexes on at most 63 vertices (faces are
//!   bitmasks), standard queries (f/h-vectors, skeleta, joins, links,
//!   induced subcomplexes) and the generator zoo (complete multipartite
//!   clique complexes, cross-polytope boundaries, stacked spheres,
//!   cross-polytopal stacked spheres with pluggable gluing plans).
//! * [`homology`] - exact reduced simplicial homology over GF(2)
//!   (word-packed elimination), GF(p) for primes p < 2^16, and the
//!   rationals (fraction-free integer elimination).
//! * [`hochster`] - graded Betti tables computed by summing reduced
//!   homology of induced subcomplexes over all vertex subsets, with a
//!   data-parallel enumeration core (the `parallel` feature, on by
//!   default, uses rayon; without it the same code runs sequentially).
//! * [`lex`] - monomial and lex-segment machinery: Eliahou-Kervaire style
//!   Betti formulas for (squarefree) lex ideals, positions of the b-th
//!   largest quadratic monomials, and the colon-ideal recursion for lex
//!   ideals plus squares of the variables.
//! * [`bounds`] - closed-form upper bounds and exact formulas: Cohen-
//!   Macaulay bounds from quadratic lex segments, their lex-plus-squares
//!   refinements for balanced complexes, linear-strand bounds for normal
//!   pseudomanifolds, and the full Betti tables of cross-polytopal
//!   stacked spheres (closed form and recursion).
//!
//! [`doc`] adds the JSON on-disk format used by the command line tools.
//!
//! All arithmetic is exact; every table entry is an integer computed over
//! an explicitly chosen field. Nothing here is floating point.

pub mod bitset;
pub mod bounds;
pub mod combinatorics;
pub mod complex;
pub mod doc;
pub mod error;
pub mod hochster;
pub mod homology;
pub mod lex;

pub use bitset::VertexSubset;
pub use complex::SimplicialComplex;
pub use doc::ComplexDoc;
pub use error::{Error, Result};
pub use hochster::{graded_betti, linear_strand, BettiTable, GradedBettiOptions};
pub use homology::{reduced_homology_dims, FieldSpec};
