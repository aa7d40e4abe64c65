//! Binomial edge ideals of simple graphs in exact arithmetic.
//!
//! For a simple graph `G` on vertices `1..=n` the binomial edge ideal `J_G`
//! lives in `k[x_1..x_n, y_1..y_n]` and is generated by the 2x2 minors
//! `x_i*y_j - x_j*y_i`, one per edge `{i,j}`. This crate computes:
//!
//! * graph predicates used to characterize closed graphs ([`graph`]):
//!   chordality, claws, narrowness, clique facets, free vertices, cones and
//!   gluing along free vertices;
//! * three independent decision procedures for closedness and a Koszul
//!   classifier built on the known implication chain ([`closedness`]);
//! * a sparse polynomial engine with Buchberger's algorithm and Hilbert
//!   series of monomial ideals ([`poly`]);
//! * admissible paths and the combinatorial reduced Gröbner basis of `J_G`,
//!   plus Hilbert-series tests for adding an edge ([`ideal`]);
//! * the quadratic dual of `S/J_G` and the first two Betti numbers of the
//!   residue field ([`dual`], [`betti`]);
//! * an exhaustive sweep harness that cross-checks all of the above on small
//!   graphs ([`sweep`]).
//!
//! Vertex labels are 1-based everywhere.

pub mod betti;
pub mod cli;
pub mod closedness;
pub mod dual;
mod error;
pub mod graph;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{Graph, Labeling};
