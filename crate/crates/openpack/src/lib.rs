//! Open packing and total domination on graphs.
//!
//! An *open packing* is a vertex set in which no two distinct members share
//! a common neighbor; a *total dominating set* gives every vertex (its own
//! members included) a neighbor inside the set. This crate provides:
//!
//! - [`graph`]: adjacency-list graphs and labeled multigraphs;
//! - [`certify`]: linear-time certificate checkers for every solution
//!   concept handled here;
//! - [`oracle`]: brute-force exact solvers used as ground truth, plus
//!   bounded-enumeration engines;
//! - [`recognize`]: split / I_r-split / star-free / path-union-free class
//!   recognition, the obstruction dichotomy, and the neighborhood graph;
//! - [`reductions`]: the five hardness constructions as executable
//!   transformations with bidirectional certificate mappers;
//! - [`solvers`]: polynomial-time exact solvers for the tractable classes,
//!   the bound table, a blossom maximum-matching engine, and a dispatcher;
//! - [`generators`]: extremal families and seeded random instances;
//! - [`scan`]: claim-by-claim verification campaigns;
//! - [`io`]: text graph format and JSON certificate/instance schemas.

pub mod certify;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognize;
pub mod reductions;
pub mod scan;
pub mod solvers;
