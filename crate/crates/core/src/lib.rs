//! Rooted subgraph and cycle counting through the non-backtracking matrix.
//!
//! See the guide in `book/` for a walk through the concepts.

pub mod catalog;
pub mod census;
pub mod error;
pub mod eval;
pub mod expr;
pub mod generators;
pub mod graph;
pub mod kappa;
pub mod matrix;
pub mod oracle;
pub mod pattern;
pub mod report;

pub use error::{Error, Result};
pub use graph::{DirectedEdgeIndex, Graph};
pub use matrix::{EdgeMatrix, EdgeVector, VertexVector};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/nonbacktracking.md")]
    pub struct Nonbacktracking;
    #[doc = include_str!("../../../book/src/expressions.md")]
    pub struct Expressions;
    #[doc = include_str!("../../../book/src/catalog.md")]
    pub struct Catalog;
    #[doc = include_str!("../../../book/src/cycles.md")]
    pub struct Cycles;
    #[doc = include_str!("../../../book/src/generic.md")]
    pub struct Generic;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
