//! Generalized Sierpiński graphs `S(G,t)`.
//!
//! [`sierpinski`] builds the graph explicitly (adjacency, neighborhoods,
//! a streamed edge list). [`closed_form`] computes its degree histogram and
//! general first Zagreb indices from the base graph alone, exactly, for any
//! `t`. [`verify`] cross-checks the two on small instances.

pub mod base_graph;
pub mod closed_form;
pub mod corpus;
pub mod error;
pub mod sierpinski;
pub mod verify;

pub use base_graph::{BaseGraph, DegreeClasses};
pub use closed_form::{DegreeHistogram, ZagrebTable};
pub use error::{Error, Result};
pub use sierpinski::{SierpinskiParams, Word, DEFAULT_EXPLICIT_CAP};
pub use verify::{Census, Check, CrossCheckReport};
