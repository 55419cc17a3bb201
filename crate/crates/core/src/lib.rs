//! Exact dicolouring, census and reduction tools for digraphs.

mod bits;
pub mod canon;
pub mod claims;
pub mod cnf;
pub mod digraph;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod known;
pub mod reductions;
pub mod solver;
pub mod structure;
pub mod surfaces;

pub use canon::{canonical_cert, is_isomorphic, CanonicalCert};
pub use digraph::{Digraph, VertexId};
pub use error::{FormatError, GraphError};
pub use graph::Graph;
