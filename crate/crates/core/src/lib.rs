//! Certified recognition of graphs that are a union of two cliques, and of
//! quasi-line graphs.
//!
//! A graph is a union of two cliques exactly when it has no induced
//! complement of an odd cycle (`C_{2k+1}^C`, with `C_3^C = 3K1`). Applied to
//! every neighbourhood, the same test decides whether a graph is quasi-line,
//! with `K1 + C_{2k+1}^C` as the obstruction. Every answer carries a
//! certificate that [`recognition`]'s verifiers check without trusting the
//! algorithm that produced it.
//!
//! ```
//! use quasiline_core::graph::named::cycle;
//! use quasiline_core::recognition::{two_clique_cover, verify_antihole};
//!
//! let c5 = cycle(5);
//! let out = two_clique_cover(&c5);
//! let witness = out.witness().unwrap();
//! assert_eq!(witness.cycle_order, vec![0, 2, 4, 1, 3]);
//! assert!(verify_antihole(&c5, witness).unwrap());
//! ```

pub mod error;
pub mod forbidden;
pub mod graph;
pub mod oracle;
pub mod recognition;

pub use error::{Error, Precondition, Result};
pub use graph::{Graph, GraphBuilder, Vertex, VertexSet};
