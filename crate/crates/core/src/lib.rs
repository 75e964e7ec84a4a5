//! Exact computation and verification of bounded-radius graph parameters:
//! depth-`r` brambles, `t`-brambles and tangles, depth-`r` linkedness and
//! well-linkedness, shallow minors (`omega_r`, `nabla_r`, `grid_r`) and
//! strong `r`-coloring numbers, each with a machine-checkable witness.
//!
//! Everything is exhaustive and aimed at small graphs; see [`Limits`].

pub mod brambles;
pub mod coloring;
pub mod corpus;
pub mod depth;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod hitting;
pub mod limits;
pub mod linkedness;
pub mod minors;
pub mod par;
pub mod subsets;
pub mod treewidth;
pub mod value;
pub mod vset;
pub mod witness;

pub use depth::Depth;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{encode_graph6, parse_graph6};
pub use limits::Limits;
pub use value::Exact;
pub use vset::VertexSet;
