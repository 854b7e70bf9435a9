//! Exact defective colorings.
//!
//! An exact `(k, d)`-coloring assigns one of `k` colors to every vertex so
//! that each vertex has exactly `d` neighbors of its own color; equivalently
//! every color class induces a `d`-regular subgraph. The smallest such `k` is
//! the exact `d`-defective chromatic number, which may be infinite.
//!
//! The crate is organised by solver family:
//!
//! * [`graph`]: the graph substrate, family generators, block decomposition,
//!   recognizers, perfect matchings, contraction and file formats.
//! * [`coloring`]: colorings, the exactness validator and an exact
//!   chromatic-number solver.
//! * [`oracle`]: brute-force ground truth and the quotient characterization.
//! * [`closed_form`]: constant-time answers for cycles, wheels, trees and
//!   complete graphs.
//! * [`cactus`]: polynomial algorithms on cactus graphs.
//! * [`blockgraph`]: linear algorithms on block graphs.
//! * [`reductions`]: hardness gadgets with solution lifting.

pub mod blockgraph;
pub mod cactus;
pub mod closed_form;
pub mod coloring;
mod error;
pub mod graph;
pub mod oracle;
pub mod reductions;

pub use coloring::{Coloring, SolveOutcome};
pub use error::{Error, Result};
pub use graph::Graph;
