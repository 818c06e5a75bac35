//! Exact computation of the local minimum degree `δ_loc` of graphs.
//!
//! `δ_loc(G)` is the smallest minimum degree reachable from `G` by local
//! complementations. It equals `min |D ∪ Odd(D)| - 1` over nonempty vertex
//! sets `D`, and also `min |A| - 1` over cuts with `cutrk(A) < |A|`.
//!
//! The crate is `no_std` and needs only `alloc`:
//!
//! * [`gf2`]: dense GF(2) matrices, rank, kernels, minimum-weight codewords.
//! * [`graph`] and [`generators`]: bitset graphs, local complementation,
//!   odd-neighbourhoods and standard families (Paley, hypercube, random).
//! * [`engine`]: cut-rank, the exhaustive oracle, the cut-rank search for
//!   general graphs, the one-sided search for bipartite graphs, upper-bound
//!   formulas and constructive witnesses.
//! * [`reductions`]: the gadgets relating local minimum degree and EvenSet.
//!
//! Enumeration loops take a [`enumerate::Runner`], so callers with threads
//! can split each level across workers; results do not depend on the split.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod reductions;

pub use bits::BitVector;
pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use graph::{bipartite_double, BipartiteGraph, Graph, VertexSet};
