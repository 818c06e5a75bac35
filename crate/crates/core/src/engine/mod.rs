//! Local minimum degree: cut-rank, exact algorithms, bounds and
//! constructive witnesses.
//!
//! Everything rests on two equivalent characterisations of `δ_loc(G) + 1`:
//! the smallest `|D ∪ Odd(D)|` over nonempty `D`, and the smallest `|A|`
//! whose cut-rank is deficient (`cutrk(A) < |A|`).

mod bounds;
mod cover;
mod cutrank;
mod exact;
mod witness;

pub use bounds::{
    binary_entropy, bipartite_size_cap, bound_report, enumeration_count, general_size_cap,
    upper_bound_bipartite, upper_bound_general, vertex_cover_bound, BoundReport,
};
pub use cover::{exact_vertex_cover, greedy_vertex_cover, is_vertex_cover};
pub use cutrank::{cutrank, is_deficient_cut};
pub use exact::{
    decide_delta_loc, decide_delta_loc_with, delta_loc_bipartite, delta_loc_bipartite_with,
    delta_loc_brute, delta_loc_brute_with, delta_loc_general, delta_loc_general_with,
};
pub use witness::{
    cover_witness, plotkin_witness, theorem2_witness, CoverWitness, KernelChoice, PlotkinMethod,
    PlotkinWitness, Theorem2Witness,
};

use crate::graph::VertexSet;

/// What a witness set certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Nonempty `D` with `|D ∪ Odd(D)| = δ_loc + 1`.
    OddDominatingSet,
    /// `A` with `cutrk(A) < |A| = δ_loc + 1`.
    DeficientCut,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::OddDominatingSet => "odd-dominating-set",
            WitnessKind::DeficientCut => "deficient-cut",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    General,
    Bipartite,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::General => "general",
            Algorithm::Bipartite => "bipartite",
        }
    }
}

/// Outcome of an exact `δ_loc` computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmdResult {
    pub delta_loc: usize,
    pub witness: VertexSet,
    pub witness_kind: WitnessKind,
    /// Number of sets in the levels the search covered.
    pub sets_examined: u128,
    pub algorithm: Algorithm,
    /// Largest set size the search was allowed to reach.
    pub size_cap: usize,
}
