//! Parameterized reductions between local minimum degree and EvenSet.
//!
//! * [`reduce_lmd_to_evenset`] maps `(G, k)` to an EvenSet instance with
//!   parameter `2k + 2` built from five copies of `V(G)`.
//! * [`reduce_evenset_to_blmd`] maps an EvenSet instance with parameter `k`
//!   to a bipartite graph whose `δ_loc <= k - 1` exactly when the instance is
//!   positive, by hanging `k + 1` Paley blocks off every constraint vertex.
//!
//! Both gadgets are bipartite and record, for every vertex, where it came
//! from.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::enumerate::{for_each_combination, Partition};
use crate::error::{Error, Result};
use crate::generators::{is_prime, squares_mod};
use crate::gf2::Gf2Matrix;
use crate::graph::{BipartiteGraph, Graph, VertexSet};

/// EvenSet: is there a nonempty `D ⊆ R` with `|D| <= k` and `Odd(D) = ∅`?
/// Side 1 of `graph` is `R`, side 2 is `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSetInstance {
    pub graph: BipartiteGraph,
    pub k: usize,
}

impl EvenSetInstance {
    pub fn new(graph: BipartiteGraph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ParameterTooSmall);
        }
        Ok(Self { graph, k })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Copy `A_i` (1-based) of the source vertex set.
    Copy(u8),
    /// Vertex of `R`, carried over unchanged.
    R,
    /// `p_{b,i,r}`: block vertex on the constraint side.
    P,
    /// `p'_{b,i,r}`: block vertex on the `R` side.
    PPrime,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Copy(1) => "A1",
            Role::Copy(2) => "A2",
            Role::Copy(3) => "A3",
            Role::Copy(4) => "A4",
            Role::Copy(5) => "A5",
            Role::Copy(_) => "A?",
            Role::R => "R",
            Role::P => "P",
            Role::PPrime => "P'",
        }
    }
}

/// Origin of one gadget vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub role: Role,
    /// Source vertex (`u` for copies, `r` for `R`, `b` for blocks).
    pub source: usize,
    /// Block copy index `i ∈ [0, k]`.
    pub copy: Option<usize>,
    /// Residue `r ∈ Z_q`.
    pub residue: Option<usize>,
}

/// Gadget graph plus provenance, indexed like the embedded graph: side-1
/// vertices first, then side 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: BipartiteGraph,
    pub parameter: usize,
    pub provenance: Vec<Provenance>,
    /// Paley modulus for the EvenSet-to-bipartite direction.
    pub modulus: Option<u64>,
}

impl ReductionOutput {
    pub fn as_evenset(&self) -> EvenSetInstance {
        EvenSetInstance {
            graph: self.graph.clone(),
            k: self.parameter,
        }
    }
}

/// Five copies `A1..A5` of `V(G)`; sides `A1 ∪ A2 ∪ A3 | A4 ∪ A5`.
///
/// Edges: matchings `A1–A4`, `A2–A5`, `A3–A5`, and for every edge `{u, v}` of
/// `G` the pairs `a2u–a4v`, `a2v–a4u`, `a2u–a5v`, `a2v–a5u`. Parameter
/// `2k + 2`. The instance has an even set iff `δ_loc(G) <= k`.
pub fn reduce_lmd_to_evenset(g: &Graph, k: usize) -> Result<ReductionOutput> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let a = |copy: usize, u: usize| (copy - 1) * n + u; // side 1: A1..A3
    let b = |copy: usize, u: usize| (copy - 4) * n + u; // side 2: A4, A5
    let mut out = BipartiteGraph::empty(3 * n, 2 * n);
    for u in 0..n {
        out.add_edge(a(1, u), b(4, u))?;
        out.add_edge(a(2, u), b(5, u))?;
        out.add_edge(a(3, u), b(5, u))?;
    }
    for (u, v) in g.edges() {
        for (x, y) in [(u, v), (v, u)] {
            out.add_edge(a(2, x), b(4, y))?;
            out.add_edge(a(2, x), b(5, y))?;
        }
    }
    let provenance = (1..=5u8)
        .flat_map(|copy| {
            (0..n).map(move |u| Provenance {
                role: Role::Copy(copy),
                source: u,
                copy: None,
                residue: None,
            })
        })
        .collect();
    Ok(ReductionOutput {
        graph: out,
        parameter: 2 * k + 2,
        provenance,
        modulus: None,
    })
}

/// Maps `D` with small `|D ∪ Odd(D)|` to the even set
/// `A1·Odd(D) ∪ A2·D ∪ A3·(D Δ Odd(D))` of the gadget, as a side-1 set.
pub fn transport_lmd_witness(g: &Graph, d: &VertexSet) -> Result<VertexSet> {
    let n = g.order();
    let odd = g.odd_neighbourhood(d)?;
    let sym = d.symmetric_difference(&odd);
    let mut out = VertexSet::new(3 * n);
    for (offset, part) in [(0, &odd), (n, d), (2 * n, &sym)] {
        for u in part.iter() {
            out.insert(offset + u);
        }
    }
    Ok(out)
}

/// Recovers `G` from an [`reduce_lmd_to_evenset`] gadget through its
/// provenance: `u ~ v` iff the `A2` copy of `u` meets the `A4` copy of `v`.
pub fn reconstruct_lmd_source(out: &ReductionOutput) -> Graph {
    let n1 = out.graph.n1();
    let locate = |role: Role| -> Vec<usize> {
        let mut at = Vec::new();
        for (idx, p) in out.provenance.iter().enumerate() {
            if p.role == role {
                if at.len() <= p.source {
                    at.resize(p.source + 1, usize::MAX);
                }
                at[p.source] = idx;
            }
        }
        at
    };
    let a2 = locate(Role::Copy(2));
    let a4 = locate(Role::Copy(4));
    let n = a2.len();
    let mut g = Graph::empty(n);
    for (u, &au) in a2.iter().enumerate() {
        for (v, &av) in a4.iter().enumerate().skip(u + 1) {
            if out.graph.has_edge(au, av - n1) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Smallest prime `q` with `k² < q <= 2k² + 5` and `q ≡ 1 (mod 4)`.
pub fn find_reduction_prime(k: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::ParameterTooSmall);
    }
    let k = k as u64;
    let (low, high) = (k * k, 2 * k * k + 5);
    (low + 1..=high)
        .find(|&q| q % 4 == 1 && is_prime(q))
        .ok_or(Error::NoSuchPrime { low, high })
}

/// One gadget block: `p_r ~ p'_{r'}` iff `r - r'` is a square mod `q`
/// (zero included), i.e. the bipartite double of the Paley graph plus the
/// identity matching. Side 1 holds the `p'` vertices.
pub fn paley_block(q: u64) -> BipartiteGraph {
    let sq = squares_mod(q);
    let q = q as usize;
    let mut block = BipartiteGraph::empty(q, q);
    for r_prime in 0..q {
        for r in 0..q {
            if sq[(r + q - r_prime) % q] {
                block.add_edge(r_prime, r).expect("in range");
            }
        }
    }
    block
}

/// Side 1 is `R ∪ P'`, side 2 is `P`. Each `b ∈ B` gets blocks
/// `(P_{b,i}, P'_{b,i})` for `i ∈ [0, k]`, and every `r ∈ R` adjacent to `b`
/// is joined to `p_{b,i,0}` for all `i`.
///
/// The output parameter is `k - 1`: an even set `D` gives
/// `|D ∪ Odd(D)| = |D|`, so even sets of size `k + 1` already reach
/// `δ_loc <= k`, and querying at `k` would accept them.
pub fn reduce_evenset_to_blmd(inst: &EvenSetInstance) -> Result<ReductionOutput> {
    let k = inst.k;
    if k == 0 {
        return Err(Error::ParameterTooSmall);
    }
    let q = find_reduction_prime(k)?;
    let qs = q as usize;
    let (nr, nb) = (inst.graph.n1(), inst.graph.n2());
    let blocks = nb * (k + 1);
    let block_of = |b: usize, i: usize| b * (k + 1) + i;
    let mut out = BipartiteGraph::empty(nr + blocks * qs, blocks * qs);
    let template = paley_block(q);
    for blk in 0..blocks {
        for (rp, r) in template.edges() {
            out.add_edge(nr + blk * qs + rp, blk * qs + r)?;
        }
    }
    for (r, b) in inst.graph.edges() {
        for i in 0..=k {
            out.add_edge(r, block_of(b, i) * qs)?;
        }
    }
    let mut provenance = Vec::with_capacity(out.order());
    provenance.extend((0..nr).map(|r| Provenance {
        role: Role::R,
        source: r,
        copy: None,
        residue: None,
    }));
    for role in [Role::PPrime, Role::P] {
        for b in 0..nb {
            for i in 0..=k {
                provenance.extend((0..qs).map(|r| Provenance {
                    role,
                    source: b,
                    copy: Some(i),
                    residue: Some(r),
                }));
            }
        }
    }
    Ok(ReductionOutput {
        graph: out,
        parameter: k - 1,
        provenance,
        modulus: Some(q),
    })
}

/// Recovers the EvenSet instance from a [`reduce_evenset_to_blmd`] gadget:
/// `r ~ b` iff `r` meets `p_{b,0,0}`.
pub fn reconstruct_evenset_source(out: &ReductionOutput) -> Result<EvenSetInstance> {
    let n1 = out.graph.n1();
    let rs: Vec<usize> = (0..n1).filter(|&i| out.provenance[i].role == Role::R).collect();
    let mut anchors: Vec<(usize, usize)> = out
        .provenance
        .iter()
        .enumerate()
        .filter(|(_, p)| p.role == Role::P && p.copy == Some(0) && p.residue == Some(0))
        .map(|(idx, p)| (p.source, idx - n1))
        .collect();
    anchors.sort_unstable();
    let mut g = BipartiteGraph::empty(rs.len(), anchors.len());
    for (j, &r) in rs.iter().enumerate() {
        for &(b, col) in &anchors {
            if out.graph.has_edge(r, col) {
                g.add_edge(j, b)?;
            }
        }
    }
    EvenSetInstance::new(g, out.parameter + 1)
}

/// Kernel dimensions up to this size are searched through kernel
/// combinations; larger ones by subset size.
const KERNEL_ENUMERATION_MAX: usize = 20;

/// Canonical-first nonempty `D ⊆ R` with `Odd(D) = ∅`, if `|D| <= k`.
pub fn solve_evenset(inst: &EvenSetInstance) -> Option<VertexSet> {
    solve_evenset_with_limit(inst, KERNEL_ENUMERATION_MAX)
}

fn solve_evenset_with_limit(inst: &EvenSetInstance, kernel_limit: usize) -> Option<VertexSet> {
    let b = &inst.graph;
    let nr = b.n1();
    // parity constraints: one row per B vertex, one column per R vertex
    let rows: Vec<_> = (0..nr).map(|r| b.row(r).bits().clone()).collect();
    let constraints = Gf2Matrix::from_rows(b.n2(), &rows).transpose();
    let kernel = constraints.kernel_basis();
    if kernel.is_empty() {
        return None;
    }
    if kernel.len() <= kernel_limit {
        let mut acc = VertexSet::new(nr);
        let mut best: Option<VertexSet> = None;
        for step in 1u64..(1u64 << kernel.len()) {
            acc.symmetric_difference_with(&VertexSet::from_bits(kernel[step.trailing_zeros() as usize].clone()));
            if best.as_ref().is_none_or(|cur| acc.canonical_cmp(cur).is_lt()) {
                best = Some(acc.clone());
            }
        }
        return best.filter(|d| d.len() <= inst.k);
    }
    let mut found = None;
    for size in 1..=inst.k.min(nr) {
        let _ = for_each_combination(0, nr, size, Partition::WHOLE, |idx| {
            let d = VertexSet::from_indices(nr, idx.iter().copied());
            if b.odd_neighbourhood(&d).is_ok_and(|odd| odd.is_empty()) {
                found = Some(d);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_some() {
            break;
        }
    }
    found
}
