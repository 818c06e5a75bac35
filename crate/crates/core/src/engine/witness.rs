//! Polynomial-size constructions of sets with small `|D ∪ Odd(D)|`,
//! following the three upper-bound arguments: the Plotkin bound on the code
//! spanned by one side of a bipartite graph, the vertex-cover argument, and
//! the kernel-of-a-cut argument for general graphs.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::cover::is_vertex_cover;
use super::exact::delta_loc_brute;
use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf2::{min_weight_nonzero_codeword, Gf2Matrix};
use crate::graph::{BipartiteGraph, Graph, VertexSet};

/// Side-1 subsets up to this size are searched exhaustively.
const PLOTKIN_EXHAUSTIVE_MAX: usize = 20;

/// `⌊len / (2(1 - 2^-dim))⌋ = ⌊len·2^(dim-1) / (2^dim - 1)⌋` for `dim >= 1`.
fn plotkin_floor(len: usize, dim: usize) -> usize {
    let (num, den) = plotkin_ratio(len, dim);
    (num / den).to_usize().unwrap_or(usize::MAX)
}

fn plotkin_ceil(len: usize, dim: usize) -> usize {
    let (num, den) = plotkin_ratio(len, dim);
    ((num + &den - 1u32) / den).to_usize().unwrap_or(usize::MAX)
}

fn plotkin_ratio(len: usize, dim: usize) -> (BigUint, BigUint) {
    assert!(dim >= 1);
    let num = BigUint::from(len) << (dim - 1);
    let den = (BigUint::one() << dim) - 1u32;
    (num, den)
}

/// Canonical order on subsets encoded as masks over an ascending universe.
fn canonical_less(a: u64, b: u64) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        core::cmp::Ordering::Less => true,
        core::cmp::Ordering::Greater => false,
        core::cmp::Ordering::Equal => {
            let diff = a ^ b;
            diff != 0 && a & (diff & diff.wrapping_neg()) != 0
        }
    }
}

/// Minimum of `value(mask)` over nonzero masks of `width` bits, visited in
/// Gray-code order with the canonical tie-break.
fn gray_minimum<S, F>(width: usize, mut state: S, mut flip: F) -> (u64, usize)
where
    F: FnMut(&mut S, usize) -> usize,
{
    assert!((1..64).contains(&width));
    let mut best = (0u64, usize::MAX);
    for step in 1u64..(1u64 << width) {
        let value = flip(&mut state, step.trailing_zeros() as usize);
        let mask = step ^ (step >> 1);
        if value < best.1 || (value == best.1 && canonical_less(mask, best.0)) {
            best = (mask, value);
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotkinMethod {
    /// Every nonempty side-1 subset was tried.
    Exhaustive,
    /// Rows are dependent; a kernel vector has an empty odd-neighbourhood.
    Kernel,
    /// Rows are independent; minimum-weight codeword of their span.
    Codeword,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotkinWitness {
    pub set: VertexSet,
    pub odd_size: usize,
    /// `⌊n2 / (2(1 - 2^-n1))⌋`.
    pub bound: usize,
    pub method: PlotkinMethod,
}

/// Nonempty `D ⊆ side 1` of minimum `|Odd(D)|`.
pub fn plotkin_witness(b: &BipartiteGraph) -> Result<PlotkinWitness> {
    let (n1, n2) = (b.n1(), b.n2());
    if n1 == 0 {
        return Err(Error::EmptySideOne);
    }
    let bound = plotkin_floor(n2, n1);
    if n1 <= PLOTKIN_EXHAUSTIVE_MAX {
        let (mask, odd_size) = gray_minimum(n1, VertexSet::new(n2), |acc, i| {
            acc.symmetric_difference_with(b.row(i));
            acc.len()
        });
        return Ok(PlotkinWitness {
            set: VertexSet::from_indices(n1, (0..n1).filter(|i| (mask >> i) & 1 == 1)),
            odd_size,
            bound,
            method: PlotkinMethod::Exhaustive,
        });
    }
    let rows: Vec<BitVector> = (0..n1).map(|i| b.row(i).bits().clone()).collect();
    let m = Gf2Matrix::from_rows(n2, &rows);
    if m.rank() < n1 {
        let dependency = m.transpose().kernel_basis().remove(0);
        let set = VertexSet::from_bits(dependency);
        debug_assert!(b.odd_neighbourhood(&set)?.is_empty());
        return Ok(PlotkinWitness {
            set,
            odd_size: 0,
            bound,
            method: PlotkinMethod::Kernel,
        });
    }
    let c = min_weight_nonzero_codeword(&rows)?;
    Ok(PlotkinWitness {
        set: VertexSet::from_indices(n1, (0..n1).filter(|i| (c.selector >> i) & 1 == 1)),
        odd_size: c.weight,
        bound,
        method: PlotkinMethod::Codeword,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub set: VertexSet,
    /// `|D ∪ Odd(D)|`.
    pub set_size: usize,
    /// Size of the searched subset of the independent complement.
    pub k: usize,
    /// `⌈(c + k) / (2(1 - 2^-k))⌉`; absent on fallback.
    pub bound: Option<usize>,
    /// The cover was the whole vertex set and the exhaustive oracle answered.
    pub fallback_used: bool,
}

/// Searches the first `k = min(⌈log₂(c+1)⌉, |V∖C|)` vertices of the
/// independent set `V∖C` for the nonempty `D` minimising `|D ∪ Odd(D)|`.
pub fn cover_witness(g: &Graph, cover: &VertexSet) -> Result<CoverWitness> {
    g.check_set(cover)?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| !cover.contains(u) && !cover.contains(v)) {
        return Err(Error::NotACover(u, v));
    }
    let c = cover.len();
    if c == 0 {
        return Err(Error::EmptyCover);
    }
    let independent: Vec<usize> = cover.complement().to_vec();
    if independent.is_empty() {
        let r = delta_loc_brute(g)?;
        return Ok(CoverWitness {
            set: r.witness,
            set_size: r.delta_loc + 1,
            k: 0,
            bound: None,
            fallback_used: true,
        });
    }
    let ceil_log = (usize::BITS - c.leading_zeros()) as usize; // ⌈log₂(c+1)⌉
    let k = ceil_log.min(independent.len());
    let r = &independent[..k];
    // R is independent, so D and Odd(D) are disjoint for D ⊆ R
    let (mask, set_size) = gray_minimum(k, VertexSet::new(g.order()), |odd, i| {
        odd.symmetric_difference_with(g.neighbours(r[i]));
        odd.len()
    });
    let set = VertexSet::from_indices(g.order(), (0..k).filter(|i| (mask >> i) & 1 == 1).map(|i| r[i]));
    let set_size = set_size + set.len();
    debug_assert!(is_vertex_cover(g, cover));
    Ok(CoverWitness {
        set,
        set_size,
        k,
        bound: Some(plotkin_ceil(c + k, k)),
        fallback_used: false,
    })
}

/// How many kernel vectors the general construction keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelChoice {
    /// `k = ⌊4 log₂(n) / 3⌋`.
    #[default]
    Standard,
    /// `k = ⌊log₂(n) / 2⌋`, asymptotically slightly tighter.
    Refined,
}

impl KernelChoice {
    /// Exact integer evaluation, at least 1.
    pub fn k_for(self, n: usize) -> usize {
        // ⌊4 log₂ n / 3⌋ is the largest k with 8^k <= n^4;
        // ⌊log₂ n / 2⌋ the largest k with 4^k <= n
        let (base, power): (u32, u32) = match self {
            KernelChoice::Standard => (8, 4),
            KernelChoice::Refined => (4, 1),
        };
        let target = BigUint::from(n).pow(power);
        let mut k = 0usize;
        let mut acc = BigUint::from(base);
        while acc <= target {
            k += 1;
            acc *= base;
        }
        k.max(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Witness {
    pub set: VertexSet,
    /// `|F ∪ Odd(F)|`.
    pub set_size: usize,
    pub k: usize,
    /// `|S| = ⌊n/2⌋ + k`, clamped to `n`.
    pub s_size: usize,
    pub kernel_dim: usize,
    /// Kernel vectors kept, `2k - 1` unless the kernel is smaller.
    pub generators: usize,
    /// `⌊½⌊3|S| / (2(1 - 2^-generators))⌋⌋`.
    pub bound: usize,
    /// Order at most 2; the exhaustive oracle answered.
    pub fallback_used: bool,
}

/// Kernel-of-a-cut construction: take `S` = the first `⌊n/2⌋ + k` vertices,
/// keep `2k - 1` vectors of the kernel of `D ↦ Odd(D) ∖ S`, and pick the
/// nonempty combination whose `(D, Odd(D), D Δ Odd(D))` codeword is lightest.
/// Half that weight is `|F ∪ Odd(F)|`.
pub fn theorem2_witness(g: &Graph, choice: KernelChoice) -> Result<Theorem2Witness> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let k = choice.k_for(n);
    let s_size = (n / 2 + k).min(n);
    if n <= 2 {
        let r = delta_loc_brute(g)?;
        return Ok(Theorem2Witness {
            set: r.witness,
            set_size: r.delta_loc + 1,
            k,
            s_size,
            kernel_dim: 0,
            generators: 0,
            bound: plotkin_floor(3 * s_size, 2 * k - 1) / 2,
            fallback_used: true,
        });
    }
    // cut matrix: rows = V∖S, columns = S
    let mut cut = Gf2Matrix::zeros(n - s_size, s_size);
    for (j, u) in (0..s_size).enumerate() {
        for t in g.neighbours(u).iter().filter(|&t| t >= s_size) {
            cut.set(t - s_size, j, true);
        }
    }
    let kernel = cut.kernel_basis();
    let kernel_dim = kernel.len();
    let generators = (2 * k - 1).min(kernel_dim);
    let basis: Vec<VertexSet> = kernel
        .into_iter()
        .take(generators)
        .map(|x| VertexSet::from_indices(n, x.iter_ones()))
        .collect();
    // Odd(D) ⊆ S for every kernel vector, so each block fits in |S| bits
    let codewords: Vec<BitVector> = basis
        .iter()
        .map(|d| {
            let odd = g.odd_unchecked(d);
            let sym = d.symmetric_difference(&odd);
            let mut w = BitVector::zeros(3 * s_size);
            for (block, set) in [d, &odd, &sym].into_iter().enumerate() {
                for v in set.iter() {
                    debug_assert!(v < s_size);
                    w.set(block * s_size + v, true);
                }
            }
            w
        })
        .collect();
    let best = min_weight_nonzero_codeword(&codewords)?;
    let mut set = VertexSet::new(n);
    for (i, d) in basis.iter().enumerate() {
        if (best.selector >> i) & 1 == 1 {
            set.symmetric_difference_with(d);
        }
    }
    let set_size = set.union_len(&g.odd_unchecked(&set));
    debug_assert_eq!(2 * set_size, best.weight);
    Ok(Theorem2Witness {
        set,
        set_size,
        k,
        s_size,
        kernel_dim,
        generators,
        bound: plotkin_floor(3 * s_size, generators) / 2,
        fallback_used: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::exact_vertex_cover;
    use crate::generators::{cycle, gnp, random_bipartite, star};

    #[test]
    fn ratio_helpers() {
        assert_eq!(plotkin_floor(2, 2), 1);
        assert_eq!(plotkin_floor(4, 2), 2);
        assert_eq!(plotkin_floor(7, 1), 7);
        assert_eq!(plotkin_ceil(2, 1), 2);
        assert_eq!(plotkin_ceil(4, 2), 3);
        assert!(canonical_less(0b001, 0b110));
        assert!(canonical_less(0b011, 0b101));
        assert!(!canonical_less(0b101, 0b011));
        assert!(!canonical_less(0b101, 0b101));
    }

    #[test]
    fn plotkin_examples() {
        let k22 = BipartiteGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let w = plotkin_witness(&k22).unwrap();
        assert_eq!((w.set.to_vec(), w.odd_size, w.bound), (alloc::vec![0, 1], 0, 1));
        let m2 = BipartiteGraph::from_edges(2, 2, [(0, 0), (1, 1)]).unwrap();
        let w = plotkin_witness(&m2).unwrap();
        assert_eq!((w.odd_size, w.bound), (1, 1));
        let single = BipartiteGraph::from_edges(1, 4, (0..4).map(|v| (0, v))).unwrap();
        let w = plotkin_witness(&single).unwrap();
        assert_eq!((w.set.to_vec(), w.odd_size, w.bound), (alloc::vec![0], 4, 4));
        assert_eq!(plotkin_witness(&BipartiteGraph::empty(0, 3)), Err(Error::EmptySideOne));
    }

    #[test]
    fn plotkin_large_side_paths() {
        // 24 independent rows: unit vectors padded with noise
        let mut b = BipartiteGraph::empty(24, 30);
        for i in 0..24 {
            b.add_edge(i, i).unwrap();
            b.add_edge(i, 24 + i % 6).unwrap();
        }
        let w = plotkin_witness(&b).unwrap();
        assert_eq!(w.method, PlotkinMethod::Codeword);
        assert_eq!(w.odd_size, b.odd_neighbourhood(&w.set).unwrap().len());
        assert_eq!(w.odd_size, 2);
        assert!(w.odd_size <= w.bound);
        // copy row 0 onto row 23 to force a dependency
        let d = BipartiteGraph::from_edges(
            24,
            30,
            b.edges()
                .filter(|&(u, _)| u != 23)
                .chain(b.row(0).iter().map(|v| (23, v))),
        )
        .unwrap();
        let w = plotkin_witness(&d).unwrap();
        assert_eq!((w.method, w.odd_size), (PlotkinMethod::Kernel, 0));
        assert!(d.odd_neighbourhood(&w.set).unwrap().is_empty());
        assert!(!w.set.is_empty());
    }

    #[test]
    fn plotkin_random_within_bound() {
        for seed in 0..60 {
            let b = random_bipartite(1 + seed as usize % 9, 1 + seed as usize % 13, 0.5, seed).unwrap();
            let w = plotkin_witness(&b).unwrap();
            assert!(!w.set.is_empty());
            assert_eq!(b.odd_neighbourhood(&w.set).unwrap().len(), w.odd_size);
            assert!(w.odd_size <= w.bound, "seed {seed}");
        }
    }

    #[test]
    fn cover_examples() {
        let s5 = star(5);
        let w = cover_witness(&s5, &VertexSet::from_indices(6, [0])).unwrap();
        assert_eq!((w.set.to_vec(), w.set_size, w.bound), (alloc::vec![1], 2, Some(2)));
        let c4 = cycle(4);
        let w = cover_witness(&c4, &VertexSet::from_indices(4, [1, 3])).unwrap();
        assert_eq!((w.set.to_vec(), w.set_size, w.bound), (alloc::vec![0, 2], 2, Some(3)));
        let e3 = Graph::empty(3);
        assert_eq!(cover_witness(&e3, &VertexSet::new(3)), Err(Error::EmptyCover));
        let w = cover_witness(&e3, &VertexSet::from_indices(3, [0])).unwrap();
        assert_eq!((w.set.to_vec(), w.set_size), (alloc::vec![1], 1));
        assert_eq!(
            cover_witness(&c4, &VertexSet::from_indices(4, [1])),
            Err(Error::NotACover(0, 3))
        );
        let full = cover_witness(&c4, &VertexSet::full(4)).unwrap();
        assert!(full.fallback_used);
        assert_eq!(full.set_size, 2);
    }

    #[test]
    fn cover_random_within_bound() {
        for seed in 0..60 {
            let g = gnp(3 + seed as usize % 12, 0.3, seed).unwrap();
            let cover = exact_vertex_cover(&g);
            if cover.is_empty() {
                continue;
            }
            let w = cover_witness(&g, &cover).unwrap();
            assert_eq!(w.set.union_len(&g.odd_neighbourhood(&w.set).unwrap()), w.set_size);
            if let Some(bound) = w.bound {
                assert!(w.set_size <= bound, "seed {seed}");
            }
        }
    }

    #[test]
    fn kernel_witness_edgeless() {
        let w = theorem2_witness(&Graph::empty(8), KernelChoice::Standard).unwrap();
        assert_eq!((w.k, w.s_size, w.generators), (4, 8, 7));
        assert_eq!(w.bound, 6);
        assert_eq!(w.set_size, 1);
        assert!(w.set_size <= 5);
    }

    #[test]
    fn kernel_witness_random_within_bound() {
        for seed in 0..40 {
            let n = 3 + seed as usize % 30;
            let g = gnp(n, 0.5, seed).unwrap();
            for choice in [KernelChoice::Standard, KernelChoice::Refined] {
                let w = theorem2_witness(&g, choice).unwrap();
                assert!(!w.set.is_empty());
                assert_eq!(w.set.union_len(&g.odd_neighbourhood(&w.set).unwrap()), w.set_size);
                assert!(w.set_size <= w.bound, "seed {seed} {choice:?}");
                assert!(w.kernel_dim + 1 >= 2 * w.k || w.s_size < n / 2 + w.k);
            }
        }
    }

    #[test]
    fn tiny_orders_fall_back() {
        let w = theorem2_witness(&Graph::from_edges(2, [(0, 1)]).unwrap(), KernelChoice::Standard).unwrap();
        assert!(w.fallback_used);
        assert_eq!(w.set_size, 2);
        assert_eq!(theorem2_witness(&Graph::empty(0), KernelChoice::Standard), Err(Error::EmptyGraph));
    }
}
