use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::bounds::{bipartite_size_cap, general_size_cap};
use super::cutrank::CutScratch;
use super::{Algorithm, LmdResult, WitnessKind};
use crate::bits::words_for;
use crate::enumerate::{binomial, for_each_combination, Partition, Runner, Sequential};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, VertexSet};

/// Smallest candidate by `(value, canonical position)`.
fn merge_best(parts: Vec<Option<(usize, Vec<usize>)>>) -> Option<(usize, Vec<usize>)> {
    parts.into_iter().flatten().min()
}

/// Exhaustive oracle: minimum of `|D ∪ Odd(D)|` over all `2^n - 1` nonempty
/// `D`, visited level by level in canonical order.
pub fn delta_loc_brute(g: &Graph) -> Result<LmdResult> {
    delta_loc_brute_with(g, &Sequential)
}

pub fn delta_loc_brute_with<R: Runner>(g: &Graph, runner: &R) -> Result<LmdResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let stride = words_for(n);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut examined = 0u128;
    for size in 1..=n {
        let level = runner.run(|part: Partition| {
            let mut odd = alloc::vec![0u64; stride];
            let mut set = alloc::vec![0u64; stride];
            let mut local: Option<(usize, Vec<usize>)> = None;
            let _ = for_each_combination(0, n, size, part, |idx| {
                odd.fill(0);
                set.fill(0);
                for &u in idx {
                    set[u / 64] |= 1u64 << (u % 64);
                    for (o, w) in odd.iter_mut().zip(g.neighbours(u).words()) {
                        *o ^= w;
                    }
                }
                let value: usize = odd
                    .iter()
                    .zip(&set)
                    .map(|(o, s)| (o | s).count_ones() as usize)
                    .sum();
                if local.as_ref().is_none_or(|(v, _)| value < *v) {
                    local = Some((value, idx.to_vec()));
                }
                ControlFlow::Continue(())
            });
            local
        });
        examined += binomial(n, size);
        if let Some(cand) = merge_best(level) {
            if best.as_ref().is_none_or(|(v, _)| cand.0 < *v) {
                best = Some(cand);
            }
        }
    }
    let (value, idx) = best.expect("n >= 1 yields at least one set");
    Ok(LmdResult {
        delta_loc: value - 1,
        witness: VertexSet::from_indices(n, idx),
        witness_kind: WitnessKind::OddDominatingSet,
        sets_examined: examined,
        algorithm: Algorithm::Brute,
        size_cap: n,
    })
}

/// Scans levels `from..=to` for the first deficient cut in canonical order.
/// Returns the cut and the number of sets in the scanned levels.
fn first_deficient<R: Runner>(
    g: &Graph,
    from: usize,
    to: usize,
    runner: &R,
) -> (Option<Vec<usize>>, u128) {
    let n = g.order();
    let mut examined = 0u128;
    for size in from..=to.min(n) {
        let level = runner.run(|part: Partition| {
            let mut scratch = CutScratch::new(n);
            let mut found = None;
            let _ = for_each_combination(0, n, size, part, |idx| {
                if scratch.is_deficient(g, idx) {
                    found = Some(idx.to_vec());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            found
        });
        examined += binomial(n, size);
        if let Some(cut) = level.into_iter().flatten().min() {
            return (Some(cut), examined);
        }
    }
    (None, examined)
}

/// Cut-rank search over sets of size up to the general upper bound cap.
pub fn delta_loc_general(g: &Graph) -> Result<LmdResult> {
    delta_loc_general_with(g, &Sequential)
}

pub fn delta_loc_general_with<R: Runner>(g: &Graph, runner: &R) -> Result<LmdResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = general_size_cap(n);
    let (found, mut examined) = first_deficient(g, 1, cap, runner);
    let cut = match found {
        Some(cut) => cut,
        None => {
            // Unreachable while the upper bound holds; V itself is always
            // deficient, so finishing the range keeps the answer exact.
            let (rest, more) = first_deficient(g, cap + 1, n, runner);
            examined += more;
            rest.expect("the full vertex set is a deficient cut")
        }
    };
    Ok(LmdResult {
        delta_loc: cut.len() - 1,
        witness: VertexSet::from_indices(n, cut),
        witness_kind: WitnessKind::DeficientCut,
        sets_examined: examined,
        algorithm: Algorithm::General,
        size_cap: cap,
    })
}

/// One-sided search: the optimum `D` can always be taken inside one side, and
/// its size is bounded through the smaller side acting as a vertex cover.
pub fn delta_loc_bipartite(b: &BipartiteGraph) -> Result<LmdResult> {
    delta_loc_bipartite_with(b, &Sequential)
}

pub fn delta_loc_bipartite_with<R: Runner>(b: &BipartiteGraph, runner: &R) -> Result<LmdResult> {
    let (n1, n2) = (b.n1(), b.n2());
    let n = n1 + n2;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = bipartite_size_cap(n1, n2);
    let swapped = b.swap_sides();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut examined = 0u128;
    for size in 1..=cap.min(n1.max(n2)) {
        let level = runner.run(|part: Partition| {
            let mut local: Option<(usize, Vec<usize>)> = None;
            // side 1 occupies embedded indices 0..n1, side 2 n1..n
            for (rows, lo, hi, width) in [(b, 0, n1, n2), (&swapped, n1, n, n1)] {
                let mut odd = alloc::vec![0u64; words_for(width)];
                let _ = for_each_combination(lo, hi, size, part, |idx| {
                    odd.fill(0);
                    for &u in idx {
                        for (o, w) in odd.iter_mut().zip(rows.row(u - lo).words()) {
                            *o ^= w;
                        }
                    }
                    let value = size + odd.iter().map(|w| w.count_ones() as usize).sum::<usize>();
                    if local.as_ref().is_none_or(|(v, _)| value < *v) {
                        local = Some((value, idx.to_vec()));
                    }
                    ControlFlow::Continue(())
                });
            }
            local
        });
        examined += binomial(n1, size) + binomial(n2, size);
        if let Some(cand) = merge_best(level) {
            if best.as_ref().is_none_or(|(v, _)| cand.0 < *v) {
                best = Some(cand);
            }
        }
        // every larger D has |D ∪ Odd(D)| > size, so it cannot win
        if best.as_ref().is_some_and(|(v, _)| *v <= size + 1) {
            break;
        }
    }
    let (value, idx) = best.expect("a nonempty side yields singletons");
    Ok(LmdResult {
        delta_loc: value - 1,
        witness: VertexSet::from_indices(n, idx),
        witness_kind: WitnessKind::OddDominatingSet,
        sets_examined: examined,
        algorithm: Algorithm::Bipartite,
        size_cap: cap,
    })
}

/// Is `δ_loc(G) <= k`? Returns the first deficient cut of size at most
/// `k + 1` in canonical order when there is one.
pub fn decide_delta_loc(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    decide_delta_loc_with(g, k, &Sequential)
}

pub fn decide_delta_loc_with<R: Runner>(g: &Graph, k: usize, runner: &R) -> Result<Option<VertexSet>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let (found, _) = first_deficient(g, 1, k.saturating_add(1), runner);
    Ok(found.map(|cut| VertexSet::from_indices(n, cut)))
}
