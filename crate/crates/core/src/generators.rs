//! Deterministic graph families.
//!
//! Random generators draw from `ChaCha8Rng` (rand_chacha 0.3) seeded with
//! `seed_from_u64`; pairs are sampled in lexicographic order with one
//! `gen_bool(p)` call each, so a seed pins the output on every platform.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Centre 0 joined to leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("in range")
}

/// `C_n` for `n >= 3`; `K_2` for `n = 2`; edgeless below.
pub fn cycle(n: usize) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        2 => Graph::from_edges(2, [(0, 1)]).expect("in range"),
        _ => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("in range"),
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("in range")
}

/// `Q_d` on `2^d` vertices; adjacent iff the labels differ in one bit.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for b in 0..d {
            let v = u ^ (1 << b);
            if u < v {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = BipartiteGraph::empty(n1, n2);
    for u in 0..n1 {
        for v in 0..n2 {
            if rng.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b)
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues `x² mod q` for `x` in `0..q`, as a membership table.
pub fn squares_mod(q: u64) -> Vec<bool> {
    let mut table = alloc::vec![false; q as usize];
    for x in 0..q {
        table[((x * x) % q) as usize] = true;
    }
    table
}

/// Paley graph on `Z_q`: `i ~ j` iff `i - j` is a nonzero square mod `q`.
/// Only prime `q ≡ 1 (mod 4)` is accepted.
pub fn paley(q: u64) -> Result<Graph> {
    if q % 4 != 1 || !is_prime(q) {
        return Err(Error::InvalidPaleyModulus(q));
    }
    let sq = squares_mod(q);
    let n = q as usize;
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if sq[(j - i) % n] {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
