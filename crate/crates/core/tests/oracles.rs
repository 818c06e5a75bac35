//! Exact results checked against oracles that share no code with the
//! engine: LC-orbit exploration and odd-neighbourhood enumeration on
//! adjacency masks.

use std::collections::{HashSet, VecDeque};

use lmd_core::engine::{
    delta_loc_bipartite, delta_loc_brute, delta_loc_general, is_deficient_cut, WitnessKind,
};
use lmd_core::generators::{complete, cycle, gnp, hypercube, path, random_bipartite, star};
use lmd_core::{Graph, VertexSet};

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|u| g.neighbours(u).iter().fold(0u32, |m, v| m | 1 << v))
        .collect()
}

/// Smallest minimum degree over the whole LC orbit.
fn orbit_min_degree(g: &Graph) -> usize {
    let start = masks(g);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut best = usize::MAX;
    while let Some(adj) = queue.pop_front() {
        best = best.min(adj.iter().map(|m| m.count_ones() as usize).min().unwrap());
        for u in 0..adj.len() {
            let nu = adj[u];
            let mut next = adj.clone();
            for (v, row) in next.iter_mut().enumerate() {
                if nu >> v & 1 == 1 {
                    *row ^= nu & !(1 << v);
                }
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    best
}

/// `min |D ∪ Odd(D)| - 1` over nonempty `D`.
fn odd_oracle(g: &Graph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    (1u32..1 << n)
        .map(|d| {
            let odd = (0..n).fold(0u32, |o, v| o | (((adj[v] & d).count_ones() & 1) << v));
            (d | odd).count_ones() as usize - 1
        })
        .min()
        .unwrap()
}

#[test]
fn brute_matches_orbit_exploration() {
    for seed in 0..60u64 {
        let n = 1 + seed as usize % 6;
        let g = gnp(n, [0.3, 0.5, 0.7][seed as usize % 3], seed).unwrap();
        assert_eq!(delta_loc_brute(&g).unwrap().delta_loc, orbit_min_degree(&g), "seed {seed}");
    }
}

#[test]
fn all_algorithms_match_odd_oracle() {
    for seed in 0..300u64 {
        let n = 1 + seed as usize % 12;
        let g = gnp(n, [0.2, 0.5, 0.8][seed as usize % 3], seed).unwrap();
        let expect = odd_oracle(&g);
        let brute = delta_loc_brute(&g).unwrap();
        let general = delta_loc_general(&g).unwrap();
        assert_eq!(brute.delta_loc, expect, "seed {seed}");
        assert_eq!(general.delta_loc, expect, "seed {seed}");
        assert_eq!(general.witness_kind, WitnessKind::DeficientCut);
        assert_eq!(general.witness.len(), expect + 1);
        assert!(is_deficient_cut(&g, &general.witness).unwrap());
    }
}

#[test]
fn bipartite_matches_odd_oracle() {
    for seed in 0..300u64 {
        let n1 = seed as usize % 8;
        let n2 = 1 + (seed as usize / 8) % 8;
        let b = random_bipartite(n1, n2, [0.2, 0.5, 0.8][seed as usize % 3], seed).unwrap();
        let (g, _) = b.embed();
        let r = delta_loc_bipartite(&b).unwrap();
        assert_eq!(r.delta_loc, odd_oracle(&g), "seed {seed} sides {n1} {n2}");
        assert_eq!(r.witness_kind, WitnessKind::OddDominatingSet);
        let odd = g.odd_neighbourhood(&r.witness).unwrap();
        assert_eq!(r.witness.union_len(&odd), r.delta_loc + 1);
    }
}

#[test]
fn families() {
    let cases: Vec<(Graph, usize)> = vec![
        (Graph::empty(3), 0),
        (path(2), 1),
        (path(5), 1),
        (star(6), 1),
        (cycle(5), 2),
        (cycle(6), 2),
        (complete(6), 1),
        (hypercube(3), 3),
    ];
    for (g, expect) in cases {
        assert_eq!(odd_oracle(&g), expect);
        assert_eq!(delta_loc_general(&g).unwrap().delta_loc, expect);
    }
}

#[test]
fn witness_is_canonical_minimum() {
    // among all deficient cuts of minimum size, the general search returns
    // the lexicographically first one
    for seed in 0..40u64 {
        let g = gnp(7, 0.5, seed).unwrap();
        let r = delta_loc_general(&g).unwrap();
        let size = r.delta_loc + 1;
        let first = (0u32..1 << 7)
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| VertexSet::from_indices(7, (0..7).filter(|i| m >> i & 1 == 1)))
            .filter(|a| is_deficient_cut(&g, a).unwrap())
            .min_by(|a, b| a.canonical_cmp(b))
            .unwrap();
        assert_eq!(r.witness, first, "seed {seed}");
    }
}
