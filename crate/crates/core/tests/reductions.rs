//! Exhaustive checks of both reduction gadgets on small inputs.

use lmd_core::engine::{decide_delta_loc, delta_loc_brute};
use lmd_core::reductions::{
    reduce_evenset_to_blmd, reduce_lmd_to_evenset, reconstruct_evenset_source,
    reconstruct_lmd_source, solve_evenset, EvenSetInstance,
};
use lmd_core::{BipartiteGraph, Graph};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len()).map(move |m| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e))
            .unwrap()
    })
}

#[test]
fn lmd_gadget_preserves_answers() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let delta = delta_loc_brute(&g).unwrap().delta_loc;
            for k in 0..=2 {
                let out = reduce_lmd_to_evenset(&g, k).unwrap();
                assert_eq!(out.graph.order(), 5 * n);
                assert_eq!(out.graph.edge_count(), 3 * n + 4 * g.edge_count());
                assert_eq!(out.parameter, 2 * k + 2);
                assert_eq!(reconstruct_lmd_source(&out), g);
                let found = solve_evenset(&out.as_evenset());
                assert_eq!(found.is_some(), delta <= k, "{g:?} k {k}");
            }
        }
    }
}

#[test]
fn evenset_gadget_preserves_answers() {
    for nr in 1..=3 {
        for nb in 1..=2 {
            let pairs: Vec<(usize, usize)> = (0..nr).flat_map(|r| (0..nb).map(move |b| (r, b))).collect();
            for m in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e);
                let b = BipartiteGraph::from_edges(nr, nb, edges).unwrap();
                for k in 1..=2 {
                    let inst = EvenSetInstance::new(b.clone(), k).unwrap();
                    let out = reduce_evenset_to_blmd(&inst).unwrap();
                    let q = out.modulus.unwrap() as usize;
                    assert_eq!(out.graph.order(), nr + 2 * (k + 1) * q * nb);
                    assert_eq!(reconstruct_evenset_source(&out).unwrap(), inst);
                    let (g, _) = out.graph.embed();
                    let decided = decide_delta_loc(&g, out.parameter).unwrap();
                    assert_eq!(decided.is_some(), solve_evenset(&inst).is_some(), "{b:?} k {k}");
                }
            }
        }
    }
}
