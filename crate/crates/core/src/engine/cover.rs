use crate::graph::{Graph, VertexSet};

pub fn is_vertex_cover(g: &Graph, cover: &VertexSet) -> bool {
    cover.capacity() == g.order() && g.edges().all(|(u, v)| cover.contains(u) || cover.contains(v))
}

/// Both endpoints of a maximal matching built from the lexicographic edge
/// scan. At most twice the optimum.
pub fn greedy_vertex_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::new(g.order());
    for (u, v) in g.edges() {
        if !cover.contains(u) && !cover.contains(v) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    cover
}

/// Minimum vertex cover by branch and bound. Exponential; meant for small
/// graphs.
pub fn exact_vertex_cover(g: &Graph) -> VertexSet {
    let mut best = greedy_vertex_cover(g);
    let mut current = VertexSet::new(g.order());
    branch(g, &mut current, &mut best);
    best
}

/// Vertices still carrying an uncovered edge are those outside `chosen` with
/// a neighbour outside `chosen`.
fn branch(g: &Graph, chosen: &mut VertexSet, best: &mut VertexSet) {
    let size = chosen.len();
    if size >= best.len() {
        return;
    }
    let open = chosen.complement();
    // lower bound: a greedy matching among uncovered edges
    let mut matched = VertexSet::new(g.order());
    let mut matching = 0;
    let mut pivot = None;
    for u in open.iter() {
        let live = g.neighbours(u).intersection(&open);
        if live.is_empty() {
            continue;
        }
        if pivot.is_none_or(|(_, d)| live.len() > d) {
            pivot = Some((u, live.len()));
        }
        if !matched.contains(u) {
            if let Some(v) = live.iter().find(|&v| !matched.contains(v)) {
                matched.insert(u);
                matched.insert(v);
                matching += 1;
            }
        }
    }
    let Some((u, _)) = pivot else {
        *best = chosen.clone();
        return;
    };
    if size + matching >= best.len() {
        return;
    }
    // either u joins the cover, or all of its live neighbours do
    chosen.insert(u);
    branch(g, chosen, best);
    chosen.remove(u);

    let live = g.neighbours(u).intersection(&open);
    let mut with_nbrs = chosen.union(&live);
    branch(g, &mut with_nbrs, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, gnp, star};

    /// Oracle: smallest cover by exhaustive search over subsets.
    fn brute_tau(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| {
                let s = VertexSet::from_indices(n, (0..n).filter(|i| (m >> i) & 1 == 1));
                is_vertex_cover(g, &s)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        let e = Graph::empty(4);
        assert!(greedy_vertex_cover(&e).is_empty());
        assert!(exact_vertex_cover(&e).is_empty());
        assert_eq!(exact_vertex_cover(&star(5)).to_vec(), alloc::vec![0]);
        assert_eq!(exact_vertex_cover(&cycle(5)).len(), 3);
        assert_eq!(brute_tau(&cycle(5)), 3);
    }

    #[test]
    fn exact_matches_brute() {
        for seed in 0..120 {
            let g = gnp(2 + seed as usize % 10, [0.2, 0.5, 0.8][seed as usize % 3], seed).unwrap();
            let exact = exact_vertex_cover(&g);
            let greedy = greedy_vertex_cover(&g);
            assert!(is_vertex_cover(&g, &exact));
            assert!(is_vertex_cover(&g, &greedy));
            assert_eq!(exact.len(), brute_tau(&g), "seed {seed}");
            assert!(greedy.len() <= 2 * exact.len());
        }
    }
}
