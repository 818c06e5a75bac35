//! Simple undirected graphs as symmetric bitset adjacency rows, plus
//! bipartite graphs stored by their biadjacency rows.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bits::{BitVector, Ones};
use crate::error::{Error, Result};

/// Subset of `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(BitVector);

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        Self(BitVector::zeros(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        Self(BitVector::ones(capacity))
    }

    /// Panics if an index is `>= capacity`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, indices: I) -> Self {
        Self(BitVector::from_indices(capacity, indices))
    }

    pub fn from_bits(bits: BitVector) -> Self {
        Self(bits)
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.0.weight()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity() && self.0.get(v)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0.set(v, true);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    #[inline]
    pub fn toggle(&mut self, v: usize) {
        self.0.toggle(v);
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Ones<'_> {
        self.0.iter_ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        self.0.words()
    }

    pub fn into_bits(self) -> BitVector {
        self.0
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.0.xor_assign(&other.0);
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.0.or_assign(&other.0);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.0.and_assign(&other.0);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.0.and_not_assign(&other.0);
        out
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet(self.0.complement())
    }

    pub fn symmetric_difference_with(&mut self, other: &VertexSet) {
        self.0.xor_assign(&other.0);
    }

    pub fn union_len(&self, other: &VertexSet) -> usize {
        self.0.union_weight(&other.0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words()
            .iter()
            .zip(other.words())
            .all(|(a, b)| a & !b == 0)
    }

    /// Canonical enumeration order: cardinality first, then lexicographic on
    /// the ascending index sequence.
    pub fn canonical_cmp(&self, other: &VertexSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // For equal sizes the set holding the smallest element of the
            // symmetric difference comes first.
            match self.symmetric_difference(other).iter().next() {
                None => Ordering::Equal,
                Some(v) if self.contains(v) => Ordering::Less,
                Some(_) => Ordering::Greater,
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbours(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.adj[u].len())
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(VertexSet::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.order(),
            })
        }
    }

    pub(crate) fn check_set(&self, d: &VertexSet) -> Result<()> {
        if d.capacity() == self.order() {
            Ok(())
        } else {
            Err(Error::CapacityMismatch {
                expected: self.order(),
                found: d.capacity(),
            })
        }
    }

    /// `G⋆u`: toggles every edge between two distinct neighbours of `u`.
    pub fn local_complement(&self, u: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        let mut g = self.clone();
        g.local_complement_in_place(u);
        Ok(g)
    }

    pub(crate) fn local_complement_in_place(&mut self, u: usize) {
        let nbrs = self.adj[u].clone();
        for v in nbrs.iter() {
            self.adj[v].symmetric_difference_with(&nbrs);
            self.adj[v].toggle(v);
        }
    }

    /// Left-to-right fold of local complementations.
    pub fn lc_sequence(&self, seq: &[usize]) -> Result<Graph> {
        for &u in seq {
            self.check_vertex(u)?;
        }
        let mut g = self.clone();
        for &u in seq {
            g.local_complement_in_place(u);
        }
        Ok(g)
    }

    /// `Odd(D)`: vertices with an odd number of neighbours in `D`.
    pub fn odd_neighbourhood(&self, d: &VertexSet) -> Result<VertexSet> {
        self.check_set(d)?;
        Ok(self.odd_unchecked(d))
    }

    pub(crate) fn odd_unchecked(&self, d: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.order());
        for u in d.iter() {
            out.symmetric_difference_with(&self.adj[u]);
        }
        out
    }

    /// Symmetric and loop-free.
    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        self.adj.iter().enumerate().all(|(u, row)| {
            row.capacity() == n && !row.contains(u) && row.iter().all(|v| self.adj[v].contains(u))
        })
    }

    /// Induced subgraph on `keep`, vertices renumbered in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Graph> {
        self.check_set(keep)?;
        let ids: Vec<usize> = keep.to_vec();
        let mut pos = alloc::vec![usize::MAX; self.order()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(ids.len());
        for (i, &v) in ids.iter().enumerate() {
            for w in self.adj[v].iter() {
                if pos[w] != usize::MAX {
                    g.adj[i].insert(pos[w]);
                }
            }
        }
        Ok(g)
    }

    /// Two-colouring by breadth-first search, if one exists. Returns the
    /// bipartite graph with colour-0 vertices on side 1 and the original
    /// index of every side-1 then side-2 vertex.
    pub fn bipartition(&self) -> Option<(BipartiteGraph, Vec<usize>)> {
        let n = self.order();
        let mut colour = alloc::vec![u8::MAX; n];
        let mut queue = alloc::collections::VecDeque::new();
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return None;
                    }
                }
            }
        }
        let side1: Vec<usize> = (0..n).filter(|&v| colour[v] == 0).collect();
        let side2: Vec<usize> = (0..n).filter(|&v| colour[v] == 1).collect();
        let mut pos2 = alloc::vec![0; n];
        for (j, &v) in side2.iter().enumerate() {
            pos2[v] = j;
        }
        let mut b = BipartiteGraph::empty(side1.len(), side2.len());
        for (i, &u) in side1.iter().enumerate() {
            for v in self.adj[u].iter() {
                b.biadj[i].insert(pos2[v]);
            }
        }
        let mut order = side1;
        order.extend(side2);
        Some((b, order))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Bipartite graph with sides `0..n1` and `0..n2`; row `i` of `biadj` lists
/// the side-2 neighbours of side-1 vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n2: usize,
    biadj: Vec<VertexSet>,
}

impl BipartiteGraph {
    pub fn empty(n1: usize, n2: usize) -> Self {
        Self {
            n2,
            biadj: (0..n1).map(|_| VertexSet::new(n2)).collect(),
        }
    }

    /// Edges as `(side-1 index, side-2 index)`.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(
        n1: usize,
        n2: usize,
        edges: I,
    ) -> Result<Self> {
        let mut b = Self::empty(n1, n2);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n1() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.n1(),
            });
        }
        if v >= self.n2 {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n2,
            });
        }
        self.biadj[u].insert(v);
        Ok(())
    }

    #[inline]
    pub fn n1(&self) -> usize {
        self.biadj.len()
    }

    #[inline]
    pub fn n2(&self) -> usize {
        self.n2
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n1() + self.n2
    }

    #[inline]
    pub fn row(&self, u: usize) -> &VertexSet {
        &self.biadj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.biadj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.biadj.iter().map(VertexSet::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.biadj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |v| (u, v)))
    }

    /// Symmetric difference of the rows indexed by `D ⊆ side 1`.
    pub fn odd_neighbourhood(&self, d: &VertexSet) -> Result<VertexSet> {
        if d.capacity() != self.n1() {
            return Err(Error::CapacityMismatch {
                expected: self.n1(),
                found: d.capacity(),
            });
        }
        let mut out = VertexSet::new(self.n2);
        for u in d.iter() {
            out.symmetric_difference_with(&self.biadj[u]);
        }
        Ok(out)
    }

    /// Same graph with the sides exchanged.
    pub fn swap_sides(&self) -> BipartiteGraph {
        let mut t = BipartiteGraph::empty(self.n2, self.n1());
        for (u, v) in self.edges() {
            t.biadj[v].insert(u);
        }
        t
    }

    /// Graph on `n1 + n2` vertices, side-1 indices first, plus the
    /// indicator set of side 1.
    pub fn embed(&self) -> (Graph, VertexSet) {
        let n1 = self.n1();
        let n = self.order();
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.adj[u].insert(n1 + v);
            g.adj[n1 + v].insert(u);
        }
        (g, VertexSet::from_indices(n, 0..n1))
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph(n1={}, n2={}, edges=", self.n1(), self.n2)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Two copies of `V` with `(u, 1) ~ (v, 2)` iff `u ~ v`.
pub fn bipartite_double(g: &Graph) -> BipartiteGraph {
    let n = g.order();
    BipartiteGraph {
        n2: n,
        biadj: (0..n).map(|u| g.neighbours(u).clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn local_complement_of_path_is_triangle() {
        let t = path3().local_complement(1).unwrap();
        assert_eq!(t, Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(path3().lc_sequence(&[1]).unwrap(), t);
    }

    #[test]
    fn local_complement_at_isolated_vertex_is_identity() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.local_complement(3).unwrap(), g);
    }

    #[test]
    fn lc_sequence_edge_cases() {
        let g = path3();
        assert_eq!(g.lc_sequence(&[]).unwrap(), g);
        assert_eq!(g.lc_sequence(&[1, 1]).unwrap(), g);
        assert_eq!(
            g.lc_sequence(&[0, 3]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert!(g.local_complement(7).is_err());
    }

    #[test]
    fn odd_neighbourhood_examples() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.odd_neighbourhood(&VertexSet::new(3)).unwrap().is_empty());
        assert_eq!(
            k3.odd_neighbourhood(&VertexSet::from_indices(3, [0])).unwrap(),
            *k3.neighbours(0)
        );
        assert_eq!(
            k3.odd_neighbourhood(&VertexSet::from_indices(3, [0, 1])).unwrap().to_vec(),
            vec![0, 1]
        );
        assert_eq!(
            k3.odd_neighbourhood(&VertexSet::new(4)),
            Err(Error::CapacityMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn bipartite_odd_neighbourhood_examples() {
        let k22 = BipartiteGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(k22.odd_neighbourhood(&VertexSet::full(2)).unwrap().is_empty());
        assert!(k22.odd_neighbourhood(&VertexSet::new(2)).unwrap().is_empty());
        let m3 = BipartiteGraph::from_edges(3, 3, [(0, 0), (1, 1), (2, 2)]).unwrap();
        let odd = m3.odd_neighbourhood(&VertexSet::from_indices(3, [0, 2])).unwrap();
        assert_eq!(odd.to_vec(), vec![0, 2]);
        assert!(m3.odd_neighbourhood(&VertexSet::new(2)).is_err());
    }

    #[test]
    fn degrees() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.degree(2), Ok(3));
        assert_eq!(Graph::empty(0).min_degree(), Err(Error::EmptyGraph));
        assert!(k4.degree(4).is_err());
    }

    #[test]
    fn bipartite_double_examples() {
        assert_eq!(bipartite_double(&Graph::empty(3)).edge_count(), 0);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let d = bipartite_double(&k2);
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let (c10, _) = bipartite_double(&c5).embed();
        assert_eq!(c10.edge_count(), 10);
        assert!((0..10).all(|v| c10.degree(v) == Ok(2)));
        // connected 2-regular on 10 vertices is C10
        let mut seen = VertexSet::new(10);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if !seen.contains(v) {
                seen.insert(v);
                stack.extend(c10.neighbours(v).iter());
            }
        }
        assert_eq!(seen.len(), 10);
    }

    #[test]
    fn embed_examples() {
        let k11 = BipartiteGraph::from_edges(1, 1, [(0, 0)]).unwrap();
        let (g, side) = k11.embed();
        assert_eq!(g, Graph::from_edges(2, [(0, 1)]).unwrap());
        assert_eq!(side.to_vec(), vec![0]);
        let (g, _) = BipartiteGraph::empty(2, 3).embed();
        assert_eq!((g.order(), g.edge_count()), (5, 0));
        let (g, _) = BipartiteGraph::from_edges(2, 2, [(0, 0), (1, 1)]).unwrap().embed();
        assert_eq!(g, Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn bipartition_roundtrip() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let (b, order) = c6.bipartition().unwrap();
        assert_eq!((b.n1(), b.n2()), (3, 3));
        assert_eq!(order, vec![0, 2, 4, 1, 3, 5]);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.bipartition().is_none());
    }

    #[test]
    fn canonical_order() {
        let a = VertexSet::from_indices(5, [0, 4]);
        let b = VertexSet::from_indices(5, [1, 2]);
        let c = VertexSet::from_indices(5, [3]);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(b.canonical_cmp(&a), Ordering::Greater);
        assert_eq!(c.canonical_cmp(&a), Ordering::Less);
        assert_eq!(a.canonical_cmp(&a), Ordering::Equal);
    }

    pub(crate) fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn local_complement_is_involution(g in graph_strategy(14), u in 0usize..14) {
            let u = u % g.order();
            let once = g.local_complement(u).unwrap();
            prop_assert!(once.is_well_formed());
            prop_assert_eq!(once.local_complement(u).unwrap(), g);
        }

        #[test]
        fn lc_sequences_stay_well_formed(g in graph_strategy(12), seq in proptest::collection::vec(0usize..12, 0..20)) {
            let seq: Vec<usize> = seq.into_iter().map(|u| u % g.order()).collect();
            let mut h = g.clone();
            for &u in &seq {
                h = h.local_complement(u).unwrap();
                prop_assert!(h.is_well_formed());
            }
            prop_assert_eq!(h, g.lc_sequence(&seq).unwrap());
        }

        #[test]
        fn odd_neighbourhood_is_linear(g in graph_strategy(16), a in any::<u16>(), b in any::<u16>()) {
            let n = g.order();
            let d1 = VertexSet::from_indices(n, (0..n).filter(|i| (a >> i) & 1 == 1));
            let d2 = VertexSet::from_indices(n, (0..n).filter(|i| (b >> i) & 1 == 1));
            let lhs = g.odd_neighbourhood(&d1.symmetric_difference(&d2)).unwrap();
            let rhs = g.odd_neighbourhood(&d1).unwrap().symmetric_difference(&g.odd_neighbourhood(&d2).unwrap());
            prop_assert_eq!(&lhs, &rhs);
            // pointwise definition
            for v in 0..n {
                let odd = g.neighbours(v).intersection(&d1).len() % 2 == 1;
                prop_assert_eq!(odd, g.odd_neighbourhood(&d1).unwrap().contains(v));
            }
        }

        #[test]
        fn bipartite_double_side_swap_symmetry(g in graph_strategy(10)) {
            let d = bipartite_double(&g);
            let (emb, _) = d.embed();
            let n = g.order();
            let swap = |v: usize| if v < n { v + n } else { v - n };
            for (u, v) in emb.edges() {
                prop_assert!(emb.has_edge(swap(u), swap(v)));
            }
            prop_assert_eq!(d.swap_sides(), d);
        }
    }
}
