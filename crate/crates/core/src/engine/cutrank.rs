use alloc::vec::Vec;

use crate::bits::words_for;
use crate::error::Result;
use crate::gf2::{rank_of_rows, reduce_against};
use crate::graph::{Graph, VertexSet};

/// GF(2) rank of the `|A| × |V∖A|` cut matrix.
pub fn cutrank(g: &Graph, a: &VertexSet) -> Result<usize> {
    g.check_set(a)?;
    let stride = words_for(g.order());
    let mut rows = Vec::with_capacity(a.len() * stride);
    for u in a.iter() {
        rows.extend(
            g.neighbours(u)
                .words()
                .iter()
                .zip(a.words())
                .map(|(row, mask)| row & !mask),
        );
    }
    Ok(rank_of_rows(a.len(), stride, &rows))
}

/// Reusable buffers for repeated deficiency tests on one graph.
pub(crate) struct CutScratch {
    stride: usize,
    mask: Vec<u64>,
    row: Vec<u64>,
    basis: Vec<u64>,
    pivots: Vec<usize>,
}

impl CutScratch {
    pub(crate) fn new(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            stride,
            mask: alloc::vec![0; stride],
            row: alloc::vec![0; stride],
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// `cutrk(A) < |A|` for `A` given as ascending indices. Bails out at the
    /// first row that reduces to zero.
    pub(crate) fn is_deficient(&mut self, g: &Graph, members: &[usize]) -> bool {
        let stride = self.stride;
        self.mask.fill(0);
        for &a in members {
            self.mask[a / 64] |= 1u64 << (a % 64);
        }
        self.basis.clear();
        self.pivots.clear();
        for &a in members {
            for ((r, &adj), &m) in self.row.iter_mut().zip(g.neighbours(a).words()).zip(&self.mask) {
                *r = adj & !m;
            }
            match reduce_against(&mut self.row, &self.basis, &self.pivots, stride) {
                Some(p) => {
                    self.basis.extend_from_slice(&self.row);
                    self.pivots.push(p);
                }
                None => return true,
            }
        }
        false
    }
}

/// `cutrk(A) < |A|`.
pub fn is_deficient_cut(g: &Graph, a: &VertexSet) -> Result<bool> {
    Ok(cutrank(g, a)? < a.len())
}
