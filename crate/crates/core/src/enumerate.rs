//! Lexicographic subset enumeration with deterministic work partitioning.
//!
//! A level (all subsets of one size) is split across workers by the smallest
//! index of each subset: worker `i` of `c` owns the subsets whose first element
//! `f` satisfies `f % c == i`. Each worker reports its own canonical-first
//! candidate; merging takes the smallest, so the result never depends on the
//! worker count.

use alloc::vec::Vec;
use core::ops::ControlFlow;

/// Share of a level assigned to one worker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub count: usize,
}

impl Partition {
    pub const WHOLE: Partition = Partition { index: 0, count: 1 };

    #[inline]
    pub fn owns(&self, first: usize) -> bool {
        first % self.count == self.index
    }
}

/// Executes one closure per partition and returns the results in partition
/// order.
pub trait Runner: Sync {
    fn workers(&self) -> usize;

    fn run<R, F>(&self, job: F) -> Vec<R>
    where
        R: Send,
        F: Fn(Partition) -> R + Sync;
}

/// Runs every partition on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Runner for Sequential {
    fn workers(&self) -> usize {
        1
    }

    fn run<R, F>(&self, job: F) -> Vec<R>
    where
        R: Send,
        F: Fn(Partition) -> R + Sync,
    {
        alloc::vec![job(Partition::WHOLE)]
    }
}

/// Visits the `size`-subsets of `lo..hi` owned by `part`, in lexicographic
/// order, as ascending index slices. Stops early on `ControlFlow::Break`.
pub fn for_each_combination<F>(lo: usize, hi: usize, size: usize, part: Partition, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if size == 0 || hi < lo || hi - lo < size {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = alloc::vec![0; size];
    for first in lo..=hi - size {
        if !part.owns(first) {
            continue;
        }
        idx[0] = first;
        for (k, slot) in idx.iter_mut().enumerate().skip(1) {
            *slot = first + k;
        }
        loop {
            visit(&idx)?;
            // rightmost slot past the first that can still move
            let mut k = size - 1;
            while k > 0 && idx[k] == hi - (size - k) {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k] += 1;
            for j in k + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Binomial coefficient as `u128`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
