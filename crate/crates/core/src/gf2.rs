//! Dense linear algebra over GF(2).
//!
//! Matrices are stored row-major with each row padded to a whole number of
//! 64-bit words, so row operations are word-parallel XORs. Elimination
//! always runs on a private copy; callers never observe mutation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{tail_mask, words_for, BitVector, WORD_BITS};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks row vectors. Panics if a row's length differs from `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {} != {cols}", r.len());
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Rows given as `0`/`1` strings of equal length.
    pub fn from_bit_strs(rows: &[&str]) -> Option<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let vectors = rows
            .iter()
            .map(|r| BitVector::from_bit_str(r).filter(|v| v.len() == cols))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_rows(cols, &vectors))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.words[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_vector(&self, r: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row(r).to_vec())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// `M·x` for a column vector `x` of length `cols`.
    pub fn mul_vec(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row(r)
                .iter()
                .zip(x.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
                & 1;
            if parity == 1 {
                out.set(r, true);
            }
        }
        out
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (lo, hi) = self.words.split_at_mut(dst.max(src) * s);
        let (d, s_row) = if dst < src {
            (&mut lo[dst * s..dst * s + s], &hi[..s])
        } else {
            (&mut hi[..s], &lo[src * s..src * s + s])
        };
        for (a, b) in d.iter_mut().zip(s_row) {
            *a ^= b;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.words.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Reduces to reduced row echelon form in place; returns pivot columns
    /// (pivot `i` sits in row `i`).
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(p, next);
            for r in 0..self.rows {
                if r != next && self.get(r, c) {
                    self.xor_rows(r, next);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows, self.stride, &self.words)
    }

    /// Basis of `{x : M·x = 0}`, one vector per free column, ascending.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVector::zeros(self.cols);
                x.set(f, true);
                for (row, &p) in pivots.iter().enumerate() {
                    if work.get(row, f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Rank of `rows` packed rows of `stride` words each.
pub(crate) fn rank_of_rows(rows: usize, stride: usize, words: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::with_capacity(rows * stride);
    let mut pivots: Vec<usize> = Vec::with_capacity(rows);
    let mut scratch = vec![0u64; stride];
    for r in 0..rows {
        scratch.copy_from_slice(&words[r * stride..(r + 1) * stride]);
        if let Some(p) = reduce_against(&mut scratch, &basis, &pivots, stride) {
            basis.extend_from_slice(&scratch);
            pivots.push(p);
        }
    }
    pivots.len()
}

/// Reduces `row` by an incrementally built basis whose row `j` has a zero at
/// every earlier pivot. Returns the new pivot (lowest set bit) if the reduced
/// row is nonzero.
#[inline]
pub(crate) fn reduce_against(
    row: &mut [u64],
    basis: &[u64],
    pivots: &[usize],
    stride: usize,
) -> Option<usize> {
    for (j, &p) in pivots.iter().enumerate() {
        if (row[p / WORD_BITS] >> (p % WORD_BITS)) & 1 == 1 {
            for (a, b) in row.iter_mut().zip(&basis[j * stride..(j + 1) * stride]) {
                *a ^= b;
            }
        }
    }
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
}

/// Nonzero codeword of minimum weight in the span of a generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub word: BitVector,
    pub weight: usize,
    /// Bit `i` set iff generator `i` takes part in the combination.
    pub selector: u64,
}

/// Exhaustive minimum-weight search over all `2^g - 1` nonzero combinations.
///
/// Combinations are visited in Gray-code order (one XOR per step); among
/// codewords of equal weight the one with the smallest selector integer wins.
/// A zero combination means the generators are dependent and is rejected.
pub fn min_weight_nonzero_codeword(generators: &[BitVector]) -> Result<Codeword> {
    let g = generators.len();
    if g == 0 {
        return Err(Error::EmptyGeneratorSet);
    }
    if g > 63 {
        return Err(Error::TooManyGenerators(g));
    }
    let len = generators[0].len();
    if generators.iter().any(|v| v.len() != len) {
        return Err(Error::CapacityMismatch {
            expected: len,
            found: generators.iter().map(BitVector::len).find(|&l| l != len).unwrap_or(len),
        });
    }
    let stride = words_for(len);
    let mut acc = vec![0u64; stride];
    let mut best_weight = usize::MAX;
    let mut best_selector = 0u64;
    for step in 1u64..(1u64 << g) {
        let flip = step.trailing_zeros() as usize;
        for (a, b) in acc.iter_mut().zip(generators[flip].words()) {
            *a ^= b;
        }
        let selector = step ^ (step >> 1);
        let weight: usize = acc.iter().map(|w| w.count_ones() as usize).sum();
        if weight == 0 {
            return Err(Error::DependentGenerators);
        }
        if weight < best_weight || (weight == best_weight && selector < best_selector) {
            best_weight = weight;
            best_selector = selector;
        }
    }
    let mut word = BitVector::zeros(len);
    for (i, gen) in generators.iter().enumerate() {
        if (best_selector >> i) & 1 == 1 {
            word.xor_assign(gen);
        }
    }
    debug_assert_eq!(word.words().last().map_or(0, |w| w & !tail_mask(len)), 0);
    Ok(Codeword {
        word,
        weight: best_weight,
        selector: best_selector,
    })
}
