//! Dense bit-packed GF(2) matrices and Gaussian elimination.
//!
//! Rows are packed 64 bits per word (column `c` in word `c / 64`, bit
//! `c % 64`), so row operations cost `O(cols / 64)` words. This gives the
//! `2 * n^2`-bit tableau footprint and the elimination throughput everything
//! else in the crate is built on.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitVec;

const WORD_BITS: usize = 64;

/// A `rows x cols` matrix over GF(2), bit-packed row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    row_words: usize,
    data: Vec<u64>,
}

/// Result of [`BitMatrix::rref`]: the reduced matrix, the invertible row
/// transform that produced it, and the pivot columns.
///
/// The defining identity is `transform * matrix = reduced` over GF(2). Pivot
/// rows come first in ascending pivot-column order; the remaining rows of
/// `reduced` are zero, so the corresponding rows of `transform` form a basis
/// of the left kernel.
pub struct Rref {
    pub reduced: BitMatrix,
    pub transform: BitMatrix,
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let row_words = cols.div_ceil(WORD_BITS).max(1);
        BitMatrix { rows, cols, row_words, data: vec![0; rows * row_words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[BitVec]) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "rows must have equal length");
            m.row_slice_mut(r).copy_from_slice(row.words());
        }
        m
    }

    /// Builds a matrix from a nested array of bits; handy in tests.
    pub fn from_bools(rows: &[&[bool]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "rows must have equal length");
            for (c, &bit) in row.iter().enumerate() {
                if bit {
                    m.set(r, c, true);
                }
            }
        }
        m
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
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        (self.data[r * self.row_words + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let word = &mut self.data[r * self.row_words + c / WORD_BITS];
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    #[inline]
    fn row_slice(&self, r: usize) -> &[u64] {
        &self.data[r * self.row_words..(r + 1) * self.row_words]
    }

    #[inline]
    fn row_slice_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.row_words..(r + 1) * self.row_words]
    }

    /// Copies row `r` out as a `BitVec`.
    pub fn row(&self, r: usize) -> BitVec {
        let mut v = BitVec::zeros(self.cols);
        v.words_mut().copy_from_slice(self.row_slice(r));
        v
    }

    /// Iterates over copies of the rows, top to bottom.
    pub fn row_iter(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.rows).map(|r| self.row(r))
    }

    /// `data[dst] ^= data[src]`, in place.
    #[inline]
    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst, "cannot xor a row into itself");
        let (a, b) = (src.min(dst), src.max(dst));
        let (head, tail) = self.data.split_at_mut(b * self.row_words);
        let lo = &mut head[a * self.row_words..(a + 1) * self.row_words];
        let hi = &mut tail[..self.row_words];
        if src < dst {
            for (d, s) in hi.iter_mut().zip(lo.iter()) {
                *d ^= s;
            }
        } else {
            for (d, s) in lo.iter_mut().zip(hi.iter()) {
                *d ^= s;
            }
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * self.row_words);
        head[a * self.row_words..(a + 1) * self.row_words].swap_with_slice(&mut tail[..self.row_words]);
    }

    /// Rank over GF(2); works on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            for rr in pivot_row + 1..m.rows {
                if m.get(rr, col) {
                    m.xor_row_into(pivot_row, rr);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Reduced row echelon form with the recorded row transform.
    ///
    /// See [`Rref`] for the layout guarantees.
    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let mut transform = BitMatrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| reduced.get(r, col)) else {
                continue;
            };
            reduced.swap_rows(r, pivot_row);
            transform.swap_rows(r, pivot_row);
            for rr in 0..self.rows {
                if rr != pivot_row && reduced.get(rr, col) {
                    reduced.xor_row_into(pivot_row, rr);
                    transform.xor_row_into(pivot_row, rr);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Rref { reduced, transform, pivots }
    }

    /// Basis of the right kernel: vectors `v` with `self * v = 0`.
    ///
    /// One basis vector per non-pivot column, in ascending column order.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &col) in pivots.iter().enumerate() {
                if reduced.get(row, free) {
                    v.set(col, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left kernel: vectors `u` with `u * self = 0`.
    ///
    /// These are the transform rows corresponding to zero rows of the RREF.
    pub fn left_kernel_basis(&self) -> Vec<BitVec> {
        let Rref { transform, pivots, .. } = self.rref();
        (pivots.len()..self.rows).map(|r| transform.row(r)).collect()
    }

    /// Matrix product over GF(2).
    pub fn multiply(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for (w, &word) in self.row_slice(r).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let k = w * WORD_BITS + word.trailing_zeros() as usize;
                    word &= word - 1;
                    let src = k * other.row_words;
                    let dst = out.row_slice_mut(r);
                    for (i, d) in dst.iter_mut().enumerate() {
                        *d ^= other.data[src + i];
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product over GF(2).
    pub fn multiply_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_slice(r)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (a, b)| acc ^ ((a & b).count_ones() & 1));
            if parity == 1 {
                out.set(r, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (w, &word) in self.row_slice(r).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let c = w * WORD_BITS + word.trailing_zeros() as usize;
                    word &= word - 1;
                    out.set(c, r, true);
                }
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use std::collections::HashSet;

    fn random_matrix(rows: usize, cols: usize, rng: &mut SplitMix64) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.next_bool() {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Counts distinct row combinations by enumerating all 2^rows subsets.
    fn row_span_size(m: &BitMatrix) -> usize {
        let mut seen = HashSet::new();
        for mask in 0u32..1 << m.rows() {
            let mut acc = BitVec::zeros(m.cols());
            for r in 0..m.rows() {
                if mask >> r & 1 == 1 {
                    acc.xor_assign(&m.row(r));
                }
            }
            seen.insert(acc.words().to_vec());
        }
        seen.len()
    }

    #[test]
    fn worked_three_by_three_example() {
        let t = true;
        let f = false;
        let m = BitMatrix::from_bools(&[&[t, t, f], &[f, t, t], &[t, f, t]]);
        assert_eq!(m.rank(), 2);
        let rref = m.rref();
        assert_eq!(rref.pivots, vec![0, 1]);
        // The last row reduces to zero and is the sum of all three input rows.
        assert!(rref.reduced.row(2).is_zero());
        assert_eq!(rref.transform.row(2), BitVec::from_bools(&[t, t, t]));
        assert_eq!(rref.transform.multiply(&m), rref.reduced);
    }

    #[test]
    fn kernel_of_chained_columns() {
        let t = true;
        let f = false;
        let m = BitMatrix::from_bools(&[&[t, t, f], &[f, t, t]]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0], BitVec::from_bools(&[t, t, t]));
    }

    #[test]
    fn identity_has_full_rank_and_empty_kernel() {
        let m = BitMatrix::identity(17);
        assert_eq!(m.rank(), 17);
        assert!(m.kernel_basis().is_empty());
        assert!(m.left_kernel_basis().is_empty());
    }

    #[test]
    fn rank_is_transpose_invariant_and_rank_nullity_holds() {
        let mut rng = SplitMix64::new(0xfeed);
        for trial in 0..60 {
            let rows = 1 + trial % 9;
            let cols = 1 + (trial * 7) % 11;
            let m = random_matrix(rows, cols, &mut rng);
            let rank = m.rank();
            assert_eq!(rank, m.transpose().rank());
            assert_eq!(rank + m.kernel_basis().len(), cols);
            assert_eq!(rank + m.left_kernel_basis().len(), rows);
        }
    }

    #[test]
    fn rank_counts_the_row_span() {
        let mut rng = SplitMix64::new(0xabcd);
        for _ in 0..40 {
            let m = random_matrix(1 + rng.next_below(6), 1 + rng.next_below(7), &mut rng);
            assert_eq!(1usize << m.rank(), row_span_size(&m));
        }
    }

    #[test]
    fn rref_transform_reproduces_reduction_and_is_invertible() {
        let mut rng = SplitMix64::new(0x5eed);
        for _ in 0..60 {
            let m = random_matrix(1 + rng.next_below(10), 1 + rng.next_below(12), &mut rng);
            let rref = m.rref();
            assert_eq!(rref.transform.multiply(&m), rref.reduced);
            assert_eq!(rref.transform.rank(), m.rows(), "transform must stay invertible");
            assert_eq!(rref.pivots.len(), m.rank());
            // Pivot columns contain exactly one 1, in their own row.
            for (row, &col) in rref.pivots.iter().enumerate() {
                for r in 0..m.rows() {
                    assert_eq!(rref.reduced.get(r, col), r == row);
                }
            }
            // Pivot columns ascend; zero rows sit at the bottom.
            assert!(rref.pivots.windows(2).all(|w| w[0] < w[1]));
            for r in rref.pivots.len()..m.rows() {
                assert!(rref.reduced.row(r).is_zero());
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let mut rng = SplitMix64::new(0xbeef);
        for _ in 0..60 {
            let m = random_matrix(1 + rng.next_below(8), 1 + rng.next_below(10), &mut rng);
            for v in m.kernel_basis() {
                assert!(m.multiply_vec(&v).is_zero());
            }
            for u in m.left_kernel_basis() {
                assert!(m.transpose().multiply_vec(&u).is_zero());
            }
            // Kernel basis vectors are independent by construction: each has
            // a 1 in a distinct free column.
            let kernel = m.kernel_basis();
            if !kernel.is_empty() {
                assert_eq!(BitMatrix::from_rows(&kernel).rank(), kernel.len());
            }
        }
    }

    #[test]
    fn multiply_agrees_with_bitwise_definition() {
        let mut rng = SplitMix64::new(0x1234);
        for _ in 0..20 {
            let a = random_matrix(1 + rng.next_below(6), 1 + rng.next_below(6), &mut rng);
            let b = random_matrix(a.cols(), 1 + rng.next_below(6), &mut rng);
            let c = a.multiply(&b);
            for r in 0..a.rows() {
                for q in 0..b.cols() {
                    let mut acc = false;
                    for k in 0..a.cols() {
                        acc ^= a.get(r, k) & b.get(k, q);
                    }
                    assert_eq!(c.get(r, q), acc);
                }
            }
        }
    }
}
