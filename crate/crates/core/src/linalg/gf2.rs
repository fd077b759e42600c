//! Bit-packed row reduction for p = 2.

/// Packed rows: bit `j` of word `j / 64` holds column `j`.
pub(crate) struct BitRows {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitRows {
    pub(crate) fn new(cols: usize, rows: impl IntoIterator<Item = impl IntoIterator<Item = bool>>) -> Self {
        let words = cols.div_ceil(64);
        let rows = rows
            .into_iter()
            .map(|r| {
                let mut packed = vec![0u64; words];
                for (j, bit) in r.into_iter().enumerate() {
                    if bit {
                        packed[j / 64] |= 1 << (j % 64);
                    }
                }
                packed
            })
            .collect();
        BitRows { words, rows }
    }

    #[inline]
    fn bit(row: &[u64], j: usize) -> bool {
        row[j / 64] >> (j % 64) & 1 == 1
    }

    /// In-place Gauss-Jordan elimination. Returns pivot columns; the first
    /// `pivots.len()` rows are the reduced basis.
    pub(crate) fn rref(&mut self, cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows.len() {
                break;
            }
            let Some(found) = (r..self.rows.len()).find(|&i| Self::bit(&self.rows[i], c)) else {
                continue;
            };
            self.rows.swap(r, found);
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r && Self::bit(row, c) {
                    for w in 0..self.words {
                        row[w] ^= pivot_row[w];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub(crate) fn row_bits(&self, i: usize, cols: usize) -> impl Iterator<Item = bool> + '_ {
        (0..cols).map(move |j| Self::bit(&self.rows[i], j))
    }
}
