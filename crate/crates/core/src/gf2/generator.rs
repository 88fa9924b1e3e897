use super::ParityCheckMatrix;
use crate::bits::BitBlock;
use crate::error::{Error, Result};

/// Dense generator matrix `G` (k x m) satisfying `G·Hᵀ = 0`.
///
/// Codewords stay in `H`'s column order. The information bits appear
/// verbatim at [`systematic_positions`](Self::systematic_positions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    k: usize,
    m: usize,
    rows: Vec<BitBlock>,
    systematic: Vec<usize>,
    dropped_rows: Vec<usize>,
}

impl GeneratorMatrix {
    /// Information length.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Codeword length.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `rank(H) = m - k`.
    pub fn rank(&self) -> usize {
        self.m - self.k
    }

    pub fn rows(&self) -> &[BitBlock] {
        &self.rows
    }

    /// Codeword positions carrying the information bits, in information order.
    pub fn systematic_positions(&self) -> &[usize] {
        &self.systematic
    }

    /// Rows of `H` that were linearly dependent on earlier rows.
    pub fn dropped_rows(&self) -> &[usize] {
        &self.dropped_rows
    }

    /// `C = D·G`.
    pub fn encode(&self, info: &BitBlock) -> Result<BitBlock> {
        if info.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: info.len(),
            });
        }
        let mut word = vec![0u64; self.m.div_ceil(64)];
        for (t, row) in self.rows.iter().enumerate() {
            if info.get(t) {
                for (w, r) in word.iter_mut().zip(row.words()) {
                    *w ^= r;
                }
            }
        }
        Ok(BitBlock::from_words(self.m, word))
    }

    /// Reads the information bits back out of a codeword.
    pub fn extract_info(&self, word: &BitBlock) -> Result<BitBlock> {
        if word.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                actual: word.len(),
            });
        }
        Ok(self.systematic.iter().map(|&p| word.get(p)).collect())
    }
}

/// Free-function form of [`GeneratorMatrix::encode`].
pub fn encode(info: &BitBlock, g: &GeneratorMatrix) -> Result<BitBlock> {
    g.encode(info)
}

/// Derives a systematic generator for the code `{C : C·Hᵀ = 0}`.
///
/// Gauss-Jordan elimination over GF(2) in column order. Pivot columns carry
/// the parity bits, the remaining `k = m - rank(H)` columns carry the
/// information bits. Columns are never permuted; rows of `H` that reduce to
/// zero are reported as dropped.
pub fn derive_generator(h: &ParityCheckMatrix) -> Result<GeneratorMatrix> {
    let m = h.cols();
    let r = h.rows();
    let nwords = m.div_ceil(64);

    let mut rows: Vec<Vec<u64>> = (0..r)
        .map(|j| {
            let mut w = vec![0u64; nwords];
            for &i in h.row(j) {
                w[i / 64] |= 1u64 << (i % 64);
            }
            w
        })
        .collect();
    let mut origin: Vec<usize> = (0..r).collect();
    let bit = |row: &[u64], i: usize| (row[i / 64] >> (i % 64)) & 1 == 1;

    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        if rank == r {
            break;
        }
        let Some(p) = (rank..r).find(|&t| bit(&rows[t], col)) else {
            continue;
        };
        rows.swap(rank, p);
        origin.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (t, row) in rows.iter_mut().enumerate() {
            if t != rank && bit(row, col) {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }

    if rank == m {
        return Err(Error::DegenerateCode { rank });
    }

    let mut is_pivot = vec![false; m];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let systematic: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();

    // With H in reduced row-echelon form, pivot bit p_t = sum over free
    // columns f of rref[t][f] * x_f.
    let gen_rows = systematic
        .iter()
        .map(|&f| {
            let mut g = BitBlock::zeros(m);
            g.set(f, true);
            for (t, &p) in pivots.iter().enumerate() {
                if bit(&rows[t], f) {
                    g.set(p, true);
                }
            }
            g
        })
        .collect();

    let mut dropped_rows: Vec<usize> = origin[rank..].to_vec();
    dropped_rows.sort_unstable();

    Ok(GeneratorMatrix {
        k: systematic.len(),
        m,
        rows: gen_rows,
        systematic,
        dropped_rows,
    })
}
