//! GF(2) machinery for LDPC codes.
//!
//! [`ParityCheckMatrix`] stores `H` sparsely in both orientations: for every
//! check (row) the variables it touches, and for every variable (column) the
//! checks it participates in. Indices are 0-based in memory and 1-based only
//! in alist files.

mod alist;
mod generator;
mod girth;
mod peg;

pub use alist::{load_alist, parse_alist, save_alist, to_alist_string};
pub use generator::{derive_generator, encode, GeneratorMatrix};
pub use girth::{girth, Girth};
pub use peg::{peg_construct, PegParams};

use crate::bits::BitBlock;
use crate::error::{Error, Result};
use std::fmt;

/// Sparse binary parity-check matrix with its Tanner-graph adjacency.
///
/// Edges of the Tanner graph are numbered check-major: the edges of check
/// `j` occupy `edge_range(j)`, in increasing variable order. The decoder
/// keys all of its per-edge message storage by these numbers.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    rows: usize,
    cols: usize,
    row_vars: Vec<Vec<usize>>,
    col_checks: Vec<Vec<usize>>,
    row_start: Vec<usize>,
    edge_var: Vec<usize>,
    var_edges: Vec<Vec<usize>>,
}

impl ParityCheckMatrix {
    /// Builds `H` from per-row lists of column indices.
    ///
    /// Every list must be strictly increasing and in range, and every column
    /// must appear in at least one row.
    pub fn from_row_lists(rows: usize, cols: usize, row_vars: Vec<Vec<usize>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix(format!(
                "dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if row_vars.len() != rows {
            return Err(Error::InvalidMatrix(format!(
                "expected {rows} row lists, got {}",
                row_vars.len()
            )));
        }
        let mut col_checks = vec![Vec::new(); cols];
        for (j, list) in row_vars.iter().enumerate() {
            for (k, &i) in list.iter().enumerate() {
                if i >= cols {
                    return Err(Error::InvalidMatrix(format!(
                        "row {j}: column index {i} out of range for {cols} columns"
                    )));
                }
                if k > 0 && list[k - 1] >= i {
                    return Err(Error::InvalidMatrix(format!(
                        "row {j}: column indices must be strictly increasing"
                    )));
                }
                col_checks[i].push(j);
            }
        }
        if let Some(i) = col_checks.iter().position(Vec::is_empty) {
            return Err(Error::InvalidMatrix(format!("column {i} is all-zero")));
        }

        let mut row_start = Vec::with_capacity(rows + 1);
        let mut edge_var = Vec::new();
        let mut var_edges = vec![Vec::new(); cols];
        row_start.push(0);
        for list in &row_vars {
            for &i in list {
                var_edges[i].push(edge_var.len());
                edge_var.push(i);
            }
            row_start.push(edge_var.len());
        }

        Ok(ParityCheckMatrix {
            rows,
            cols,
            row_vars,
            col_checks,
            row_start,
            edge_var,
            var_edges,
        })
    }

    /// Builds `H` from per-column lists of row indices.
    pub fn from_col_lists(rows: usize, cols: usize, col_checks: Vec<Vec<usize>>) -> Result<Self> {
        if col_checks.len() != cols {
            return Err(Error::InvalidMatrix(format!(
                "expected {cols} column lists, got {}",
                col_checks.len()
            )));
        }
        let mut row_vars = vec![Vec::new(); rows];
        for (i, list) in col_checks.iter().enumerate() {
            for (k, &j) in list.iter().enumerate() {
                if j >= rows {
                    return Err(Error::InvalidMatrix(format!(
                        "column {i}: row index {j} out of range for {rows} rows"
                    )));
                }
                if k > 0 && list[k - 1] >= j {
                    return Err(Error::InvalidMatrix(format!(
                        "column {i}: row indices must be strictly increasing"
                    )));
                }
                row_vars[j].push(i);
            }
        }
        Self::from_row_lists(rows, cols, row_vars)
    }

    /// Builds `H` from a dense 0/1 matrix given row by row.
    pub fn from_dense<R: AsRef<[u8]>>(dense: &[R]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.as_ref().len());
        let mut row_vars = Vec::with_capacity(rows);
        for (j, row) in dense.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::InvalidMatrix(format!(
                    "row {j} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            row_vars.push(row.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i).collect());
        }
        Self::from_row_lists(rows, cols, row_vars)
    }

    /// Number of checks `r`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Codeword length `m`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Variables attached to check `j`.
    pub fn row(&self, j: usize) -> &[usize] {
        &self.row_vars[j]
    }

    /// Checks attached to variable `i`.
    pub fn col(&self, i: usize) -> &[usize] {
        &self.col_checks[i]
    }

    pub fn num_edges(&self) -> usize {
        self.edge_var.len()
    }

    pub fn contains(&self, j: usize, i: usize) -> bool {
        self.row_vars[j].binary_search(&i).is_ok()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.row_vars.iter().map(Vec::len).collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        self.col_checks.iter().map(Vec::len).collect()
    }

    /// Edge numbers belonging to check `j`.
    pub fn edge_range(&self, j: usize) -> std::ops::Range<usize> {
        self.row_start[j]..self.row_start[j + 1]
    }

    /// Variable endpoint of edge `e`.
    pub fn edge_var(&self, e: usize) -> usize {
        self.edge_var[e]
    }

    /// Edge numbers touching variable `i`, in increasing check order.
    pub fn var_edges(&self, i: usize) -> &[usize] {
        &self.var_edges[i]
    }

    /// Column `i` as a length-`r` bit vector.
    pub fn column_bits(&self, i: usize) -> BitBlock {
        let mut b = BitBlock::zeros(self.rows);
        for &j in &self.col_checks[i] {
            b.set(j, true);
        }
        b
    }

    /// Dense row-major 0/1 copy of the matrix.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.row_vars
            .iter()
            .map(|list| {
                let mut row = vec![0u8; self.cols];
                for &i in list {
                    row[i] = 1;
                }
                row
            })
            .collect()
    }

    /// The conventional `H(r,m)` label.
    pub fn name(&self) -> String {
        format!("H({},{})", self.rows, self.cols)
    }

    /// `C·Hᵀ` over GF(2).
    pub fn syndrome(&self, word: &BitBlock) -> Result<BitBlock> {
        self.check_len(word)?;
        Ok(self
            .row_vars
            .iter()
            .map(|list| list.iter().filter(|&&i| word.get(i)).count() % 2 == 1)
            .collect())
    }

    /// True when every parity check is satisfied.
    pub fn is_codeword(&self, word: &BitBlock) -> Result<bool> {
        self.check_len(word)?;
        Ok(self
            .row_vars
            .iter()
            .all(|list| list.iter().filter(|&&i| word.get(i)).count() % 2 == 0))
    }

    fn check_len(&self, word: &BitBlock) -> Result<()> {
        if word.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: word.len(),
            });
        }
        Ok(())
    }
}

/// Free-function form of [`ParityCheckMatrix::syndrome`].
pub fn syndrome(word: &BitBlock, h: &ParityCheckMatrix) -> Result<BitBlock> {
    h.syndrome(word)
}

impl fmt::Debug for ParityCheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with {} edges", self.name(), self.num_edges())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::ParityCheckMatrix;

    /// The 5x10 (2,4)-regular example matrix used throughout the tests.
    pub const EXAMPLE_H: [[u8; 10]; 5] = [
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
    ];

    pub fn example_h() -> ParityCheckMatrix {
        ParityCheckMatrix::from_dense(&EXAMPLE_H).unwrap()
    }
}
