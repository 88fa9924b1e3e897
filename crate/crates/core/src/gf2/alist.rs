//! alist sparse-matrix interchange format.
//!
//! ```text
//! m r
//! max_col_weight max_row_weight
//! <m column weights>
//! <r row weights>
//! <m lines: 1-based row indices of each column>
//! <r lines: 1-based column indices of each row>
//! ```
//!
//! Zero entries padding a list to the maximum weight are accepted on read
//! and never written.

use super::ParityCheckMatrix;
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

pub fn load_alist(path: impl AsRef<Path>) -> Result<ParityCheckMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_alist(&text)
}

pub fn save_alist(h: &ParityCheckMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_alist_string(h)).map_err(|e| Error::io(path, e))
}

pub fn to_alist_string(h: &ParityCheckMatrix) -> String {
    let col_w = h.col_weights();
    let row_w = h.row_weights();
    let mut out = String::new();
    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(out, "{} {}", h.cols(), h.rows());
    let _ = writeln!(
        out,
        "{} {}",
        col_w.iter().max().copied().unwrap_or(0),
        row_w.iter().max().copied().unwrap_or(0)
    );
    let _ = writeln!(out, "{}", join(&mut col_w.iter().copied()));
    let _ = writeln!(out, "{}", join(&mut row_w.iter().copied()));
    for i in 0..h.cols() {
        let _ = writeln!(out, "{}", join(&mut h.col(i).iter().map(|j| j + 1)));
    }
    for j in 0..h.rows() {
        let _ = writeln!(out, "{}", join(&mut h.row(j).iter().map(|i| i + 1)));
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next non-blank line as (1-based line number, numbers).
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        for (idx, line) in self.inner.by_ref() {
            self.last = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Alist {
                        line: idx + 1,
                        msg: format!("malformed {what}: `{tok}` is not a non-negative integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok((idx + 1, nums));
        }
        Err(Error::Alist {
            line: self.last + 1,
            msg: format!("unexpected end of file, expected {what}"),
        })
    }

    fn rest_is_blank(&mut self) -> Option<usize> {
        self.inner
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .map(|(idx, _)| idx + 1)
    }
}

fn expect_count(line: usize, nums: &[usize], n: usize, what: &str) -> Result<()> {
    if nums.len() != n {
        return Err(Error::Alist {
            line,
            msg: format!("malformed {what}: expected {n} values, found {}", nums.len()),
        });
    }
    Ok(())
}

/// Reads one adjacency list, dropping zero padding and converting to 0-based.
fn read_list(
    lines: &mut Lines<'_>,
    what: &str,
    weight: usize,
    bound: usize,
) -> Result<(usize, Vec<usize>)> {
    let (line, nums) = lines.next_numbers(what)?;
    let list: Vec<usize> = nums.into_iter().filter(|&v| v != 0).collect();
    if list.len() != weight {
        return Err(Error::Alist {
            line,
            msg: format!("{what} has {} entries but its declared weight is {weight}", list.len()),
        });
    }
    let mut out = Vec::with_capacity(list.len());
    for v in list {
        if v > bound {
            return Err(Error::Alist {
                line,
                msg: format!("index out of range: {v} exceeds {bound}"),
            });
        }
        out.push(v - 1);
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Alist {
            line,
            msg: format!("duplicate index in {what}"),
        });
    }
    Ok((line, out))
}

pub fn parse_alist(text: &str) -> Result<ParityCheckMatrix> {
    let mut lines = Lines::new(text);

    let (line, header) = lines.next_numbers("header")?;
    expect_count(line, &header, 2, "header")?;
    let (cols, rows) = (header[0], header[1]);
    if cols == 0 || rows == 0 {
        return Err(Error::Alist {
            line,
            msg: "malformed header: dimensions must be positive".into(),
        });
    }

    let (max_line, maxes) = lines.next_numbers("maximum weights")?;
    expect_count(max_line, &maxes, 2, "maximum weights")?;

    let (line, col_w) = lines.next_numbers("column weights")?;
    expect_count(line, &col_w, cols, "column weights")?;
    let (line, row_w) = lines.next_numbers("row weights")?;
    expect_count(line, &row_w, rows, "row weights")?;

    let (max_col, max_row) = (
        col_w.iter().copied().max().unwrap_or(0),
        row_w.iter().copied().max().unwrap_or(0),
    );
    if maxes != [max_col, max_row] {
        return Err(Error::Alist {
            line: max_line,
            msg: format!(
                "maximum weights {} {} disagree with the listed weights ({max_col} {max_row})",
                maxes[0], maxes[1]
            ),
        });
    }
    if col_w.iter().sum::<usize>() != row_w.iter().sum::<usize>() {
        return Err(Error::Alist {
            line,
            msg: "inconsistent row/column lists: column and row weights sum differently".into(),
        });
    }

    let mut col_lists = Vec::with_capacity(cols);
    for (i, &w) in col_w.iter().enumerate() {
        let (_, list) = read_list(&mut lines, &format!("column {} list", i + 1), w, rows)?;
        col_lists.push(list);
    }
    let mut row_lists = Vec::with_capacity(rows);
    let mut row_lines = Vec::with_capacity(rows);
    for (j, &w) in row_w.iter().enumerate() {
        let (line, list) = read_list(&mut lines, &format!("row {} list", j + 1), w, cols)?;
        row_lists.push(list);
        row_lines.push(line);
    }
    if let Some(line) = lines.rest_is_blank() {
        return Err(Error::Alist {
            line,
            msg: "unexpected trailing data".into(),
        });
    }

    // The row lists must describe exactly the transpose of the column lists.
    let mut from_cols = vec![Vec::new(); rows];
    for (i, list) in col_lists.iter().enumerate() {
        for &j in list {
            from_cols[j].push(i);
        }
    }
    for (j, (a, b)) in from_cols.iter().zip(&row_lists).enumerate() {
        if a != b {
            return Err(Error::Alist {
                line: row_lines[j],
                msg: format!("inconsistent row/column lists at row {}", j + 1),
            });
        }
    }

    ParityCheckMatrix::from_row_lists(rows, cols, row_lists).map_err(|e| Error::Alist {
        line: 1,
        msg: e.to_string(),
    })
}
