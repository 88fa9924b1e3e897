//! Progressive edge growth.
//!
//! Variables are processed in column order. Each new edge of variable `v`
//! goes to a check that is as far from `v` as possible in the graph built so
//! far: an unreachable check if one exists, otherwise one first reached at
//! the deepest BFS level. Among candidates the check with the lowest current
//! degree wins, then the one earliest in a seed-permuted order.

use super::ParityCheckMatrix;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Parameters of a PEG construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PegParams {
    pub cols: usize,
    pub rows: usize,
    /// Degree of every column, in column order.
    pub column_degrees: Vec<usize>,
    pub seed: u64,
}

impl PegParams {
    /// All columns with the same degree.
    pub fn regular(cols: usize, rows: usize, degree: usize, seed: u64) -> Self {
        PegParams {
            cols,
            rows,
            column_degrees: vec![degree; cols],
            seed,
        }
    }

    pub fn build(&self) -> Result<ParityCheckMatrix> {
        peg_construct(self.cols, self.rows, &self.column_degrees, self.seed)
    }
}

pub fn peg_construct(
    cols: usize,
    rows: usize,
    column_degrees: &[usize],
    seed: u64,
) -> Result<ParityCheckMatrix> {
    if cols == 0 || rows == 0 {
        return Err(Error::InfeasibleDegrees(format!(
            "dimensions must be positive, got {rows}x{cols}"
        )));
    }
    if column_degrees.len() != cols {
        return Err(Error::InfeasibleDegrees(format!(
            "{} column degrees given for {cols} columns",
            column_degrees.len()
        )));
    }
    if let Some((i, &d)) = column_degrees
        .iter()
        .enumerate()
        .find(|(_, &d)| d == 0 || d > rows)
    {
        return Err(Error::InfeasibleDegrees(format!(
            "column {i} has degree {d}, must lie in 1..={rows}"
        )));
    }

    let mut order: Vec<usize> = (0..rows).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut tie_rank = vec![0usize; rows];
    for (pos, &c) in order.iter().enumerate() {
        tie_rank[c] = pos;
    }

    let mut check_vars: Vec<Vec<usize>> = vec![Vec::new(); rows];
    let mut var_checks: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut bfs = Bfs::new(rows, cols);

    for v in 0..cols {
        for _ in 0..column_degrees[v] {
            let candidates = if var_checks[v].is_empty() {
                None
            } else {
                Some(bfs.farthest_checks(v, &check_vars, &var_checks))
            };
            let pick = (0..rows)
                .filter(|&c| candidates.as_ref().is_none_or(|set| set[c]))
                .min_by_key(|&c| (check_vars[c].len(), tie_rank[c]))
                .expect("candidate set is never empty while degree <= rows");
            check_vars[pick].push(v);
            var_checks[v].push(pick);
        }
    }

    for list in &mut var_checks {
        list.sort_unstable();
    }
    ParityCheckMatrix::from_col_lists(rows, cols, var_checks)
}

struct Bfs {
    check_seen: Vec<bool>,
    var_seen: Vec<bool>,
}

impl Bfs {
    fn new(rows: usize, cols: usize) -> Self {
        Bfs {
            check_seen: vec![false; rows],
            var_seen: vec![false; cols],
        }
    }

    /// Marks the candidate checks for the next edge of `v`.
    fn farthest_checks(
        &mut self,
        v: usize,
        check_vars: &[Vec<usize>],
        var_checks: &[Vec<usize>],
    ) -> Vec<bool> {
        let rows = check_vars.len();
        self.check_seen.fill(false);
        self.var_seen.fill(false);
        self.var_seen[v] = true;

        let mut frontier: Vec<usize> = var_checks[v].clone();
        for &c in &frontier {
            self.check_seen[c] = true;
        }
        let mut reached = frontier.len();

        loop {
            let mut next = Vec::new();
            for &c in &frontier {
                for &u in &check_vars[c] {
                    if self.var_seen[u] {
                        continue;
                    }
                    self.var_seen[u] = true;
                    for &c2 in &var_checks[u] {
                        if !self.check_seen[c2] {
                            self.check_seen[c2] = true;
                            next.push(c2);
                        }
                    }
                }
            }
            if next.is_empty() {
                // Growth stalled: the unreached checks are infinitely far.
                return self.check_seen.iter().map(|&s| !s).collect();
            }
            if reached + next.len() == rows {
                // Every check is reachable; take the deepest level.
                let mut set = vec![false; rows];
                for &c in &next {
                    set[c] = true;
                }
                return set;
            }
            reached += next.len();
            frontier = next;
        }
    }
}
