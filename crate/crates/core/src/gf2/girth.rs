use super::ParityCheckMatrix;
use std::collections::VecDeque;
use std::fmt;

/// Length of the shortest Tanner-graph cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    pub fn cycle_len(self) -> Option<usize> {
        match self {
            Girth::Cycle(n) => Some(n),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(n) => write!(f, "{n}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Shortest cycle through the Tanner graph of `h`.
///
/// For every edge (check j, variable i) a BFS finds the shortest path from
/// i back to j that avoids the edge itself; the cycle closes with that edge.
pub fn girth(h: &ParityCheckMatrix) -> Girth {
    let m = h.cols();
    let n = m + h.rows();
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let mut best = usize::MAX;

    for j in 0..h.rows() {
        for &i in h.row(j) {
            // Anything at or beyond `best - 1` hops cannot improve on best.
            let limit = best.saturating_sub(1);
            let target = m + j;
            for &t in &touched {
                dist[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            dist[i] = 0;
            touched.push(i);
            queue.push_back(i);

            'bfs: while let Some(u) = queue.pop_front() {
                let d = dist[u];
                if d + 1 >= limit {
                    break;
                }
                let (neighbours, offset): (&[usize], usize) = if u < m {
                    (h.col(u), m)
                } else {
                    (h.row(u - m), 0)
                };
                for &w in neighbours {
                    let w = w + offset;
                    if u == i && w == target {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = d + 1;
                        touched.push(w);
                        if w == target {
                            best = best.min(d + 2);
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if best == 4 {
                return Girth::Cycle(4);
            }
        }
    }

    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::fixtures::example_h;

    #[test]
    fn example_h_has_girth_six() {
        assert_eq!(girth(&example_h()), Girth::Cycle(6));
    }

    #[test]
    fn four_cycle() {
        let h = ParityCheckMatrix::from_dense(&[[1u8, 1], [1, 1]]).unwrap();
        assert_eq!(girth(&h), Girth::Cycle(4));
    }

    #[test]
    fn path_graph_is_acyclic() {
        let h = ParityCheckMatrix::from_dense(&[[1u8, 1, 0], [0, 1, 1]]).unwrap();
        assert_eq!(girth(&h), Girth::Acyclic);
        assert_eq!(Girth::Acyclic.to_string(), "acyclic");
    }

    #[test]
    fn eight_cycle() {
        // Four checks arranged in a ring through four variables.
        let h = ParityCheckMatrix::from_dense(&[
            [1u8, 1, 0, 0],
            [0, 1, 1, 0],
            [0, 0, 1, 1],
            [1, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(girth(&h), Girth::Cycle(8));
    }
}
