//! Row restriction and pipe deletion, the two views used in the exponent bound.

use std::collections::HashSet;

use super::PipeDream;
use crate::perm::{hecke_apply, Permutation};

/// Rows `k+1..n` of `p`, shifted up into a pipe dream of size `n - k`.
pub fn restrict_rows(p: &PipeDream, k: usize) -> PipeDream {
    let m = p.n() - k;
    let cells = p
        .crosses()
        .into_iter()
        .filter(|&(i, _)| i > k)
        .map(|(i, j)| (i - k, j));
    PipeDream::new(m, cells).expect("shifted rows stay in the smaller staircase")
}

/// A southwest planar history: labelled crossings of the surviving paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarHistory {
    size: usize,
    /// `(row, column, letter)` in reading order.
    crossings: Vec<(usize, usize, usize)>,
}

impl PlanarHistory {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn crossings(&self) -> &[(usize, usize, usize)] {
        &self.crossings
    }

    pub fn word(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.2).collect()
    }

    /// Demazure product of the reading word.
    pub fn perm(&self) -> Permutation {
        hecke_apply(self.size, &self.word())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum From {
    Top,
    Right,
}

struct Path {
    exit_row: usize,
    cells: Vec<(usize, usize)>,
}

/// Follows the pipe entering the top of column `c`.
fn trace(p: &PipeDream, c: usize) -> Path {
    let n = p.n();
    let (mut i, mut j, mut from) = (1, c, From::Top);
    let mut cells = Vec::new();
    loop {
        cells.push((i, j));
        let cross = i + j <= n && p.has_cross(i, j);
        let go_left = match from {
            From::Top => !cross,
            From::Right => cross,
        };
        if go_left {
            if j == 1 {
                return Path { exit_row: i, cells };
            }
            j -= 1;
            from = From::Right;
        } else {
            i += 1;
            from = From::Top;
        }
    }
}

/// Deletes the pipes leaving rows `1..=k` and relabels the remaining crossings.
///
/// Pipes are traced through the effective crosses, so two pipes cross at most once;
/// a redundant cross stays in the history as a non-lengthening letter.
pub fn delete_top_pipes(p: &PipeDream, k: usize) -> PlanarHistory {
    let n = p.n();
    let size = n - k;
    let eff = p.effective();
    let paths: Vec<Path> = (1..=n)
        .map(|c| trace(&eff, c))
        .filter(|path| path.exit_row > k)
        .collect();
    let cell_sets: Vec<HashSet<(usize, usize)>> = paths
        .iter()
        .map(|path| path.cells.iter().copied().collect())
        .collect();
    let mut crossings = Vec::new();
    for (i, j) in p.crosses() {
        let through = cell_sets.iter().filter(|s| s.contains(&(i, j))).count();
        if through < 2 {
            continue;
        }
        let southeast = paths
            .iter()
            .filter(|path| path.cells.iter().any(|&(r, c)| r > i && c > j))
            .count();
        crossings.push((i, j, size - southeast - 1));
    }
    PlanarHistory { size, crossings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::weak_leq_left;
    use crate::pipedreams::pipe_dreams;
    use crate::rajchgot::{raj, raj_code};

    #[test]
    fn zero_deletions_reproduce_the_reading_word() {
        for bits in 0u128..1 << 10 {
            let pd = PipeDream::from_bits(5, bits);
            let h = delete_top_pipes(&pd, 0);
            assert_eq!(h.word(), pd.word().letters());
        }
    }

    #[test]
    fn reduced_pipes_exit_at_their_rows() {
        for w in Permutation::all(4) {
            for pd in pipe_dreams(&w, 7).unwrap() {
                if pd.is_reduced() {
                    for c in 1..=4 {
                        assert_eq!(w.at(trace(&pd, c).exit_row), c);
                    }
                }
            }
        }
    }

    #[test]
    fn exponent_bound_chain() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let suffix = raj_code(&w).suffix_sums();
                for pd in pipe_dreams(&w, 7).unwrap() {
                    let rows = pd.row_counts();
                    for k in 0..n {
                        let q = delete_top_pipes(&pd, k);
                        let wk = Permutation::flatten(&w.as_slice()[k..]);
                        assert_eq!(q.perm(), wk, "{w} {pd:?} k={k}");
                        let uk = restrict_rows(&pd, k).perm();
                        assert!(weak_leq_left(&uk, &wk).unwrap(), "{w} k={k}");
                        let a: usize = rows[k..].iter().sum();
                        assert!(a <= raj(&uk) && raj(&uk) <= suffix[k]);
                    }
                }
            }
        }
    }

    #[test]
    fn full_deletion_is_empty() {
        let pd = PipeDream::new(4, [(1, 1), (2, 2)]).unwrap();
        let h = delete_top_pipes(&pd, 3);
        assert_eq!(h.size(), 1);
        assert!(h.crossings().is_empty());
    }
}
