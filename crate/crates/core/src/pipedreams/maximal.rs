//! The maximal pipe dream: crosses `rajcode(w)` by row and `rajcode(w^-1)` by column.

use super::PipeDream;
use crate::error::{Error, Result};
use crate::perm::{Composition, Permutation};
use crate::rajchgot::{factorize, raj_code};

/// Rows `i, i+1` of a pipe dream with the `++` columns removed.
///
/// Each column is `(top, bottom)`; columns past the staircase are `00`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedArray {
    pub row: usize,
    pub columns: Vec<(bool, bool)>,
    /// Original column index of each simplified column.
    pub backmap: Vec<usize>,
}

impl SimplifiedArray {
    pub fn new(p: &PipeDream, i: usize) -> Self {
        let n = p.n();
        let mut columns = Vec::new();
        let mut backmap = Vec::new();
        for j in 1..=n - i {
            let col = (p.has_cross(i, j), p.has_cross(i + 1, j));
            if col != (true, true) {
                columns.push(col);
                backmap.push(j);
            }
        }
        Self {
            row: i,
            columns,
            backmap,
        }
    }

    fn column(&self, k: usize) -> (bool, bool) {
        self.columns.get(k).copied().unwrap_or((false, false))
    }

    /// First adjacent pair among `00.+0`, `0+.00`, `+0.+0`, if any.
    pub fn forbidden_adjacent(&self) -> Option<usize> {
        const ZZ: (bool, bool) = (false, false);
        const ZP: (bool, bool) = (false, true);
        const PZ: (bool, bool) = (true, false);
        (0..=self.columns.len()).find(|&k| {
            matches!(
                (self.column(k), self.column(k + 1)),
                (ZZ, PZ) | (ZP, ZZ) | (PZ, PZ)
            )
        })
    }

    /// `(a_1, b_1), ..., (a_k, b_k)` when the array reads
    /// `(0+)^{a_1} (+0) (00)^{b_1} ... (0+)^{a_k} (+0) (00)^infinity`.
    pub fn normal_form(&self) -> Option<Vec<(usize, usize)>> {
        let cols = &self.columns;
        let mut k = 0;
        let mut blocks = Vec::new();
        while k < cols.len() {
            let start = k;
            while k < cols.len() && cols[k] == (false, true) {
                k += 1;
            }
            let a = k - start;
            if a == 0 || k >= cols.len() || cols[k] != (true, false) {
                return None;
            }
            k += 1;
            let zs = k;
            while k < cols.len() && cols[k] == (false, false) {
                k += 1;
            }
            blocks.push((a, k - zs));
        }
        (!blocks.is_empty()).then_some(blocks)
    }
}

/// `Q_alpha`: bumps on the antidiagonals `i + j - 1` equal to a partial sum of `alpha`.
pub fn layered_pipe_dream(alpha: &Composition) -> PipeDream {
    let n = alpha.n();
    let sums = alpha.partial_sums();
    let cells = super::reading_cells(n)
        .into_iter()
        .filter(|&(i, j)| !sums.contains(&(i + j - 1)));
    PipeDream::new(n, cells).expect("staircase cells")
}

fn internal(msg: String) -> Error {
    Error::Internal(msg)
}

fn build(w: &Permutation) -> Result<PipeDream> {
    let f = factorize(w)?;
    let (u, v) = (&f.left, &f.right);
    if u.is_identity() && v.is_identity() {
        return Ok(layered_pipe_dream(&f.shape));
    }
    // Rows i, i+1 carry the pipes permuted by w s_i, so recurse on a right
    // descent of v; if v is trivial, work with the inverse and transpose.
    if v.is_identity() {
        return Ok(build(&w.inverse())?.transpose());
    }
    let i = *v.descents().first().expect("v is not the identity");
    let prev = build(&w.mul_simple_right(i))?;
    let q = SimplifiedArray::new(&prev, i);
    if let Some(k) = q.forbidden_adjacent() {
        return Err(internal(format!(
            "forbidden pattern at simplified column {k} in rows {i},{} while building {w}",
            i + 1
        )));
    }
    let blocks = q
        .normal_form()
        .ok_or_else(|| internal(format!("simplified array not in normal form for {w}, row {i}")))?;
    let (a1, _) = blocks[0];
    if blocks[1..].iter().any(|&(a, _)| a != 1) {
        return Err(internal(format!("a_j > 1 beyond the first block for {w}")));
    }
    let mut p = prev;
    for &j in &q.backmap[..=a1] {
        p.set(i, j, true);
        p.set(i + 1, j, false);
    }
    Ok(p)
}

/// Builds the maximal pipe dream from `Q_alpha` by pushing crosses up, and checks it.
pub fn max_pipe_dream(w: &Permutation) -> Result<PipeDream> {
    if w.n() > super::MAX_PIPE_N {
        return Err(Error::CapExceeded {
            what: "pipe dream size".into(),
            n: w.n(),
            cap: super::MAX_PIPE_N,
        });
    }
    let p = build(w)?;
    if p.perm() != *w {
        return Err(internal(format!("maximal pipe dream for {w} gives {}", p.perm())));
    }
    if p.row_counts() != raj_code(w).0 || p.col_counts() != raj_code(&w.inverse()).0 {
        return Err(internal(format!("maximal pipe dream for {w} has the wrong weight")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::compositions;
    use crate::pipedreams::pipe_dreams;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn layered_base_case() {
        for n in 1..=7 {
            for alpha in compositions(n) {
                let q = layered_pipe_dream(&alpha);
                let e = alpha.layered();
                assert_eq!(q.perm(), e);
                assert_eq!(q.row_counts(), raj_code(&e).0);
                assert_eq!(q.col_counts(), raj_code(&e.inverse()).0);
            }
        }
    }

    #[test]
    fn the_hard_example() {
        let pd = max_pipe_dream(&p("14523")).unwrap();
        assert_eq!(pd.len(), 6);
        assert_eq!(pd.row_counts(), raj_code(&p("14523")).0);
    }

    #[test]
    fn unique_biweight_for_small_n() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let m = max_pipe_dream(&w).unwrap();
                let (r, s) = (raj_code(&w).0, raj_code(&w.inverse()).0);
                let hits: Vec<PipeDream> = pipe_dreams(&w, 7)
                    .unwrap()
                    .into_iter()
                    .filter(|pd| pd.row_counts() == r && pd.col_counts() == s)
                    .collect();
                assert_eq!(hits, vec![m], "{w}");
            }
        }
    }

    #[test]
    fn simplified_array_shapes() {
        let pd: PipeDream = ".+..\n+++\n..\n.".parse().unwrap();
        let q = SimplifiedArray::new(&pd, 1);
        assert_eq!(q.backmap, vec![1, 3, 4]);
        assert_eq!(q.columns, vec![(false, true), (false, true), (false, false)]);
        assert_eq!(q.normal_form(), None);
        assert_eq!(q.forbidden_adjacent(), Some(1));
        let ok = SimplifiedArray {
            row: 1,
            columns: vec![(false, true), (true, false), (false, true), (true, false)],
            backmap: vec![1, 2, 3, 4],
        };
        assert_eq!(ok.normal_form(), Some(vec![(1, 0), (1, 0)]));
        assert_eq!(ok.forbidden_adjacent(), None);
    }
}
