//! Pipe dreams on the staircase `{(i, j) : i + j <= n}`.

mod enumerate;
mod history;
mod maximal;

pub use enumerate::{
    fiber_stats, for_each_pipe_dream, grothendieck_from_pipes, pipe_dreams, pipe_fibers,
    reduced_pipe_dreams, schubert_double_from_pipes, FiberStats, DEFAULT_PIPE_CAP,
};
pub use history::{delete_top_pipes, restrict_rows, PlanarHistory};
pub use maximal::{layered_pipe_dream, max_pipe_dream, SimplifiedArray};

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};
use crate::perm::{hecke_apply, Permutation, Word};
use crate::poly::SparsePoly;

/// Largest `n` whose staircase fits the cross bitset.
pub const MAX_PIPE_N: usize = 16;

/// Staircase cells in reading order: rows top to bottom, right to left within a row.
pub(crate) fn reading_cells(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|i| (1..=n - i).rev().map(move |j| (i, j)))
        .collect()
}

/// Bit index of `(i, j)` in reading order.
pub(crate) fn cell_index(n: usize, i: usize, j: usize) -> usize {
    let before: usize = (1..i).map(|r| n - r).sum();
    before + (n - i - j)
}

/// A set of crosses; every other staircase cell is a bumping tile.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    n: u8,
    crosses: u128,
}

impl PipeDream {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_PIPE_N {
            return Err(Error::CapExceeded {
                what: "pipe dream size".into(),
                n,
                cap: MAX_PIPE_N,
            });
        }
        Ok(Self {
            n: n as u8,
            crosses: 0,
        })
    }

    pub fn new(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut p = Self::empty(n)?;
        for (i, j) in cells {
            if i == 0 || j == 0 || i + j > n {
                return Err(Error::InvalidWord(format!("cell ({i},{j}) is outside the staircase")));
            }
            p.set(i, j, true);
        }
        Ok(p)
    }

    pub(crate) fn from_bits(n: usize, crosses: u128) -> Self {
        Self {
            n: n as u8,
            crosses,
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn has_cross(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        i >= 1 && j >= 1 && i + j <= n && self.crosses >> cell_index(n, i, j) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, cross: bool) {
        if i + j > self.n() {
            assert!(!cross, "cell ({i},{j}) is outside the staircase");
            return;
        }
        let bit = 1u128 << cell_index(self.n(), i, j);
        if cross {
            self.crosses |= bit;
        } else {
            self.crosses &= !bit;
        }
    }

    /// Number of crosses.
    pub fn len(&self) -> usize {
        self.crosses.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.crosses == 0
    }

    /// Crosses in reading order.
    pub fn crosses(&self) -> Vec<(usize, usize)> {
        reading_cells(self.n())
            .into_iter()
            .enumerate()
            .filter(|(k, _)| self.crosses >> k & 1 == 1)
            .map(|(_, c)| c)
            .collect()
    }

    /// Reading word: a cross at `(i, j)` contributes `s_{i+j-1}`.
    pub fn word(&self) -> Word {
        Word::new(
            self.n(),
            self.crosses().into_iter().map(|(i, j)| i + j - 1).collect(),
        )
        .expect("staircase letters are in range")
    }

    /// Demazure product of the reading word.
    pub fn perm(&self) -> Permutation {
        hecke_apply(self.n(), self.word().letters())
    }

    /// The crosses that lengthen the Demazure product when read in order;
    /// the others behave as bumps.
    pub fn effective(&self) -> Self {
        let n = self.n();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        let mut out = Self::from_bits(n, 0);
        for (i, j) in self.crosses() {
            let a = i + j - 1;
            if cur[a - 1] < cur[a] {
                cur.swap(a - 1, a);
                out.set(i, j, true);
            }
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.word().is_reduced()
    }

    pub fn row_counts(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (i, _) in self.crosses() {
            out[i - 1] += 1;
        }
        out
    }

    pub fn col_counts(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (_, j) in self.crosses() {
            out[j - 1] += 1;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::from_bits(self.n(), 0);
        for (i, j) in self.crosses() {
            t.set(j, i, true);
        }
        t
    }

    /// `prod x_i` over crosses.
    pub fn x_weight(&self) -> SparsePoly {
        SparsePoly::x_monomial(&self.row_counts())
    }

    /// `prod (x_i + y_j - x_i y_j)` over crosses.
    pub fn double_weight(&self) -> SparsePoly {
        let n = self.n();
        let mut out = SparsePoly::one(n);
        for (i, j) in self.crosses() {
            let (x, y) = (SparsePoly::x(n, i), SparsePoly::y(n, j));
            out = &out * &(&(&x + &y) - &(&x * &y));
        }
        out
    }

    /// `x^{rows} y^{cols}`, the top-degree monomial of the double weight.
    pub fn biweight(&self) -> SparsePoly {
        let n = self.n();
        let rows = self.row_counts();
        let cols = self.col_counts();
        let mut m = crate::poly::Monomial::one(n);
        for k in 1..=n {
            *m.x_mut(k) = rows[k - 1] as u16;
            *m.y_mut(k) = cols[k - 1] as u16;
        }
        SparsePoly::term(m, 1)
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        for i in 1..n {
            if i > 1 {
                writeln!(f)?;
            }
            for j in 1..=n - i {
                write!(f, "{}", if self.has_cross(i, j) { '+' } else { '.' })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream(n={}, {:?})", self.n, self.crosses())
    }
}

/// Parses the staircase rendering; row `i` must have `n - i` characters.
impl FromStr for PipeDream {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let n = rows.len() + 1;
        let mut cells = Vec::new();
        let mut offset = 0;
        for (r, line) in rows.iter().enumerate() {
            let i = r + 1;
            if line.chars().count() != n - i {
                return Err(parse_err(offset, format!("row {i} should have {} cells", n - i)));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '+' => cells.push((i, c + 1)),
                    '.' => {}
                    _ => return Err(parse_err(offset + c, format!("unexpected '{ch}'"))),
                }
            }
            offset += line.len() + 1;
        }
        Self::new(n, cells)
    }
}

/// Serialized as the list of crossed cells `[i, j]`.
impl Serialize for PipeDream {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let cells = self.crosses();
        let mut seq = serializer.serialize_seq(Some(cells.len()))?;
        for (i, j) in cells {
            seq.serialize_element(&[i, j])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reading_order_and_indices() {
        let cells = reading_cells(4);
        assert_eq!(cells, vec![(1, 3), (1, 2), (1, 1), (2, 2), (2, 1), (3, 1)]);
        for (k, &(i, j)) in cells.iter().enumerate() {
            assert_eq!(cell_index(4, i, j), k);
        }
    }

    #[test]
    fn small_perms() {
        let pd = PipeDream::new(3, [(1, 1), (1, 2)]).unwrap();
        assert_eq!(pd.word().letters(), &[2, 1]);
        assert_eq!(pd.perm(), p("312"));
        let pd = PipeDream::new(3, [(1, 1), (2, 1)]).unwrap();
        assert_eq!(pd.perm(), p("231"));
        let pd = PipeDream::new(3, [(1, 1), (2, 1), (1, 2)]).unwrap();
        assert_eq!(pd.perm(), p("321"));
        assert!(PipeDream::new(3, [(2, 2)]).is_err());
    }

    #[test]
    fn ascii_and_json() {
        let pd = PipeDream::new(4, [(1, 1), (2, 2), (3, 1)]).unwrap();
        let text = pd.to_string();
        assert_eq!(text, "+..\n.+\n+");
        assert_eq!(text.parse::<PipeDream>().unwrap(), pd);
        assert_eq!(serde_json::to_string(&pd).unwrap(), "[[1,1],[2,2],[3,1]]");
        assert!("+.\n++".parse::<PipeDream>().is_err());
        assert!("+x\n.".parse::<PipeDream>().is_err());
    }

    #[test]
    fn transpose_inverts() {
        for bits in 0u128..64 {
            let pd = PipeDream::from_bits(4, bits);
            assert_eq!(pd.transpose().perm(), pd.perm().inverse());
            assert_eq!(pd.transpose().transpose(), pd);
        }
    }
}
