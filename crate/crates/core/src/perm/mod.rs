//! Permutations in one-line notation and the combinatorics built on them.

mod composition;
mod hecke;
mod order;

pub use composition::{compositions, Composition};
pub use hecke::{demazure_product, hecke_apply, Word};
pub use order::{
    bruhat_leq, down_set_right, down_set_left, down_set_two_sided, interval_left, interval_right,
    interval_two_sided, weak_leq_left, weak_leq_right, weak_leq_two_sided,
    weak_leq_two_sided_capped, DEFAULT_ORDER_CAP,
};

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{parse_err, Error, Result};

/// A permutation of `[n]` in one-line notation. Values are 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("size {n} is too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { one_line })
    }

    pub(crate) fn from_vec_unchecked(one_line: Vec<u8>) -> Self {
        debug_assert!(Self::new(one_line.clone()).is_ok());
        Self { one_line }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_vec_unchecked((1..=n as u8).collect())
    }

    /// The longest element `w0 = n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Self::from_vec_unchecked((1..=n as u8).rev().collect())
    }

    /// The simple transposition `s_i` of `S_n`, 1 <= i < n.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidWord(format!("s_{i} is not a generator of S_{n}")));
        }
        let mut w = Self::identity(n);
        w.one_line.swap(i - 1, i);
        Ok(w)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n as u8)
            .permutations(n)
            .map(Self::from_vec_unchecked)
            .collect()
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for 1-indexed `i`.
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.one_line
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.one_line.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self::from_vec_unchecked(inv)
    }

    /// Function composition `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: other.n(),
            });
        }
        Ok(Self::from_vec_unchecked(
            other
                .one_line
                .iter()
                .map(|&j| self.one_line[j as usize - 1])
                .collect(),
        ))
    }

    /// `w s_i`: swaps the entries in positions i and i+1.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.one_line.swap(i - 1, i);
        w
    }

    /// `s_i w`: swaps the values i and i+1.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        let one_line = self
            .one_line
            .iter()
            .map(|&v| if v == a { b } else if v == b { a } else { v })
            .collect();
        Self::from_vec_unchecked(one_line)
    }

    /// Number of inversions, the Coxeter length.
    pub fn inv(&self) -> usize {
        self.inv_code().iter().sum()
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn inv_code(&self) -> Vec<usize> {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// Right descents: positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        let w = &self.one_line;
        (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
    }

    /// Positions `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> Vec<usize> {
        let w = &self.one_line;
        (1..w.len()).filter(|&i| w[i - 1] < w[i]).collect()
    }

    /// Left descents: values `i` such that `i+1` appears before `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().descents()
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.one_line[i - 1] > self.one_line[i]
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.one_line.iter().position(|&x| x as usize == v);
        pos(i + 1) < pos(i)
    }

    /// Major index: sum of descent positions.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Flattening: relabel a sequence of distinct values to `1..=len` keeping relative order.
    pub fn flatten(values: &[u8]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        Self::from_vec_unchecked(
            values
                .iter()
                .map(|v| (sorted.binary_search(v).unwrap() + 1) as u8)
                .collect(),
        )
    }

    pub fn is_dominant(&self) -> bool {
        !self.contains_pattern(&[1, 3, 2])
    }

    /// Avoids 132 and 231.
    pub fn is_valley(&self) -> bool {
        !self.contains_pattern(&[1, 3, 2]) && !self.contains_pattern(&[2, 3, 1])
    }

    /// Avoids 132 and 312.
    pub fn is_inverse_valley(&self) -> bool {
        !self.contains_pattern(&[1, 3, 2]) && !self.contains_pattern(&[3, 1, 2])
    }

    /// The first entries of the maximal decreasing runs increase.
    pub fn is_fireworks(&self) -> bool {
        let w = &self.one_line;
        let mut last_initial = 0u8;
        for i in 0..w.len() {
            if i == 0 || w[i - 1] < w[i] {
                if w[i] < last_initial {
                    return false;
                }
                last_initial = w[i];
            }
        }
        true
    }

    pub fn is_inverse_fireworks(&self) -> bool {
        self.inverse().is_fireworks()
    }

    /// Maximal decreasing runs of the one-line notation.
    pub fn decreasing_runs(&self) -> Vec<Vec<usize>> {
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for (i, &v) in self.one_line.iter().enumerate() {
            if i == 0 || self.one_line[i - 1] < v {
                runs.push(Vec::new());
            }
            runs.last_mut().unwrap().push(v as usize);
        }
        runs
    }

    /// Classical pattern containment, by brute force over position subsets.
    pub fn contains_pattern(&self, pattern: &[u8]) -> bool {
        let k = pattern.len();
        if k > self.n() {
            return false;
        }
        let target = Self::flatten(pattern);
        (0..self.n()).combinations(k).any(|pos| {
            let vals: Vec<u8> = pos.iter().map(|&p| self.one_line[p]).collect();
            Self::flatten(&vals) == target
        })
    }

    /// A reduced word `a_1 ... a_l` with `w = s_{a_1} ... s_{a_l}`.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.inv());
        while let Some(&i) = w.descents().first() {
            letters.push(i);
            w = w.mul_simple_right(i);
        }
        letters.reverse();
        Word::from_letters_unchecked(self.n(), letters)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.one_line.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses compact digits (`n <= 9`) or comma/whitespace separated values.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err(0, "empty permutation"));
        }
        let separated = s.contains(|c: char| c == ',' || c.is_whitespace());
        let values: Vec<usize> = if separated {
            let mut out = Vec::new();
            let mut offset = 0;
            for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
                if !tok.is_empty() {
                    out.push(
                        tok.parse::<usize>()
                            .map_err(|_| parse_err(offset, format!("bad entry '{tok}'")))?,
                    );
                }
                offset += tok.len() + 1;
            }
            out
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err(i, format!("unexpected character '{c}'")))
                })
                .collect::<Result<_>>()?
        };
        if values.iter().any(|&v| v > u8::MAX as usize) {
            return Err(Error::InvalidPermutation(format!("entry too large in '{s}'")));
        }
        Self::new(values.into_iter().map(|v| v as u8).collect())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
