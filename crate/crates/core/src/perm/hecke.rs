//! Words in simple transpositions and the 0-Hecke (Demazure) product.

use std::fmt;

use itertools::Itertools;

use super::Permutation;
use crate::error::{Error, Result};

/// A word `a_1 ... a_l` in the generators `s_1, ..., s_{n-1}` of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a >= n) {
            return Err(Error::InvalidWord(format!("letter {bad} out of range for S_{n}")));
        }
        Ok(Self { n, letters })
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<usize>) -> Self {
        Self { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The ordinary product `s_{a_1} ... s_{a_l}`.
    pub fn product(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.n), |w, &a| w.mul_simple_right(a))
    }

    /// The Demazure product `s_{a_1} * ... * s_{a_l}`.
    pub fn demazure(&self) -> Permutation {
        hecke_apply(self.n, &self.letters)
    }

    pub fn is_reduced(&self) -> bool {
        self.product().inv() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().join(","))
    }
}

/// `w * s_a`: multiply on the right only when it lengthens.
#[inline]
pub(crate) fn hecke_right(w: &mut [u8], a: usize) {
    if w[a - 1] < w[a] {
        w.swap(a - 1, a);
    }
}

/// Demazure product of the letters applied to the identity of `S_n`.
pub fn hecke_apply(n: usize, letters: &[usize]) -> Permutation {
    let mut w: Vec<u8> = (1..=n as u8).collect();
    for &a in letters {
        hecke_right(&mut w, a);
    }
    Permutation::from_vec_unchecked(w)
}

/// `u * v` in the 0-Hecke monoid.
pub fn demazure_product(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            expected: u.n(),
            actual: v.n(),
        });
    }
    let mut w = u.as_slice().to_vec();
    for &a in v.reduced_word().letters() {
        hecke_right(&mut w, a);
    }
    Ok(Permutation::from_vec_unchecked(w))
}
