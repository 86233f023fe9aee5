use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector over `x_1..x_n, y_1..y_n`.
///
/// `Ord` is lexicographic with `x_n > ... > x_1 > y_n > ... > y_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, 2 * n),
        }
    }

    pub fn from_exponents(x: &[u16], y: &[u16]) -> Self {
        assert_eq!(x.len(), y.len(), "x and y exponent vectors differ in length");
        Self {
            exps: x.iter().chain(y).copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    /// Exponent of `x_i`, 1-indexed.
    pub fn x(&self, i: usize) -> u16 {
        self.exps[i - 1]
    }

    /// Exponent of `y_j`, 1-indexed.
    pub fn y(&self, j: usize) -> u16 {
        self.exps[self.n() + j - 1]
    }

    pub fn x_exps(&self) -> &[u16] {
        &self.exps[..self.n()]
    }

    pub fn y_exps(&self) -> &[u16] {
        &self.exps[self.n()..]
    }

    pub(crate) fn x_mut(&mut self, i: usize) -> &mut u16 {
        &mut self.exps[i - 1]
    }

    pub(crate) fn y_mut(&mut self, j: usize) -> &mut u16 {
        let n = self.n();
        &mut self.exps[n + j - 1]
    }

    pub fn x_degree(&self) -> usize {
        self.x_exps().iter().map(|&e| e as usize).sum()
    }

    pub fn y_degree(&self) -> usize {
        self.y_exps().iter().map(|&e| e as usize).sum()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub(crate) fn swap_x(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.exps.swap(i - 1, i);
        m
    }

    pub(crate) fn swap_families(&self) -> Self {
        let n = self.n();
        Self {
            exps: self.exps[n..].iter().chain(&self.exps[..n]).copied().collect(),
        }
    }

    /// Re-embeds into `m >= n` variables per family.
    pub(crate) fn lift(&self, m: usize) -> Self {
        let n = self.n();
        let mut exps = SmallVec::from_elem(0, 2 * m);
        exps[..n].copy_from_slice(&self.exps[..n]);
        exps[m..m + n].copy_from_slice(&self.exps[n..]);
        Self { exps }
    }
}

/// Term orders used for leading terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TermOrder {
    /// Lexicographic, `x_n > ... > x_1 > y_n > ... > y_1`.
    #[default]
    Lex,
    /// Total degree first, ties broken by `Lex`.
    GradedLex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GradedLex => a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.n();
        debug_assert_eq!(n, other.n());
        for block in [0..n, n..2 * n] {
            for k in block.rev() {
                match self.exps[k].cmp(&other.exps[k]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
