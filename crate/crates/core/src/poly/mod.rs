//! Exact sparse polynomials in `x_1..x_n, y_1..y_n` with integer coefficients.

mod monomial;
mod ops;
mod text;

pub use monomial::{Monomial, TermOrder};

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n), c.into());
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c.into());
        p
    }

    /// `x_i`, 1-indexed.
    pub fn x(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        *m.x_mut(i) = 1;
        Self::term(m, 1)
    }

    /// `y_j`, 1-indexed.
    pub fn y(n: usize, j: usize) -> Self {
        let mut m = Monomial::one(n);
        *m.y_mut(j) = 1;
        Self::term(m, 1)
    }

    /// `x^a` for an exponent vector in the x variables.
    pub fn x_monomial(exps: &[usize]) -> Self {
        let x: Vec<u16> = exps.iter().map(|&e| e as u16).collect();
        let y = vec![0u16; x.len()];
        Self::term(Monomial::from_exponents(&x, &y), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing `Lex` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Embeds into `m >= n` variables per family.
    pub fn lift(&self, m: usize) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m > self.n, "cannot lift to fewer variables");
        Self {
            n: m,
            terms: self.terms.iter().map(|(k, c)| (k.lift(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::x_degree).max()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::y_degree).max()
    }

    /// `(deg_x, deg_y)` if every term has the same bidegree.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|m| (m.x_degree(), m.y_degree()));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        self.filter(|m| m.degree() == d)
    }

    /// Terms of maximal total degree.
    pub fn top_part(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Terms of minimal total degree.
    pub fn bottom_part(&self) -> Self {
        match self.min_degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn leading_term(&self, order: TermOrder) -> Result<(Monomial, BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sets every `y_j = 0`.
    pub fn drop_y(&self) -> Self {
        self.filter(|m| m.y_degree() == 0)
    }

    /// Exchanges `x_i` and `y_i` for all `i`.
    pub fn swap_families(&self) -> Self {
        self.map_monomials(Monomial::swap_families)
    }

    /// `y_j -> -y_j`.
    pub fn negate_y(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.y_degree() % 2 == 1 { -c } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Divides out the content and makes the `Lex` leading coefficient positive.
    pub fn primitive(&self) -> Self {
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return self.clone();
        };
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        if lead.is_negative() {
            g = -g;
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect(),
        }
    }

    /// Whether `self = c * other` for a nonzero rational `c`.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.primitive() == other.primitive()
    }

    /// Evaluates at `x_i = 1 - t`, `y_j = 0`; returns coefficients of `t^0, t^1, ...`.
    pub fn specialize_one_minus_t(&self) -> Vec<BigInt> {
        let d = self.x_degree().unwrap_or(0);
        let mut binom: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for k in 1..=d {
            let prev = &binom[k - 1];
            let mut row = vec![BigInt::one(); k + 1];
            for j in 1..k {
                row[j] = &prev[j - 1] + &prev[j];
            }
            binom.push(row);
        }
        let mut out = vec![BigInt::zero(); d + 1];
        for (m, c) in &self.terms {
            if m.y_degree() > 0 {
                continue;
            }
            let e = m.x_degree();
            for (j, b) in binom[e].iter().enumerate() {
                let term = c * b;
                if j % 2 == 1 {
                    out[j] -= term;
                } else {
                    out[j] += term;
                }
            }
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| &acc * self)
    }
}

fn align(a: &SparsePoly, b: &SparsePoly) -> usize {
    a.n.max(b.n)
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let n = align(self, rhs);
        let mut out = self.lift(n);
        for (m, c) in &rhs.terms {
            out.add_term(m.lift(n), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let n = align(self, rhs);
        let mut out = self.lift(n);
        for (m, c) in &rhs.terms {
            out.add_term(m.lift(n), -c);
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let n = align(self, rhs);
        let (a, b) = (self.lift(n), rhs.lift(n));
        let mut acc: std::collections::HashMap<Monomial, BigInt> =
            std::collections::HashMap::with_capacity(a.len() * b.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        SparsePoly {
            n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> SparsePoly {
        SparsePoly::x(3, i)
    }

    #[test]
    fn arithmetic() {
        let f = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        assert_eq!(f, &x(1).pow(2) - &x(2).pow(2));
        assert!((&f - &f).is_zero());
        assert_eq!(f.degree(), Some(2));
        assert_eq!(SparsePoly::zero(3).degree(), None);
    }

    #[test]
    fn leading_terms() {
        let f = &(&x(1).pow(3) + &x(2)) + &SparsePoly::y(3, 3);
        let (m, c) = f.leading_term(TermOrder::Lex).unwrap();
        assert_eq!(m, x(2).terms().next().unwrap().0.clone());
        assert_eq!(c, BigInt::one());
        let (m, _) = f.leading_term(TermOrder::GradedLex).unwrap();
        assert_eq!(m.x(1), 3);
        assert!(SparsePoly::zero(2).leading_term(TermOrder::Lex).is_err());
    }

    #[test]
    fn specialization() {
        // x1 + x2 - x1 x2 at x = 1 - t is 1 - t^2.
        let g = &(&x(1) + &x(2)) - &(&x(1) * &x(2));
        let k = g.specialize_one_minus_t();
        assert_eq!(k, vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)]);
    }

    #[test]
    fn primitive_and_scalar() {
        let f = (&x(1) + &x(2)).scale(&BigInt::from(-6));
        assert_eq!(f.primitive(), &x(1) + &x(2));
        assert!(f.is_scalar_multiple_of(&(&x(2) + &x(1))));
        assert!(!f.is_scalar_multiple_of(&x(1)));
    }

    #[test]
    fn lift_mixes_sizes() {
        let a = SparsePoly::x(2, 1);
        let b = SparsePoly::y(3, 3);
        let s = &a + &b;
        assert_eq!(s.n(), 3);
        assert_eq!(s.len(), 2);
    }
}
