//! Divided difference operators and the differential operators `E` and `nabla`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, SparsePoly};
use crate::error::{Error, Result};

impl SparsePoly {
    fn check_index(&self, i: usize) {
        assert!(i >= 1 && i < self.n, "index {i} out of range for n = {}", self.n);
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Self {
        self.check_index(i);
        self.map_monomials(|m| m.swap_x(i))
    }

    /// Exact quotient by `x_i - x_{i+1}`; errors on a nonzero remainder.
    pub fn div_by_diff(&self, i: usize) -> Result<Self> {
        self.check_index(i);
        // Bucket by the exponent of x_i, then peel off the top power repeatedly:
        // c x_i^a m = (x_i - x_{i+1}) c x_i^{a-1} m + c x_i^{a-1} x_{i+1} m.
        let mut buckets: Vec<BTreeMap<Monomial, BigInt>> = Vec::new();
        for (m, c) in self.terms() {
            let a = m.x(i) as usize;
            if buckets.len() <= a {
                buckets.resize_with(a + 1, BTreeMap::new);
            }
            let mut key = m.clone();
            *key.x_mut(i) = 0;
            *buckets[a].entry(key).or_default() += c;
        }
        let mut quotient = SparsePoly::zero(self.n);
        for a in (1..buckets.len()).rev() {
            let bucket = std::mem::take(&mut buckets[a]);
            for (m, c) in bucket {
                if c.is_zero() {
                    continue;
                }
                let mut q = m.clone();
                *q.x_mut(i) = (a - 1) as u16;
                quotient.add_term(q, c.clone());
                let mut carry = m;
                *carry.x_mut(i + 1) += 1;
                *buckets[a - 1].entry(carry).or_default() += c;
            }
        }
        if let Some(rem) = buckets.first() {
            if rem.values().any(|c| !c.is_zero()) {
                return Err(Error::Internal(format!(
                    "polynomial is not divisible by x{} - x{}",
                    i,
                    i + 1
                )));
            }
        }
        Ok(quotient)
    }

    /// `d_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Self {
        (self - &self.swap_x(i))
            .div_by_diff(i)
            .expect("f - s_i f is divisible by x_i - x_{i+1}")
    }

    /// `dbar_i f = d_i((1 - x_{i+1}) f)`.
    pub fn k_divided_difference(&self, i: usize) -> Self {
        let g = self - &(&SparsePoly::x(self.n, i + 1) * self);
        g.divided_difference(i)
    }

    /// `(x_{i+1} f - x_i s_i f) / (x_i - x_{i+1})`.
    pub fn rajchgot_operator(&self, i: usize) -> Self {
        let n = self.n;
        let num = &(&SparsePoly::x(n, i + 1) * self) - &(&SparsePoly::x(n, i) * &self.swap_x(i));
        num.div_by_diff(i)
            .expect("x_{i+1} f - x_i s_i f is antisymmetric")
    }

    /// Euler operator `E = sum_i x_i d/dx_i` on the x variables.
    pub fn euler(&self) -> Self {
        SparsePoly::from_terms(
            self.n,
            self.terms()
                .map(|(m, c)| (m.clone(), c * BigInt::from(m.x_degree()))),
        )
    }

    /// `nabla = sum_i d/dx_i`.
    pub fn nabla(&self) -> Self {
        let mut out = SparsePoly::zero(self.n);
        for (m, c) in self.terms() {
            for i in 1..=self.n {
                let e = m.x(i);
                if e > 0 {
                    let mut d = m.clone();
                    *d.x_mut(i) = e - 1;
                    out.add_term(d, c * BigInt::from(e));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::x(n, i)
    }

    /// Closed form: d_i(x_i^a x_{i+1}^b m) = sum over the geometric series, with sign.
    fn divided_difference_oracle(f: &SparsePoly, i: usize) -> SparsePoly {
        let n = f.n();
        let mut out = SparsePoly::zero(n);
        for (m, c) in f.terms() {
            let (a, b) = (m.x(i) as i64, m.x(i + 1) as i64);
            let mut base = m.clone();
            *base.x_mut(i) = 0;
            *base.x_mut(i + 1) = 0;
            let (lo, hi, sign) = if a >= b { (b, a, 1) } else { (a, b, -1) };
            // (x^hi y^lo - x^lo y^hi)/(x - y) = sum_{k=lo}^{hi-1} x^k y^{hi+lo-1-k}
            for k in lo..hi {
                let mut t = base.clone();
                *t.x_mut(i) = k as u16;
                *t.x_mut(i + 1) = (hi + lo - 1 - k) as u16;
                let term = if sign == 1 { c.clone() } else { -c };
                out.add_term(t, term);
            }
        }
        out
    }

    #[test]
    fn divided_difference_matches_closed_form() {
        let f = &(&x(3, 1).pow(3) * &x(3, 2)) + &(&x(3, 2).pow(4) - &SparsePoly::y(3, 1));
        for i in 1..3 {
            assert_eq!(f.divided_difference(i), divided_difference_oracle(&f, i));
        }
    }

    #[test]
    fn small_values() {
        // dbar_1(x1^2 x2) = x1 x2, the step G_321 -> G_231 for the single version.
        let g = &x(3, 1).pow(2) * &x(3, 2);
        assert_eq!(g.k_divided_difference(1), &x(3, 1) * &x(3, 2));
        // rN_1(x1^3) = x1^2 x2 + x1 x2^2.
        let r = x(3, 1).pow(3).rajchgot_operator(1);
        assert_eq!(r, &(&x(3, 1).pow(2) * &x(3, 2)) + &(&x(3, 1) * &x(3, 2).pow(2)));
        assert!(x(2, 1).div_by_diff(1).is_err());
    }

    #[test]
    fn euler_and_nabla() {
        let f = &(&x(2, 1).pow(2) * &x(2, 2)) + &SparsePoly::y(2, 1);
        assert_eq!(f.euler(), (&x(2, 1).pow(2) * &x(2, 2)).scale(&BigInt::from(3)));
        let expected = &(&x(2, 1) * &x(2, 2)).scale(&BigInt::from(2)) + &x(2, 1).pow(2);
        assert_eq!(f.nabla(), expected);
    }
}
