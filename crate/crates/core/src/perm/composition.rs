//! Compositions indexed `t..=n`, layered and valley permutations.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Permutation;
use crate::error::{parse_err, Error, Result};

/// A composition `(alpha_t, ..., alpha_n)` of `n` into positive parts.
/// The last part always carries index `n`, so `t = n - len + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Self { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Index of the first part.
    pub fn start(&self) -> usize {
        self.n() - self.parts.len() + 1
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `alpha_k`, zero outside `t..=n`.
    pub fn part(&self, k: usize) -> usize {
        let t = self.start();
        if k < t || k > self.n() {
            0
        } else {
            self.parts[k - t]
        }
    }

    /// Partial sums `alpha_t + ... + alpha_k`, one per part.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &a| {
                *acc += a;
                Some(*acc)
            })
            .collect()
    }

    /// `sum k alpha_k`.
    pub fn weighted_sum(&self) -> usize {
        let t = self.start();
        self.parts.iter().enumerate().map(|(i, &a)| (t + i) * a).sum()
    }

    /// Weak dominance: every suffix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: other.n(),
            });
        }
        let (mut a, mut b) = (0, 0);
        for m in (1..=n).rev() {
            a += self.part(m);
            b += other.part(m);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The layered permutation `e_alpha`, longest element of the Young subgroup.
    pub fn layered(&self) -> Permutation {
        let mut out = Vec::with_capacity(self.n());
        let mut offset = 0u8;
        for &a in &self.parts {
            out.extend((offset + 1..=offset + a as u8).rev());
            offset += a as u8;
        }
        Permutation::from_vec_unchecked(out)
    }

    /// The unique valley permutation `f_alpha` of shape `alpha`.
    pub fn valley(&self) -> Permutation {
        let n = self.n();
        let t = self.start();
        let mut suffix = 0;
        let mut rho = vec![0usize; n + 1];
        for k in (t..=n).rev() {
            suffix += self.part(k);
            rho[k] = n + 1 - suffix;
        }
        let in_r: Vec<bool> = {
            let mut v = vec![false; n + 1];
            for &r in &rho[t..=n] {
                v[r] = true;
            }
            v
        };
        let lambda = (1..=n).rev().filter(|&x| !in_r[x]);
        let out = lambda
            .chain(rho[t..=n].iter().copied())
            .map(|x| x as u8)
            .collect();
        Permutation::from_vec_unchecked(out)
    }
}

/// All compositions of `n`, lexicographic in the parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for a in 1..=n {
            prefix.push(a);
            rec(n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut offset = 0;
        for tok in s.trim().split(',') {
            let t = tok.trim();
            parts.push(
                t.parse::<usize>()
                    .map_err(|_| parse_err(offset, format!("bad part '{t}'")))?,
            );
            offset += tok.len() + 1;
        }
        Self::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn layered_and_valley_examples() {
        assert_eq!(c("2,2,3,2").layered().to_string(), "214376598");
        assert_eq!(c("2,1,2,3,1").valley().to_string(), "875213469");
        assert_eq!(c("2,2").valley().to_string(), "4213");
        assert_eq!(c("1,1,2").valley().to_string(), "4123");
        assert_eq!(c("2,1,1").valley().to_string(), "2134");
        assert_eq!(c("2,2,3,2").start(), 6);
        assert_eq!(c("2,2,3,2").part(6), 2);
        assert_eq!(c("2,2,3,2").part(5), 0);
    }

    #[test]
    fn valley_is_valley_and_counts() {
        for n in 1..=7 {
            let comps = compositions(n);
            assert_eq!(comps.len(), 1 << (n - 1));
            for a in &comps {
                assert!(a.valley().is_valley());
                assert_eq!(a.valley().n(), n);
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(c("1,3").dominates(&c("2,2")).unwrap());
        assert!(!c("2,2").dominates(&c("1,3")).unwrap());
        assert!(c("2,2").dominates(&c("1,1,2")).unwrap());
        assert!(!c("1,1,2").dominates(&c("2,2")).unwrap());
        assert!(c("2,2").dominates(&c("2,2")).unwrap());
        assert!(c("2").dominates(&c("3")).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!("2,0,1".parse::<Composition>().is_err());
        assert!("2,,1".parse::<Composition>().is_err());
    }
}
