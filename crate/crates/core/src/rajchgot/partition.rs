use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{parse_err, Error, Result};
use crate::perm::Composition;

/// A set partition of `[n]` with blocks ordered by their maxima and indexed `t..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Normalizes: each block ascending, blocks ordered by maximum.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidSetPartition(format!(
                        "{x} is repeated or outside 1..={n}"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(Error::InvalidSetPartition(format!("blocks do not cover 1..={n}")));
        }
        blocks.sort_by_key(|b| *b.last().unwrap());
        Ok(Self { n, blocks })
    }

    /// Inverse of [`SetPartition::word`]: `j` lies in block `p_j`.
    pub fn from_word(p: &[usize]) -> Result<Self> {
        let n = p.len();
        let labels: Vec<usize> = p.iter().copied().sorted().dedup().collect();
        let t = n + 1 - labels.len();
        if labels.first() != Some(&t) || labels.last() != Some(&n) {
            return Err(Error::InvalidSetPartition(format!(
                "word labels {labels:?} are not {t}..={n}"
            )));
        }
        let blocks = labels
            .iter()
            .map(|&k| (1..=n).filter(|&j| p[j - 1] == k).collect())
            .collect();
        let pi = Self::new(n, blocks)?;
        if pi.word() != p {
            return Err(Error::InvalidSetPartition(format!(
                "word {p:?} does not index blocks by their maxima"
            )));
        }
        Ok(pi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.n + 1 - self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block `pi_k` for `t <= k <= n`.
    pub fn block(&self, k: usize) -> &[usize] {
        &self.blocks[k - self.start()]
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.blocks.iter().map(Vec::len).collect()).expect("blocks nonempty")
    }

    /// The word `p` with `p_j = k` iff `j` is in `pi_k`.
    pub fn word(&self) -> Vec<usize> {
        let t = self.start();
        let mut p = vec![0; self.n];
        for (idx, b) in self.blocks.iter().enumerate() {
            for &j in b {
                p[j - 1] = t + idx;
            }
        }
        p
    }
}

/// All set partitions of `[n]`, from restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if i == n {
            let mut blocks = vec![Vec::new(); max + 1];
            for (j, &b) in rgs.iter().enumerate() {
                blocks[b].push(j + 1);
            }
            out.push(SetPartition::new(n, blocks).expect("valid growth string"));
            return;
        }
        for b in 0..=max + 1 {
            rgs.push(b);
            rec(i + 1, n, rgs, max.max(b), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        let mut rgs = vec![0];
        rec(1, n, &mut rgs, 0, &mut out);
    }
    out
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        write!(
            f,
            "{}",
            self.blocks.iter().map(|b| b.iter().join(sep)).join("|")
        )
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut blocks = Vec::new();
        let mut offset = 0;
        for tok in s.split('|') {
            let block: Vec<usize> = if tok.contains(',') {
                tok.split(',')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .map_err(|_| parse_err(offset, format!("bad element '{x}'")))
                    })
                    .collect::<Result<_>>()?
            } else {
                tok.chars()
                    .enumerate()
                    .map(|(i, c)| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| parse_err(offset + i, format!("bad character '{c}'")))
                    })
                    .collect::<Result<_>>()?
            };
            blocks.push(block);
            offset += tok.len() + 1;
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::new(n, blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::bell;

    #[test]
    fn parse_display_word() {
        let pi: SetPartition = "14|26|358|79".parse().unwrap();
        assert_eq!(pi.to_string(), "14|26|358|79");
        assert_eq!(pi.start(), 6);
        assert_eq!(pi.word(), vec![6, 7, 8, 6, 8, 7, 9, 8, 9]);
        assert_eq!(SetPartition::from_word(&pi.word()).unwrap(), pi);
        let big: SetPartition = "1,10|2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(big.to_string(), "2,3,4,5,6,7,8,9|1,10");
        assert!("12|2".parse::<SetPartition>().is_err());
        assert!("13".parse::<SetPartition>().is_err());
    }

    #[test]
    fn from_word_rejects_misordered_labels() {
        // Blocks {1} and {2} labelled against the order of their maxima.
        assert!(SetPartition::from_word(&[2, 1]).is_err());
        assert!(SetPartition::from_word(&[1, 2]).is_ok());
        assert!(SetPartition::from_word(&[3, 3, 1]).is_err());
    }

    #[test]
    fn counts_are_bell() {
        for n in 1..=7 {
            assert_eq!(set_partitions(n).len() as u64, bell(n));
        }
    }
}
