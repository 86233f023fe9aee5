//! Rajchgot codes, blob diagrams and the fireworks maps.

mod blob;
mod fireworks;
mod partition;

pub use blob::BlobDiagram;
pub use fireworks::{
    factorize, fireworks_from_partition, fireworks_map, inverse_fireworks_map, Factorization,
};
pub use partition::{set_partitions, SetPartition};

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::perm::{Composition, Permutation};

/// `r_k = #{j > k : w_j` not on a longest increasing run chosen from `w_k`}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RajCode(pub Vec<usize>);

impl RajCode {
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn suffix_sums(&self) -> Vec<usize> {
        let mut out = vec![0; self.0.len() + 1];
        for k in (0..self.0.len()).rev() {
            out[k] = out[k + 1] + self.0[k];
        }
        out.truncate(self.0.len());
        out
    }
}

impl fmt::Display for RajCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Length of the longest increasing subsequence of `w_k ... w_n` starting at `w_k`.
pub(crate) fn lis_from(w: &[u8]) -> Vec<usize> {
    let n = w.len();
    let mut lis = vec![1usize; n];
    for k in (0..n).rev() {
        for j in k + 1..n {
            if w[j] > w[k] && lis[j] + 1 > lis[k] {
                lis[k] = lis[j] + 1;
            }
        }
    }
    lis
}

/// Rajchgot code from increasing subsequences.
pub fn raj_code(w: &Permutation) -> RajCode {
    let n = w.n();
    let lis = lis_from(w.as_slice());
    RajCode((0..n).map(|k| (n - k) - lis[k]).collect())
}

/// Rajchgot code from the blob diagram, `r_i = epsilon_i - i`.
pub fn raj_code_blob(w: &Permutation) -> RajCode {
    let blobs = BlobDiagram::new(w);
    RajCode(
        blobs
            .epsilon()
            .iter()
            .enumerate()
            .map(|(i, &e)| e - (i + 1))
            .collect(),
    )
}

/// `raj(w)`, the degree of the Grothendieck polynomial.
pub fn raj(w: &Permutation) -> usize {
    raj_code(w).sum()
}

/// `raj(w) - inv(w)`, the Castelnuovo-Mumford regularity of the matrix Schubert variety.
pub fn regularity(w: &Permutation) -> usize {
    raj(w) - w.inv()
}

/// The shape `alpha(w)`: `alpha_k` is the size of blob `B_k`.
pub fn shape(w: &Permutation) -> Composition {
    BlobDiagram::new(w).shape()
}

/// `raj` computed from a shape alone: `sum k alpha_k - C(n+1, 2)`.
pub fn raj_from_shape(alpha: &Composition) -> usize {
    let n = alpha.n();
    alpha.weighted_sum() - n * (n + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let w = p("293417568");
        assert_eq!(raj_code(&w).0, vec![3, 7, 2, 2, 1, 2, 0, 0, 0]);
        assert_eq!(raj(&w), 17);
        assert_eq!(regularity(&w), 5);
        assert_eq!(raj_code(&p("462357918")).0, vec![5, 5, 2, 2, 2, 2, 2, 0, 0]);
    }

    #[test]
    fn small_values() {
        assert_eq!(raj(&p("1")), 0);
        assert_eq!(raj(&p("132")), 2);
        assert_eq!(raj(&p("1432")), 5);
        assert_eq!(regularity(&p("1432")), 2);
        assert_eq!(raj(&Permutation::longest(5)), 10);
        assert_eq!(raj(&p("1423")), 3);
    }

    #[test]
    fn direct_and_blob_routes_agree() {
        for n in 1..=7 {
            for w in Permutation::all(n) {
                assert_eq!(raj_code(&w), raj_code_blob(&w), "{w}");
            }
        }
    }

    #[test]
    fn raj_from_shape_matches() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                assert_eq!(raj_from_shape(&shape(&w)), raj(&w));
            }
        }
    }

    #[test]
    fn raj_at_least_inv() {
        for w in Permutation::all(6) {
            assert!(raj(&w) >= w.inv());
            // r_k >= c_k entrywise.
            let (r, c) = (raj_code(&w).0, w.inv_code());
            assert!(r.iter().zip(&c).all(|(a, b)| a >= b));
        }
    }
}
