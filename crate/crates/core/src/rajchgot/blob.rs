use serde::Serialize;

use super::SetPartition;
use crate::perm::{Composition, Permutation};

/// Dots of the permutation matrix grouped into blobs `B_t, ..., B_n`.
///
/// `B_n` holds the dots with no dot strictly southeast; removing them and
/// repeating gives `B_{n-1}`, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlobDiagram {
    n: usize,
    /// `epsilon[i-1]` is the blob index of the dot in row `i`.
    epsilon: Vec<usize>,
    /// Dots `(row, column)` of each blob, from `B_t` up to `B_n`.
    blobs: Vec<Vec<(usize, usize)>>,
}

impl BlobDiagram {
    pub fn new(w: &Permutation) -> Self {
        let n = w.n();
        let vals = w.as_slice();
        let mut epsilon = vec![0usize; n];
        let mut remaining: Vec<usize> = (0..n).collect();
        let mut layers: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut k = n;
        while !remaining.is_empty() {
            let (lasso, rest): (Vec<usize>, Vec<usize>) = remaining.iter().partition(|&&i| {
                !remaining
                    .iter()
                    .any(|&j| j > i && vals[j] > vals[i])
            });
            for &i in &lasso {
                epsilon[i] = k;
            }
            layers.push(lasso.iter().map(|&i| (i + 1, vals[i] as usize)).collect());
            remaining = rest;
            k -= 1;
        }
        layers.reverse();
        Self {
            n,
            epsilon,
            blobs: layers,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the smallest blob.
    pub fn start(&self) -> usize {
        self.n - self.blobs.len() + 1
    }

    /// `epsilon(w)`: blob index of each row.
    pub fn epsilon(&self) -> &[usize] {
        &self.epsilon
    }

    /// Dots of blob `B_k`.
    pub fn blob(&self, k: usize) -> &[(usize, usize)] {
        &self.blobs[k - self.start()]
    }

    pub fn blobs(&self) -> &[Vec<(usize, usize)>] {
        &self.blobs
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.blobs.iter().map(Vec::len).collect())
            .expect("blobs are nonempty")
    }

    /// `pi(w)`: the column labels of each blob.
    pub fn set_partition(&self) -> SetPartition {
        let blocks = self
            .blobs
            .iter()
            .map(|b| b.iter().map(|&(_, c)| c).collect())
            .collect();
        SetPartition::new(self.n, blocks).expect("blob columns partition [n]")
    }
}
