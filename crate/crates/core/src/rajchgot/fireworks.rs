use serde::Serialize;

use super::{BlobDiagram, SetPartition};
use crate::error::{Error, Result};
use crate::perm::{Composition, Permutation};

/// Writes each block backwards, blocks in order.
pub fn fireworks_from_partition(pi: &SetPartition) -> Permutation {
    let one_line = pi
        .blocks()
        .iter()
        .flat_map(|b| b.iter().rev().map(|&x| x as u8))
        .collect();
    Permutation::from_vec_unchecked(one_line)
}

/// `Phi(w)`: the fireworks permutation with the same set partition as `w`.
pub fn fireworks_map(w: &Permutation) -> Permutation {
    fireworks_from_partition(&BlobDiagram::new(w).set_partition())
}

/// `Phi(w^-1)^-1`.
pub fn inverse_fireworks_map(w: &Permutation) -> Permutation {
    fireworks_map(&w.inverse()).inverse()
}

/// `w = u e_alpha v` with lengths adding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub left: Permutation,
    pub shape: Composition,
    pub right: Permutation,
}

impl Factorization {
    pub fn layered(&self) -> Permutation {
        self.shape.layered()
    }
}

/// Factors `w` as `(Phi(w) e_alpha) e_alpha (e_alpha Phi_inv(w))`, checking length additivity.
pub fn factorize(w: &Permutation) -> Result<Factorization> {
    let shape = BlobDiagram::new(w).shape();
    let e = shape.layered();
    let u = fireworks_map(w).compose(&e)?;
    let v = e.compose(&inverse_fireworks_map(w))?;
    let product = u.compose(&e)?.compose(&v)?;
    if product != *w || u.inv() + e.inv() + v.inv() != w.inv() {
        return Err(Error::Internal(format!(
            "factorization of {w} is not length additive: {u} * {e} * {v}"
        )));
    }
    Ok(Factorization {
        left: u,
        shape,
        right: v,
    })
}
