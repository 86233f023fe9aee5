//! Castelnuovo-Mumford regularity of matrix Schubert varieties via Rajchgot codes,
//! Grothendieck polynomials and pipe dreams.

pub mod error;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{Composition, Permutation, Word};
pub mod numbers;
pub mod rajchgot;

pub use rajchgot::{raj, raj_code, regularity, RajCode, SetPartition};
pub mod poly;

pub use poly::{Monomial, SparsePoly, TermOrder};
pub mod grothendieck;
pub mod pipedreams;
pub mod stats;
pub mod verify;

pub use stats::PermStats;

pub use pipedreams::PipeDream;
