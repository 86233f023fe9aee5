//! One-shot statistics report for a permutation.

use serde::{Deserialize, Serialize};

use crate::perm::{Composition, Permutation};
use crate::rajchgot::{fireworks_map, inverse_fireworks_map, raj_code, BlobDiagram, SetPartition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermStats {
    pub perm: Permutation,
    pub inv: usize,
    pub inv_code: Vec<usize>,
    pub maj: usize,
    pub raj: usize,
    pub raj_code: Vec<usize>,
    pub regularity: usize,
    pub shape: Composition,
    pub set_partition: SetPartition,
    pub fireworks: bool,
    pub inverse_fireworks: bool,
    pub dominant: bool,
    pub phi: Permutation,
    pub phi_inv: Permutation,
}

impl PermStats {
    pub fn new(w: &Permutation) -> Self {
        let code = raj_code(w);
        let blobs = BlobDiagram::new(w);
        let raj = code.sum();
        Self {
            perm: w.clone(),
            inv: w.inv(),
            inv_code: w.inv_code(),
            maj: w.maj(),
            raj,
            raj_code: code.0,
            regularity: raj - w.inv(),
            shape: blobs.shape(),
            set_partition: blobs.set_partition(),
            fireworks: w.is_fireworks(),
            inverse_fireworks: w.is_inverse_fireworks(),
            dominant: w.is_dominant(),
            phi: fireworks_map(w),
            phi_inv: inverse_fireworks_map(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let s = PermStats::new(&"293417568".parse().unwrap());
        assert_eq!(s.raj_code, [3, 7, 2, 2, 1, 2, 0, 0, 0]);
        assert_eq!((s.raj, s.inv, s.regularity), (17, 12, 5));
    }

    #[test]
    fn blob_example() {
        let s = PermStats::new(&"462357918".parse().unwrap());
        assert_eq!(s.shape.parts(), [1, 2, 2, 2, 2]);
        assert_eq!(s.set_partition.to_string(), "2|34|56|17|89");
    }

    #[test]
    fn identity_one() {
        let s = PermStats::new(&Permutation::identity(1));
        assert_eq!((s.inv, s.maj, s.raj, s.regularity), (0, 0, 0, 0));
        assert!(s.fireworks && s.inverse_fireworks && s.dominant);
    }

    #[test]
    fn json_round_trip() {
        let s = PermStats::new(&"462357918".parse().unwrap());
        let back: PermStats = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
