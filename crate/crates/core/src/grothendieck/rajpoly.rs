//! Rajchgot polynomials, by definition and by the rN recursion.

use std::collections::{BTreeMap, VecDeque};

use super::cm;
use crate::perm::{weak_leq_right, Composition, Permutation};
use crate::poly::SparsePoly;
use crate::rajchgot::{fireworks_from_partition, raj_code, BlobDiagram, SetPartition};

/// The inverse fireworks permutation `v` whose rows carry the word of `pi`, i.e. `epsilon(v) = p`.
fn inverse_fireworks_of(pi: &SetPartition) -> Permutation {
    fireworks_from_partition(pi).inverse()
}

/// `R_pi(x)` as `CM_v(x)` for the inverse fireworks `v` with `pi(v^-1) = pi`.
pub fn rajchgot_poly(pi: &SetPartition) -> SparsePoly {
    cm(&inverse_fireworks_of(pi))
}

/// `R_pi(x)` from the monomial of the valley permutation, walking down right weak order with `rN_i`.
pub fn rajchgot_poly_recursive(pi: &SetPartition) -> SparsePoly {
    let target = inverse_fireworks_of(pi);
    let f = pi.shape().valley();
    let mut r = SparsePoly::x_monomial(&raj_code(&f).0);
    let mut z = f;
    while z != target {
        let i = z
            .descents()
            .into_iter()
            .find(|&i| weak_leq_right(&target, &z.mul_simple_right(i)).unwrap())
            .expect("target lies below the valley permutation");
        r = r.rajchgot_operator(i);
        z = z.mul_simple_right(i);
    }
    r
}

/// Every `R_pi` with `shape(pi) = alpha`, by breadth-first search down `[e_alpha, f_alpha]_R`.
pub fn rajchgot_polys_of_shape(alpha: &Composition) -> BTreeMap<SetPartition, SparsePoly> {
    let f = alpha.valley();
    let e = alpha.layered();
    let mut out = BTreeMap::new();
    let mut queue = VecDeque::new();
    let start = SparsePoly::x_monomial(&raj_code(&f).0);
    out.insert(BlobDiagram::new(&f.inverse()).set_partition(), start.clone());
    queue.push_back((f, start));
    while let Some((z, r)) = queue.pop_front() {
        for i in z.descents() {
            let next = z.mul_simple_right(i);
            if !weak_leq_right(&e, &next).unwrap() {
                continue;
            }
            let pi = BlobDiagram::new(&next.inverse()).set_partition();
            if let std::collections::btree_map::Entry::Vacant(e) = out.entry(pi) {
                let rn = r.rajchgot_operator(i);
                e.insert(rn.clone());
                queue.push_back((next, rn));
            }
        }
    }
    out
}

/// Outcome of `rN_i` on `R_p` for a set-partition word `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RnWordCase {
    /// `R_{p s_i}`.
    Shift(Vec<usize>),
    Zero,
    /// `-R_p`.
    Negate,
}

/// `p_i > p_{i+1}`: shift; `p_i = p_{i+1}`: zero; `p_i < p_{i+1}`: negate.
pub fn rn_word_rule(p: &[usize], i: usize) -> RnWordCase {
    let (a, b) = (p[i - 1], p[i]);
    if a > b {
        let mut q = p.to_vec();
        q.swap(i - 1, i);
        RnWordCase::Shift(q)
    } else if a == b {
        RnWordCase::Zero
    } else {
        RnWordCase::Negate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::compositions;
    use crate::rajchgot::set_partitions;

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn poly(s: &str, n: usize) -> SparsePoly {
        SparsePoly::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn worked_example_chain() {
        let top = SetPartition::from_word(&[4, 2, 3, 4]).unwrap();
        let mid = SetPartition::from_word(&[2, 4, 3, 4]).unwrap();
        let bottom = SetPartition::from_word(&[2, 3, 4, 4]).unwrap();
        assert_eq!(rajchgot_poly(&top), poly("x1^3", 4));
        assert_eq!(rajchgot_poly(&mid), poly("x1^2*x2 + x1*x2^2", 4));
        assert_eq!(rajchgot_poly(&bottom), poly("x1*x2*x3", 4));
        assert_eq!(poly("x1^2*x2 + x1*x2^2", 4).rajchgot_operator(2), poly("x1*x2*x3", 4));
        assert_eq!(inverse_fireworks_of(&mid).to_string(), "1423");
        assert_eq!(part("2|3|14"), top);
    }

    #[test]
    fn routes_agree() {
        for n in 1..=5 {
            for pi in set_partitions(n) {
                assert_eq!(rajchgot_poly(&pi), rajchgot_poly_recursive(&pi), "{pi}");
            }
        }
    }

    #[test]
    fn base_case_monomial() {
        // Exponents are [n] minus the partial sums, in decreasing order.
        for n in 1..=6 {
            for alpha in compositions(n) {
                let sums = alpha.partial_sums();
                let mut rest: Vec<usize> = (1..=n).filter(|x| !sums.contains(x)).collect();
                rest.reverse();
                rest.resize(n, 0);
                let f = alpha.valley();
                assert_eq!(raj_code(&f).0, rest, "{alpha}");
                assert_eq!(cm(&f), SparsePoly::x_monomial(&rest));
            }
        }
    }

    #[test]
    fn word_rule_holds() {
        for n in 1..=6 {
            for pi in set_partitions(n) {
                let p = pi.word();
                let r = rajchgot_poly(&pi);
                for i in 1..n {
                    let got = r.rajchgot_operator(i);
                    let expected = match rn_word_rule(&p, i) {
                        RnWordCase::Shift(q) => rajchgot_poly(&SetPartition::from_word(&q).unwrap()),
                        RnWordCase::Zero => SparsePoly::zero(n),
                        RnWordCase::Negate => -&r,
                    };
                    assert_eq!(got, expected, "{pi} i={i}");
                }
            }
        }
    }

    #[test]
    fn shape_sweep_matches_definition() {
        for n in 1..=5 {
            for alpha in compositions(n) {
                for (pi, r) in rajchgot_polys_of_shape(&alpha) {
                    assert_eq!(pi.shape(), alpha);
                    assert_eq!(r, rajchgot_poly(&pi));
                }
            }
        }
    }
}
