//! Weak orders, the two-sided weak order and Bruhat order.

use std::collections::{BTreeSet, VecDeque};

use super::Permutation;
use crate::error::{Error, Result};

/// Default largest `n` for which two-sided weak order comparisons run.
pub const DEFAULT_ORDER_CAP: usize = 9;

fn same_size(u: &Permutation, w: &Permutation) -> Result<()> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch {
            expected: w.n(),
            actual: u.n(),
        });
    }
    Ok(())
}

/// Inversions as value pairs `(a, b)`, `a < b`, with `b` to the left of `a`.
fn value_inversions_contained(u: &Permutation, w: &Permutation) -> bool {
    let (pu, pw) = (u.inverse(), w.inverse());
    let (pu, pw) = (pu.as_slice(), pw.as_slice());
    let n = u.n();
    for a in 0..n {
        for b in a + 1..n {
            if pu[b] < pu[a] && pw[b] > pw[a] {
                return false;
            }
        }
    }
    true
}

/// `u <=_R w`: `w = u v` with lengths adding.
pub fn weak_leq_right(u: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(u, w)?;
    Ok(value_inversions_contained(u, w))
}

/// `u <=_L w`: `w = v u` with lengths adding.
pub fn weak_leq_left(u: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(u, w)?;
    Ok(value_inversions_contained(&u.inverse(), &w.inverse()))
}

/// `u <=_LR w` using the default cap.
pub fn weak_leq_two_sided(u: &Permutation, w: &Permutation) -> Result<bool> {
    weak_leq_two_sided_capped(u, w, DEFAULT_ORDER_CAP)
}

/// `u <=_LR w`, searching the down-set of `w`; refuses `n > cap`.
pub fn weak_leq_two_sided_capped(u: &Permutation, w: &Permutation, cap: usize) -> Result<bool> {
    same_size(u, w)?;
    if u.inv() > w.inv() {
        return Ok(false);
    }
    Ok(down_set_two_sided(w, cap)?.contains(u))
}

fn down_set(w: &Permutation, right: bool, left: bool) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(z) = queue.pop_front() {
        let mut covers = Vec::new();
        if right {
            covers.extend(z.descents().into_iter().map(|i| z.mul_simple_right(i)));
        }
        if left {
            covers.extend(z.left_descents().into_iter().map(|i| z.mul_simple_left(i)));
        }
        for c in covers {
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    seen
}

/// `{u : u <=_R w}` by breadth-first search over right covers.
pub fn down_set_right(w: &Permutation) -> BTreeSet<Permutation> {
    down_set(w, true, false)
}

/// `{u : u <=_L w}` by breadth-first search over left covers.
pub fn down_set_left(w: &Permutation) -> BTreeSet<Permutation> {
    down_set(w, false, true)
}

/// `{u : u <=_LR w}`; refuses `n > cap`.
pub fn down_set_two_sided(w: &Permutation, cap: usize) -> Result<BTreeSet<Permutation>> {
    if w.n() > cap {
        return Err(Error::CapExceeded {
            what: "two-sided weak order".into(),
            n: w.n(),
            cap,
        });
    }
    Ok(down_set(w, true, true))
}

fn empty(u: &Permutation, w: &Permutation) -> Error {
    Error::EmptyInterval {
        lower: u.to_string(),
        upper: w.to_string(),
    }
}

/// `[u, w]_R`, sorted.
pub fn interval_right(u: &Permutation, w: &Permutation) -> Result<Vec<Permutation>> {
    if !weak_leq_right(u, w)? {
        return Err(empty(u, w));
    }
    Ok(down_set_right(w)
        .into_iter()
        .filter(|z| value_inversions_contained(u, z))
        .collect())
}

/// `[u, w]_L`, sorted.
pub fn interval_left(u: &Permutation, w: &Permutation) -> Result<Vec<Permutation>> {
    if !weak_leq_left(u, w)? {
        return Err(empty(u, w));
    }
    let ui = u.inverse();
    Ok(down_set_left(w)
        .into_iter()
        .filter(|z| value_inversions_contained(&ui, &z.inverse()))
        .collect())
}

/// `[u, w]_LR`, sorted; refuses `n > cap`.
pub fn interval_two_sided(u: &Permutation, w: &Permutation, cap: usize) -> Result<Vec<Permutation>> {
    let below_w = down_set_two_sided(w, cap)?;
    if !below_w.contains(u) {
        return Err(empty(u, w));
    }
    Ok(below_w
        .into_iter()
        .filter(|z| z.inv() >= u.inv() && down_set(z, true, true).contains(u))
        .collect())
}

/// Bruhat order through the rank-matrix criterion:
/// `u <= w` iff `#{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}` for all `i, j`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(u, w)?;
    let n = u.n();
    let mut ru = vec![0usize; n + 2];
    let mut rw = vec![0usize; n + 2];
    for i in 0..n {
        // ru[j] = #{a <= i : u(a) >= j}; update with the new entries.
        ru[1..=u.as_slice()[i] as usize].iter_mut().for_each(|c| *c += 1);
        rw[1..=w.as_slice()[i] as usize].iter_mut().for_each(|c| *c += 1);
        if (1..=n).any(|j| ru[j] > rw[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn weak_order_matches_cover_closure() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let right = down_set_right(&w);
                let left = down_set_left(&w);
                for u in Permutation::all(n) {
                    assert_eq!(weak_leq_right(&u, &w).unwrap(), right.contains(&u));
                    assert_eq!(weak_leq_left(&u, &w).unwrap(), left.contains(&u));
                }
            }
        }
    }

    #[test]
    fn weak_order_is_length_additive_factorization() {
        // u <=_R w iff inv(u^-1 w) = inv(w) - inv(u).
        for w in Permutation::all(4) {
            for u in Permutation::all(4) {
                let q = u.inverse().compose(&w).unwrap();
                assert_eq!(
                    weak_leq_right(&u, &w).unwrap(),
                    u.inv() + q.inv() == w.inv()
                );
            }
        }
    }

    #[test]
    fn bruhat_matches_subword_property() {
        fn subword_oracle(u: &Permutation, w: &Permutation) -> bool {
            let word = w.reduced_word();
            let letters = word.letters();
            (0..=letters.len()).any(|k| {
                k == u.inv()
                    && letters.iter().combinations(k).any(|sub| {
                        let sub: Vec<usize> = sub.into_iter().copied().collect();
                        let x = crate::perm::Word::new(w.n(), sub).unwrap();
                        x.is_reduced() && x.product() == *u
                    })
            })
        }
        for w in Permutation::all(4) {
            for u in Permutation::all(4) {
                assert_eq!(bruhat_leq(&u, &w).unwrap(), subword_oracle(&u, &w), "{u} {w}");
            }
        }
    }

    #[test]
    fn two_sided_examples() {
        assert!(weak_leq_two_sided(&p("1324"), &p("2341")).unwrap());
        assert!(!weak_leq_two_sided(&p("1432"), &p("3412")).unwrap());
        assert!(bruhat_leq(&p("1432"), &p("3412")).unwrap());
        assert!(matches!(
            down_set_two_sided(&Permutation::identity(10), 9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn intervals() {
        let iv = interval_right(&p("2143"), &p("4213")).unwrap();
        assert_eq!(iv, vec![p("2143"), p("2413"), p("4213")]);
        assert!(interval_right(&p("4213"), &p("2143")).is_err());
        let il = interval_left(&Permutation::identity(3), &p("312")).unwrap();
        assert_eq!(il, vec![p("123"), p("213"), p("312")]);
        let ilr = interval_two_sided(&p("213"), &p("321"), 9).unwrap();
        assert_eq!(ilr, vec![p("213"), p("231"), p("312"), p("321")]);
    }
}
