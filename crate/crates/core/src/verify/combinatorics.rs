//! Checks that need no polynomials.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;

use super::{list, sweep, Failure, Tally};
use crate::error::Result;
use crate::numbers::{bell, binomial};
use crate::perm::{
    compositions, demazure_product, down_set_left, down_set_right, interval_right,
    interval_two_sided, Composition, Permutation, DEFAULT_ORDER_CAP,
};
use crate::rajchgot::{
    factorize, fireworks_from_partition, raj, raj_code, raj_code_blob, raj_from_shape, regularity,
    set_partitions, BlobDiagram,
};

pub(super) fn raj_mm(n: usize) -> Result<Tally> {
    Ok(sweep(&Permutation::all(n), |w| {
        let r = raj(w);
        let right = down_set_right(w).iter().map(Permutation::maj).max().unwrap_or(0);
        let left = down_set_left(w)
            .iter()
            .map(|u| u.inverse().maj())
            .max()
            .unwrap_or(0);
        (right != r || left != r).then(|| {
            Failure::new(w, r, format!("max maj right {right}, max maj(u^-1) left {left}"))
        })
    }))
}

/// Contains `c ... a b` with `a b` adjacent and `a < b < c`.
fn has_vincular_3_12(w: &[u8]) -> bool {
    (1..w.len().saturating_sub(1)).any(|j| {
        w[j] < w[j + 1] && w[..j].iter().any(|&c| c > w[j + 1])
    })
}

pub(super) fn fireworks_bell(n: usize) -> Result<Tally> {
    let perms = Permutation::all(n);
    let mut tally = sweep(&perms, |w| {
        let avoids = !has_vincular_3_12(w.as_slice());
        (avoids != w.is_fireworks())
            .then(|| Failure::new(w, format!("3-12 avoiding: {avoids}"), w.is_fireworks()))
    });
    let count = perms.iter().filter(|w| !has_vincular_3_12(w.as_slice())).count() as u64;
    let images: BTreeSet<Permutation> = set_partitions(n)
        .iter()
        .map(fireworks_from_partition)
        .collect();
    let b = bell(n);
    let bijective = images.len() as u64 == b && images.iter().all(Permutation::is_fireworks);
    if count != b || !bijective {
        tally.failures.push(Failure::new(
            format!("n={n}"),
            format!("Bell({n}) = {b}"),
            format!("{count} avoiders, {} partition images", images.len()),
        ));
    }
    Ok(tally.with_value(count))
}

/// `k` with `C(k,2) <= n <= C(k+1,2)`, taking the smaller one at triangular `n`.
pub fn maxreg_k(n: usize) -> usize {
    (1..).find(|&k| binomial(k + 1, 2) as usize >= n).unwrap()
}

/// `C(n+1,2) - kn + C(k+1,3)`.
pub fn maxreg_formula(n: usize) -> u64 {
    let k = maxreg_k(n) as u64;
    binomial(n + 1, 2) + binomial(k as usize + 1, 3) - k * n as u64
}

/// Layered permutations `e_alpha` with `j-1 <= alpha_j <= j`, zero parts dropped.
pub fn maxreg_maximizers(n: usize) -> BTreeSet<Permutation> {
    let k = maxreg_k(n);
    let j = n - binomial(k, 2) as usize;
    (1..=k)
        .combinations(j)
        .map(|up| {
            let parts: Vec<usize> = (1..=k)
                .map(|i| if up.contains(&i) { i } else { i - 1 })
                .filter(|&a| a > 0)
                .collect();
            Composition::new(parts).expect("positive parts").layered()
        })
        .collect()
}

/// Maximum of `raj - inv` over `S_n` and the permutations attaining it, by brute force.
pub fn maxreg_enumerated(n: usize) -> (u64, BTreeSet<Permutation>) {
    let perms = Permutation::all(n);
    let regs: Vec<usize> = perms.par_iter().map(regularity).collect();
    let max = regs.iter().copied().max().unwrap_or(0);
    let found = perms
        .into_iter()
        .zip(regs)
        .filter(|&(_, r)| r == max)
        .map(|(w, _)| w)
        .collect();
    (max as u64, found)
}

pub(super) fn maxreg(n: usize) -> Result<Tally> {
    let (max, found) = maxreg_enumerated(n);
    let predicted = maxreg_maximizers(n);
    let formula = maxreg_formula(n);
    let k = maxreg_k(n);
    let count = binomial(k, n - binomial(k, 2) as usize);
    let mut tally = Tally {
        checked: (1..=n).product(),
        ..Default::default()
    };
    if max != formula {
        tally
            .failures
            .push(Failure::new(format!("n={n}"), formula, format!("max {max}")));
    }
    if found != predicted || found.len() as u64 != count {
        tally.failures.push(Failure::new(
            format!("n={n} maximizers"),
            format!("{} ({count} expected)", list(&predicted)),
            list(&found),
        ));
    }
    Ok(tally.with_value(max))
}

pub(super) fn interval_iso(n: usize) -> Result<Tally> {
    let cap = n.max(DEFAULT_ORDER_CAP);
    sweep_results(&Permutation::all(n), |w| interval_iso_one(w, cap))
}

fn lr_covers(set: &BTreeSet<Permutation>) -> BTreeSet<(Permutation, Permutation)> {
    let mut out = BTreeSet::new();
    for z in set {
        for i in 1..z.n() {
            for up in [z.mul_simple_right(i), z.mul_simple_left(i)] {
                if up.inv() == z.inv() + 1 && set.contains(&up) {
                    out.insert((z.clone(), up));
                }
            }
        }
    }
    out
}

fn interval_iso_one(w: &Permutation, cap: usize) -> Result<Option<Failure>> {
    let f = factorize(w)?;
    let e = f.layered();
    let us = down_set_left(&f.left);
    let vs = down_set_right(&f.right);
    let mu = |u: &Permutation, v: &Permutation| -> Result<Permutation> {
        u.compose(&e)?.compose(v)
    };
    let mut image = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for u in &us {
        for v in &vs {
            let z = mu(u, v)?;
            if z.inv() != u.inv() + e.inv() + v.inv() {
                return Ok(Some(Failure::new(w, "length-additive", format!("{u}.{e}.{v}"))));
            }
            for i in 1..w.n() {
                let u2 = u.mul_simple_left(i);
                if u2.inv() == u.inv() + 1 && us.contains(&u2) {
                    edges.insert((z.clone(), mu(&u2, v)?));
                }
                let v2 = v.mul_simple_right(i);
                if v2.inv() == v.inv() + 1 && vs.contains(&v2) {
                    edges.insert((z.clone(), mu(u, &v2)?));
                }
            }
            image.insert(z);
        }
    }
    let target: BTreeSet<Permutation> = interval_two_sided(&e, w, cap)?.into_iter().collect();
    if image.len() != us.len() * vs.len() || image != target {
        return Ok(Some(Failure::new(
            w,
            format!("{} elements", target.len()),
            format!("{} images of {} pairs", image.len(), us.len() * vs.len()),
        )));
    }
    let covers = lr_covers(&target);
    if covers != edges {
        return Ok(Some(Failure::new(
            w,
            format!("{} covers", covers.len()),
            format!("{} product covers", edges.len()),
        )));
    }
    Ok(None)
}

pub(super) fn cover_lemmas(n: usize) -> Result<Tally> {
    Ok(sweep(&Permutation::all(n), |w| {
        let bd = BlobDiagram::new(w);
        let eps = bd.epsilon();
        let code = raj_code(w).0;
        let shape = bd.shape();
        let r = raj(w);
        for i in w.descents() {
            let ws = w.mul_simple_right(i);
            let bd2 = BlobDiagram::new(&ws);
            let (p, q) = (eps[i - 1], eps[i]);
            if p > q {
                let mut eps_expected = eps.to_vec();
                eps_expected.swap(i - 1, i);
                let mut code_expected = code.clone();
                code_expected[i - 1] = code[i] + 1;
                code_expected[i] = code[i - 1] - 1;
                if bd2.epsilon() != eps_expected.as_slice()
                    || bd2.shape() != shape
                    || raj(&ws) != r
                    || raj_code(&ws).0 != code_expected
                {
                    return Some(Failure::new(
                        format!("{w} s_{i}"),
                        format!("blobs {}, code {}", list(&eps_expected), list(&code_expected)),
                        format!("blobs {}, code {}", list(bd2.epsilon()), raj_code(&ws)),
                    ));
                }
            } else if let Some(f) = strict_drop(&ws, &shape, &bd2.shape(), r, format!("{w} s_{i}")) {
                return Some(f);
            }
        }
        let winv = w.inverse();
        for j in w.left_descents() {
            let sw = w.mul_simple_left(j);
            let bd2 = BlobDiagram::new(&sw);
            let (a, b) = (winv.at(j), winv.at(j + 1));
            let (p, q) = (eps[a - 1], eps[b - 1]);
            if p > q {
                if bd2.epsilon() != eps || raj_code(&sw).0 != code {
                    return Some(Failure::new(
                        format!("s_{j} {w}"),
                        format!("blobs {}, code {}", list(eps), list(&code)),
                        format!("blobs {}, code {}", list(bd2.epsilon()), raj_code(&sw)),
                    ));
                }
            } else if let Some(f) = strict_drop(&sw, &shape, &bd2.shape(), r, format!("s_{j} {w}")) {
                return Some(f);
            }
        }
        None
    }))
}

/// The cover lowers the shape strictly in dominance and lowers raj.
fn strict_drop(
    lower: &Permutation,
    shape: &Composition,
    lower_shape: &Composition,
    r: usize,
    label: String,
) -> Option<Failure> {
    let dominated = shape.dominates(lower_shape).unwrap_or(false) && shape != lower_shape;
    let r2 = raj(lower);
    (!dominated || r2 >= r).then(|| {
        Failure::new(
            label,
            format!("shape below {shape}, raj below {r}"),
            format!("shape {lower_shape}, raj {r2}"),
        )
    })
}

pub(super) fn interval_cardinality(n: usize) -> Result<Tally> {
    let mut by_shape: BTreeMap<Composition, u64> = BTreeMap::new();
    for pi in set_partitions(n) {
        *by_shape.entry(pi.shape()).or_default() += 1;
    }
    let comps = compositions(n);
    sweep_results(&comps, |alpha| {
        let size = interval_right(&alpha.layered(), &alpha.valley())?.len() as u64;
        let formula = interval_formula(alpha);
        let partitions = by_shape.get(alpha).copied().unwrap_or(0);
        Ok((size != formula || partitions != formula).then(|| {
            Failure::new(
                alpha,
                format!("formula {formula}"),
                format!("interval {size}, set partitions {partitions}"),
            )
        }))
    })
}

/// `n! / prod alpha_k! * prod alpha_k / prod (alpha_t + ... + alpha_k)`.
pub fn interval_formula(alpha: &Composition) -> u64 {
    interval_formula_with(alpha, &alpha.partial_sums())
}

fn interval_formula_with(alpha: &Composition, sums: &[usize]) -> u64 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    let num = fact(alpha.n()) * alpha.parts().iter().map(|&a| a as u128).product::<u128>();
    let den = alpha.parts().iter().map(|&a| fact(a)).product::<u128>()
        * sums.iter().map(|&s| s as u128).product::<u128>();
    if num % den != 0 {
        return 0;
    }
    (num / den) as u64
}

pub(super) fn dominant_max_shape(n: usize) -> Result<Tally> {
    Ok(sweep(&Permutation::all(n), |w| {
        let shape = BlobDiagram::new(w).shape();
        let maximal = !(1..n).any(|i| {
            [w.mul_simple_right(i), w.mul_simple_left(i)]
                .iter()
                .any(|z| z.inv() == w.inv() + 1 && BlobDiagram::new(z).shape() == shape)
        });
        let code = w.inv_code();
        let partition_code = code.windows(2).all(|p| p[0] >= p[1]);
        (maximal != w.is_dominant() || partition_code != w.is_dominant()).then(|| {
            Failure::new(
                w,
                format!("maximal {maximal}"),
                format!("avoids 132 {}, code {}", w.is_dominant(), list(&code)),
            )
        })
    }))
}

/// Strictly decreasing then strictly increasing.
fn is_unimodal_valley(w: &[u8]) -> bool {
    let m = w.iter().position_min().unwrap_or(0);
    w[..=m].windows(2).all(|p| p[0] > p[1]) && w[m..].windows(2).all(|p| p[0] < p[1])
}

pub(super) fn valley_unique(n: usize) -> Result<Tally> {
    let perms = Permutation::all(n);
    let mut tally = sweep(&perms, |w| {
        let direct = is_unimodal_valley(w.as_slice());
        (direct != w.is_valley()).then(|| Failure::new(w, format!("valley {direct}"), w.is_valley()))
    });
    let mut valleys: BTreeMap<Composition, Vec<Permutation>> = BTreeMap::new();
    let mut inverse: BTreeMap<Composition, Vec<Permutation>> = BTreeMap::new();
    for w in &perms {
        if is_unimodal_valley(w.as_slice()) {
            valleys.entry(BlobDiagram::new(w).shape()).or_default().push(w.clone());
        }
        if is_unimodal_valley(w.inverse().as_slice()) {
            inverse.entry(BlobDiagram::new(w).shape()).or_default().push(w.clone());
        }
    }
    let comps = compositions(n);
    let shapes = sweep(&comps, |alpha| {
        let f = alpha.valley();
        let got = valleys.get(alpha).cloned().unwrap_or_default();
        let got_inv = inverse.get(alpha).cloned().unwrap_or_default();
        (got != [f.clone()] || got_inv != [f.inverse()]).then(|| {
            Failure::new(
                alpha,
                format!("{f} and {}", f.inverse()),
                format!("valleys [{}], inverse valleys [{}]", list(&got), list(&got_inv)),
            )
        })
    });
    tally.merge(shapes);
    Ok(tally)
}

pub(super) fn ealpha_demazure(n: usize) -> Result<Tally> {
    let perms = Permutation::all(n);
    let comps = compositions(n);
    let mut tally = Tally::default();
    for alpha in &comps {
        let e = alpha.layered();
        let re = raj(&e);
        let idem = demazure_product(&e, &e)?;
        tally.merge(Tally::single((idem != e).then(|| {
            Failure::new(format!("{e}*{e}"), &e, &idem)
        })));
        tally.merge(sweep_results(&perms, |x| {
            let y = demazure_product(&demazure_product(&e, x)?, &e)?;
            let ry = raj(&y);
            Ok((ry < re || (ry == re) != (y == e)).then(|| {
                Failure::new(format!("{e}*{x}*{e} = {y}"), format!("raj >= {re}, equal iff e_alpha"), ry)
            }))
        })?);
    }
    Ok(tally)
}

pub(super) fn raj_code_routes(n: usize) -> Result<Tally> {
    Ok(sweep(&Permutation::all(n), |w| {
        let a = raj_code(w);
        let b = raj_code_blob(w);
        let via_shape = raj_from_shape(&BlobDiagram::new(w).shape());
        (a != b || a.sum() != via_shape)
            .then(|| Failure::new(w, &a, format!("blob {b}, from shape {via_shape}")))
    }))
}

/// `sweep` for fallible per-item checks; the first error aborts.
pub(super) fn sweep_results<T, F>(items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Failure>> + Sync + Send,
{
    let results: Vec<Result<Option<Failure>>> = items.par_iter().map(f).collect();
    let mut tally = Tally {
        checked: items.len(),
        ..Default::default()
    };
    for r in results {
        tally.failures.extend(r?);
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maxreg_formula_values() {
        let got: Vec<u64> = (1..=16).map(maxreg_formula).collect();
        assert_eq!(got, [0, 0, 1, 2, 4, 7, 10, 14, 19, 25, 31, 38, 46, 55, 65, 75]);
    }

    #[test]
    fn maximizer_counts() {
        assert_eq!(maxreg_maximizers(3).len(), 1);
        assert_eq!(maxreg_maximizers(4).len(), 3);
        assert_eq!(maxreg_maximizers(6).len(), 1);
        assert!(maxreg_maximizers(3).contains(&"132".parse().unwrap()));
    }

    #[test]
    fn vincular_filter() {
        assert!(has_vincular_3_12(&[3, 1, 2]));
        assert!(!has_vincular_3_12(&[1, 3, 2]));
        assert!(!has_vincular_3_12(&[2, 1, 3]));
        assert!(!has_vincular_3_12(&[4, 1, 6, 2, 8, 5, 3, 9, 7]));
    }

    #[test]
    fn suffix_sum_formula_fails() {
        let alpha: Composition = "1,1,2".parse().unwrap();
        let n = alpha.n();
        let suffix: Vec<usize> = (0..alpha.parts().len())
            .map(|i| alpha.parts()[i..].iter().sum())
            .collect();
        let size = interval_right(&alpha.layered(), &alpha.valley()).unwrap().len() as u64;
        assert_eq!(size, 3);
        assert_eq!(interval_formula(&alpha), 3);
        assert_ne!(interval_formula_with(&alpha, &suffix), size);
        assert_eq!(n, 4);
    }

    #[test]
    fn valley_shapes() {
        assert!(is_unimodal_valley(&[3, 1, 2]));
        assert!(is_unimodal_valley(&[1]));
        assert!(!is_unimodal_valley(&[1, 3, 2]));
    }
}
