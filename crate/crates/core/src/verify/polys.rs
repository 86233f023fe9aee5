//! Checks on Grothendieck, CM and Rajchgot polynomials.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use super::combinatorics::sweep_results;
use super::{list, sweep, Failure, Tally};
use crate::error::Result;
use crate::grothendieck::{
    cm, cm_double, cm_from_grothendieck, grothendieck, grothendieck_by_path, grothendieck_double,
    rajchgot_poly, rajchgot_poly_recursive, rajchgot_polys_of_shape, rn_word_rule, PathRule,
    RnWordCase, Variant,
};
use crate::numbers::bell;
use crate::perm::{compositions, demazure_product, down_set_two_sided, Permutation, DEFAULT_ORDER_CAP};
use crate::pipedreams::{fiber_stats, grothendieck_from_pipes, DEFAULT_PIPE_CAP};
use crate::poly::{Monomial, SparsePoly, TermOrder};
use crate::rajchgot::{fireworks_from_partition, raj, raj_code, set_partitions, BlobDiagram, SetPartition};

fn pipe_cap(n: usize) -> usize {
    n.max(DEFAULT_PIPE_CAP)
}

fn deg(p: &SparsePoly) -> usize {
    p.degree().unwrap_or(0)
}

pub(super) fn degree_theorem(n: usize) -> Result<Tally> {
    let stats = fiber_stats(n, pipe_cap(n))?;
    Ok(sweep(&Permutation::all(n), |w| {
        let r = raj(w);
        let g = deg(&grothendieck(w));
        let c = deg(&cm(w));
        let m = stats.get(w).map_or(0, |s| s.max_crosses);
        (g != r || c != r || m != r).then(|| {
            Failure::new(w, r, format!("deg G {g}, deg CM {c}, max crosses {m}"))
        })
    }))
}

/// Exponent vector as `u16`s.
fn exps(code: &[usize]) -> Vec<u16> {
    code.iter().map(|&c| c as u16).collect()
}

/// Every suffix sum of `a` is at most that of `b`.
pub(super) fn suffix_dominated(a: &[u16], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in (0..b.len()).rev() {
        sa += a.get(k).copied().unwrap_or(0) as usize;
        sb += b[k];
        if sa > sb {
            return false;
        }
    }
    true
}

pub(super) fn leading_term(n: usize) -> Result<Tally> {
    sweep_results(&Permutation::all(n), |w| {
        let c = cm_double(w);
        let rx = raj_code(w).0;
        let ry = raj_code(&w.inverse()).0;
        let expected = Monomial::from_exponents(&exps(&rx), &exps(&ry));
        for order in [TermOrder::Lex, TermOrder::GradedLex] {
            let (m, coeff) = c.leading_term(order)?;
            if m != expected || coeff != BigInt::from(1) {
                return Ok(Some(Failure::new(
                    w,
                    SparsePoly::term(expected, 1),
                    SparsePoly::term(m, coeff),
                )));
            }
        }
        let bad = c
            .terms()
            .find(|(m, _)| !suffix_dominated(m.x_exps(), &rx) || !suffix_dominated(m.y_exps(), &ry));
        Ok(bad.map(|(m, coeff)| {
            Failure::new(w, "suffix-dominated exponents", SparsePoly::term(m.clone(), coeff.clone()))
        }))
    })
}

/// `R_pi(x)` for every set partition of `n`, by the rN breadth-first search.
fn rajchgot_table(n: usize) -> BTreeMap<SetPartition, SparsePoly> {
    compositions(n)
        .iter()
        .flat_map(rajchgot_polys_of_shape)
        .collect()
}

pub(super) fn factorization(n: usize) -> Result<Tally> {
    let table = rajchgot_table(n);
    Ok(sweep(&Permutation::all(n), |w| {
        let px = BlobDiagram::new(&w.inverse()).set_partition();
        let py = BlobDiagram::new(w).set_partition();
        let rhs = &table[&px] * &table[&py].swap_families();
        let lhs = cm_double(w);
        (lhs != rhs).then(|| Failure::new(w, &rhs, &lhs))
    }))
}

pub(super) fn cauchy(n: usize) -> Result<Tally> {
    let perms = Permutation::all(n);
    let mut pairs: HashMap<Permutation, Vec<(Permutation, Permutation)>> = HashMap::new();
    for p in &perms {
        for q in &perms {
            pairs
                .entry(demazure_product(q, p)?)
                .or_default()
                .push((p.clone(), q.clone()));
        }
    }
    Ok(sweep(&perms, |w| {
        let mut sum = SparsePoly::zero(n);
        for (p, q) in &pairs[w] {
            let term = &*grothendieck(p) * &grothendieck(&q.inverse()).swap_families();
            sum = if (w.inv() + p.inv() + q.inv()) % 2 == 0 {
                &sum + &term
            } else {
                &sum - &term
            };
        }
        let g = grothendieck_double(w);
        (*g != sum).then(|| Failure::new(w, &*g, &sum))
    }))
}

pub(super) fn deriv_recurrence(n: usize) -> Result<Tally> {
    Ok(sweep(&Permutation::all(n), |w| {
        let g = grothendieck(w);
        let maj = w.inverse().maj();
        let lhs = &(&g.scale(&BigInt::from(maj)) + &g.nabla()) - &g.euler();
        let mut rhs = SparsePoly::zero(n);
        let mut below: Option<usize> = None;
        for k in w.left_descents() {
            let gk = grothendieck(&w.mul_simple_left(k));
            rhs = &rhs + &gk.scale(&BigInt::from(k));
            below = below.max(Some(deg(&gk)));
        }
        if lhs != rhs {
            return Some(Failure::new(w, &rhs, &lhs));
        }
        // An empty max is -infinity.
        let d = deg(&g);
        let first = below == Some(d);
        let second = d == maj && below.is_none_or(|b| d > b);
        let maj_above = below.is_none_or(|b| maj > b);
        let fw = w.is_inverse_fireworks();
        (first == second || second != fw || maj_above != fw).then(|| {
            Failure::new(
                w,
                format!("exactly one case; second case iff inverse fireworks ({fw})"),
                format!("deg {d}, maj(w^-1) {maj}, max below {below:?}"),
            )
        })
    }))
}

pub(super) fn monotonicity(n: usize) -> Result<Tally> {
    let cap = n.max(DEFAULT_ORDER_CAP);
    sweep_results(&Permutation::all(n), |w| {
        let r = raj(w);
        let d = deg(&grothendieck(w));
        let shape = BlobDiagram::new(w).shape();
        for z in down_set_two_sided(w, cap)? {
            let rz = raj(&z);
            let dz = deg(&grothendieck(&z));
            let same_shape = BlobDiagram::new(&z).shape() == shape;
            if rz > r || dz > d || (rz == r) != same_shape {
                return Ok(Some(Failure::new(
                    format!("{z} <=LR {w}"),
                    format!("raj <= {r}, deg <= {d}, equal raj iff shape {shape}"),
                    format!("raj {rz}, deg {dz}, same shape {same_shape}"),
                )));
            }
        }
        Ok(None)
    })
}

pub(super) fn raj_poly_recursion(n: usize) -> Result<Tally> {
    let table = rajchgot_table(n);
    let cap = n.max(DEFAULT_PIPE_CAP);
    sweep_results(&set_partitions(n), |pi| {
        let a = rajchgot_poly(pi);
        let b = rajchgot_poly_recursive(pi);
        let c = table.get(pi).cloned().unwrap_or_else(|| SparsePoly::zero(n));
        let v = fireworks_from_partition(pi).inverse();
        let d = cm_from_grothendieck(&grothendieck_from_pipes(&v, Variant::Single, cap)?, v.inv());
        if a != b || a != c || a != d {
            return Ok(Some(Failure::new(
                pi,
                &a,
                format!("recursive {b}; search {c}; pipes {d}"),
            )));
        }
        let p = pi.word();
        for i in 1..n {
            let expected = match rn_word_rule(&p, i) {
                RnWordCase::Shift(q) => table[&SetPartition::from_word(&q)?].clone(),
                RnWordCase::Zero => SparsePoly::zero(n),
                RnWordCase::Negate => -&a,
            };
            let got = a.rajchgot_operator(i);
            if got != expected {
                return Ok(Some(Failure::new(format!("rN_{i} R_{}", list(&p)), expected, got)));
            }
        }
        Ok(None)
    })
}

pub(super) fn distinct_cm(n: usize) -> Result<Tally> {
    let perms = Permutation::all(n);
    let mut classes: HashMap<SparsePoly, BTreeSet<SetPartition>> = HashMap::new();
    let mut owners: BTreeMap<SetPartition, BTreeSet<String>> = BTreeMap::new();
    for w in &perms {
        let c = cm(w).primitive();
        let pi = BlobDiagram::new(&w.inverse()).set_partition();
        owners.entry(pi.clone()).or_default().insert(c.to_string());
        classes.entry(c).or_default().insert(pi);
    }
    let mut tally = Tally {
        checked: perms.len(),
        ..Default::default()
    };
    for (pi, polys) in &owners {
        if polys.len() != 1 {
            tally
                .failures
                .push(Failure::new(pi, "one CM class", list(polys)));
        }
    }
    for (c, pis) in &classes {
        if pis.len() != 1 {
            tally.failures.push(Failure::new(c, "one set partition", list(pis)));
        }
    }
    tally.failures.sort_by(|a, b| a.input.cmp(&b.input));
    let count = classes.len() as u64;
    if count != bell(n) {
        tally.failures.push(Failure::new(format!("n={n}"), bell(n), count));
    }
    Ok(tally.with_value(count))
}

pub(super) fn path_independence(n: usize) -> Result<Tally> {
    Ok(sweep(&Permutation::all(n), |w| {
        let single = grothendieck_by_path(w, Variant::Single, PathRule::LargestAscent);
        let g = grothendieck(w);
        if single != *g {
            return Some(Failure::new(w, &*g, &single));
        }
        if n <= 4 {
            let double = grothendieck_by_path(w, Variant::Double, PathRule::LargestAscent);
            let gd = grothendieck_double(w);
            if double != *gd {
                return Some(Failure::new(w, &*gd, &double));
            }
        }
        None
    }))
}
