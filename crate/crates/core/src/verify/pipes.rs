//! Checks that sweep pipe-dream fibers.

use std::collections::{BTreeSet, HashMap};

use super::combinatorics::sweep_results;
use super::polys::suffix_dominated;
use super::{sweep, Failure, Tally};
use crate::error::Result;
use crate::grothendieck::{grothendieck, grothendieck_double, schubert_double};
use crate::perm::{compositions, weak_leq_left, Permutation};
use crate::pipedreams::{
    delete_top_pipes, layered_pipe_dream, max_pipe_dream, pipe_fibers, restrict_rows, PipeDream,
    DEFAULT_PIPE_CAP,
};
use crate::poly::SparsePoly;
use crate::rajchgot::raj_code;

type Fibers = HashMap<Permutation, Vec<PipeDream>>;

fn fibers(n: usize) -> Result<Fibers> {
    pipe_fibers(n, n.max(DEFAULT_PIPE_CAP))
}

fn fiber<'a>(f: &'a Fibers, w: &Permutation) -> &'a [PipeDream] {
    f.get(w).map_or(&[], Vec::as_slice)
}

pub(super) fn exponent_bound(n: usize) -> Result<Tally> {
    let all = fibers(n)?;
    Ok(sweep(&Permutation::all(n), |w| {
        let rx = raj_code(w).0;
        let ry = raj_code(&w.inverse()).0;
        for pd in fiber(&all, w) {
            let rows: Vec<u16> = pd.row_counts().iter().map(|&c| c as u16).collect();
            let cols: Vec<u16> = pd.col_counts().iter().map(|&c| c as u16).collect();
            if !suffix_dominated(&rows, &rx) || !suffix_dominated(&cols, &ry) {
                return Some(Failure::new(
                    format!("{w} {:?}", pd.crosses()),
                    "row and column counts suffix-dominated by the Rajchgot codes",
                    format!("rows {rows:?}, columns {cols:?}"),
                ));
            }
            for k in 0..n {
                let wk = Permutation::flatten(&w.as_slice()[k..]);
                let q = delete_top_pipes(pd, k).perm();
                let uk = restrict_rows(pd, k).perm();
                if q != wk || !weak_leq_left(&uk, &wk).unwrap_or(false) {
                    return Some(Failure::new(
                        format!("{w} {:?} k={k}", pd.crosses()),
                        format!("history {wk}, top rows <=L {wk}"),
                        format!("history {q}, top rows {uk}"),
                    ));
                }
            }
        }
        None
    }))
}

pub(super) fn max_pipe_dream_check(n: usize) -> Result<Tally> {
    let perms = Permutation::all(n);
    if n > 5 {
        return sweep_results(&perms, |w| {
            let p = max_pipe_dream(w)?;
            let ok = p.perm() == *w
                && p.row_counts() == raj_code(w).0
                && p.col_counts() == raj_code(&w.inverse()).0;
            Ok((!ok).then(|| Failure::new(w, "bi-weight (rajcode(w), rajcode(w^-1))", format!("{:?}", p.crosses()))))
        });
    }
    let all = fibers(n)?;
    sweep_results(&perms, |w| {
        let rx = raj_code(w).0;
        let ry = raj_code(&w.inverse()).0;
        let hits: Vec<&PipeDream> = fiber(&all, w)
            .iter()
            .filter(|p| p.row_counts() == rx && p.col_counts() == ry)
            .collect();
        let built = max_pipe_dream(w)?;
        Ok((hits.len() != 1 || *hits[0] != built).then(|| {
            Failure::new(
                w,
                format!("unique match {:?}", built.crosses()),
                format!("{} matches: {:?}", hits.len(), hits.iter().map(|p| p.crosses()).collect::<Vec<_>>()),
            )
        }))
    })
}

pub(super) fn layered_pipes(n: usize) -> Result<Tally> {
    let all = fibers(n)?;
    Ok(sweep(&compositions(n), |alpha| {
        let q = layered_pipe_dream(alpha);
        let e = alpha.layered();
        let cells: BTreeSet<(usize, usize)> = q.crosses().into_iter().collect();
        let members = fiber(&all, &e);
        let inside = members.contains(&q)
            && members
                .iter()
                .all(|p| p.crosses().iter().all(|c| cells.contains(c)));
        (!inside).then(|| Failure::new(alpha, format!("{:?} covers Pipes({e})", q.crosses()), "escape"))
    }))
}

fn signed_sum(pds: &[PipeDream], inv: usize, weight: impl Fn(&PipeDream) -> SparsePoly, n: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(n);
    for pd in pds {
        let t = weight(pd);
        out = if (pd.len() - inv).is_multiple_of(2) { &out + &t } else { &out - &t };
    }
    out
}

pub(super) fn pipe_groth(n: usize) -> Result<Tally> {
    let all = fibers(n)?;
    Ok(sweep(&Permutation::all(n), |w| {
        let pds = fiber(&all, w);
        let single = signed_sum(pds, w.inv(), PipeDream::x_weight, n);
        let g = grothendieck(w);
        if single != *g {
            return Some(Failure::new(w, &*g, &single));
        }
        let mut transposed: Vec<PipeDream> = pds.iter().map(PipeDream::transpose).collect();
        transposed.sort();
        if transposed != fiber(&all, &w.inverse()) {
            return Some(Failure::new(w, format!("Pipes({}) transposed", w.inverse()), "mismatch"));
        }
        if n <= 5 {
            let double = signed_sum(pds, w.inv(), PipeDream::double_weight, n);
            let gd = grothendieck_double(w);
            if double != *gd {
                return Some(Failure::new(w, &*gd, &double));
            }
            let mut s = SparsePoly::zero(n);
            for pd in pds.iter().filter(|p| p.is_reduced()) {
                let mut t = SparsePoly::one(n);
                for (i, j) in pd.crosses() {
                    t = &t * &(&SparsePoly::x(n, i) - &SparsePoly::y(n, j));
                }
                s = &s + &t;
            }
            let sd = schubert_double(w);
            if s != sd {
                return Some(Failure::new(w, &sd, &s));
            }
        }
        None
    }))
}
