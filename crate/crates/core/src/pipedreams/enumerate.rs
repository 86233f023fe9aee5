//! Exhaustive enumeration of pipe dreams by depth-first search in reading order.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{reading_cells, PipeDream};
use crate::error::{Error, Result};
use crate::grothendieck::Variant;
use crate::perm::{bruhat_leq, Permutation};
use crate::poly::SparsePoly;

/// Default largest `n` for exhaustive enumeration.
pub const DEFAULT_PIPE_CAP: usize = 7;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "pipe dream enumeration".into(),
            n,
            cap,
        });
    }
    Ok(())
}

struct Search<'a> {
    n: usize,
    letters: Vec<usize>,
    target: Option<&'a Permutation>,
    reduced_only: bool,
}

impl Search<'_> {
    /// Visits every subset of cells from `idx` on; `cur` is the Demazure product so far.
    fn run(&self, idx: usize, cur: &mut Vec<u8>, bits: u128, visit: &mut dyn FnMut(u128, &[u8])) {
        if idx == self.letters.len() {
            if self.target.is_none_or(|w| w.as_slice() == cur.as_slice()) {
                visit(bits, cur);
            }
            return;
        }
        self.run(idx + 1, cur, bits, visit);
        let a = self.letters[idx];
        let lengthens = cur[a - 1] < cur[a];
        if self.reduced_only && !lengthens {
            return;
        }
        if lengthens {
            cur.swap(a - 1, a);
        }
        let viable = match self.target {
            // Demazure products only grow in Bruhat order, so a prefix above w is dead.
            Some(w) if lengthens => {
                let prefix = Permutation::from_vec_unchecked(cur.clone());
                bruhat_leq(&prefix, w).unwrap()
            }
            _ => true,
        };
        if viable {
            self.run(idx + 1, cur, bits | 1u128 << idx, visit);
        }
        if lengthens {
            cur.swap(a - 1, a);
        }
    }
}

fn search(n: usize, target: Option<&Permutation>, reduced_only: bool, visit: &mut dyn FnMut(u128, &[u8])) {
    let s = Search {
        n,
        letters: reading_cells(n).into_iter().map(|(i, j)| i + j - 1).collect(),
        target,
        reduced_only,
    };
    let mut cur: Vec<u8> = (1..=s.n as u8).collect();
    s.run(0, &mut cur, 0, visit);
}

/// `Pipes(w)`: all pipe dreams whose Demazure product is `w`.
pub fn pipe_dreams(w: &Permutation, cap: usize) -> Result<Vec<PipeDream>> {
    let n = w.n();
    check_cap(n, cap)?;
    let mut out = Vec::new();
    search(n, Some(w), false, &mut |bits, _| out.push(PipeDream::from_bits(n, bits)));
    out.sort();
    Ok(out)
}

/// `Pipes_0(w)`: reduced pipe dreams for `w`.
pub fn reduced_pipe_dreams(w: &Permutation, cap: usize) -> Result<Vec<PipeDream>> {
    let n = w.n();
    check_cap(n, cap)?;
    let mut out = Vec::new();
    search(n, Some(w), true, &mut |bits, _| out.push(PipeDream::from_bits(n, bits)));
    out.sort();
    Ok(out)
}

/// Calls `f` on every pipe dream of size `n` with its permutation.
pub fn for_each_pipe_dream(
    n: usize,
    cap: usize,
    mut f: impl FnMut(&PipeDream, &[u8]),
) -> Result<()> {
    check_cap(n, cap)?;
    search(n, None, false, &mut |bits, cur| {
        f(&PipeDream::from_bits(n, bits), cur)
    });
    Ok(())
}

/// Every fiber `Pipes(w)` for `w` in `S_n`, in one sweep.
pub fn pipe_fibers(n: usize, cap: usize) -> Result<HashMap<Permutation, Vec<PipeDream>>> {
    let mut out: HashMap<Permutation, Vec<PipeDream>> = HashMap::new();
    for_each_pipe_dream(n, cap, |pd, cur| {
        out.entry(Permutation::from_vec_unchecked(cur.to_vec()))
            .or_default()
            .push(*pd);
    })?;
    for v in out.values_mut() {
        v.sort();
    }
    Ok(out)
}

/// Size data of one fiber.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FiberStats {
    pub count: usize,
    pub reduced: usize,
    pub max_crosses: usize,
}

/// Per-permutation fiber statistics without storing the pipe dreams.
pub fn fiber_stats(n: usize, cap: usize) -> Result<BTreeMap<Permutation, FiberStats>> {
    let mut out: HashMap<Vec<u8>, FiberStats> = HashMap::new();
    for_each_pipe_dream(n, cap, |pd, cur| {
        let s = out.entry(cur.to_vec()).or_default();
        s.count += 1;
        s.max_crosses = s.max_crosses.max(pd.len());
        let inv = Permutation::from_vec_unchecked(cur.to_vec()).inv();
        if pd.len() == inv {
            s.reduced += 1;
        }
    })?;
    Ok(out
        .into_iter()
        .map(|(k, v)| (Permutation::from_vec_unchecked(k), v))
        .collect())
}

/// `G_w` as a signed sum over `Pipes(w)`.
pub fn grothendieck_from_pipes(w: &Permutation, variant: Variant, cap: usize) -> Result<SparsePoly> {
    let inv = w.inv();
    let mut out = SparsePoly::zero(w.n());
    for pd in pipe_dreams(w, cap)? {
        let weight = match variant {
            Variant::Single => pd.x_weight(),
            Variant::Double => pd.double_weight(),
        };
        out = if (pd.len() - inv).is_multiple_of(2) {
            &out + &weight
        } else {
            &out - &weight
        };
    }
    Ok(out)
}

/// `S_w(x; y) = sum over Pipes_0(w) of prod (x_i - y_j)`.
pub fn schubert_double_from_pipes(w: &Permutation, cap: usize) -> Result<SparsePoly> {
    let n = w.n();
    let mut out = SparsePoly::zero(n);
    for pd in reduced_pipe_dreams(w, cap)? {
        let mut t = SparsePoly::one(n);
        for (i, j) in pd.crosses() {
            t = &t * &(&SparsePoly::x(n, i) - &SparsePoly::y(n, j));
        }
        out = &out + &t;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::{grothendieck, grothendieck_double, schubert_double};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduced_pipe_dreams_of_42153() {
        assert_eq!(reduced_pipe_dreams(&p("42153"), 7).unwrap().len(), 3);
    }

    #[test]
    fn pruned_search_matches_sweep() {
        for n in 1..=5 {
            let fibers = pipe_fibers(n, 7).unwrap();
            let mut total = 0;
            for w in Permutation::all(n) {
                let direct = pipe_dreams(&w, 7).unwrap();
                assert_eq!(direct, fibers[&w], "{w}");
                total += direct.len();
            }
            assert_eq!(total, 1 << (n * (n - 1) / 2));
        }
    }

    #[test]
    fn pipes_give_grothendieck() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let g = grothendieck_from_pipes(&w, Variant::Single, 7).unwrap();
                assert_eq!(g, *grothendieck(&w), "{w}");
            }
        }
        for w in Permutation::all(4) {
            let g = grothendieck_from_pipes(&w, Variant::Double, 7).unwrap();
            assert_eq!(g, *grothendieck_double(&w), "{w}");
            assert_eq!(schubert_double_from_pipes(&w, 7).unwrap(), schubert_double(&w));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            pipe_dreams(&Permutation::identity(8), 7),
            Err(Error::CapExceeded { .. })
        ));
    }
}
