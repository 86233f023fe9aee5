//! Exhaustive theorem checks with machine-readable reports.
//!
//! Every check pits two independent routes against each other over a full
//! sweep of `S_n` (or of all compositions / set partitions of `n`) for each
//! `n` up to the requested bound.

mod combinatorics;
mod pipes;
mod polys;

pub use combinatorics::{interval_formula, maxreg_enumerated, maxreg_formula, maxreg_k, maxreg_maximizers};

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How many counterexamples a report keeps.
pub const MAX_REPORTED_FAILURES: usize = 10;

/// One counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(input: impl Display, expected: impl Display, actual: impl Display) -> Self {
        Self {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n_max: usize,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Headline numbers, one per `n` (counts, maxima); empty for pure identity checks.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<u64>,
    pub ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

/// Registry entry: name, default bound, hard cap.
#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub name: &'static str,
    pub default_n: usize,
    pub cap: usize,
    pub about: &'static str,
}

type Runner = fn(usize) -> Result<Tally>;

struct Entry {
    info: CheckInfo,
    run: Runner,
}

macro_rules! entry {
    ($name:literal, $default:expr, $cap:expr, $about:literal, $run:path) => {
        Entry {
            info: CheckInfo {
                name: $name,
                default_n: $default,
                cap: $cap,
                about: $about,
            },
            run: $run,
        }
    };
}

const REGISTRY: &[Entry] = &[
    entry!("degree_theorem", 6, 6, "deg G_w = raj(w) = max crosses over Pipes(w)", polys::degree_theorem),
    entry!("leading_term", 5, 5, "lex leading term of CM_w(x;y) is x^rajcode(w) y^rajcode(w^-1) with coefficient 1", polys::leading_term),
    entry!("factorization", 5, 5, "CM_w(x;y) splits as a product of two Rajchgot polynomials", polys::factorization),
    entry!("raj_mm", 6, 6, "raj(w) is the max of maj over the right and left weak down-sets", combinatorics::raj_mm),
    entry!("cauchy", 4, 4, "Cauchy identity for double Grothendieck polynomials", polys::cauchy),
    entry!("deriv_recurrence", 5, 5, "differential recurrence for G_w and the degree dichotomy", polys::deriv_recurrence),
    entry!("fireworks_bell", 8, 8, "fireworks permutations are counted by Bell numbers", combinatorics::fireworks_bell),
    entry!("maxreg", 8, 9, "maximum of raj - inv and its maximizers", combinatorics::maxreg),
    entry!("interval_iso", 5, 5, "[e,u]_L x [e,v]_R is isomorphic to [e_alpha, w]_LR", combinatorics::interval_iso),
    entry!("monotonicity", 5, 5, "raj and deg CM are monotone in two-sided weak order", polys::monotonicity),
    entry!("cover_lemmas", 6, 6, "blob and Rajchgot code behaviour across weak-order covers", combinatorics::cover_lemmas),
    entry!("raj_poly_recursion", 5, 5, "Rajchgot polynomials by definition, by rN, and by pipe dreams", polys::raj_poly_recursion),
    entry!("distinct_cm", 6, 6, "distinct CM_w(x) up to scalar are counted by Bell numbers", polys::distinct_cm),
    entry!("interval_cardinality", 6, 6, "size of [e_alpha, f_alpha]_R by product formula", combinatorics::interval_cardinality),
    entry!("exponent_bound", 5, 5, "suffix dominance of pipe dream weights by Rajchgot codes", pipes::exponent_bound),
    entry!("dominant_max_shape", 6, 6, "dominant permutations are the LR-maximal ones of their shape", combinatorics::dominant_max_shape),
    entry!("valley_unique", 7, 7, "one valley and one inverse valley permutation per shape", combinatorics::valley_unique),
    entry!("ealpha_demazure", 5, 5, "raj(e_alpha * x * e_alpha) >= raj(e_alpha) with equality only at e_alpha", combinatorics::ealpha_demazure),
    entry!("max_pipe_dream", 8, 8, "constructive maximal pipe dream vs exhaustive bi-weight search", pipes::max_pipe_dream_check),
    entry!("layered_pipes", 6, 6, "Q_alpha contains every pipe dream of e_alpha", pipes::layered_pipes),
    entry!("pipe_groth", 6, 6, "Grothendieck polynomials from pipe dreams vs divided differences", pipes::pipe_groth),
    entry!("raj_code_routes", 7, 7, "Rajchgot code by increasing subsequences vs blob diagram", combinatorics::raj_code_routes),
    entry!("path_independence", 5, 5, "G_w does not depend on the divided-difference path", polys::path_independence),
];

/// All registered checks in suite order.
pub fn checks() -> impl Iterator<Item = CheckInfo> {
    REGISTRY.iter().map(|e| e.info)
}

pub fn check_info(name: &str) -> Result<CheckInfo> {
    lookup(name).map(|e| e.info)
}

fn lookup(name: &str) -> Result<&'static Entry> {
    REGISTRY
        .iter()
        .find(|e| e.info.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Runner settings.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Worker threads; 0 uses the global rayon pool.
    pub jobs: usize,
    /// Run past the per-check cap instead of failing.
    pub allow_over_cap: bool,
}

/// Runs one check for every `n` in `1..=n_max`.
pub fn check(name: &str, n_max: usize, opts: CheckOptions) -> Result<CheckReport> {
    let entry = lookup(name)?;
    if n_max > entry.info.cap && !opts.allow_over_cap {
        return Err(Error::CapExceeded {
            what: format!("check {name}"),
            n: n_max,
            cap: entry.info.cap,
        });
    }
    let start = Instant::now();
    let body = || -> Result<Tally> {
        let mut total = Tally::default();
        for n in 1..=n_max {
            total.merge((entry.run)(n)?);
        }
        Ok(total)
    };
    let tally = if opts.jobs == 0 {
        body()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(body)?
    };
    let mut failures = tally.failures;
    failures.truncate(MAX_REPORTED_FAILURES);
    Ok(CheckReport {
        check: name.to_string(),
        n_max,
        checked: tally.checked,
        failures,
        values: tally.values,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every check at its default bound.
pub fn check_all(opts: CheckOptions) -> Result<Vec<CheckReport>> {
    REGISTRY
        .iter()
        .map(|e| check(e.info.name, e.info.default_n, opts))
        .collect()
}

#[derive(Debug, Default)]
pub(crate) struct Tally {
    checked: usize,
    failures: Vec<Failure>,
    values: Vec<u64>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.values.extend(other.values);
    }

    fn with_value(mut self, v: u64) -> Self {
        self.values.push(v);
        self
    }

    fn single(failure: Option<Failure>) -> Self {
        Self {
            checked: 1,
            failures: failure.into_iter().collect(),
            values: Vec::new(),
        }
    }
}

/// Checks every item in parallel; failures come back in item order.
pub(crate) fn sweep<T, F>(items: &[T], f: F) -> Tally
where
    T: Sync,
    F: Fn(&T) -> Option<Failure> + Sync + Send,
{
    let failures: Vec<Failure> = items.par_iter().filter_map(f).collect();
    Tally {
        checked: items.len(),
        failures,
        values: Vec::new(),
    }
}

/// Comma-separated list, for report strings.
pub(crate) fn list<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, n: usize) -> CheckReport {
        check(name, n, CheckOptions::default()).unwrap()
    }

    #[test]
    fn fireworks_counts() {
        let r = run("fireworks_bell", 5);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.values, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn maxreg_values() {
        let r = run("maxreg", 7);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.values, vec![0, 0, 1, 2, 4, 7, 10]);
    }

    #[test]
    fn trivial_degree() {
        let r = run("degree_theorem", 1);
        assert!(r.passed());
        assert_eq!(r.checked, 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            check("nope", 3, CheckOptions::default()),
            Err(Error::UnknownCheck(_))
        ));
        assert!(matches!(
            check("cauchy", 5, CheckOptions::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn report_round_trip() {
        let mut r = run("valley_unique", 3);
        r.failures.push(Failure::new("123", "a", "b"));
        let s = serde_json::to_string(&r).unwrap();
        let back: CheckReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        for key in ["check", "n_max", "checked", "failures", "ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn deterministic_across_pools() {
        let a = check("cover_lemmas", 4, CheckOptions { jobs: 1, ..Default::default() }).unwrap();
        let b = check("cover_lemmas", 4, CheckOptions { jobs: 3, ..Default::default() }).unwrap();
        assert_eq!((a.checked, a.failures), (b.checked, b.failures));
    }

    #[test]
    fn every_check_passes_small() {
        for info in checks() {
            let r = run(info.name, info.default_n.min(4));
            assert!(r.passed(), "{}: {:?}", info.name, r.failures);
        }
    }
}
