//! Grothendieck, Schubert and Castelnuovo-Mumford polynomials via isobaric divided differences.

mod rajpoly;

pub use rajpoly::{
    rajchgot_poly, rajchgot_poly_recursive, rajchgot_polys_of_shape, rn_word_rule, RnWordCase,
};

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::perm::Permutation;
use crate::poly::SparsePoly;
use crate::rajchgot::raj;

/// Single `G_w(x)` or double `G_w(x; y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Single,
    Double,
}

/// Which ascent to strip when walking from `w` up to `w0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathRule {
    SmallestAscent,
    LargestAscent,
}

/// `G_{w0}`: `prod_i x_i^{n-i}` or `prod_{i+j<=n} (x_i + y_j - x_i y_j)`.
pub fn grothendieck_longest(n: usize, variant: Variant) -> SparsePoly {
    match variant {
        Variant::Single => {
            SparsePoly::x_monomial(&(1..=n).map(|i| n - i).collect::<Vec<_>>())
        }
        Variant::Double => {
            let mut g = SparsePoly::one(n);
            for i in 1..n {
                for j in 1..=n - i {
                    let (x, y) = (SparsePoly::x(n, i), SparsePoly::y(n, j));
                    let factor = &(&x + &y) - &(&x * &y);
                    g = &g * &factor;
                }
            }
            g
        }
    }
}

fn path_to_longest(w: &Permutation, rule: PathRule) -> Vec<usize> {
    let mut cur = w.clone();
    let mut letters = Vec::new();
    loop {
        let asc = cur.ascents();
        let i = match rule {
            PathRule::SmallestAscent => asc.first(),
            PathRule::LargestAscent => asc.last(),
        };
        match i {
            Some(&i) => {
                letters.push(i);
                cur = cur.mul_simple_right(i);
            }
            None => return letters,
        }
    }
}

/// `G_w` computed along the path chosen by `rule`, without memoization.
pub fn grothendieck_by_path(w: &Permutation, variant: Variant, rule: PathRule) -> SparsePoly {
    let letters = path_to_longest(w, rule);
    letters
        .iter()
        .rev()
        .fold(grothendieck_longest(w.n(), variant), |g, &i| {
            g.k_divided_difference(i)
        })
}

/// Concurrent memo table keyed by `(variant, w)`.
#[derive(Default)]
pub struct GrothendieckCache {
    table: RwLock<HashMap<(Variant, Permutation), Arc<SparsePoly>>>,
}

impl GrothendieckCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn lookup(&self, key: &(Variant, Permutation)) -> Option<Arc<SparsePoly>> {
        self.table.read().unwrap().get(key).cloned()
    }

    fn insert(&self, key: (Variant, Permutation), value: SparsePoly) -> Arc<SparsePoly> {
        self.table
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::new(value))
            .clone()
    }

    /// `G_w`, walking up by smallest ascents until a cached entry or `w0`.
    pub fn get(&self, w: &Permutation, variant: Variant) -> Arc<SparsePoly> {
        let mut chain = vec![w.clone()];
        let mut letters = Vec::new();
        let mut top = loop {
            let cur = chain.last().unwrap();
            if let Some(g) = self.lookup(&(variant, cur.clone())) {
                break g;
            }
            match cur.ascents().first() {
                Some(&i) => {
                    let next = cur.mul_simple_right(i);
                    letters.push(i);
                    chain.push(next);
                }
                None => {
                    let g = grothendieck_longest(cur.n(), variant);
                    break self.insert((variant, cur.clone()), g);
                }
            }
        };
        chain.pop();
        while let Some(z) = chain.pop() {
            let i = letters.pop().unwrap();
            top = self.insert((variant, z), top.k_divided_difference(i));
        }
        top
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The process-wide cache.
pub fn global_cache() -> &'static GrothendieckCache {
    static CACHE: OnceLock<GrothendieckCache> = OnceLock::new();
    CACHE.get_or_init(GrothendieckCache::new)
}

/// `G_w(x)`.
pub fn grothendieck(w: &Permutation) -> Arc<SparsePoly> {
    global_cache().get(w, Variant::Single)
}

/// `G_w(x; y)`.
pub fn grothendieck_double(w: &Permutation) -> Arc<SparsePoly> {
    global_cache().get(w, Variant::Double)
}

/// `S_w(x)`: the lowest-degree part of `G_w(x)`, of degree `inv(w)`.
pub fn schubert(w: &Permutation) -> SparsePoly {
    let s = grothendieck(w).bottom_part();
    assert_eq!(s.degree(), Some(w.inv()), "Schubert degree differs from inv");
    s
}

/// `S_w(x; y)` in the `x_i - y_j` convention.
pub fn schubert_double(w: &Permutation) -> SparsePoly {
    let s = grothendieck_double(w).negate_y().bottom_part();
    assert_eq!(s.degree(), Some(w.inv()), "Schubert degree differs from inv");
    s
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Signed top-degree part of `G_w(x)`.
pub fn cm_from_grothendieck(g: &SparsePoly, inv: usize) -> SparsePoly {
    let d = g.degree().expect("Grothendieck polynomials are nonzero");
    g.top_part().scale(&sign(d - inv))
}

/// `CM_w(x)`.
pub fn cm(w: &Permutation) -> SparsePoly {
    cm_from_grothendieck(&grothendieck(w), w.inv())
}

/// `CM_w(x; y)`, bihomogeneous of bidegree `(raj(w), raj(w))`.
pub fn cm_double(w: &Permutation) -> SparsePoly {
    let c = grothendieck_double(w).top_part().scale(&sign(w.inv()));
    let r = raj(w);
    assert_eq!(c.bidegree(), Some((r, r)), "CM_w(x;y) bidegree for {w}");
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str, n: usize) -> SparsePoly {
        SparsePoly::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn small_grothendiecks() {
        assert_eq!(*grothendieck(&p("312")), poly("x1^2", 3));
        assert_eq!(*grothendieck(&p("231")), poly("x1*x2", 3));
        assert_eq!(*grothendieck(&p("132")), poly("x1 + x2 - x1*x2", 3));
        assert_eq!(*grothendieck(&p("213")), poly("x1", 3));
        assert_eq!(*grothendieck(&p("123")), poly("1", 3));
        assert_eq!(*grothendieck_double(&p("21")), poly("x1 + y1 - x1*y1", 2));
    }

    #[test]
    fn schubert_and_cm() {
        assert_eq!(schubert(&p("132")), poly("x1 + x2", 3));
        assert_eq!(cm(&p("132")), poly("x1*x2", 3));
        assert_eq!(schubert_double(&p("21")), poly("x1 - y1", 2));
        assert_eq!(cm_double(&p("21")), poly("x1*y1", 2));
        assert_eq!(cm(&p("1423")), poly("x1^2*x2 + x1*x2^2", 4));
        assert_eq!(cm(&p("4123")), poly("x1^3", 4));
    }

    #[test]
    fn path_independence() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let a = grothendieck_by_path(&w, Variant::Single, PathRule::LargestAscent);
                assert_eq!(a, *grothendieck(&w), "{w}");
            }
        }
        for w in Permutation::all(4) {
            let a = grothendieck_by_path(&w, Variant::Double, PathRule::LargestAscent);
            assert_eq!(a, *grothendieck_double(&w), "{w}");
        }
    }

    #[test]
    fn double_specializes_to_single() {
        for w in Permutation::all(4) {
            assert_eq!(grothendieck_double(&w).drop_y(), *grothendieck(&w));
            // G_w(x; y) = G_{w^-1}(y; x).
            assert_eq!(
                grothendieck_double(&w).swap_families(),
                *grothendieck_double(&w.inverse())
            );
        }
    }

    #[test]
    fn cache_is_consistent_under_threads() {
        use rayon::prelude::*;
        let cache = GrothendieckCache::new();
        let all = Permutation::all(5);
        let par: Vec<SparsePoly> = all
            .par_iter()
            .map(|w| (*cache.get(w, Variant::Single)).clone())
            .collect();
        for (w, g) in all.iter().zip(&par) {
            assert_eq!(*g, *grothendieck(w));
        }
        assert_eq!(cache.len(), 120);
    }
}
