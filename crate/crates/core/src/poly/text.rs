//! Text form: `3*x1^2*y2 - x1 + 5`, leading `Lex` term first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, SparsePoly};
use crate::error::{parse_err, Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    let n = m.n();
    let vars = (1..=n)
        .map(|i| ('x', i, m.x(i)))
        .chain((1..=n).map(|j| ('y', j, m.y(j))));
    for (name, idx, e) in vars {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{name}{idx}")?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

struct Factor {
    coeff: Option<BigInt>,
    var: Option<(char, usize, u16)>,
}

fn parse_term(tok: &str, offset: usize) -> Result<Vec<Factor>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for factor in tok.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(parse_err(pos, "empty factor"));
        }
        let first = f.chars().next().unwrap();
        if first == 'x' || first == 'y' {
            let (idx, exp) = match f[1..].split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (&f[1..], None),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| parse_err(pos, format!("bad variable index in '{f}'")))?;
            if idx == 0 {
                return Err(parse_err(pos, "variable indices start at 1"));
            }
            let exp: u16 = match exp {
                Some(e) => e
                    .parse()
                    .map_err(|_| parse_err(pos, format!("bad exponent in '{f}'")))?,
                None => 1,
            };
            out.push(Factor {
                coeff: None,
                var: Some((first, idx, exp)),
            });
        } else {
            let c: BigInt = f
                .parse()
                .map_err(|_| parse_err(pos, format!("bad coefficient '{f}'")))?;
            out.push(Factor {
                coeff: Some(c),
                var: None,
            });
        }
        pos += factor.len() + 1;
    }
    Ok(out)
}

impl SparsePoly {
    /// Parses the text form. `n` defaults to the largest variable index seen.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err(0, "empty polynomial"));
        }
        // Split into signed terms at top-level '+' and '-'.
        let mut terms: Vec<(bool, usize, &str)> = Vec::new();
        let mut start = 0;
        let mut neg = false;
        let bytes = s.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'+' || b == b'-' {
                let chunk = &s[start..i];
                if !chunk.trim().is_empty() {
                    terms.push((neg, start, chunk));
                } else if i != 0 && start != 0 {
                    return Err(parse_err(i, "missing term"));
                }
                neg = b == b'-';
                start = i + 1;
            }
        }
        let chunk = &s[start..];
        if chunk.trim().is_empty() {
            return Err(parse_err(start, "missing term"));
        }
        terms.push((neg, start, chunk));

        let mut parsed = Vec::new();
        let mut max_idx = 0;
        for (neg, offset, tok) in terms {
            let factors = parse_term(tok, offset)?;
            for f in &factors {
                if let Some((_, idx, _)) = f.var {
                    max_idx = max_idx.max(idx);
                }
            }
            parsed.push((neg, factors));
        }
        let n = match n {
            Some(n) if n < max_idx => {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: max_idx,
                })
            }
            Some(n) => n,
            None => max_idx.max(1),
        };
        let mut out = SparsePoly::zero(n);
        for (neg, factors) in parsed {
            let mut c = BigInt::one();
            let mut m = Monomial::one(n);
            for f in factors {
                if let Some(a) = f.coeff {
                    c *= a;
                }
                if let Some((name, idx, e)) = f.var {
                    if name == 'x' {
                        *m.x_mut(idx) += e;
                    } else {
                        *m.y_mut(idx) += e;
                    }
                }
            }
            out.add_term(m, if neg { -c } else { c });
        }
        Ok(out)
    }
}

impl FromStr for SparsePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_examples() {
        let f: SparsePoly = "x1 + x2 - x1*x2".parse().unwrap();
        assert_eq!(f.to_string(), "-x1*x2 + x2 + x1");
        let g: SparsePoly = "3*x1^2*y2 - 5".parse().unwrap();
        assert_eq!(g.to_string(), "3*x1^2*y2 - 5");
        assert_eq!(SparsePoly::zero(2).to_string(), "0");
        let h: SparsePoly = "-x1*x2^2".parse().unwrap();
        assert_eq!(h.to_string(), "-x1*x2^2");
    }

    #[test]
    fn parse_errors() {
        assert!("x1 +".parse::<SparsePoly>().is_err());
        assert!("x0".parse::<SparsePoly>().is_err());
        assert!("2**x1".parse::<SparsePoly>().is_err());
        assert!("x1^a".parse::<SparsePoly>().is_err());
        assert!("z1".parse::<SparsePoly>().is_err());
        assert!(SparsePoly::parse("x3", Some(2)).is_err());
    }

    #[test]
    fn roundtrip() {
        let f: SparsePoly = "x1^3*y1 - 2*x2*y3 + 7 - y1".parse().unwrap();
        let back: SparsePoly = SparsePoly::parse(&f.to_string(), Some(f.n())).unwrap();
        assert_eq!(f, back);
    }
}
