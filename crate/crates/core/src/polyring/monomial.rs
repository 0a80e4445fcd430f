use std::cmp::Ordering;
use std::fmt;

use super::var::{Family, VarId};
use crate::error::{Error, Result};

/// A product of variables with positive exponents, sorted by `VarId`.
///
/// `Ord` is the canonical storage order: graded lexicographic, where a smaller
/// `VarId` is the more significant (larger) variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    vars: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial {
            deg: 1,
            vars: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Monomial {
        let mut vars: Vec<(VarId, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        vars.sort_unstable_by_key(|p| p.0);
        let mut out: Vec<(VarId, u32)> = Vec::with_capacity(vars.len());
        for (v, e) in vars {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        let deg = out.iter().map(|p| p.1).sum();
        Monomial { deg, vars: out }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[(VarId, u32)] {
        &self.vars
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.vars.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.vars[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let (a, b) = (&self.vars, &other.vars);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            deg: self.deg + other.deg,
            vars: out,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            deg: self.deg * e,
            vars: self.vars.iter().map(|&(v, k)| (v, k * e)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.vars.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_pairs(
            other.vars.iter().map(|&(v, e)| (v, e - self.exponent(v))),
        ))
    }

    /// Removes one factor of `v`; `None` if `v` does not occur.
    pub fn reduce_var(&self, v: VarId) -> Option<Monomial> {
        let idx = self.vars.binary_search_by_key(&v, |p| p.0).ok()?;
        let mut vars = self.vars.clone();
        if vars[idx].1 == 1 {
            vars.remove(idx);
        } else {
            vars[idx].1 -= 1;
        }
        Some(Monomial {
            deg: self.deg - 1,
            vars,
        })
    }

    /// Splits into the factor made of variables from `families` and the rest.
    pub fn split(&self, families: &[Family]) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) = self
            .vars
            .iter()
            .partition(|(v, _)| families.contains(&v.family()));
        (Monomial::from_sorted(inside), Monomial::from_sorted(outside))
    }

    pub(crate) fn from_sorted(vars: Vec<(VarId, u32)>) -> Monomial {
        debug_assert!(vars.windows(2).all(|w| w[0].0 < w[1].0));
        let deg = vars.iter().map(|p| p.1).sum();
        Monomial { deg, vars }
    }

    pub fn only_families(&self, families: &[Family]) -> bool {
        self.vars.iter().all(|(v, _)| families.contains(&v.family()))
    }
}

/// Graded lex with variables scanned from most to least significant, as
/// given by `key` (smaller key = more significant). Both inputs already
/// sorted by `key`.
pub(crate) fn graded_lex<K: Ord + Copy>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    let da: u32 = a.iter().map(|p| p.1).sum();
    let db: u32 = b.iter().map(|p| p.1).sum();
    da.cmp(&db).then_with(|| lex(a, b))
}

fn lex<K: Ord + Copy>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            // the side holding the more significant variable is larger
            return if x.0 < y.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| lex(&self.vars, &other.vars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.vars.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Monomial {
    type Err = Error;

    /// Parses `x[1,1]^2*y[2,1]`; `1` is the unit monomial.
    fn from_str(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let (v, e) = match factor.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            pairs.push((v.parse::<VarId>()?, e));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        assert!(m("x[1,1]*y[2,1]") > m("x[2,1]*y[1,1]"));
        assert!(m("y[9,9]^2") > m("x[1,1]"));
        assert!(m("x[1,1]") > m("x[1,2]"));
        assert!(m("x[1,1]*x[1,2]") > m("x[1,1]*x[1,3]"));
        assert_eq!(m("y[1,1]*x[1,1]"), m("x[1,1]*y[1,1]"));
    }

    #[test]
    fn arithmetic() {
        let a = m("x[1,1]*y[2,1]");
        let b = m("x[1,1]^2");
        assert_eq!(a.mul(&b), m("x[1,1]^3*y[2,1]"));
        assert_eq!(m("x[1,1]").quotient_of(&a), Some(m("y[2,1]")));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.reduce_var(VarId::y(2, 1)), Some(m("x[1,1]")));
        assert_eq!(a.to_string(), "x[1,1]*y[2,1]");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn split_by_family() {
        let a = m("x[1,1]*beta[2,1]^2*y[1,1]");
        let (inside, outside) = a.split(&[Family::Beta]);
        assert_eq!(inside, m("beta[2,1]^2"));
        assert_eq!(outside, m("x[1,1]*y[1,1]"));
    }
}
