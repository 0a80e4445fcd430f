use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::integer::Integer;
use super::monomial::Monomial;
use super::var::{Family, VarId};
use crate::error::{Error, Result};

/// Sparse polynomial with exact integer coefficients.
///
/// Terms are kept strictly descending in the canonical monomial order with
/// no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Integer)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Integer::ONE)
    }

    pub fn constant(c: impl Into<Integer>) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<Integer>) -> Polynomial {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![(m, c)],
        }
    }

    /// Sorts and combines arbitrary terms.
    pub fn from_terms(mut terms: Vec<(Monomial, Integer)>) -> Polynomial {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Integer)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += &c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// Trusts that `terms` is already canonical.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Integer)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Integer)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Integer)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(&Monomial, &Integer)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Integer {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Integer::ZERO,
        }
    }

    pub fn variables(&self) -> Vec<VarId> {
        // few distinct variables, many terms: insert into a small sorted vec
        let mut vs: Vec<VarId> = Vec::new();
        for (m, _) in &self.terms {
            for &(v, _) in m.vars() {
                if let Err(i) = vs.binary_search(&v) {
                    vs.insert(i, v);
                }
            }
        }
        vs
    }

    pub fn scale(&self, c: &Integer) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplication by one term; monomial orders are multiplicative, so
    /// the result stays sorted.
    pub fn mul_term(&self, m: &Monomial, c: &Integer) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        merge(&self.terms, &other.terms, false)
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        merge(&self.terms, &other.terms, true)
    }

    /// Sum of many polynomials by balanced pairwise merging.
    pub fn sum(mut parts: Vec<Polynomial>) -> Polynomial {
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len().div_ceil(2));
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                next.push(match it.next() {
                    Some(b) => merge_owned(a.terms, b.terms),
                    None => a,
                });
            }
            parts = next;
        }
        parts.pop().unwrap_or_default()
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        if let Some((m, c)) = other.as_term() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.as_term() {
            return other.mul_term(m, c);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Polynomial::from_terms(terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn partial_derivative(&self, v: VarId) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(v);
                (e > 0).then(|| (m.reduce_var(v).unwrap(), c * &Integer::from(e)))
            })
            .collect();
        // division by a variable preserves order among divisible monomials
        Polynomial::from_sorted_unchecked(terms)
    }

    /// Exact value at an integer point.
    pub fn evaluate(&self, assignment: &HashMap<VarId, Integer>) -> Result<Integer> {
        self.evaluate_with(|v| assignment.get(&v).cloned())
    }

    pub fn evaluate_with(&self, value: impl Fn(VarId) -> Option<Integer>) -> Result<Integer> {
        let mut cache: HashMap<VarId, Integer> = HashMap::new();
        let mut total = Integer::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.vars() {
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v).ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                t = &t * &x.pow(e);
            }
            total += &t;
        }
        Ok(total)
    }

    /// Substitutes integers for the variables on which `value` returns
    /// `Some`, leaving the others symbolic.
    pub fn specialize(&self, value: impl Fn(VarId) -> Option<Integer>) -> Polynomial {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.vars() {
                match value(v) {
                    Some(x) => coeff = &coeff * &x.pow(e),
                    None => rest.push((v, e)),
                }
            }
            if !coeff.is_zero() {
                terms.push((Monomial::from_sorted(rest), coeff));
            }
        }
        Polynomial::from_terms(terms)
    }

    /// Groups terms by their factor in `families`: `p = Σ_μ q_μ · μ`.
    pub fn expand_by(&self, families: &[Family]) -> BTreeMap<Monomial, Polynomial> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, Integer)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(families);
            groups.entry(inside).or_default().push((outside, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, v)| (k, Polynomial::from_terms(v)))
            .collect()
    }

    /// The coefficient `q_m` of `m` when `p` is viewed as a polynomial in the
    /// variables of `families` only.
    pub fn coefficient_of(&self, m: &Monomial, families: &[Family]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, c)| {
                let (inside, outside) = mm.split(families);
                (&inside == m).then(|| (outside, c.clone()))
            })
            .collect();
        Polynomial::from_terms(terms)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }
}

fn merge(a: &[(Monomial, Integer)], b: &[(Monomial, Integer)], negate_b: bool) -> Polynomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Integer| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), nb(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|t| (t.0.clone(), nb(&t.1))));
    Polynomial { terms: out }
}

fn merge_owned(a: Vec<(Monomial, Integer)>, b: Vec<(Monomial, Integer)>) -> Polynomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    while let (Some(x), Some(y)) = (a.peek(), b.peek()) {
        match x.0.cmp(&y.0) {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let (m, c) = a.next().unwrap();
                let c = c + &b.next().unwrap().1;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out.extend(a);
    out.extend(b);
    Polynomial { terms: out }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_ref(rhs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_ref(rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_ref(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        self.add_ref(&rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self.sub_ref(&rhs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        self.mul_ref(&rhs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(m, 1)
    }
}

impl From<Integer> for Polynomial {
    fn from(c: Integer) -> Self {
        Polynomial::constant(c)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: `+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]`; zero is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if !c.is_negative() {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    /// Reads the canonical text form back. Terms are whitespace separated,
    /// each a signed integer optionally followed by `*monomial`; a bare
    /// monomial such as `x[1,1]` has coefficient 1.
    fn from_str(s: &str) -> Result<Polynomial> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Polynomial::zero());
        }
        let mut terms = Vec::new();
        for tok in s.split_whitespace() {
            let (sign, body) = match tok.as_bytes()[0] {
                b'+' => (false, &tok[1..]),
                b'-' => (true, &tok[1..]),
                _ => (false, tok),
            };
            let (coeff, mono) = match body.split_once('*') {
                Some((c, m)) if c.bytes().all(|b| b.is_ascii_digit()) => {
                    (c.parse::<Integer>()?, m.parse::<Monomial>()?)
                }
                _ if body.bytes().all(|b| b.is_ascii_digit()) => {
                    (body.parse::<Integer>()?, Monomial::one())
                }
                _ => (Integer::ONE, body.parse::<Monomial>()?),
            };
            terms.push((mono, if sign { -coeff } else { coeff }));
        }
        Ok(Polynomial::from_terms(terms))
    }
}
