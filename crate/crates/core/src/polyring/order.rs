//! The graded lexicographic order on `y`-monomials used by the leading-term
//! argument: `y11 > y21 > … > yn1 > y12 > y22 > …`, i.e. a variable is larger
//! when its column is smaller, and within a column when its row is smaller.

use std::cmp::Ordering;

use super::integer::Integer;
use super::monomial::{graded_lex, Monomial};
use super::poly::Polynomial;
use super::var::Family;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct YOrder;

impl YOrder {
    /// `(column, row)`: smaller keys are larger variables.
    fn keyed(m: &Monomial) -> Result<Vec<((usize, usize), u32)>> {
        let mut out = Vec::with_capacity(m.vars().len());
        for &(v, e) in m.vars() {
            if v.family() != Family::Y {
                return Err(Error::UnorderedVariable(v.to_string()));
            }
            out.push(((v.j(), v.i()), e));
        }
        out.sort_unstable_by_key(|p| p.0);
        Ok(out)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        Ok(graded_lex(&Self::keyed(a)?, &Self::keyed(b)?))
    }

    pub fn leading_monomial(&self, p: &Polynomial) -> Result<(Monomial, Integer)> {
        let mut best: Option<(Vec<((usize, usize), u32)>, &Monomial, &Integer)> = None;
        for (m, c) in p.terms() {
            let k = Self::keyed(m)?;
            let better = match &best {
                None => true,
                Some((bk, _, _)) => graded_lex(&k, bk) == Ordering::Greater,
            };
            if better {
                best = Some((k, m, c));
            }
        }
        best.map(|(_, m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }
}

pub fn compare(a: &Monomial, b: &Monomial, order: &YOrder) -> Result<Ordering> {
    order.compare(a, b)
}

pub fn leading_monomial(p: &Polynomial, order: &YOrder) -> Result<(Monomial, Integer)> {
    order.leading_monomial(p)
}
