//! Littlewood–Richardson coefficients the slow way: multiply Schur
//! polynomials in finitely many variables and read off the Schur expansion.
//! Nothing here knows about lattice words, so agreement with
//! [`crate::tableaux::enumerate_lr`] is independent evidence.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::polyring::{Family, Integer, Monomial, Polynomial, VarId};
use crate::shapes::{partitions_of, LRTriple, Partition};

/// Exponent vector `(e_1, …, e_n)` of `z_1^{e_1} ⋯ z_n^{e_n}`.
type Dense = HashMap<Vec<u8>, u64>;

/// `Σ_μ c_μ s_μ`, positive coefficients only.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn get(&self, shape: &Partition) -> u64 {
        self.coeffs.get(shape).copied().unwrap_or(0)
    }
}

/// Schur polynomials by the branching rule
/// `s_λ(z_1..z_n) = Σ_{λ/ν horizontal strip} s_ν(z_1..z_{n−1}) z_n^{|λ/ν|}`,
/// which is SSYT enumeration by the position of the largest entry.
#[derive(Default)]
struct SchurCache {
    memo: HashMap<(Vec<usize>, usize), Dense>,
}

impl SchurCache {
    fn get(&mut self, lambda: &[usize], n: usize) -> Dense {
        if let Some(d) = self.memo.get(&(lambda.to_vec(), n)) {
            return d.clone();
        }
        let mut out = Dense::new();
        if n == 0 {
            if lambda.is_empty() {
                out.insert(Vec::new(), 1);
            }
        } else if lambda.len() <= n {
            let size: usize = lambda.iter().sum();
            for nu in horizontal_strips_inside(lambda) {
                if nu.len() > n - 1 {
                    continue;
                }
                let k = (size - nu.iter().sum::<usize>()) as u8;
                for (exps, c) in self.get(&nu, n - 1) {
                    let mut e = exps.clone();
                    e.push(k);
                    *out.entry(e).or_insert(0) += c;
                }
            }
        }
        self.memo.insert((lambda.to_vec(), n), out.clone());
        out
    }
}

/// All `ν` with `λ/ν` a horizontal strip: `λ_{i+1} ≤ ν_i ≤ λ_i`.
fn horizontal_strips_inside(lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(lambda.len());
    fn go(i: usize, lambda: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == lambda.len() {
            let mut nu = cur.clone();
            while nu.last() == Some(&0) {
                nu.pop();
            }
            out.push(nu);
            return;
        }
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for v in lo..=lambda[i] {
            cur.push(v);
            go(i + 1, lambda, cur, out);
            cur.pop();
        }
    }
    go(0, lambda, &mut cur, &mut out);
    out
}

fn dense_to_poly(d: &Dense) -> Polynomial {
    Polynomial::from_terms(
        d.iter()
            .map(|(e, &c)| {
                let m = Monomial::from_pairs(
                    e.iter().enumerate().map(|(i, &k)| (VarId::z(i + 1), k as u32)),
                );
                (m, Integer::from(c as i64))
            })
            .collect(),
    )
}

pub fn schur_polynomial(lambda: &Partition, nvars: usize) -> Result<Polynomial> {
    if lambda.depth() > nvars {
        return Err(Error::TooFewVariables {
            shape: lambda.to_string(),
            nvars,
        });
    }
    Ok(dense_to_poly(&SchurCache::default().get(lambda.parts(), nvars)))
}

/// Kostka numbers `K_{μλ}`: SSYT of shape `μ` and content `λ`, by removing
/// the horizontal strip of largest entries.
#[derive(Default)]
struct Kostka {
    memo: HashMap<(Vec<usize>, Vec<usize>), u64>,
}

impl Kostka {
    fn get(&mut self, shape: &[usize], content: &[usize]) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return shape.is_empty() as u64;
        };
        let key = (shape.to_vec(), content.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let size: usize = shape.iter().sum();
        let mut total = 0;
        if size >= last {
            for nu in horizontal_strips_inside(shape) {
                if size - nu.iter().sum::<usize>() == last {
                    total += self.get(&nu, rest);
                }
            }
        }
        self.memo.insert(key, total);
        total
    }
}

/// Peels `p = Σ c_μ s_μ` from its coefficients on dominant monomials
/// (`z^λ` with `λ` a partition), lex-greatest first:
/// `[z^λ] p = Σ_μ c_μ K_{μλ}` and `K` is unitriangular.
fn peel(dominant: BTreeMap<Partition, Integer>) -> Result<SchurExpansion> {
    let mut kostka = Kostka::default();
    let mut found: Vec<(Partition, Integer)> = Vec::new();
    for (lambda, raw) in dominant.into_iter().rev() {
        let mut c = raw;
        for (mu, cm) in &found {
            if mu.size() == lambda.size() {
                let k = kostka.get(mu.parts(), lambda.parts());
                if k != 0 {
                    c = &c - &(cm * &Integer::from(k as i64));
                }
            }
        }
        if c.is_negative() {
            return Err(Error::NegativeCoefficient {
                shape: lambda.to_string(),
                coeff: c.to_string(),
            });
        }
        if !c.is_zero() {
            found.push((lambda, c));
        }
    }
    let coeffs = found
        .into_iter()
        .map(|(l, c)| {
            let v = c.to_i64().filter(|&v| v >= 0).ok_or(Error::NegativeCoefficient {
                shape: l.to_string(),
                coeff: c.to_string(),
            })?;
            Ok((l, v as u64))
        })
        .collect::<Result<_>>()?;
    Ok(SchurExpansion { coeffs })
}

fn to_dense_integer(p: &Polynomial, nvars: usize) -> Result<HashMap<Vec<u8>, Integer>> {
    let mut out = HashMap::new();
    for (m, c) in p.terms() {
        let mut e = vec![0u8; nvars];
        for &(v, k) in m.vars() {
            if v.family() != Family::Z || v.i() == 0 || v.i() > nvars {
                return Err(Error::TooFewVariables {
                    shape: format!("polynomial in {v}"),
                    nvars,
                });
            }
            e[v.i() - 1] = k as u8;
        }
        out.insert(e, c.clone());
    }
    Ok(out)
}

/// Schur expansion of a symmetric polynomial in `z[1..=nvars]`.
pub fn expand_in_schur(p: &Polynomial, nvars: usize) -> Result<SchurExpansion> {
    let dense = to_dense_integer(p, nvars)?;
    for i in 0..nvars.saturating_sub(1) {
        for (e, c) in &dense {
            let mut s = e.clone();
            s.swap(i, i + 1);
            if dense.get(&s) != Some(c) {
                return Err(Error::NotSymmetric(i + 1, i + 2));
            }
        }
    }
    let dominant = dense
        .into_iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| {
            let parts: Vec<usize> = e.into_iter().map(usize::from).collect();
            (Partition::new(parts).expect("weakly decreasing"), c)
        })
        .collect();
    peel(dominant)
}

/// Schur expansion of `s_μ · s_ν` in `nvars` variables, reading only the
/// dominant coefficients of the product.
pub fn schur_product(mu: &Partition, nu: &Partition, nvars: usize) -> Result<SchurExpansion> {
    for shape in [mu, nu] {
        if shape.depth() > nvars {
            return Err(Error::TooFewVariables {
                shape: shape.to_string(),
                nvars,
            });
        }
    }
    let mut cache = SchurCache::default();
    let a = cache.get(mu.parts(), nvars);
    let b = cache.get(nu.parts(), nvars);
    let mut dominant = BTreeMap::new();
    for lambda in partitions_of(mu.size() + nu.size()) {
        if lambda.depth() > nvars {
            continue;
        }
        let mut target = lambda.parts().to_vec();
        target.resize(nvars, 0);
        let mut total: u64 = 0;
        for (ea, ca) in &a {
            let rest: Option<Vec<u8>> = ea
                .iter()
                .zip(&target)
                .map(|(&x, &t)| (t as u8).checked_sub(x))
                .collect();
            if let Some(rest) = rest {
                if let Some(cb) = b.get(&rest) {
                    total += ca * cb;
                }
            }
        }
        if total != 0 {
            dominant.insert(lambda, Integer::from(total as i64));
        }
    }
    peel(dominant)
}

/// `c^{F^t}_{D^t,E^t}` from `s_{D^t} · s_{E^t}` in `max(depth F^t, depth D^t,
/// depth E^t)` variables.
pub fn lr_coefficient(triple: &LRTriple) -> Result<u64> {
    let (dt, et, ft) = (triple.dt(), triple.et(), triple.ft());
    let nvars = ft.depth().max(dt.depth()).max(et.depth()).max(1);
    lr_coefficient_in(&dt, &et, &ft, nvars)
}

pub fn lr_coefficient_in(dt: &Partition, et: &Partition, ft: &Partition, nvars: usize) -> Result<u64> {
    if ft.depth() > nvars {
        return Err(Error::TooFewVariables {
            shape: ft.to_string(),
            nvars,
        });
    }
    Ok(schur_product(dt, et, nvars)?.get(ft))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(
            schur_polynomial(&p("1"), 2).unwrap(),
            "+1*z[1] +1*z[2]".parse().unwrap()
        );
        assert_eq!(
            schur_polynomial(&p("1,1"), 2).unwrap(),
            "z[1]*z[2]".parse().unwrap()
        );
        let s21 = schur_polynomial(&p("2,1"), 3).unwrap();
        let total: i64 = s21.terms().iter().map(|t| t.1.to_i64().unwrap()).sum();
        assert_eq!(total, 8);
        assert_eq!(s21.len(), 7);
        assert!(expand_in_schur(&s21, 3).is_ok());
        assert!(matches!(
            schur_polynomial(&p("1,1,1"), 2),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn expansions() {
        let s1 = schur_polynomial(&p("1"), 2).unwrap();
        let e = expand_in_schur(&(&s1 * &s1), 2).unwrap();
        assert_eq!(e.coeffs, [(p("2"), 1), (p("1,1"), 1)].into_iter().collect());
        assert_eq!(expand_in_schur(&s1, 2).unwrap().coeffs, [(p("1"), 1)].into_iter().collect());
        let lopsided: Polynomial = "z[1]".parse().unwrap();
        assert_eq!(expand_in_schur(&lopsided, 2), Err(Error::NotSymmetric(1, 2)));
    }

    #[test]
    fn product_path_matches_full_expansion() {
        let (a, b) = (p("2,1"), p("2,1"));
        let full = &schur_polynomial(&a, 4).unwrap() * &schur_polynomial(&b, 4).unwrap();
        assert_eq!(expand_in_schur(&full, 4).unwrap(), schur_product(&a, &b, 4).unwrap());
    }

    #[test]
    fn running_example_coefficient() {
        let t = crate::tableaux::fixtures::running();
        assert_eq!(lr_coefficient(&t).unwrap(), 4);
        assert_eq!(lr_coefficient_in(&t.dt(), &t.et(), &t.ft(), 7).unwrap(), 4);
        let tiny = LRTriple::minimal(p("1"), p("1"), p("2")).unwrap();
        assert_eq!(lr_coefficient(&tiny).unwrap(), 1);
    }

    #[test]
    fn kostka_numbers() {
        let mut k = Kostka::default();
        assert_eq!(k.get(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(k.get(&[3], &[1, 1, 1]), 1);
        assert_eq!(k.get(&[1, 1, 1], &[3]), 0);
        assert_eq!(k.get(&[3, 2], &[2, 2, 1]), 2);
    }
}
