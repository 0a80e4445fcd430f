//! Machine checks: invariance under the raising operators, torus weights,
//! leading terms, and exact rank of the candidate basis.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hwv::{delta_at, delta_mt, delta_ty};
use crate::oracle::lr_coefficient;
use crate::polyring::{Family, Integer, Monomial, Polynomial, VarId, YOrder};
use crate::shapes::LRTriple;
use crate::tableaux::{enumerate_lr, monomial_big_e, monomial_e, monomial_e1, LRTableau};

/// `Σ_v σ(v) ∂p/∂v` over the variables `v` where `σ(v)` is defined.
fn shift_operator(p: &Polynomial, sigma: impl Fn(VarId) -> Option<VarId>) -> Polynomial {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        for &(v, e) in m.vars() {
            if let Some(w) = sigma(v) {
                let reduced = m.reduce_var(v).expect("v occurs in m");
                terms.push((reduced.mul(&Monomial::var(w)), c * &Integer::from(e)));
            }
        }
    }
    Polynomial::from_terms(terms)
}

/// `E_{ad} = Σ_b x_{ab} ∂/∂x_{db} + Σ_c y_{ac} ∂/∂y_{dc}`.
pub fn raising_operator_rows(p: &Polynomial, a: usize, d: usize, triple: &LRTriple) -> Result<Polynomial> {
    if !(1 <= a && a < d && d <= triple.n()) {
        return Err(Error::IndexError(format!(
            "E_({a},{d}) needs 1 <= a < d <= n = {}",
            triple.n()
        )));
    }
    Ok(shift_operator(p, row_shift(a, d)))
}

/// `R_{bd} = Σ_a v_{ab} ∂/∂v_{ad}` for `v` the `x` or `y` family.
pub fn raising_operator_cols(
    p: &Polynomial,
    family: Family,
    b: usize,
    d: usize,
    triple: &LRTriple,
) -> Result<Polynomial> {
    let bound = match family {
        Family::X => triple.k(),
        Family::Y => triple.ell(),
        other => {
            return Err(Error::IndexError(format!(
                "column operators act on x or y, not {}",
                other.name()
            )))
        }
    };
    if !(1 <= b && b < d && d <= bound) {
        return Err(Error::IndexError(format!(
            "R_({b},{d}) needs 1 <= b < d <= {bound}"
        )));
    }
    Ok(shift_operator(p, col_shift(family, b, d)))
}

/// Sort key for an `N`-byte packed monomial.
trait PackKey<const N: usize>: Ord + Copy {
    fn pack(bytes: [u8; N]) -> Self;
}

impl PackKey<16> for u128 {
    fn pack(bytes: [u8; 16]) -> Self {
        u128::from_be_bytes(bytes)
    }
}

impl PackKey<32> for (u128, u128) {
    fn pack(bytes: [u8; 32]) -> Self {
        let (hi, lo) = bytes.split_at(16);
        (
            u128::from_be_bytes(hi.try_into().unwrap()),
            u128::from_be_bytes(lo.try_into().unwrap()),
        )
    }
}

/// `p` with every monomial packed as its sorted list of variable indices
/// (one byte each, zero-padded) in `N` bytes, and `i64` coefficients. Only
/// built when every monomial has degree ≤ `N`, there are fewer than 255
/// variables, and the coefficients fit.
struct Packed<'a, const N: usize> {
    vars: Vec<VarId>,
    keys: Vec<([u8; N], u8)>,
    coeffs: Vec<i64>,
    source: &'a Polynomial,
}

impl<'a, const N: usize> Packed<'a, N> {
    fn new(p: &'a Polynomial, extra: &[VarId]) -> Option<Packed<'a, N>> {
        if p.total_degree().is_some_and(|d| d as usize > N) {
            return None;
        }
        let mut vars = p.variables();
        vars.extend_from_slice(extra);
        vars.sort();
        vars.dedup();
        if vars.len() >= 255 {
            return None;
        }
        let mut keys = Vec::with_capacity(p.len());
        let mut coeffs = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut bytes = [0u8; N];
            let mut len = 0;
            for &(v, e) in m.vars() {
                let b = vars.binary_search(&v).ok()? as u8 + 1;
                for _ in 0..e {
                    bytes[len] = b;
                    len += 1;
                }
            }
            keys.push((bytes, len as u8));
            coeffs.push(c.to_i64()?);
        }
        Some(Packed { vars, keys, coeffs, source: p })
    }

    /// Whether `Σ_v σ(v) ∂p/∂v` vanishes, by sorting the image terms.
    fn annihilated_by<K: PackKey<N>>(&self, sigma: &impl Fn(VarId) -> Option<VarId>) -> bool {
        let target: Vec<Option<u8>> = self
            .vars
            .iter()
            .map(|&v| sigma(v).map(|w| self.vars.binary_search(&w).expect("images collected") as u8 + 1))
            .collect();
        let mut image: Vec<(K, i64)> = Vec::new();
        for ((bytes, len), &c) in self.keys.iter().zip(&self.coeffs) {
            let len = *len as usize;
            let mut i = 0;
            while i < len {
                let b = bytes[i];
                let mut e = 1;
                while i + e < len && bytes[i + e] == b {
                    e += 1;
                }
                if let Some(w) = target[b as usize - 1] {
                    let mut key = *bytes;
                    // replace one copy of b by w and restore the order
                    let mut pos = i;
                    key[pos] = w;
                    while pos + 1 < len && key[pos + 1] < key[pos] {
                        key.swap(pos, pos + 1);
                        pos += 1;
                    }
                    while pos > 0 && key[pos - 1] > key[pos] {
                        key.swap(pos, pos - 1);
                        pos -= 1;
                    }
                    let Some(coeff) = c.checked_mul(e as i64) else {
                        return shift_operator(self.source, sigma).is_zero();
                    };
                    image.push((K::pack(key), coeff));
                }
                i += e;
            }
        }
        image.sort_unstable_by_key(|t| t.0);
        let mut overflow = false;
        let zero = image.chunk_by(|a, b| a.0 == b.0).all(|group| {
            let mut sum = 0i64;
            for &(_, c) in group {
                match sum.checked_add(c) {
                    Some(v) => sum = v,
                    None => {
                        overflow = true;
                        return false;
                    }
                }
            }
            sum == 0
        });
        if overflow {
            return shift_operator(self.source, sigma).is_zero();
        }
        zero
    }
}

fn row_shift(a: usize, d: usize) -> impl Fn(VarId) -> Option<VarId> {
    move |v| match v.family() {
        Family::X | Family::Y if v.i() == d => Some(VarId::new(v.family(), a, v.j())),
        _ => None,
    }
}

fn col_shift(family: Family, b: usize, d: usize) -> impl Fn(VarId) -> Option<VarId> {
    move |v| (v.family() == family && v.j() == d).then(|| VarId::new(family, v.i(), b))
}

/// The first simple-root raising operator that does not kill `p`.
pub fn hwv_failure(p: &Polynomial, triple: &LRTriple) -> Option<String> {
    let mut ops: Vec<(String, Box<dyn Fn(VarId) -> Option<VarId>>)> = Vec::new();
    for a in 1..triple.n() {
        ops.push((format!("E_({a},{})", a + 1), Box::new(row_shift(a, a + 1))));
    }
    for (fam, bound) in [(Family::X, triple.k()), (Family::Y, triple.ell())] {
        for b in 1..bound {
            ops.push((format!("R^{}_({b},{})", fam.name(), b + 1), Box::new(col_shift(fam, b, b + 1))));
        }
    }
    // every image variable is one of the operators' targets
    let mut extra = Vec::new();
    for v in p.variables() {
        extra.extend(ops.iter().filter_map(|(_, s)| s(v)));
    }
    let kills: Box<dyn Fn(&dyn Fn(VarId) -> Option<VarId>) -> bool + '_> =
        if let Some(pk) = Packed::<16>::new(p, &extra) {
            Box::new(move |s| pk.annihilated_by::<u128>(&s))
        } else if let Some(pk) = Packed::<32>::new(p, &extra) {
            Box::new(move |s| pk.annihilated_by::<(u128, u128)>(&s))
        } else {
            Box::new(|s| shift_operator(p, s).is_zero())
        };
    ops.into_iter().find(|(_, sigma)| !kills(sigma)).map(|(name, _)| name)
}

/// Annihilated by every `E_{a,a+1}` and every `R_{b,b+1}` in both families.
pub fn check_hwv(p: &Polynomial, triple: &LRTriple) -> bool {
    hwv_failure(p, triple).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightProfile {
    pub row_degrees: Vec<usize>,
    pub x_col_degrees: Vec<usize>,
    pub y_col_degrees: Vec<usize>,
}

impl WeightProfile {
    fn of(m: &Monomial) -> WeightProfile {
        let mut w = WeightProfile {
            row_degrees: Vec::new(),
            x_col_degrees: Vec::new(),
            y_col_degrees: Vec::new(),
        };
        let bump = |v: &mut Vec<usize>, i: usize, e: u32| {
            if v.len() < i {
                v.resize(i, 0);
            }
            v[i - 1] += e as usize;
        };
        for &(v, e) in m.vars() {
            match v.family() {
                Family::X => {
                    bump(&mut w.row_degrees, v.i(), e);
                    bump(&mut w.x_col_degrees, v.j(), e);
                }
                Family::Y => {
                    bump(&mut w.row_degrees, v.i(), e);
                    bump(&mut w.y_col_degrees, v.j(), e);
                }
                _ => {}
            }
        }
        w
    }

    /// `(F^t, D^t, E^t)`, the weight every `Δ` for this triple must have.
    pub fn expected(triple: &LRTriple) -> WeightProfile {
        WeightProfile {
            row_degrees: triple.ft().parts().to_vec(),
            x_col_degrees: triple.dt().parts().to_vec(),
            y_col_degrees: triple.et().parts().to_vec(),
        }
    }
}

/// The common multidegree of all terms in `x`/`y` (`α`, `β` ignored).
pub fn weight_profile(p: &Polynomial) -> Result<WeightProfile> {
    let mut terms = p.terms().iter();
    let (first, _) = terms.next().ok_or(Error::ZeroPolynomial)?;
    let w = WeightProfile::of(first);
    // compare in place against the first profile; allocate only on failure
    let (mut rows, mut xs, mut ys) = (Vec::new(), Vec::new(), Vec::new());
    for (m, _) in terms {
        rows.clear();
        rows.resize(w.row_degrees.len(), 0usize);
        xs.clear();
        xs.resize(w.x_col_degrees.len(), 0usize);
        ys.clear();
        ys.resize(w.y_col_degrees.len(), 0usize);
        let mut fits = true;
        for &(v, e) in m.vars() {
            let (row, col) = (v.i().wrapping_sub(1), v.j().wrapping_sub(1));
            let cols = match v.family() {
                Family::X => &mut xs,
                Family::Y => &mut ys,
                _ => continue,
            };
            match (rows.get_mut(row), cols.get_mut(col)) {
                (Some(r), Some(c)) => {
                    *r += e as usize;
                    *c += e as usize;
                }
                _ => fits = false,
            }
        }
        if !fits || rows != w.row_degrees || xs != w.x_col_degrees || ys != w.y_col_degrees {
            let v = WeightProfile::of(m);
            return Err(Error::NotHomogeneous(format!(
                "{first} has {w:?} but {m} has {v:?}"
            )));
        }
    }
    Ok(w)
}

/// The largest monomial of `δ_{T,Y}` in the `y`-order is `e(T)`, with
/// coefficient `±1`.
pub fn check_leading_term(triple: &LRTriple, t: &LRTableau) -> Result<bool> {
    let d = delta_ty(triple, t)?;
    let (lm, c) = YOrder.leading_monomial(&d)?;
    Ok(lm == monomial_e(t)? && c.abs().is_one())
}

/// `e_1(T)` divides `e(T)`, the quotient has no `y[·,1]`, and `e_1(T)`
/// divides the leading monomial of `δ_{T,Y}`.
pub fn check_e1_factorization(triple: &LRTriple, t: &LRTableau) -> Result<bool> {
    let e = monomial_e(t)?;
    let e1 = monomial_e1(t)?;
    let Some(q) = e1.quotient_of(&e) else {
        return Ok(false);
    };
    let clean = q.vars().iter().all(|(v, _)| v.j() != 1);
    let (lm, _) = YOrder.leading_monomial(&delta_ty(triple, t)?)?;
    Ok(clean && e1.divides(&lm))
}

/// Rank over `Q` of the coefficient vectors of `polys` (indexed by the union
/// of their monomials), by fraction-free elimination on sparse rows.
pub fn rank(polys: &[Polynomial]) -> usize {
    // every polynomial is sorted the same way, so a k-way merge numbers the
    // union of monomials; the monomials themselves are no longer needed
    let mut rows: Vec<Vec<(u32, Integer)>> = vec![Vec::new(); polys.len()];
    let mut pos = vec![0usize; polys.len()];
    let mut next = 0u32;
    loop {
        let mut best: Option<&Monomial> = None;
        for (p, &i) in polys.iter().zip(&pos) {
            if let Some((m, _)) = p.terms().get(i) {
                if best.is_none_or(|b| m.cmp(b) == Ordering::Greater) {
                    best = Some(m);
                }
            }
        }
        let Some(best) = best.cloned() else { break };
        for (k, p) in polys.iter().enumerate() {
            if let Some((m, c)) = p.terms().get(pos[k]) {
                if *m == best {
                    rows[k].push((next, c.clone()));
                    pos[k] += 1;
                }
            }
        }
        next += 1;
    }
    sparse_bareiss_rank(rows)
}

/// Rows sorted by column index, no zeros.
pub fn sparse_bareiss_rank(mut rows: Vec<Vec<(u32, Integer)>>) -> usize {
    let mut prev = Integer::ONE;
    let mut rank = 0;
    loop {
        rows.retain(|r| !r.is_empty());
        let Some(pi) = (0..rows.len()).min_by_key(|&i| rows[i][0].0) else {
            return rank;
        };
        let pivot_row = rows.swap_remove(pi);
        let (col, piv) = (pivot_row[0].0, pivot_row[0].1.clone());
        for r in rows.iter_mut() {
            let a = match r.binary_search_by_key(&col, |e| e.0) {
                Ok(i) => r[i].1.clone(),
                Err(_) => Integer::ZERO,
            };
            *r = combine(r, &piv, &pivot_row, &a, &prev);
        }
        prev = piv;
        rank += 1;
    }
}

/// `(piv · r − a · s) / prev`, entrywise and exact.
fn combine(
    r: &[(u32, Integer)],
    piv: &Integer,
    s: &[(u32, Integer)],
    a: &Integer,
    prev: &Integer,
) -> Vec<(u32, Integer)> {
    let mut out = Vec::with_capacity(r.len().max(s.len()));
    let (mut i, mut j) = (0, 0);
    let mut push = |col: u32, v: Integer| {
        if !v.is_zero() {
            out.push((col, v.div_exact(prev)));
        }
    };
    while i < r.len() || j < s.len() {
        let ci = r.get(i).map(|e| e.0);
        let cj = if a.is_zero() { None } else { s.get(j).map(|e| e.0) };
        match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                push(x, &(piv * &r[i].1) - &(a * &s[j].1));
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                push(x, piv * &r[i].1);
                i += 1;
            }
            (Some(x), None) => {
                push(x, piv * &r[i].1);
                i += 1;
            }
            (_, Some(y)) => {
                push(y, -(a * &s[j].1));
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

/// Rank of a small dense integer matrix, same elimination.
pub fn dense_rank(m: &[Vec<Integer>]) -> usize {
    sparse_bareiss_rank(
        m.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j as u32, v.clone()))
                    .collect()
            })
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub lr_count: usize,
    pub oracle_count: u64,
    /// `𝓔(T)` for each tableau, in enumeration order.
    pub leading_monomials: Vec<String>,
    pub leading_distinct: bool,
    /// Each `Δ_{M(T)}` contains `𝓔(T)` with coefficient `±1`.
    pub leading_present: bool,
    pub rank: usize,
    pub pass: bool,
}

/// Everything needed to decide whether `{Δ_{M(T)}}` is a basis of the right
/// size, given the basis polynomials already computed.
pub fn basis_report(triple: &LRTriple, tableaux: &[LRTableau], deltas: &[Polynomial]) -> Result<BasisReport> {
    let oracle_count = lr_coefficient(triple)?;
    let mut leading = Vec::with_capacity(tableaux.len());
    let mut present = true;
    for (t, d) in tableaux.iter().zip(deltas) {
        let big_e = monomial_big_e(t)?;
        present &= d.coefficient(&big_e).abs().is_one();
        leading.push(big_e);
    }
    let mut sorted = leading.clone();
    sorted.sort();
    sorted.dedup();
    let leading_distinct = sorted.len() == leading.len();
    let r = rank(deltas);
    let lr_count = tableaux.len();
    Ok(BasisReport {
        lr_count,
        oracle_count,
        leading_monomials: leading.iter().map(|m| m.to_string()).collect(),
        leading_distinct,
        leading_present: present,
        rank: r,
        pass: lr_count as u64 == oracle_count && r == lr_count && leading_distinct && present,
    })
}

pub fn check_basis(triple: &LRTriple) -> Result<BasisReport> {
    let tabs = enumerate_lr(triple);
    let deltas = tabs
        .iter()
        .map(|t| delta_mt(triple, t))
        .collect::<Result<Vec<_>>>()?;
    basis_report(triple, &tabs, &deltas)
}

/// `[L | e_{r+1} … e_t]`, the lower-triangular `t × t` completion of `L`.
pub fn complete_lower(l: &[Vec<Integer>], t: usize) -> Vec<Vec<Integer>> {
    (0..t)
        .map(|i| {
            (0..t)
                .map(|j| match l[i].get(j) {
                    Some(v) => v.clone(),
                    None => Integer::from((i == j) as i64),
                })
                .collect()
        })
        .collect()
}

pub fn matmul(a: &[Vec<Integer>], b: &[Vec<Integer>], inner: usize, cols: usize) -> Vec<Vec<Integer>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Integer::ZERO, |acc, k| &acc + &(&row[k] * &b[k][j]))
                })
                .collect()
        })
        .collect()
}

fn identity_j(t: usize, r: usize) -> Vec<Vec<Integer>> {
    (0..t)
        .map(|i| (0..r).map(|j| Integer::from((i == j) as i64)).collect())
        .collect()
}

/// Both sides of the reduction identity at one point: `A = L·V` with `L`
/// lower triangular `t × r` and `V` unipotent upper triangular `r × r`.
/// The row operations that clear `L` act on whole superrows, so they move
/// `B` to `L̂·B` as well:
/// `Δ(L·V, L̂·B) = ∏_{i ≤ r} l_{ii}^{f_i} · Δ(J, B)`.
pub fn factorization_sides(
    triple: &LRTriple,
    l: &[Vec<Integer>],
    v: &[Vec<Integer>],
    b: &[Vec<Integer>],
    point: &dyn Fn(VarId) -> Integer,
) -> Result<(Integer, Integer)> {
    let (t, r, s) = (triple.t(), triple.r(), triple.s());
    let a = matmul(l, v, r, r);
    let lhat = complete_lower(l, t);
    let lb = matmul(&lhat, b, t, s);
    let lhs = delta_at(triple, &a, &lb, point)?;
    let scale = (0..r).fold(Integer::ONE, |acc, i| &acc * &l[i][i].pow(triple.f().part(i + 1) as u32));
    let rhs = &scale * &delta_at(triple, &identity_j(t, r), b, point)?;
    Ok((lhs, rhs))
}

/// The same identity with `B` left in place on the left-hand side.
pub fn factorization_sides_shared_b(
    triple: &LRTriple,
    l: &[Vec<Integer>],
    v: &[Vec<Integer>],
    b: &[Vec<Integer>],
    point: &dyn Fn(VarId) -> Integer,
) -> Result<(Integer, Integer)> {
    let (t, r) = (triple.t(), triple.r());
    let a = matmul(l, v, r, r);
    let lhs = delta_at(triple, &a, b, point)?;
    let scale = (0..r).fold(Integer::ONE, |acc, i| &acc * &l[i][i].pow(triple.f().part(i + 1) as u32));
    let rhs = &scale * &delta_at(triple, &identity_j(t, r), b, point)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hwv::{delta, CoeffSpec};
    use crate::shapes::Partition;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn tiny() -> LRTriple {
        LRTriple::minimal(p("1"), p("1"), p("2")).unwrap()
    }

    #[test]
    fn row_operators() {
        let t = tiny();
        let d = poly("+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]");
        assert!(raising_operator_rows(&d, 1, 2, &t).unwrap().is_zero());
        assert_eq!(raising_operator_rows(&poly("x[2,1]"), 1, 2, &t).unwrap(), poly("x[1,1]"));
        assert!(raising_operator_rows(&poly("+5"), 1, 2, &t).unwrap().is_zero());
        assert!(matches!(
            raising_operator_rows(&d, 2, 1, &t),
            Err(Error::IndexError(_))
        ));
    }

    #[test]
    fn column_operators() {
        let t = LRTriple::minimal(p("2,2"), p("1"), p("3,2")).unwrap();
        assert_eq!(
            raising_operator_cols(&poly("x[1,2]"), Family::X, 1, 2, &t).unwrap(),
            poly("x[1,1]")
        );
        let det2 = poly("+1*x[1,1]*x[2,2] -1*x[1,2]*x[2,1]");
        assert!(raising_operator_cols(&det2, Family::X, 1, 2, &t).unwrap().is_zero());
        let t2 = LRTriple::minimal(p("1"), p("2"), p("2,1")).unwrap();
        assert!(raising_operator_cols(&poly("x[1,1]"), Family::Y, 1, 2, &t2).unwrap().is_zero());
    }

    #[test]
    fn hwv_examples() {
        let t = tiny();
        let a = CoeffSpec::Numeric(vec![vec![Integer::from(-3)]]);
        let b = CoeffSpec::Numeric(vec![vec![Integer::from(5)]]);
        assert!(check_hwv(&delta(&t, &a, &b).unwrap(), &t));
        assert!(!check_hwv(&poly("x[2,1]"), &t));
    }

    #[test]
    fn packed_check_agrees_with_operator() {
        let t = LRTriple::minimal(p("2,1"), p("2"), p("3,2")).unwrap();
        let cases = [
            "+1*x[1,1]*x[2,2] -1*x[1,2]*x[2,1]",
            "x[2,1]^2*y[1,1]",
            "+2*x[1,1]*x[2,1] -1*x[1,1]^2*y[2,2]",
            "+1*y[2,1]*y[1,2] -1*y[1,1]*y[2,2]",
        ];
        for c in cases {
            let q = poly(c);
            let annihilates = |sigma: &dyn Fn(VarId) -> Option<VarId>| {
                let extra: Vec<VarId> = q.variables().into_iter().filter_map(sigma).collect();
                Packed::<16>::new(&q, &extra).unwrap().annihilated_by::<u128>(&sigma)
            };
            for a in 1..t.n() {
                let direct = raising_operator_rows(&q, a, a + 1, &t).unwrap().is_zero();
                assert_eq!(annihilates(&row_shift(a, a + 1)), direct, "{c} E_{a}");
            }
            for b in 1..t.k() {
                let direct = raising_operator_cols(&q, Family::X, b, b + 1, &t).unwrap().is_zero();
                assert_eq!(annihilates(&col_shift(Family::X, b, b + 1)), direct, "{c} R_{b}");
            }
        }
    }

    #[test]
    fn weights() {
        let w = weight_profile(&poly("x[1,1]")).unwrap();
        assert_eq!(w.row_degrees, vec![1]);
        assert_eq!(w.x_col_degrees, vec![1]);
        assert!(w.y_col_degrees.is_empty());
        assert!(matches!(
            weight_profile(&poly("x[1,1] +1*y[1,1]")),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[poly("x[1,1]"), poly("+2*x[1,1]")]), 1);
        assert_eq!(rank(&[poly("x[1,1] +1*y[1,1]"), poly("x[1,1] -1*y[1,1]"), poly("y[1,1]")]), 2);
        assert_eq!(rank(&[]), 0);
        let m: Vec<Vec<Integer>> = [[2, 4, 1], [1, 2, 3], [3, 6, 4]]
            .iter()
            .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
            .collect();
        assert_eq!(dense_rank(&m), 2);
    }

    #[test]
    fn tiny_basis() {
        let r = check_basis(&tiny()).unwrap();
        assert_eq!((r.lr_count, r.oracle_count, r.rank), (1, 1, 1));
        assert!(r.pass && r.leading_present);
        let f_eq_d = LRTriple::minimal(p("2,1"), p("-"), p("2,1")).unwrap();
        assert!(check_basis(&f_eq_d).unwrap().pass);
    }
}
