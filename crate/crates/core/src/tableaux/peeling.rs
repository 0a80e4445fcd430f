use std::fmt;

use serde_json::{json, Value};

use super::{check_lr1_filling, check_lr2_filling, is_lr, Filling, LRTableau};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, VarId};
use crate::shapes::{LRTriple, Partition};

/// The standard peeling of an LR tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelingTrace {
    /// `strips[h - 1]` lists `(row, col, entry)` for the cells `C_1(1), C_1(2), …`
    /// removed at stage `h`; entry `c` sits at position `c - 1`.
    pub strips: Vec<Vec<(usize, usize, usize)>>,
    /// Shape of the banal tableau assembled from the strips (its columns are
    /// the strips).
    pub banal_shape: Partition,
    /// What is left after each stage; the last one is empty.
    pub remainders: Vec<Filling>,
}

impl PeelingTrace {
    /// Column of `F^t` that received position `pos` (1-based) of banal
    /// column `h`.
    pub fn column_assignment(&self, h: usize, pos: usize) -> Option<usize> {
        self.strips.get(h.checked_sub(1)?)?.get(pos.checked_sub(1)?).map(|c| c.1)
    }

    /// Within every strip the cell holding `c − 1` is strictly above and
    /// weakly right of the cell holding `c`.
    pub fn strips_are_vertical(&self) -> bool {
        self.strips.iter().all(|s| {
            s.iter().enumerate().all(|(k, c)| c.2 == k + 1)
                && s.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 >= w[1].1)
        })
    }

    pub fn remainders_are_lr(&self) -> bool {
        self.remainders
            .iter()
            .all(|r| check_lr1_filling(r) && check_lr2_filling(r))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "strips": self.strips.iter().map(|s| s.iter().map(|&(a, j, e)| json!([a, j, e])).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "banal_shape": self.banal_shape,
        })
    }
}

/// Repeatedly removes the cells `C_1(1), …, C_1(ℓ_0)`, where `ℓ_0` is the
/// largest remaining entry and `C_1(h)` is the rightmost `h` in the topmost
/// row that contains an `h`.
pub fn standard_peeling(t: &LRTableau) -> Result<PeelingTrace> {
    if !is_lr(t) {
        return Err(Error::NotLR(t.to_string()));
    }
    let mut rest = t.filling();
    let mut strips = Vec::new();
    let mut remainders = Vec::new();
    while let Some(&top) = rest.values().max() {
        let mut strip = Vec::with_capacity(top);
        for h in 1..=top {
            let cell = rest
                .iter()
                .filter(|(_, &e)| e == h)
                .map(|(&k, _)| k)
                .min_by_key(|&(a, j)| (a, std::cmp::Reverse(j)))
                .ok_or_else(|| Error::NotLR(format!("value {h} missing while peeling {t}")))?;
            strip.push((cell.0, cell.1, h));
        }
        for &(a, j, _) in &strip {
            rest.remove(&(a, j));
        }
        strips.push(strip);
        remainders.push(rest.clone());
    }
    let lengths = Partition::new(strips.iter().map(Vec::len).collect::<Vec<_>>())
        .map_err(|_| Error::NotLR(format!("strip lengths increase while peeling {t}")))?;
    Ok(PeelingTrace {
        strips,
        banal_shape: lengths.transpose(),
        remainders,
    })
}

/// `t × s` matrix: `m[i][h]` counts cells of banal column `h` placed in
/// column `i` of `F^t` (stored 0-based, read 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    m: Vec<Vec<usize>>,
}

impl ExponentMatrix {
    pub fn new(m: Vec<Vec<usize>>) -> Result<Self> {
        let w = m.first().map_or(0, Vec::len);
        if m.iter().any(|r| r.len() != w) {
            return Err(Error::DimensionMismatch("ragged exponent grid".into()));
        }
        Ok(ExponentMatrix { m })
    }

    pub fn zeros(t: usize, s: usize) -> Self {
        ExponentMatrix {
            m: vec![vec![0; s]; t],
        }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.m
    }

    pub fn t(&self) -> usize {
        self.m.len()
    }

    pub fn s(&self) -> usize {
        self.m.first().map_or(0, Vec::len)
    }

    /// 1-based access.
    pub fn get(&self, i: usize, h: usize) -> usize {
        self.m[i - 1][h - 1]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.m.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.s()).map(|h| self.m.iter().map(|r| r[h]).sum()).collect()
    }

    /// Row sums `f_i − d_i` and column sums `e_h`.
    pub fn has_margins(&self, triple: &LRTriple) -> bool {
        let t = triple.t();
        let s = triple.s();
        self.t() == t
            && (s == 0 || self.s() == s)
            && self
                .row_sums()
                .iter()
                .enumerate()
                .all(|(i, &r)| r == triple.f().part(i + 1) - triple.d().part(i + 1))
            && self
                .col_sums()
                .iter()
                .enumerate()
                .all(|(h, &c)| c == triple.e().part(h + 1))
    }

    /// `Σ_{j>k} m[j][i] ≥ Σ_{j≥k} m[j][i+1]` for all `k` and `i`.
    pub fn shuffle_inequality(&self) -> bool {
        let t = self.t();
        (1..self.s()).all(|i| {
            (1..=t).all(|k| {
                let lhs: usize = (k + 1..=t).map(|j| self.get(j, i)).sum();
                let rhs: usize = (k..=t).map(|j| self.get(j, i + 1)).sum();
                lhs >= rhs
            })
        })
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.m.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(move |(h, &e)| (VarId::beta(i + 1, h + 1), e as u32))
        }))
    }

    /// Support `{(i, h) : m[i][h] ≠ 0}`, 1-based.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.m.iter().enumerate() {
            for (h, &e) in r.iter().enumerate() {
                if e != 0 {
                    out.push((i + 1, h + 1));
                }
            }
        }
        out
    }

    /// Reads the grid off a monomial in `β`, with the given dimensions.
    pub fn from_monomial(mono: &Monomial, t: usize, s: usize) -> Result<Self> {
        let mut g = ExponentMatrix::zeros(t, s);
        for &(v, e) in mono.vars() {
            if v.family() != crate::polyring::Family::Beta
                || v.i() == 0
                || v.j() == 0
                || v.i() > t
                || v.j() > s
            {
                return Err(Error::DimensionMismatch(format!("{v} outside a {t}x{s} grid")));
            }
            g.m[v.i() - 1][v.j() - 1] = e as usize;
        }
        Ok(g)
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `M(T)` via the standard peeling: strip `h` becomes banal column `h`.
pub fn monomial_m(t: &LRTableau) -> Result<ExponentMatrix> {
    let trace = standard_peeling(t)?;
    let ncols = t.shape().outer().first();
    let mut g = ExponentMatrix::zeros(ncols, trace.strips.len());
    for (h, strip) in trace.strips.iter().enumerate() {
        for &(_, col, _) in strip {
            g.m[col - 1][h] += 1;
        }
    }
    Ok(g)
}

/// Inverse of [`monomial_m`]: strips are put back innermost first. Within
/// banal column `h` the entries `1, 2, …` go to its columns taken from right
/// to left, each on top of what that column already holds.
pub fn recover_from_m(triple: &LRTriple, m: &ExponentMatrix) -> Result<LRTableau> {
    let no = || Error::NoPreimage(m.to_string());
    let shape = triple.skew_shape().ok_or_else(no)?;
    if !m.has_margins(triple) {
        return Err(no());
    }
    let t = triple.t();
    let mut height: Vec<usize> = (1..=t).map(|i| triple.d().part(i)).collect();
    let mut cells = Filling::new();
    for h in (0..m.s()).rev() {
        let mut cols: Vec<usize> = (0..t)
            .flat_map(|i| std::iter::repeat(i).take(m.m[i][h]))
            .collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        for (c, &i) in cols.iter().enumerate() {
            height[i] += 1;
            cells.insert((height[i], i + 1), c + 1);
        }
    }
    let rows = (1..=shape.rows())
        .map(|a| {
            let (lo, hi) = shape.row_span(a);
            (lo..=hi)
                .map(|j| cells.get(&(a, j)).copied().ok_or_else(no))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let tab = LRTableau::for_triple(triple, rows).map_err(|_| no())?;
    if !is_lr(&tab) || monomial_m(&tab)? != *m {
        return Err(no());
    }
    Ok(tab)
}
