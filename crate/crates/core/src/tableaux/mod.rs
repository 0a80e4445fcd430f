//! Littlewood–Richardson tableaux of shape `F^t − D^t` with content `E^t`,
//! their standard peeling, and the monomials `M(T)`, `e(T)`, `𝓔(T)`.

mod enumerate;
mod monomials;
mod peeling;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::shapes::{LRTriple, Partition, SkewShape};

pub use enumerate::enumerate_lr;
pub use monomials::{monomial_big_e, monomial_e, monomial_e1, recover_from_e};
pub use peeling::{monomial_m, recover_from_m, standard_peeling, ExponentMatrix, PeelingTrace};

/// Cells `(row, col) → entry`, 1-based. Used for tableaux and for the
/// intermediate remainders of peeling, which need not be skew shapes.
pub type Filling = BTreeMap<(usize, usize), usize>;

/// A filling of a skew shape; `rows[a - 1]` lists the entries of the skew
/// cells of row `a` from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LRTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl LRTableau {
    /// Checks that every skew cell gets exactly one positive entry. LR1/LR2
    /// are not assumed.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.rows() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        rows.resize(shape.rows(), Vec::new());
        if rows.len() != shape.rows() {
            return Err(Error::Parse(format!(
                "tableau has {} rows but the shape has {}",
                rows.len(),
                shape.rows()
            )));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(a + 1) {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, the shape needs {}",
                    a + 1,
                    row.len(),
                    shape.row_len(a + 1)
                )));
            }
            if row.contains(&0) {
                return Err(Error::Parse("entries must be positive".into()));
            }
        }
        Ok(LRTableau { shape, rows })
    }

    /// A tableau for `triple` (shape `F^t − D^t`), also checking content `E^t`.
    pub fn for_triple(triple: &LRTriple, rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = triple.skew_shape().ok_or_else(|| Error::Containment {
            outer: triple.ft().to_string(),
            inner: triple.dt().to_string(),
        })?;
        let t = LRTableau::new(shape, rows)?;
        let want = triple.et();
        if t.content() != want.parts() {
            return Err(Error::NotLR(format!(
                "content {:?} differs from E^t = ({want})",
                t.content()
            )));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let offset = self.shape.inner().part(row);
        Some(self.rows[row - 1][col - offset - 1])
    }

    /// `(row, col, entry)` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.shape.len());
        for (a, row) in self.rows.iter().enumerate() {
            let offset = self.shape.inner().part(a + 1);
            for (k, &e) in row.iter().enumerate() {
                out.push((a + 1, offset + k + 1, e));
            }
        }
        out
    }

    pub fn filling(&self) -> Filling {
        self.cells().into_iter().map(|(a, j, e)| ((a, j), e)).collect()
    }

    /// Number of occurrences of each value `1..=max`, trailing zeros trimmed.
    pub fn content(&self) -> Vec<usize> {
        content_of(self.rows.iter().flatten().copied())
    }

    /// Row-reading word: top row first, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "outer": self.shape.outer(),
            "inner": self.shape.inner(),
            "rows": self.rows,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let part = |key: &str| -> Result<Partition> {
            let raw = v
                .get(key)
                .ok_or_else(|| Error::Parse(format!("tableau JSON lacks {key:?}")))?;
            serde_json::from_value(raw.clone()).map_err(|e| Error::Parse(format!("{key}: {e}")))
        };
        let rows: Vec<Vec<usize>> = serde_json::from_value(
            v.get("rows")
                .cloned()
                .ok_or_else(|| Error::Parse("tableau JSON lacks \"rows\"".into()))?,
        )
        .map_err(|e| Error::Parse(format!("rows: {e}")))?;
        LRTableau::new(SkewShape::new(part("outer")?, part("inner")?)?, rows)
    }
}

impl fmt::Display for LRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

pub(crate) fn content_of(entries: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for e in entries {
        if counts.len() < e {
            counts.resize(e, 0);
        }
        counts[e - 1] += 1;
    }
    counts
}

/// Rows weakly increase left to right and columns strictly increase top to
/// bottom.
pub fn check_lr1(t: &LRTableau) -> bool {
    check_lr1_filling(&t.filling())
}

/// For every `m ≥ 2` and every `p`: the number of `m`s in rows `1..=p` is at
/// most the number of `m − 1`s in rows `1..p`.
pub fn check_lr2(t: &LRTableau) -> bool {
    check_lr2_filling(&t.filling())
}

/// LR1 on an arbitrary cell set: each cell versus the next cell to its right
/// in the same row and the next cell below it in the same column.
pub fn check_lr1_filling(cells: &Filling) -> bool {
    let mut by_col: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    let mut prev: Option<((usize, usize), usize)> = None;
    for (&(a, j), &e) in cells {
        if let Some(((pa, _), pe)) = prev {
            if pa == a && pe > e {
                return false;
            }
        }
        prev = Some(((a, j), e));
        by_col.entry(j).or_default().push((a, e));
    }
    by_col
        .values()
        .all(|col| col.windows(2).all(|w| w[0].1 < w[1].1))
}

pub fn check_lr2_filling(cells: &Filling) -> bool {
    let max_row = cells.keys().map(|k| k.0).max().unwrap_or(0);
    let max_val = cells.values().copied().max().unwrap_or(0);
    // before[m] = count of m in rows 1..p-1
    let mut before = vec![0usize; max_val + 2];
    for p in 1..=max_row {
        let mut upto = before.clone();
        for (_, &e) in cells.range((p, 0)..(p + 1, 0)) {
            upto[e] += 1;
        }
        if (2..=max_val).any(|m| upto[m] > before[m - 1]) {
            return false;
        }
        before = upto;
    }
    true
}

pub fn is_lr(t: &LRTableau) -> bool {
    check_lr1(t) && check_lr2(t)
}
