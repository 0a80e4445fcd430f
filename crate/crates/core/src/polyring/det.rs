//! Division-free determinants by column-by-column Laplace expansion.
//!
//! State after processing columns `0..c` is the set of rows already used
//! (a `u64` mask) together with the signed sum over all partial permutations
//! that use exactly those rows. Zero entries are skipped, and only one layer
//! is alive at a time. Each layer is computed by *pulling* into a sorted list
//! of target masks, so the rayon-parallel run is bit-identical to a
//! sequential one.
//!
//! A [`BlockCounts`] restriction keeps only permutations that send exactly
//! `counts[i][h]` columns of column block `h` to rows of row block `i`. This
//! is how the coefficient of `∏ β_{ih}^{m_{ih}}` is taken without ever
//! forming the full expansion in `β`.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::integer::Integer;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// What the determinant engine needs from an entry type.
pub trait DetRing: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
    fn sum(parts: Vec<Self>) -> Self {
        parts.iter().fold(Self::zero(), |acc, p| acc.add(p))
    }
}

impl DetRing for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.sub_ref(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sum(parts: Vec<Self>) -> Self {
        Polynomial::sum(parts)
    }
}

impl DetRing for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn one() -> Self {
        Integer::ONE
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Dense row-major matrix with optional block structure. Storage indices
/// are 0-based; block sizes may be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
    row_blocks: Option<Vec<usize>>,
    col_blocks: Option<Vec<usize>>,
}

pub type SymbolicMatrix = Matrix<Polynomial>;

impl<R: DetRing> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
            row_blocks: None,
            col_blocks: None,
        }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
            row_blocks: None,
            col_blocks: None,
        })
    }

    pub fn with_blocks(mut self, row_blocks: Vec<usize>, col_blocks: Vec<usize>) -> Result<Self> {
        if row_blocks.iter().sum::<usize>() != self.rows
            || col_blocks.iter().sum::<usize>() != self.cols
        {
            return Err(Error::DimensionMismatch(format!(
                "block sizes {row_blocks:?} x {col_blocks:?} do not tile a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        self.row_blocks = Some(row_blocks);
        self.col_blocks = Some(col_blocks);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn row_blocks(&self) -> Option<&[usize]> {
        self.row_blocks.as_deref()
    }
    pub fn col_blocks(&self) -> Option<&[usize]> {
        self.col_blocks.as_deref()
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<S: DetRing>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            row_blocks: self.row_blocks.clone(),
            col_blocks: self.col_blocks.clone(),
        }
    }

    pub fn try_map<S: DetRing>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
            row_blocks: self.row_blocks.clone(),
            col_blocks: self.col_blocks.clone(),
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row offsets `start..end` of every row block.
    pub fn row_block_ranges(&self) -> Option<Vec<(usize, usize)>> {
        self.row_blocks.as_ref().map(|b| ranges(b))
    }

    pub fn col_block_ranges(&self) -> Option<Vec<(usize, usize)>> {
        self.col_blocks.as_ref().map(|b| ranges(b))
    }

    pub fn determinant(&self) -> Result<R> {
        determinant_restricted(self, None)
    }
}

pub(crate) fn ranges(sizes: &[usize]) -> Vec<(usize, usize)> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = (start, start + s);
            start += s;
            r
        })
        .collect()
}

impl SymbolicMatrix {
    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|p| p.to_string()).collect())
            .collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "row_blocks": self.row_blocks,
            "col_blocks": self.col_blocks,
            "entries": entries,
        })
    }
}

/// Required number of columns from column block `h` landing in row block
/// `i`, for every pair of blocks of the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCounts {
    pub counts: Vec<Vec<usize>>,
}

pub fn determinant(m: &SymbolicMatrix) -> Result<Polynomial> {
    m.determinant()
}

/// Sum over permutations respecting `restriction` (all permutations when
/// `None`) of the signed product of entries.
pub fn determinant_restricted<R: DetRing>(m: &Matrix<R>, restriction: Option<&BlockCounts>) -> Result<R> {
    let n = m.rows;
    if n != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if n > 64 {
        return Err(Error::TooLarge(n));
    }
    let plan = match restriction {
        Some(r) => Some(Plan::new(m, r)?),
        None => None,
    };
    let nonzero: Vec<Vec<(usize, &R, R)>> = (0..n)
        .map(|c| {
            (0..n)
                .filter_map(|r| {
                    let e = m.get(r, c);
                    (!e.is_zero()).then(|| (r, e, e.neg()))
                })
                .collect()
        })
        .collect();

    let mut layer: Vec<(u64, R)> = vec![(0, R::one())];
    for (c, col) in nonzero.iter().enumerate() {
        let mut targets: Vec<u64> = Vec::new();
        for &(mask, _) in &layer {
            for &(r, ..) in col {
                let bit = 1u64 << r;
                if mask & bit == 0 {
                    targets.push(mask | bit);
                }
            }
        }
        targets.sort_unstable();
        targets.dedup();
        if let Some(plan) = &plan {
            targets.retain(|&t| plan.admits(c, t));
        }
        let pull = |&target: &u64| -> Option<(u64, R)> {
            let mut parts = Vec::new();
            for (r, e, minus_e) in col {
                let bit = 1u64 << r;
                if target & bit == 0 {
                    continue;
                }
                let prev = target ^ bit;
                if let Ok(i) = layer.binary_search_by_key(&prev, |p| p.0) {
                    // rows already placed in earlier columns below row r
                    // each contribute one inversion
                    let odd = (prev >> r >> 1).count_ones() % 2 == 1;
                    parts.push(layer[i].1.mul(if odd { minus_e } else { e }));
                }
            }
            let acc = R::sum(parts);
            (!acc.is_zero()).then_some((target, acc))
        };
        layer = if targets.len() >= 64 {
            targets.par_iter().filter_map(pull).collect()
        } else {
            targets.iter().filter_map(pull).collect()
        };
        if layer.is_empty() {
            return Ok(R::zero());
        }
    }
    Ok(layer.pop().map_or_else(R::one, |(_, v)| v))
}

struct Plan {
    row_masks: Vec<u64>,
    col_block_of: Vec<usize>,
    last_in_block: Vec<bool>,
    // count of rows of block i used by all column blocks before h
    base: Vec<Vec<usize>>,
    counts: Vec<Vec<usize>>,
}

impl Plan {
    fn new<R: DetRing>(m: &Matrix<R>, r: &BlockCounts) -> Result<Plan> {
        let (Some(rb), Some(cb)) = (m.row_block_ranges(), m.col_block_ranges()) else {
            return Err(Error::DimensionMismatch(
                "block-count restriction on a matrix without block structure".into(),
            ));
        };
        if r.counts.len() != rb.len() || r.counts.iter().any(|row| row.len() != cb.len()) {
            return Err(Error::DimensionMismatch(format!(
                "count grid must be {}x{}",
                rb.len(),
                cb.len()
            )));
        }
        let row_masks = rb
            .iter()
            .map(|&(s, e)| (s..e).fold(0u64, |acc, i| acc | (1u64 << i)))
            .collect();
        let mut col_block_of = vec![0; m.cols];
        let mut last_in_block = vec![false; m.cols];
        for (h, &(s, e)) in cb.iter().enumerate() {
            for c in s..e {
                col_block_of[c] = h;
            }
            if e > s {
                last_in_block[e - 1] = true;
            }
        }
        let base = (0..rb.len())
            .map(|i| {
                let mut acc = 0;
                (0..=cb.len())
                    .map(|h| {
                        let v = acc;
                        if h < cb.len() {
                            acc += r.counts[i][h];
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Ok(Plan {
            row_masks,
            col_block_of,
            last_in_block,
            base,
            counts: r.counts.clone(),
        })
    }

    fn admits(&self, c: usize, mask: u64) -> bool {
        let h = self.col_block_of[c];
        let closing = self.last_in_block[c];
        self.row_masks.iter().enumerate().all(|(i, &bm)| {
            let used = (mask & bm).count_ones() as usize;
            if closing {
                used == self.base[i][h + 1]
            } else {
                used >= self.base[i][h] && used - self.base[i][h] <= self.counts[i][h]
            }
        })
    }
}
