//! Partitions, their transposes, skew shapes and the `(D, E, F)` configuration.
//!
//! Rows and columns are 1-based everywhere. A partition never stores trailing
//! zeros, so `(3, 1, 0)` and `(3, 1)` are the same value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, read either as a
/// partition or as the Young diagram whose row lengths are its parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the sequence
    /// increases anywhere.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be weakly decreasing, found {} < {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Parse("zero part followed by a positive part".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (1-based), zero past the depth.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "partition parts are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.depth() <= self.depth()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,3,2,1,1"`; `"-"` (or an empty string) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The cells of `outer` that are not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Containment {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer diagram (rows may hold no skew cells).
    pub fn rows(&self) -> usize {
        self.outer.depth()
    }

    /// Columns `first..=last` occupied by skew cells of row `a`; empty when
    /// `first > last`.
    pub fn row_span(&self, a: usize) -> (usize, usize) {
        (self.inner.part(a) + 1, self.outer.part(a))
    }

    pub fn row_len(&self, a: usize) -> usize {
        self.outer.part(a) - self.inner.part(a)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row) && col <= self.outer.part(row)
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .flat_map(|a| {
                let (lo, hi) = self.row_span(a);
                (lo..=hi).map(move |j| (a, j))
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn skew(outer: &Partition, inner: &Partition) -> Result<SkewShape> {
    SkewShape::new(outer.clone(), inner.clone())
}

/// A validated problem configuration: partitions `D`, `E`, `F` together with
/// the ambient sizes `n`, `k`, `ell` of `GL_n`, `GL_k`, `GL_ell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LRTriple {
    d: Partition,
    e: Partition,
    f: Partition,
    n: usize,
    k: usize,
    ell: usize,
}

impl LRTriple {
    pub fn d(&self) -> &Partition {
        &self.d
    }
    pub fn e(&self) -> &Partition {
        &self.e
    }
    pub fn f(&self) -> &Partition {
        &self.f
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn ell(&self) -> usize {
        self.ell
    }
    /// Depth of `D`.
    pub fn r(&self) -> usize {
        self.d.depth()
    }
    /// Depth of `E`.
    pub fn s(&self) -> usize {
        self.e.depth()
    }
    /// Depth of `F`.
    pub fn t(&self) -> usize {
        self.f.depth()
    }
    pub fn dt(&self) -> Partition {
        self.d.transpose()
    }
    pub fn et(&self) -> Partition {
        self.e.transpose()
    }
    pub fn ft(&self) -> Partition {
        self.f.transpose()
    }

    /// `D^t ⊆ F^t`; when false the LR set is empty.
    pub fn is_contained(&self) -> bool {
        self.f.contains(&self.d)
    }

    /// The skew shape `F^t − D^t`, if containment holds.
    pub fn skew_shape(&self) -> Option<SkewShape> {
        SkewShape::new(self.ft(), self.dt()).ok()
    }

    /// Smallest ambient sizes for which the triple validates.
    pub fn minimal(d: Partition, e: Partition, f: Partition) -> Result<Self> {
        let k = d.first().max(d.depth()).max(1);
        let ell = e.first().max(e.depth()).max(f.depth().saturating_sub(k)).max(1);
        let n = f.first().max(f.depth()).max(1);
        validate_triple(d, e, f, n, k, ell)
    }
}

impl fmt::Display for LRTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D=({}) E=({}) F=({}) n={} k={} ell={}",
            self.d, self.e, self.f, self.n, self.k, self.ell
        )
    }
}

/// Checks `|D| + |E| = |F|` and the depth bounds. Besides
/// `depth(D) ≤ k`, `depth(E) ≤ ell`, `depth(F) ≤ min(n, k + ell)`, the block
/// matrices `X_{f_j,d_k}` and `Y_{f_j,e_k}` must fit inside the `n × k` and
/// `n × ell` coordinate matrices, so `d_1 ≤ k`, `e_1 ≤ ell` and `f_1 ≤ n`.
pub fn validate_triple(
    d: Partition,
    e: Partition,
    f: Partition,
    n: usize,
    k: usize,
    ell: usize,
) -> Result<LRTriple> {
    if d.size() + e.size() != f.size() {
        return Err(Error::SizeMismatch {
            lhs: d.size() + e.size(),
            rhs: f.size(),
        });
    }
    if n == 0 || k == 0 || ell == 0 {
        return Err(Error::DepthExceeded("n, k, ell must be positive".into()));
    }
    let checks = [
        (d.depth() <= k, format!("depth(D) = {} > k = {k}", d.depth())),
        (e.depth() <= ell, format!("depth(E) = {} > ell = {ell}", e.depth())),
        (
            f.depth() <= n.min(k + ell),
            format!("depth(F) = {} > min(n, k + ell) = {}", f.depth(), n.min(k + ell)),
        ),
        (d.first() <= k, format!("d_1 = {} > k = {k}", d.first())),
        (e.first() <= ell, format!("e_1 = {} > ell = {ell}", e.first())),
        (f.first() <= n, format!("f_1 = {} > n = {n}", f.first())),
    ];
    if let Some((_, msg)) = checks.into_iter().find(|(ok, _)| !ok) {
        return Err(Error::DepthExceeded(msg));
    }
    Ok(LRTriple { d, e, f, n, k, ell })
}

/// All partitions of `m`, in reverse lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}
