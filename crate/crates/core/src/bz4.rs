//! The `SL_4` worked example: BZ diagrams, their grading, and a harness that
//! rebuilds the 18-row generator table from the transcribed shapes.
//!
//! Triangle labels follow the coordinate array
//!
//! ```text
//!                 x11
//!               y11 z11
//!             x12 z12 x13
//!           y12 y13 z13
//!         x21 x22 x23
//!       y21 z21 y22 z22 y23 z23
//! ```
//!
//! read as `(x_ij, y_ij, z_ij)` with `i ∈ {1,2}`, `j ∈ {1,2,3}`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hwv::{coefficient_via_specialization, delta_mt};
use crate::polyring::Monomial;
use crate::shapes::{validate_triple, LRTriple, Partition};
use crate::tableaux::{enumerate_lr, monomial_big_e, monomial_e, monomial_m, ExponentMatrix};
use crate::verify::{check_hwv, weight_profile, WeightProfile};

const FIXTURE: &str = include_str!("../fixtures/sl4_table.json");

/// A BZ diagram for `SL_4`: `x[i-1][j-1]` is `x_ij`, likewise `y`, `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BZAssignment {
    pub x: [[u64; 3]; 2],
    pub y: [[u64; 3]; 2],
    pub z: [[u64; 3]; 2],
}

impl BZAssignment {
    /// The 0/1 diagram with a dot on each named triangle (`"x11"`, `"z23"`, ...).
    pub fn from_dots<S: AsRef<str>>(dots: &[S]) -> Result<Self> {
        let mut a = BZAssignment::default();
        for d in dots {
            let d = d.as_ref();
            *a.slot_mut(d)? += 1;
        }
        Ok(a)
    }

    fn slot_mut(&mut self, name: &str) -> Result<&mut u64> {
        let b = name.as_bytes();
        let bad = || Error::Parse(format!("bad BZ triangle {name:?}"));
        if b.len() != 3 {
            return Err(bad());
        }
        let (i, j) = (b[1].wrapping_sub(b'1') as usize, b[2].wrapping_sub(b'1') as usize);
        if i >= 2 || j >= 3 {
            return Err(bad());
        }
        Ok(match b[0] {
            b'x' => &mut self.x[i][j],
            b'y' => &mut self.y[i][j],
            b'z' => &mut self.z[i][j],
            _ => return Err(bad()),
        })
    }

    pub fn value(&self, name: &str) -> Result<u64> {
        let mut c = self.clone();
        c.slot_mut(name).map(|v| *v)
    }

    /// Names of the triangles carrying a dot, in coordinate-array order.
    pub fn dots(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (fam, m) in [("x", &self.x), ("y", &self.y), ("z", &self.z)] {
            for i in 0..2 {
                for j in 0..3 {
                    for _ in 0..m[i][j] {
                        out.push(format!("{fam}{}{}", i + 1, j + 1));
                    }
                }
            }
        }
        out
    }

    /// The three hexagons, each as its six triangles in cyclic order.
    pub const HEXAGONS: [[&'static str; 6]; 3] = [
        ["y11", "z11", "x13", "y13", "z12", "x12"],
        ["y12", "z12", "x22", "y22", "z21", "x21"],
        ["y13", "z13", "x23", "y23", "z22", "x22"],
    ];

    /// A side of a hexagon carries the sum of the two triangles at its ends;
    /// opposite sides must agree.
    pub fn hexagon_condition(&self) -> bool {
        Self::HEXAGONS.iter().all(|h| {
            let v: Vec<u64> = h.iter().map(|n| self.value(n).expect("valid label")).collect();
            let side = |i: usize| v[i] + v[(i + 1) % 6];
            (0..3).all(|i| side(i) == side(i + 3))
        })
    }
}

impl fmt::Display for BZAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dots().join(","))
    }
}

fn as_partition(v: [u64; 3], what: &str) -> Result<Partition> {
    Partition::new(v.iter().map(|&x| x as usize).collect::<Vec<_>>())
        .map_err(|_| Error::NotPartition(format!("{what} = {v:?}")))
}

/// `(D^t, E^t, F^t)` by the linear grading formulas, verbatim.
pub fn bz_grading(a: &BZAssignment) -> Result<(Partition, Partition, Partition)> {
    let (x, y, z) = (&a.x, &a.y, &a.z);
    let dt = [
        x[0][0] + y[0][0] + x[0][1] + y[0][1] + x[1][0] + y[1][0],
        x[0][0] + y[0][0] + x[0][1] + y[0][1],
        x[0][0] + y[0][0],
    ];
    let et = [
        y[1][0] + z[1][0] + y[1][1] + z[1][1] + y[1][2] + z[1][2],
        y[1][0] + z[1][0] + y[1][1] + z[1][1],
        y[1][0] + z[1][0],
    ];
    let ft = [
        x[0][0] + z[0][0] + x[0][2] + z[0][2] + x[1][2] + z[1][2],
        x[0][0] + z[0][0] + x[0][2] + z[0][2],
        x[0][0] + z[0][0],
    ];
    Ok((
        as_partition(dt, "D^t")?,
        as_partition(et, "E^t")?,
        as_partition(ft, "F^t")?,
    ))
}

/// The grading only sees `F^t` modulo full columns of height 4 (determinant
/// powers of `SL_4`). Restore `c = (|D^t| + |E^t| − |F^t|) / 4` of them so
/// that `|D| + |E| = |F|`.
pub fn lift_to_gl4(dt: &Partition, et: &Partition, ft: &Partition) -> Result<Partition> {
    let excess = (dt.size() + et.size()) as i64 - ft.size() as i64;
    if excess < 0 || excess % 4 != 0 {
        return Err(Error::NotPartition(format!(
            "|D^t| + |E^t| − |F^t| = {excess} is not a non-negative multiple of 4"
        )));
    }
    let c = (excess / 4) as usize;
    if ft.depth() > 4 {
        return Err(Error::NotPartition(format!("F^t = {ft} has more than 4 rows")));
    }
    Partition::new((1..=4).map(|i| ft.part(i) + c).collect::<Vec<_>>())
}

/// One transcribed row of the generator table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub index: usize,
    pub dots: Vec<String>,
    #[serde(rename = "Dt")]
    pub dt: Partition,
    #[serde(rename = "Et")]
    pub et: Partition,
    #[serde(rename = "Ft")]
    pub ft: Partition,
    pub delta_spec: String,
    #[serde(rename = "eT", with = "mono_text")]
    pub e_t: Monomial,
    #[serde(rename = "bigET", with = "mono_text")]
    pub big_e_t: Monomial,
}

mod mono_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::polyring::Monomial;

    pub fn serialize<S: Serializer>(m: &Monomial, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&m.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Monomial, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl TableRow {
    pub fn triple(&self) -> Result<LRTriple> {
        validate_triple(self.dt.transpose(), self.et.transpose(), self.ft.transpose(), 4, 4, 4)
    }
}

pub fn sl4_fixture() -> Vec<TableRow> {
    serde_json::from_str(FIXTURE).expect("checked-in fixture parses")
}

/// The block pattern of the `0/1`-specialized `Z̃` for a grid: superrow `j`
/// holds `X_{f_j,d_j}` in its own `X` supercolumn, and `Y_{f_j,e_h}` where
/// the grid is nonzero.
pub fn block_pattern(triple: &LRTriple, grid: &ExponentMatrix) -> String {
    let (f, d, e) = (triple.f(), triple.d(), triple.e());
    let rows: Vec<String> = (1..=triple.t())
        .map(|j| {
            let mut cells = Vec::new();
            for k in 1..=triple.r() {
                cells.push(if k == j {
                    format!("X{}{}", f.part(j), d.part(k))
                } else {
                    "0".into()
                });
            }
            for h in 1..=triple.s() {
                cells.push(if grid.get(j, h) > 0 {
                    format!("Y{}{}", f.part(j), e.part(h))
                } else {
                    "0".into()
                });
            }
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub index: usize,
    /// The dots satisfy the hexagon condition and grade (after the `SL_4`
    /// lift) to the transcribed shapes.
    pub grading: bool,
    pub lr_count: usize,
    pub e_t: bool,
    pub big_e_t: bool,
    pub hwv: bool,
    pub weight: bool,
    /// The block pattern matches, and `Δ_{M(T)}` equals the determinant of
    /// that pattern with all entries `1`.
    pub delta_spec: bool,
    pub pass: bool,
    pub note: Option<String>,
}

fn check_row(row: &TableRow) -> RowReport {
    let mut r = RowReport {
        index: row.index,
        grading: false,
        lr_count: 0,
        e_t: false,
        big_e_t: false,
        hwv: false,
        weight: false,
        delta_spec: false,
        pass: false,
        note: None,
    };
    if let Err(e) = check_row_into(row, &mut r) {
        r.note = Some(e.to_string());
    }
    r.pass = r.grading && r.lr_count == 1 && r.e_t && r.big_e_t && r.hwv && r.weight && r.delta_spec;
    r
}

fn check_row_into(row: &TableRow, r: &mut RowReport) -> Result<()> {
    let a = BZAssignment::from_dots(&row.dots)?;
    let (dt, et, ft) = bz_grading(&a)?;
    r.grading = a.hexagon_condition()
        && dt == row.dt
        && et == row.et
        && lift_to_gl4(&dt, &et, &ft)? == row.ft;

    let triple = row.triple()?;
    let tabs = enumerate_lr(&triple);
    r.lr_count = tabs.len();
    let [t] = tabs.as_slice() else {
        return Ok(());
    };
    r.e_t = monomial_e(t)? == row.e_t;
    r.big_e_t = monomial_big_e(t)? == row.big_e_t;

    let p = delta_mt(&triple, t)?;
    r.hwv = check_hwv(&p, &triple);
    r.weight = weight_profile(&p)? == WeightProfile::expected(&triple);

    let grid = monomial_m(t)?;
    let pattern = block_pattern(&triple, &grid);
    if pattern != row.delta_spec {
        r.note = Some(format!("block pattern {pattern}"));
        return Ok(());
    }
    r.delta_spec = coefficient_via_specialization(&triple, &grid)? == p;
    Ok(())
}

/// Rebuilds every fixture row; see [`RowReport`] for what is compared.
pub fn reproduce_sl4_table() -> Vec<RowReport> {
    sl4_fixture().par_iter().map(check_row).collect()
}
