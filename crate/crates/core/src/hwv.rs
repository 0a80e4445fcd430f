//! The block matrices `Z̃ = [X̃ Ỹ]` and `Ỹ_o`, the highest weight vectors
//! `Δ_{(D,E,F),(A,B)} = det Z̃`, and their `β`-coefficients `Δ_{(D,E,F),M}`.
//!
//! Superrow `j` of `Z̃` has height `f_j` and holds rows `1..=f_j` of the
//! coordinate matrices; supercolumn `k` of `X̃` has width `d_k` and of `Ỹ`
//! width `e_k`. Block `(j, k)` of `X̃` is `α_{jk} X_{f_j,d_k}`, of `Ỹ` it is
//! `β_{jk} Y_{f_j,e_k}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyring::{
    determinant_restricted, BlockCounts, DetRing, Family, Integer, Matrix, Polynomial,
    SymbolicMatrix, VarId,
};
use crate::shapes::LRTriple;
use crate::tableaux::{monomial_m, ExponentMatrix, LRTableau};

/// How the coefficient matrix `A` (`t × r`) or `B` (`t × s`) is filled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffSpec {
    /// Independent variables `α_{jk}` / `β_{jk}`.
    Symbolic,
    /// Integer values.
    Numeric(Vec<Vec<Integer>>),
    /// The identity pattern `J`: `1` on the diagonal, `0` elsewhere.
    JReduced,
}

impl CoeffSpec {
    pub fn ones(rows: usize, cols: usize) -> CoeffSpec {
        CoeffSpec::Numeric(vec![vec![Integer::ONE; cols]; rows])
    }

    fn check(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        if let CoeffSpec::Numeric(m) = self {
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return Err(Error::DimensionMismatch(format!(
                    "{what} must be {rows}x{cols}"
                )));
            }
        }
        Ok(())
    }

    fn entry(&self, family: Family, j: usize, k: usize) -> Polynomial {
        match self {
            CoeffSpec::Symbolic => Polynomial::var(VarId::new(family, j, k)),
            CoeffSpec::Numeric(m) => Polynomial::constant(m[j - 1][k - 1].clone()),
            CoeffSpec::JReduced => {
                if j == k {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                }
            }
        }
    }
}

/// Fills `Z̃` (or just one of its halves) in any entry ring.
struct Layout<'a> {
    heights: Vec<usize>,
    row_base: Vec<usize>,
    triple: &'a LRTriple,
}

impl<'a> Layout<'a> {
    fn new(triple: &'a LRTriple) -> Self {
        let heights: Vec<usize> = triple.f().parts().to_vec();
        let row_base = prefix(&heights);
        Layout {
            heights,
            row_base,
            triple,
        }
    }
}

fn prefix(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|&s| {
            let v = acc;
            acc += s;
            v
        })
        .collect()
}

/// `Z̃` (or `X̃` / `Ỹ` alone) with entries `coef(j, k) · var(a, b)`.
#[allow(clippy::too_many_arguments)]
fn fill<R: DetRing>(
    lay: &Layout,
    include_x: bool,
    include_y: bool,
    alpha: &dyn Fn(usize, usize) -> R,
    beta: &dyn Fn(usize, usize) -> R,
    x: &dyn Fn(usize, usize) -> R,
    y: &dyn Fn(usize, usize) -> R,
) -> Result<Matrix<R>> {
    let d = lay.triple.d().parts();
    let e = lay.triple.e().parts();
    let mut col_blocks = Vec::new();
    if include_x {
        col_blocks.extend_from_slice(d);
    }
    if include_y {
        col_blocks.extend_from_slice(e);
    }
    let rows = lay.triple.f().size();
    let cols: usize = col_blocks.iter().sum();
    let mut m = Matrix::zeros(rows, cols);
    let mut col = 0;
    let mut halves: Vec<(&[usize], &dyn Fn(usize, usize) -> R, &dyn Fn(usize, usize) -> R)> =
        Vec::new();
    if include_x {
        halves.push((d, alpha, x));
    }
    if include_y {
        halves.push((e, beta, y));
    }
    for (widths, coef, var) in halves {
        for (k, &w) in widths.iter().enumerate() {
            for (j, &h) in lay.heights.iter().enumerate() {
                let c = coef(j + 1, k + 1);
                if c.is_zero() {
                    continue;
                }
                for a in 1..=h {
                    for b in 1..=w {
                        m.set(lay.row_base[j] + a - 1, col + b - 1, c.mul(&var(a, b)));
                    }
                }
            }
            col += w;
        }
    }
    m.with_blocks(lay.heights.clone(), col_blocks)
}

fn xvar(a: usize, b: usize) -> Polynomial {
    Polynomial::var(VarId::x(a, b))
}

fn yvar(a: usize, c: usize) -> Polynomial {
    Polynomial::var(VarId::y(a, c))
}

/// `X̃`: `|F| × |D|`, block `(j, k)` equal to `α_{jk} X_{f_j,d_k}`.
pub fn build_xtilde(triple: &LRTriple, a: &CoeffSpec) -> Result<SymbolicMatrix> {
    a.check(triple.t(), triple.r(), "A")?;
    let lay = Layout::new(triple);
    fill(
        &lay,
        true,
        false,
        &|j, k| a.entry(Family::Alpha, j, k),
        &|_, _| Polynomial::zero(),
        &xvar,
        &yvar,
    )
}

/// `Ỹ`: `|F| × |E|`, block `(j, k)` equal to `β_{jk} Y_{f_j,e_k}`.
pub fn build_ytilde(triple: &LRTriple, b: &CoeffSpec) -> Result<SymbolicMatrix> {
    b.check(triple.t(), triple.s(), "B")?;
    let lay = Layout::new(triple);
    fill(
        &lay,
        false,
        true,
        &|_, _| Polynomial::zero(),
        &|j, k| b.entry(Family::Beta, j, k),
        &xvar,
        &yvar,
    )
}

/// `Z̃ = [X̃ Ỹ]`, square of size `|F|`.
pub fn build_ztilde(triple: &LRTriple, a: &CoeffSpec, b: &CoeffSpec) -> Result<SymbolicMatrix> {
    a.check(triple.t(), triple.r(), "A")?;
    b.check(triple.t(), triple.s(), "B")?;
    let lay = Layout::new(triple);
    fill(
        &lay,
        true,
        true,
        &|j, k| a.entry(Family::Alpha, j, k),
        &|j, k| b.entry(Family::Beta, j, k),
        &xvar,
        &yvar,
    )
}

/// `Z̃` over the integers: coefficient matrices and the point `(x, y)` all
/// numeric.
pub fn build_ztilde_numeric(
    triple: &LRTriple,
    a: &[Vec<Integer>],
    b: &[Vec<Integer>],
    value: &dyn Fn(VarId) -> Integer,
) -> Result<Matrix<Integer>> {
    CoeffSpec::Numeric(a.to_vec()).check(triple.t(), triple.r(), "A")?;
    CoeffSpec::Numeric(b.to_vec()).check(triple.t(), triple.s(), "B")?;
    let lay = Layout::new(triple);
    fill(
        &lay,
        true,
        true,
        &|j, k| a[j - 1][k - 1].clone(),
        &|j, k| b[j - 1][k - 1].clone(),
        &|p, q| value(VarId::x(p, q)),
        &|p, q| value(VarId::y(p, q)),
    )
}

/// `Δ_{(D,E,F),(A,B)} = det Z̃`.
pub fn delta(triple: &LRTriple, a: &CoeffSpec, b: &CoeffSpec) -> Result<Polynomial> {
    build_ztilde(triple, a, b)?.determinant()
}

/// `Δ_{(A,B)}` at an integer point.
pub fn delta_at(
    triple: &LRTriple,
    a: &[Vec<Integer>],
    b: &[Vec<Integer>],
    value: &dyn Fn(VarId) -> Integer,
) -> Result<Integer> {
    build_ztilde_numeric(triple, a, b, value)?.determinant()
}

/// Block counts selecting the `β`-coefficient `grid` of `det Z̃` with `A = J`:
/// each `X` supercolumn stays in its own superrow.
fn z_counts(triple: &LRTriple, grid: &ExponentMatrix) -> BlockCounts {
    let (t, r, s) = (triple.t(), triple.r(), triple.s());
    let counts = (0..t)
        .map(|j| {
            let mut row: Vec<usize> = (0..r)
                .map(|k| if j == k { triple.d().part(k + 1) } else { 0 })
                .collect();
            row.extend((0..s).map(|h| grid.rows()[j][h]));
            row
        })
        .collect();
    BlockCounts { counts }
}

fn check_grid(triple: &LRTriple, grid: &ExponentMatrix) -> Result<()> {
    if grid.t() != triple.t() || (triple.s() > 0 && grid.s() != triple.s()) {
        return Err(Error::DimensionMismatch(format!(
            "exponent grid must be {}x{}",
            triple.t(),
            triple.s()
        )));
    }
    Ok(())
}

/// `Δ_{(D,E,F),M}`: the coefficient of `∏ β_{ih}^{m_{ih}}` in
/// `Δ_{(D,E,F),(J,B)}`, taken directly by the block-restricted expansion.
pub fn delta_m(triple: &LRTriple, grid: &ExponentMatrix) -> Result<Polynomial> {
    check_grid(triple, grid)?;
    let z = build_ztilde(triple, &CoeffSpec::JReduced, &CoeffSpec::ones(triple.t(), triple.s()))?;
    determinant_restricted(&z, Some(&z_counts(triple, grid)))
}

/// `Δ_{(D,E,F),M}` at an integer point; same selection as [`delta_m`].
pub fn delta_m_at(
    triple: &LRTriple,
    grid: &ExponentMatrix,
    value: &dyn Fn(VarId) -> Integer,
) -> Result<Integer> {
    check_grid(triple, grid)?;
    let (t, r, s) = (triple.t(), triple.r(), triple.s());
    let a: Vec<Vec<Integer>> = (0..t)
        .map(|j| (0..r).map(|k| Integer::from((j == k) as i64)).collect())
        .collect();
    let b = vec![vec![Integer::ONE; s]; t];
    let z = build_ztilde_numeric(triple, &a, &b, value)?;
    determinant_restricted(&z, Some(&z_counts(triple, grid)))
}

/// `Δ_{(D,E,F),M(T)}`; zero would contradict the basis theorem and is
/// reported as [`Error::ZeroCoefficient`].
pub fn delta_mt(triple: &LRTriple, t: &LRTableau) -> Result<Polynomial> {
    let grid = monomial_m(t)?;
    let p = delta_m(triple, &grid)?;
    if p.is_zero() {
        return Err(Error::ZeroCoefficient(grid.to_monomial().to_string()));
    }
    Ok(p)
}

/// All grids with row sums `f_i − d_i` and column sums `e_h`, optionally
/// only those whose support lies inside `within`'s support. Sorted.
pub fn admissible_grids(triple: &LRTriple, within: Option<&ExponentMatrix>) -> Vec<ExponentMatrix> {
    let (t, s) = (triple.t(), triple.s());
    let rows: Vec<usize> = (1..=t).map(|i| triple.f().part(i) - triple.d().part(i)).collect();
    let mut cols: Vec<usize> = (1..=s).map(|h| triple.e().part(h)).collect();
    let allowed = |i: usize, h: usize| within.is_none_or(|w| w.rows()[i][h] != 0);
    let mut out = Vec::new();
    let mut cur = vec![vec![0usize; s]; t];
    fn go(
        i: usize,
        h: usize,
        left_in_row: usize,
        rows: &[usize],
        cols: &mut [usize],
        cur: &mut Vec<Vec<usize>>,
        allowed: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<ExponentMatrix>,
    ) {
        let (t, s) = (rows.len(), cols.len());
        if i == t {
            if cols.iter().all(|&c| c == 0) {
                out.push(ExponentMatrix::new(cur.clone()).unwrap());
            }
            return;
        }
        if h == s {
            if left_in_row == 0 {
                let next = if i + 1 < t { rows[i + 1] } else { 0 };
                go(i + 1, 0, next, rows, cols, cur, allowed, out);
            }
            return;
        }
        let max = if allowed(i, h) { left_in_row.min(cols[h]) } else { 0 };
        for v in (0..=max).rev() {
            cur[i][h] = v;
            cols[h] -= v;
            go(i, h + 1, left_in_row - v, rows, cols, cur, allowed, out);
            cols[h] += v;
        }
        cur[i][h] = 0;
    }
    if t == 0 {
        return vec![ExponentMatrix::zeros(0, s)];
    }
    go(0, 0, rows[0], &rows, &mut cols, &mut cur, &allowed, &mut out);
    out.sort();
    out
}

/// The full `β`-expansion `Δ_{(J,B)} = Σ_M Δ_{(D,E,F),M} ∏ β^{m}`, nonzero
/// coefficients only, computed grid by grid.
pub fn delta_reduced_expansion(triple: &LRTriple) -> Result<BTreeMap<ExponentMatrix, Polynomial>> {
    let mut out = BTreeMap::new();
    for g in admissible_grids(triple, None) {
        let p = delta_m(triple, &g)?;
        if !p.is_zero() {
            out.insert(g, p);
        }
    }
    Ok(out)
}

/// `Ỹ_o`: `(|F| − |D|) × |E|`, block `(j, k)` equal to `β_{jk}` times rows
/// `d_j + 1..=f_j` of `Y_{·,e_k}`. Superrows of height zero are kept.
pub fn build_yo(triple: &LRTriple, b: &CoeffSpec) -> Result<SymbolicMatrix> {
    b.check(triple.t(), triple.s(), "B")?;
    let t = triple.t();
    let heights: Vec<usize> = (1..=t).map(|j| triple.f().part(j) - triple.d().part(j)).collect();
    let widths: Vec<usize> = triple.e().parts().to_vec();
    let rb = prefix(&heights);
    let mut m = Matrix::zeros(heights.iter().sum(), widths.iter().sum());
    let mut col = 0;
    for (k, &w) in widths.iter().enumerate() {
        for j in 0..t {
            let c = b.entry(Family::Beta, j + 1, k + 1);
            if c.is_zero() {
                continue;
            }
            let d = triple.d().part(j + 1);
            for a in 0..heights[j] {
                for cc in 1..=w {
                    m.set(rb[j] + a, col + cc - 1, c.mul_ref(&yvar(d + a + 1, cc)));
                }
            }
        }
        col += w;
    }
    m.with_blocks(heights, widths)
}

/// `δ_{T,Y}`: the coefficient of `M(T)` in `det Ỹ_o`. The `x`-diagonal
/// slice of `Δ_{M(T)}` equals this up to the sign of moving the diagonal's
/// rows (the top `d_j` of each superrow) ahead of the others.
pub fn delta_ty(triple: &LRTriple, t: &LRTableau) -> Result<Polynomial> {
    let grid = monomial_m(t)?;
    check_grid(triple, &grid)?;
    let yo = build_yo(triple, &CoeffSpec::ones(triple.t(), triple.s()))?;
    let counts = BlockCounts {
        counts: grid.rows().to_vec(),
    };
    let p = determinant_restricted(&yo, Some(&counts))?;
    if p.is_zero() {
        return Err(Error::ZeroCoefficient(format!(
            "δ_(T,Y) for {}",
            grid.to_monomial()
        )));
    }
    Ok(p)
}

/// `Δ_{(D,E,F),N}` by the 0/1 shortcut: set `A = J`, `β_{ih} = 1` on the
/// support of `N` and `0` off it, and take the whole determinant. Valid only
/// when `N` is the sole admissible grid with support inside its own.
pub fn coefficient_via_specialization(triple: &LRTriple, n: &ExponentMatrix) -> Result<Polynomial> {
    check_grid(triple, n)?;
    if !n.has_margins(triple) {
        return Err(Error::DimensionMismatch(format!(
            "grid {n} does not have margins F − D and E"
        )));
    }
    let competing = admissible_grids(triple, Some(n));
    if competing.len() != 1 {
        return Err(Error::NotUnique {
            count: competing.len(),
        });
    }
    let b = CoeffSpec::Numeric(
        n.rows()
            .iter()
            .map(|r| r.iter().map(|&v| Integer::from((v != 0) as i64)).collect())
            .collect(),
    );
    delta(triple, &CoeffSpec::JReduced, &b)
}

/// With `A = J`, each `X̃` supercolumn is nonzero only in its own superrow.
pub fn reduced_zero_pattern_holds(triple: &LRTriple, z: &SymbolicMatrix) -> bool {
    let (Some(rb), Some(cb)) = (z.row_block_ranges(), z.col_block_ranges()) else {
        return false;
    };
    (0..triple.r()).all(|k| {
        rb.iter().enumerate().all(|(j, &(r0, r1))| {
            j == k
                || (r0..r1).all(|r| (cb[k].0..cb[k].1).all(|c| z.get(r, c).is_zero()))
        })
    })
}

/// Product `∏_k ∏_{j ≤ d_k} x[j,j]`, i.e. `x[j,j]^{(D^t)_j}`.
pub fn x_diagonal(triple: &LRTriple) -> crate::polyring::Monomial {
    crate::polyring::Monomial::from_pairs(
        triple
            .dt()
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &p)| (VarId::x(j + 1, j + 1), p as u32)),
    )
}

/// Coefficient of [`x_diagonal`] in a polynomial, as a polynomial in the
/// remaining variables: terms whose `x`-part is exactly the diagonal.
pub fn x_diagonal_slice(triple: &LRTriple, p: &Polynomial) -> Polynomial {
    p.coefficient_of(&x_diagonal(triple), &[Family::X])
}
