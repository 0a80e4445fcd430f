use super::{is_lr, LRTableau};
use crate::error::{Error, Result};
use crate::polyring::{Family, Monomial, VarId};
use crate::shapes::LRTriple;

/// `e(T) = ∏_b y[a(b), c(b)]` over the boxes `b` of `T`.
pub fn monomial_e(t: &LRTableau) -> Result<Monomial> {
    if !is_lr(t) {
        return Err(Error::NotLR(t.to_string()));
    }
    Ok(Monomial::from_pairs(
        t.cells().into_iter().map(|(a, _, c)| (VarId::y(a, c), 1)),
    ))
}

/// `𝓔(T) = e(T) · ∏_j x[j,j]^{(D^t)_j}`.
pub fn monomial_big_e(t: &LRTableau) -> Result<Monomial> {
    let e = monomial_e(t)?;
    let inner = t.shape().inner();
    let x = Monomial::from_pairs(
        inner
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &p)| (VarId::x(j + 1, j + 1), p as u32)),
    );
    Ok(e.mul(&x))
}

/// The part of `e(T)` in the variables `y[·,1]`, i.e. the rows holding the
/// entries `1`.
pub fn monomial_e1(t: &LRTableau) -> Result<Monomial> {
    let e = monomial_e(t)?;
    Ok(Monomial::from_pairs(
        e.vars().iter().copied().filter(|(v, _)| v.j() == 1),
    ))
}

/// Rebuilds `T` from `e(T)`: row `a` holds `ℓ(a, c)` copies of each `c`
/// (the exponent of `y[a,c]`), in increasing order.
pub fn recover_from_e(triple: &LRTriple, e: &Monomial) -> Result<LRTableau> {
    let no = || Error::NoPreimage(e.to_string());
    let shape = triple.skew_shape().ok_or_else(no)?;
    let mut rows = vec![Vec::new(); shape.rows()];
    for &(v, k) in e.vars() {
        if v.family() != Family::Y || v.i() == 0 || v.i() > shape.rows() || v.j() == 0 {
            return Err(no());
        }
        rows[v.i() - 1].extend(std::iter::repeat(v.j()).take(k as usize));
    }
    // variables are sorted by (row, entry), so each row is already increasing
    let tab = LRTableau::for_triple(triple, rows).map_err(|_| no())?;
    if !is_lr(&tab) {
        return Err(no());
    }
    Ok(tab)
}
