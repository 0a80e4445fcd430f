use std::fmt;

use crate::error::{Error, Result};

/// Variable families, in the global order used for canonical term storage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Family {
    X = 0,
    Y = 1,
    Alpha = 2,
    Beta = 3,
    /// Symmetric-function variables `z[i]` used by the Schur oracle.
    Z = 4,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::X, Family::Y, Family::Alpha, Family::Beta, Family::Z];

    pub fn name(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Alpha => "alpha",
            Family::Beta => "beta",
            Family::Z => "z",
        }
    }

    pub fn from_name(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variable family {s:?}")))
    }

    fn from_bits(b: u32) -> Family {
        match b {
            0 => Family::X,
            1 => Family::Y,
            2 => Family::Alpha,
            3 => Family::Beta,
            _ => Family::Z,
        }
    }
}

const IDX_BITS: u32 = 14;
const IDX_MASK: u32 = (1 << IDX_BITS) - 1;

/// A variable `family[i, j]`, packed into a `u32` so that integer order is
/// the global variable order: family first, then `(i, j)` lexicographically.
/// `Z` variables carry `j = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u32);

impl VarId {
    pub fn new(family: Family, i: usize, j: usize) -> VarId {
        assert!(
            i as u32 <= IDX_MASK && j as u32 <= IDX_MASK,
            "variable index too large"
        );
        VarId(((family as u32) << (2 * IDX_BITS)) | ((i as u32) << IDX_BITS) | j as u32)
    }

    pub fn x(a: usize, b: usize) -> VarId {
        VarId::new(Family::X, a, b)
    }
    pub fn y(a: usize, c: usize) -> VarId {
        VarId::new(Family::Y, a, c)
    }
    pub fn alpha(j: usize, k: usize) -> VarId {
        VarId::new(Family::Alpha, j, k)
    }
    pub fn beta(i: usize, h: usize) -> VarId {
        VarId::new(Family::Beta, i, h)
    }
    pub fn z(i: usize) -> VarId {
        VarId::new(Family::Z, i, 0)
    }

    pub fn family(self) -> Family {
        Family::from_bits(self.0 >> (2 * IDX_BITS))
    }
    pub fn i(self) -> usize {
        ((self.0 >> IDX_BITS) & IDX_MASK) as usize
    }
    pub fn j(self) -> usize {
        (self.0 & IDX_MASK) as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family() {
            Family::Z => write!(f, "z[{}]", self.i()),
            fam => write!(f, "{}[{},{}]", fam.name(), self.i(), self.j()),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for VarId {
    type Err = Error;

    /// Parses `x[1,2]`, `beta[3,1]`, `z[4]`.
    fn from_str(s: &str) -> Result<VarId> {
        let bad = || Error::Parse(format!("bad variable {s:?}"));
        let s = s.trim();
        let open = s.find('[').ok_or_else(bad)?;
        let body = s[open + 1..].strip_suffix(']').ok_or_else(bad)?;
        let family = Family::from_name(&s[..open])?;
        let idx = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (family, idx.as_slice()) {
            (Family::Z, [i]) => Ok(VarId::z(*i)),
            (Family::Z, _) => Err(bad()),
            (fam, [i, j]) => Ok(VarId::new(fam, *i, *j)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip_and_order() {
        let v = VarId::beta(6, 4);
        assert_eq!((v.family(), v.i(), v.j()), (Family::Beta, 6, 4));
        assert!(VarId::x(9, 9) < VarId::y(1, 1));
        assert!(VarId::y(1, 5) < VarId::y(2, 1));
        assert!(VarId::beta(1, 1) < VarId::z(1));
        for s in ["x[1,2]", "alpha[3,1]", "z[4]"] {
            assert_eq!(s.parse::<VarId>().unwrap().to_string(), s);
        }
        assert!("w[1,1]".parse::<VarId>().is_err());
        assert!("z[1,1]".parse::<VarId>().is_err());
    }
}
