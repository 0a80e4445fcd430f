//! Sparse exact-integer polynomials in the families `x`, `y`, `α`, `β` (and
//! `z` for the Schur oracle), the `y`-monomial order, and determinants.

mod det;
mod integer;
pub mod json;
mod monomial;
mod order;
mod poly;
mod var;

pub use det::{determinant, determinant_restricted, BlockCounts, DetRing, Matrix, SymbolicMatrix};
pub use integer::Integer;
pub use monomial::Monomial;
pub use order::{compare, leading_monomial, YOrder};
pub use poly::Polynomial;
pub use var::{Family, VarId};

