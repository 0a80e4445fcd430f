//! Exact construction and verification of determinantal highest weight
//! vectors for `GL_n` tensor product multiplicities.
//!
//! For partitions `D`, `E`, `F` with `|D| + |E| = |F|`, every
//! Littlewood–Richardson tableau `T` of shape `F^t − D^t` and content `E^t`
//! yields a highest weight vector `Δ_{(D,E,F),M(T)}`: the coefficient of the
//! `β`-monomial `M(T)` in the block determinant `det [X̃ Ỹ]`. Together these
//! form a basis of the corresponding isotypic component. This crate builds
//! all of the pieces and checks the claims with independent oracles.
//!
//! ```
//! use lrbasis::shapes::{LRTriple, Partition};
//! use lrbasis::tableaux::enumerate_lr;
//!
//! let p = |s: &str| s.parse::<Partition>().unwrap();
//! let triple = LRTriple::minimal(p("3,3,2,1,1"), p("3,3,2,1"), p("5,5,4,3,1,1")).unwrap();
//! assert_eq!(enumerate_lr(&triple).len(), 4);
//! ```

pub mod bz4;
pub mod cli;
pub mod error;
pub mod hwv;
pub mod oracle;
pub mod polyring;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
