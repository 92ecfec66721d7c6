//! Symplectic invariants of the coupled angular momenta system.
//!
//! The crate computes the Taylor series invariant, the polygon invariant, the
//! height invariant, the twisting index and the number of focus-focus points,
//! and pairs each closed form with an independent numerical evaluation.

pub mod abelian;
pub mod coefficients;
pub mod elliptic;
pub mod error;
pub mod global;
pub mod params;
pub mod quadrature;
pub mod reduced;
pub mod report;
pub mod series;
pub mod taylor;
pub mod verify;

pub use error::{Error, Result};
pub use params::{CriticalInterval, DiscriminantRoot, FixedPointClass, ModelParams, ParamChart};
