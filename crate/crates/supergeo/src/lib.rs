//! Exact symbolic computation for the algebra of the super skew field
//! `D = k[theta]` with `theta` odd and `theta^2 = -1`, for `D`-modules and the
//! supergroup `Gm(1|1)`, and for the affine-cell geometry of Pi-projective
//! superspace, including the supercommutant product of Pi-invertible sheaves.
//!
//! Everything runs over the Gaussian rationals `Q(i)`; there is no floating
//! point anywhere. Polynomial arithmetic is supercommutative (odd generators
//! anticommute and square to zero) with Laurent exponents at designated
//! invertible variables, so every identity checked by this crate is checked
//! exactly.
//!
//! The library is organised bottom-up:
//!
//! * [`scalar`]: Gaussian rational scalars.
//! * [`superpoly`]: supercommutative Laurent polynomials, substitution,
//!   inversion of units.
//! * [`supermatrix`]: matrices over those rings, unit-pivot elimination,
//!   the rank `1|1` Berezinian.
//! * [`dskew`]: the skew field `D`, its opposite, and the map
//!   `psi: D (x) D^o -> End(D)`.
//! * [`dmodule`]: odd involutions `phi` encoding left/right `D`-module
//!   structures and their canonical form.
//! * [`g11m`]: the multiplicative supergroup `Gm(1|1)`, its `SL(1|1)`
//!   embedding, and its coordinate action.
//! * [`piproj`]: affine cells of Pi-projective superspace, invariant
//!   generators, the trivialising bundle maps, tautological sections and
//!   their cocycles, and global invariant functions.
//! * [`picompose`]: supercommutants of `D`-bimodule tensors, the two
//!   composition products of Pi-invertible sheaves, and the Morita-style
//!   rank check.
//! * [`parse`] and [`cli`]: the expression language and the `supergeo`
//!   command line on top of it.
//!
//! Each major capability also has a runnable program under `examples/`;
//! `cargo run --example` with no name lists them.

pub mod cli;
pub mod dmodule;
pub mod dskew;
pub mod error;
pub mod g11m;
pub mod parse;
pub mod picompose;
pub mod piproj;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod supermatrix;
pub mod superpoly;

pub use error::{Error, Result};
