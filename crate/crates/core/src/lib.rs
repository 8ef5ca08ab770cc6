//! Regions of variability of `log f'(z0)` for the class of normalized, locally
//! univalent functions with `log f' ≺ (A/B - 1) Log(1 + B z)` and a prescribed
//! second coefficient `f''(0) = lambda (A - B)`.
//!
//! - [`region`]: disk automorphisms, the variability disk, boundary curve and
//!   exact membership test.
//! - [`extremal`]: the extremal functions by contour quadrature.
//! - [`schwarz`]: class members generated from bounded analytic functions.
//! - [`verify`]: numerical verification suites.
//! - [`cli`]: the `varregion` command-line front-end.

// `!(x > 0.0)` style checks deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod extremal;
pub mod geometry;
pub mod quadrature;
pub mod region;
pub mod schwarz;
pub mod seed;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
