//! Extremal functions `F_{a,lambda}(z) = int_0^z (1 + B t delta(a t, lambda))^{(A-B)/B} dt`.
//!
//! For `|a| = 1` these attain the boundary of the region of variability; for
//! `|a| < 1` they are interior members of the class.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::quadrature::{integrate_segment, QuadratureConfig};
use crate::region::{delta, principal_pow, JanowskiParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalSpec {
    a: Complex64,
    lambda: Complex64,
    params: JanowskiParams,
}

impl ExtremalSpec {
    pub fn new(a: Complex64, lambda: Complex64, params: JanowskiParams) -> Result<Self> {
        if !(a.norm() <= 1.0 + 1e-15) {
            return domain(format!("|a| <= 1 violated (|a|={})", a.norm()));
        }
        if !(lambda.norm() < 1.0) {
            return domain(format!("|lambda| < 1 violated (|lambda|={})", lambda.norm()));
        }
        Ok(Self { a, lambda, params })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn params(&self) -> &JanowskiParams {
        &self.params
    }

    /// `1 + B z delta(a z, lambda)`, i.e. `(F'(z))^{B/(A-B)}`.
    #[inline]
    pub fn pullback(&self, z: Complex64) -> Complex64 {
        1.0 + self.params.b() * z * delta(self.a * z, self.lambda)
    }
}

fn check_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return domain(format!("|z| < 1 violated (|z|={})", z.norm()));
    }
    Ok(())
}

/// `F'_{a,lambda}(z)`, principal branch; equals 1 at the origin.
pub fn extremal_fprime(spec: &ExtremalSpec, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(principal_pow(spec.pullback(z), spec.params.exponent()))
}

/// `log F'_{a,lambda}(z)` taken directly as `((A-B)/B) Log(pullback)`.
pub fn log_extremal_fprime(spec: &ExtremalSpec, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(spec.params.exponent() * spec.pullback(z).ln())
}

/// `F_{a,lambda}(z)` by adaptive Gauss–Legendre quadrature along `[0, z]`.
pub fn extremal_value(spec: &ExtremalSpec, z: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    extremal_path_integral(spec, Complex64::new(0.0, 0.0), z, cfg)
}

/// Integral of `F'` from `start` to `end` along the straight segment.
pub fn extremal_path_integral(
    spec: &ExtremalSpec,
    start: Complex64,
    end: Complex64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    check_disk(start)?;
    check_disk(end)?;
    let p = spec.params.exponent();
    integrate_segment(|t| principal_pow(spec.pullback(t), p), start, end, cfg)
}

/// Antiderivative of the `a = 0` integrand `(1 + B lambda t)^{(A-B)/B}` vanishing at 0.
///
/// `((1 + B lambda z)^{A/B} - 1)/(lambda A)` for `A != 0`, `Log(1 + B lambda z)/(B lambda)`
/// for `A = 0`, and `z` when `lambda = 0` (the integrand is then identically 1).
pub fn closed_form_a0(lambda: Complex64, params: &JanowskiParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    if !(lambda.norm() < 1.0) {
        return domain(format!("|lambda| < 1 violated (|lambda|={})", lambda.norm()));
    }
    if lambda.norm_sqr() == 0.0 {
        return Ok(z);
    }
    let (a, b) = (params.a(), params.b());
    let u = 1.0 + b * lambda * z;
    if a == 0.0 {
        Ok(u.ln() / (b * lambda))
    } else {
        Ok((principal_pow(u, a / b) - 1.0) / (lambda * a))
    }
}
