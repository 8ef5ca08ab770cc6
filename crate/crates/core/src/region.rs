//! Closed-form description of the region of variability of `log f'(z0)`.
//!
//! For a member `f` of the class with `f''(0) = lambda (A - B)` the quantity
//! `(f'(z0))^{B/(A-B)}` ranges over the closed disk with center
//! `c(z0, lambda)` and radius `r(z0, lambda)`. The region itself is the image of
//! that disk under `u -> ((A - B)/B) Log u`, a convex Jordan domain whose
//! boundary is traced by `theta -> boundary_point(theta, ...)`.
//!
//! All logarithms and complex powers use the principal branch. Every `u` in the
//! disk satisfies `|u - 1| <= |B||z0| < 1`, so `Re u > 0` and the branch cut is
//! never crossed.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Default absolute tolerance on the pullback modulus used by [`contains`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// Parameter pair `(A, B)` with `-1 <= A < B <= 1` and `B != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct JanowskiParams {
    a: f64,
    b: f64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
}

impl TryFrom<RawParams> for JanowskiParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        JanowskiParams::new(raw.a, raw.b)
    }
}

impl From<JanowskiParams> for RawParams {
    fn from(p: JanowskiParams) -> Self {
        RawParams { a: p.a, b: p.b }
    }
}

impl JanowskiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return domain(format!("A and B must be finite (got A={a}, B={b})"));
        }
        if a < -1.0 {
            return domain(format!("-1 <= A violated (A={a})"));
        }
        if b > 1.0 {
            return domain(format!("B <= 1 violated (B={b})"));
        }
        if a >= b {
            return domain(format!("A < B violated (A={a}, B={b})"));
        }
        if b == 0.0 {
            return domain("B != 0 violated (the class is undefined for B = 0)");
        }
        Ok(Self { a, b })
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    /// `(A - B)/B`, the exponent carrying `Log(1 + B w)` to `log f'`.
    #[inline]
    pub fn exponent(&self) -> f64 {
        (self.a - self.b) / self.b
    }

    /// `B/(A - B)`, the exponent of the pullback `(f')^{B/(A-B)}`.
    #[inline]
    pub fn inverse_exponent(&self) -> f64 {
        self.b / (self.a - self.b)
    }
}

/// Evaluation data: a point `z0` of the open unit disk and the second
/// coefficient parameter `lambda` in the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPoint", into = "RawPoint")]
pub struct EvalPoint {
    z0: Complex64,
    lambda: Complex64,
}

#[derive(Serialize, Deserialize)]
struct RawPoint {
    z0: [f64; 2],
    lambda: [f64; 2],
}

impl TryFrom<RawPoint> for EvalPoint {
    type Error = Error;
    fn try_from(raw: RawPoint) -> Result<Self> {
        EvalPoint::new(
            Complex64::new(raw.z0[0], raw.z0[1]),
            Complex64::new(raw.lambda[0], raw.lambda[1]),
        )
    }
}

impl From<EvalPoint> for RawPoint {
    fn from(p: EvalPoint) -> Self {
        RawPoint {
            z0: [p.z0.re, p.z0.im],
            lambda: [p.lambda.re, p.lambda.im],
        }
    }
}

impl EvalPoint {
    pub fn new(z0: Complex64, lambda: Complex64) -> Result<Self> {
        if !(z0.is_finite() && lambda.is_finite()) {
            return domain("z0 and lambda must be finite");
        }
        if z0.norm() >= 1.0 {
            return domain(format!("|z0| < 1 violated (|z0|={})", z0.norm()));
        }
        if lambda.norm() > 1.0 {
            return domain(format!("|lambda| <= 1 violated (|lambda|={})", lambda.norm()));
        }
        Ok(Self { z0, lambda })
    }

    /// Shorthand for a real `lambda`.
    pub fn real(z0: Complex64, lambda: f64) -> Result<Self> {
        Self::new(z0, Complex64::new(lambda, 0.0))
    }

    #[inline]
    pub fn z0(&self) -> Complex64 {
        self.z0
    }

    #[inline]
    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    /// Whether `lambda` lies on the unit circle (singleton region).
    pub fn has_unit_lambda(&self) -> bool {
        (self.lambda.norm() - 1.0).abs() <= 1e-15
    }

    /// The equivalent point with `lambda` real and non-negative.
    ///
    /// Uses `V_{lambda e^{it}}(z0) = V_lambda(e^{it} z0)`: writing
    /// `lambda = |lambda| e^{it}` the region at `(z0, lambda)` equals the region
    /// at `(e^{it} z0, |lambda|)`.
    pub fn canonical(&self) -> EvalPoint {
        let (modulus, arg) = self.lambda.to_polar();
        if modulus == 0.0 || (self.lambda.im == 0.0 && self.lambda.re >= 0.0) {
            return *self;
        }
        EvalPoint {
            z0: self.z0 * Complex64::from_polar(1.0, arg),
            lambda: Complex64::new(modulus.min(1.0), 0.0),
        }
    }

    fn real_lambda_in_unit_interval(&self) -> Result<f64> {
        let lam = self.lambda;
        if lam.im != 0.0 {
            return domain(format!(
                "closed-form disk needs real lambda (got {}+{}i); use the canonical point",
                lam.re, lam.im
            ));
        }
        if !(0.0..1.0).contains(&lam.re) {
            return domain(format!("0 <= lambda < 1 violated (lambda={})", lam.re));
        }
        Ok(lam.re)
    }
}

/// A closed disk in the complex plane. `radius = 0` encodes a single point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) || !center.is_finite() || !radius.is_finite() {
            return domain(format!("disk radius must be finite and >= 0 (got {radius})"));
        }
        Ok(Self { center, radius })
    }

    /// `c + a r`.
    #[inline]
    pub fn point(&self, a: Complex64) -> Complex64 {
        self.center + a * self.radius
    }

    /// Signed distance `|p - center| - radius`; negative inside.
    #[inline]
    pub fn signed_distance(&self, p: Complex64) -> f64 {
        (p - self.center).norm() - self.radius
    }

    pub fn contains(&self, p: Complex64, tol: f64) -> bool {
        self.signed_distance(p) <= tol
    }
}

/// Disk automorphism `delta(z, lambda) = (z + lambda) / (1 + conj(lambda) z)`.
pub fn mobius_delta(z: Complex64, lambda: Complex64) -> Result<Complex64> {
    if lambda.norm() >= 1.0 {
        return domain(format!("|lambda| < 1 violated (|lambda|={})", lambda.norm()));
    }
    Ok((z + lambda) / (Complex64::new(1.0, 0.0) + lambda.conj() * z))
}

/// Inverse automorphism `(s - lambda) / (1 - conj(lambda) s)`.
pub fn mobius_delta_inv(s: Complex64, lambda: Complex64) -> Result<Complex64> {
    let denom = Complex64::new(1.0, 0.0) - lambda.conj() * s;
    if denom == Complex64::new(0.0, 0.0) {
        return domain("1 - conj(lambda) s vanishes");
    }
    Ok((s - lambda) / denom)
}

// Unchecked variant for inner loops where |lambda| < 1 is already established.
#[inline]
pub(crate) fn delta(z: Complex64, lambda: Complex64) -> Complex64 {
    (z + lambda) / (1.0 + lambda.conj() * z)
}

/// `phi(z) = (A - B) z / (1 + B z)`.
pub fn phi_target(z: Complex64, params: &JanowskiParams) -> Complex64 {
    (params.a - params.b) * z / (1.0 + params.b * z)
}

/// Majorant `q(z) = (1 + B z)^{A/B - 1}`, or `exp(A z)` when `B = 0`.
///
/// Unlike [`JanowskiParams`], this accepts `B = 0`.
pub fn majorant_q(z: Complex64, a: f64, b: f64) -> Result<Complex64> {
    if !(-1.0..=1.0).contains(&a) || !(-1.0..=1.0).contains(&b) || a >= b {
        return domain(format!("-1 <= A < B <= 1 violated (A={a}, B={b})"));
    }
    if b == 0.0 {
        return Ok((a * z).exp());
    }
    Ok(principal_pow(1.0 + b * z, a / b - 1.0))
}

/// Principal-branch power `exp(p Log u)`.
#[inline]
pub fn principal_pow(u: Complex64, p: f64) -> Complex64 {
    (p * u.ln()).exp()
}

/// The disk `D(c(z0, lambda), r(z0, lambda))` swept by `(f'(z0))^{B/(A-B)}`.
///
/// Requires `lambda` real in `[0, 1)`; other `lambda` reduce to this case
/// through [`EvalPoint::canonical`].
pub fn variability_disk(point: &EvalPoint, params: &JanowskiParams) -> Result<Disk> {
    let lam = point.real_lambda_in_unit_interval()?;
    let z = point.z0;
    let z2 = z.norm_sqr();
    let b = params.b;
    let denom = 1.0 - lam * lam * z2;
    let center = (Complex64::new(1.0 - lam * lam * z2, 0.0) + lam * b * (1.0 - z2) * z) / denom;
    let radius = b.abs() * (1.0 - lam * lam) * z2 / denom;
    Ok(Disk { center, radius })
}

/// `((A - B)/B) Log(c + a r)` for `|a| <= 1`.
pub fn region_point(a: Complex64, point: &EvalPoint, params: &JanowskiParams) -> Result<Complex64> {
    if a.norm() > 1.0 + 1e-15 {
        return domain(format!("|a| <= 1 violated (|a|={})", a.norm()));
    }
    let disk = variability_disk(point, params)?;
    Ok(params.exponent() * disk.point(a).ln())
}

/// `log F'_{e^{i theta}, lambda}(z0) = ((A - B)/B) Log(1 + B z0 delta(e^{i theta} z0, lambda))`.
pub fn boundary_point(theta: f64, point: &EvalPoint, params: &JanowskiParams) -> Result<Complex64> {
    let lam = point.real_lambda_in_unit_interval()?;
    let z = point.z0;
    let d = delta(Complex64::from_polar(1.0, theta) * z, Complex64::new(lam, 0.0));
    Ok(params.exponent() * (1.0 + params.b * z * d).ln())
}

/// Disk parameter `a` with `region_point(a) == boundary_point(theta)`.
///
/// Equals `sgn(B) (z0^2/|z0|^2) (e^{i theta} + lambda conj(z0)) / (1 + lambda e^{i theta} z0)`.
/// The leading unimodular factor is 1 for positive `z0` and `B`.
pub fn boundary_parameter(theta: f64, point: &EvalPoint, params: &JanowskiParams) -> Result<Complex64> {
    let lam = point.real_lambda_in_unit_interval()?;
    let z = point.z0;
    if z.norm_sqr() == 0.0 {
        return Err(Error::DegeneratePoint);
    }
    let e = Complex64::from_polar(1.0, theta);
    let phase = params.b.signum() * z * z / z.norm_sqr();
    Ok(phase * (e + lam * z.conj()) / (1.0 + lam * e * z))
}

/// One sample of the boundary curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub theta: f64,
    pub value: Complex64,
}

/// Ordered samples of the Jordan curve `theta -> log F'_{e^{i theta}, lambda}(z0)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    samples: Vec<CurveSample>,
}

impl BoundaryCurve {
    /// Validates ordering and finiteness; geometric checks live in `verify`.
    pub fn from_samples(samples: Vec<CurveSample>) -> Result<Self> {
        if samples.windows(2).any(|w| !(w[0].theta < w[1].theta)) {
            return domain("boundary thetas must be strictly increasing");
        }
        if samples.iter().any(|s| !s.value.is_finite() || !s.theta.is_finite()) {
            return domain("boundary values must be finite");
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[CurveSample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.samples.iter().map(|s| s.value)
    }
}

/// Samples the boundary at `theta_k = -pi + 2 pi k / n`, `k = 1..=n`.
pub fn boundary_curve(point: &EvalPoint, params: &JanowskiParams, n: usize) -> Result<BoundaryCurve> {
    if n < 3 {
        return Err(Error::Size(format!("boundary curve needs n >= 3 samples (got {n})")));
    }
    let samples = (1..=n)
        .map(|k| {
            let theta = if k == n { PI } else { -PI + 2.0 * PI * k as f64 / n as f64 };
            boundary_point(theta, point, params).map(|value| CurveSample { theta, value })
        })
        .collect::<Result<Vec<_>>>()?;
    BoundaryCurve::from_samples(samples)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

impl Membership {
    pub fn as_str(&self) -> &'static str {
        match self {
            Membership::Interior => "interior",
            Membership::Boundary => "boundary",
            Membership::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub status: Membership,
    /// `|pullback| - |z0|`; infinite when `w` is not a principal-branch logarithm image.
    pub slack: f64,
}

/// Exact membership test for the region at `(z0, lambda)`, any complex `|lambda| < 1`.
///
/// Undoes the logarithm, `u = exp(w B/(A - B))`, recovers the Schwarz quotient
/// `zeta = (u - 1)/(B z0)` and pulls it back through the automorphism fixing
/// `lambda`. By the Schwarz lemma `w` is attainable iff the pullback has
/// modulus at most `|z0|`.
pub fn contains(w: Complex64, point: &EvalPoint, params: &JanowskiParams, tol: f64) -> Result<MembershipVerdict> {
    let z = point.z0;
    let lam = point.lambda;
    if z.norm_sqr() == 0.0 {
        return Err(Error::DegeneratePoint);
    }
    if lam.norm() >= 1.0 {
        return domain(format!("|lambda| < 1 violated (|lambda|={})", lam.norm()));
    }
    if !(tol > 0.0) {
        return domain(format!("tol > 0 violated (tol={tol})"));
    }
    let outside = MembershipVerdict {
        status: Membership::Outside,
        slack: f64::INFINITY,
    };
    let log_u = w * params.inverse_exponent();
    // Region values have Re u > 0, so Log u has |Im| < pi/2.
    if !log_u.is_finite() || log_u.im.abs() >= FRAC_PI_2 {
        return Ok(outside);
    }
    let zeta = (log_u.exp() - 1.0) / (params.b * z);
    let t = match mobius_delta_inv(zeta, lam) {
        Ok(t) => t,
        Err(_) => return Ok(outside),
    };
    let slack = t.norm() - z.norm();
    let status = if slack.abs() <= tol {
        Membership::Boundary
    } else if slack < 0.0 {
        Membership::Interior
    } else {
        Membership::Outside
    };
    Ok(MembershipVerdict { status, slack })
}

/// Disk `D((1 - AB)/(1 - B^2), (B - A)/(1 - B^2))` containing `1 + z f''/f'` on
/// the Janowski class. Undefined at `B = 1`, where it becomes the half-plane `Re > (1 + A)/2`.
pub fn janowski_disk(params: &JanowskiParams) -> Result<Disk> {
    let (a, b) = (params.a, params.b);
    if b >= 1.0 {
        return domain("janowski_disk needs B < 1 (B = 1 is a half-plane)");
    }
    let d = 1.0 - b * b;
    Ok(Disk {
        center: Complex64::new((1.0 - a * b) / d, 0.0),
        radius: (b - a) / d,
    })
}

/// The value set of `log f'(z0)` in closed form, covering the degenerate cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegionShape {
    /// `z0 = 0` or `|lambda| = 1`.
    Singleton(Complex64),
    /// The image of `disk` under `u -> ((A - B)/B) Log u`, at the canonical point.
    Disk { canonical: EvalPoint, disk: Disk },
}

/// Singleton value `((A - B)/B) Log(1 + B lambda z0)` for `|lambda| = 1`.
pub fn unit_lambda_singleton(point: &EvalPoint, params: &JanowskiParams) -> Complex64 {
    params.exponent() * (1.0 + params.b * point.lambda * point.z0).ln()
}

pub fn variability_region(point: &EvalPoint, params: &JanowskiParams) -> Result<RegionShape> {
    if point.z0.norm_sqr() == 0.0 {
        return Ok(RegionShape::Singleton(Complex64::new(0.0, 0.0)));
    }
    if point.has_unit_lambda() {
        return Ok(RegionShape::Singleton(unit_lambda_singleton(point, params)));
    }
    let canonical = point.canonical();
    let disk = variability_disk(&canonical, params)?;
    Ok(RegionShape::Disk { canonical, disk })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn example() -> (EvalPoint, JanowskiParams) {
        (EvalPoint::real(c(0.5, 0.0), 0.5).unwrap(), JanowskiParams::new(0.0, 0.5).unwrap())
    }

    #[test]
    fn params_validation() {
        assert!(JanowskiParams::new(0.0, 0.5).is_ok());
        assert!(JanowskiParams::new(-1.0, 1.0).is_ok());
        assert!(JanowskiParams::new(-0.9, -0.1).is_ok());
        assert!(JanowskiParams::new(-0.5, 0.0).is_err());
        assert!(JanowskiParams::new(0.5, 0.5).is_err());
        assert!(JanowskiParams::new(0.6, 0.5).is_err());
        assert!(JanowskiParams::new(-1.1, 0.5).is_err());
        assert!(JanowskiParams::new(0.0, 1.1).is_err());
        let msg = JanowskiParams::new(0.7, 0.5).unwrap_err().to_string();
        assert!(msg.contains("A < B"), "{msg}");
    }

    #[test]
    fn point_validation() {
        assert!(EvalPoint::new(c(1.0, 0.0), c(0.0, 0.0)).is_err());
        assert!(EvalPoint::new(c(0.5, 0.0), c(1.0, 0.1)).is_err());
        assert!(EvalPoint::new(c(0.5, 0.0), c(0.0, 1.0)).unwrap().has_unit_lambda());
    }

    #[test]
    fn delta_examples() {
        let lam = c(0.3, -0.4);
        assert_eq!(mobius_delta(c(0.0, 0.0), lam).unwrap(), lam);
        let z = c(0.2, 0.7);
        assert_eq!(mobius_delta(z, c(0.0, 0.0)).unwrap(), z);
        assert_abs_diff_eq!(mobius_delta(c(0.5, 0.0), c(0.5, 0.0)).unwrap().re, 0.8, epsilon = 1e-15);
        assert!(mobius_delta(z, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn delta_inv_examples() {
        let lam = c(0.3, -0.4);
        assert_abs_diff_eq!(mobius_delta_inv(lam, lam).unwrap().norm(), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(mobius_delta_inv(c(0.8, 0.0), c(0.5, 0.0)).unwrap().re, 0.5, epsilon = 1e-15);
        assert_eq!(mobius_delta_inv(c(0.0, 0.0), c(0.5, 0.0)).unwrap(), c(-0.5, 0.0));
        assert!(mobius_delta_inv(c(2.0, 0.0), c(0.5, 0.0)).is_err());
    }

    #[test]
    fn phi_and_majorant_examples() {
        let p = JanowskiParams::new(0.0, 0.5).unwrap();
        assert_eq!(phi_target(c(0.0, 0.0), &p), c(0.0, 0.0));
        assert_abs_diff_eq!(phi_target(c(0.5, 0.0), &p).re, -0.2, epsilon = 1e-15);
        assert_eq!(majorant_q(c(0.0, 0.0), 0.0, 0.5).unwrap(), c(1.0, 0.0));
        assert_abs_diff_eq!(majorant_q(c(0.5, 0.0), 0.0, 0.5).unwrap().re, 0.8, epsilon = 1e-15);
        let z = c(0.3, -0.2);
        let q = majorant_q(z, -0.5, 0.0).unwrap();
        assert_abs_diff_eq!((q - (-0.5 * z).exp()).norm(), 0.0, epsilon = 1e-15);
        assert!(majorant_q(z, 0.5, 0.0).is_err());
    }

    #[test]
    fn majorant_differential_identity() {
        // z q'/q = phi, with q' from central differences.
        let h = 1e-6;
        for &(a, b) in &[(0.0, 0.5), (-0.5, 0.5), (-1.0, 1.0), (0.3, 0.7), (-0.9, -0.1)] {
            let params = JanowskiParams::new(a, b).unwrap();
            for k in 0..24 {
                for &rho in &[0.1, 0.5, 0.9] {
                    let z = Complex64::from_polar(rho, k as f64 * PI / 12.0);
                    let dq = (majorant_q(z + h, a, b).unwrap() - majorant_q(z - h, a, b).unwrap()) / (2.0 * h);
                    let lhs = z * dq / majorant_q(z, a, b).unwrap();
                    assert!((lhs - phi_target(z, &params)).norm() < 1e-6, "A={a} B={b} z={z}");
                }
            }
        }
    }

    #[test]
    fn disk_examples() {
        let (pt, p) = example();
        let d = variability_disk(&pt, &p).unwrap();
        assert_abs_diff_eq!(d.center.re, 1.1, epsilon = 1e-12);
        assert_abs_diff_eq!(d.center.im, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d.radius, 0.1, epsilon = 1e-12);

        let origin = EvalPoint::real(c(0.0, 0.0), 0.3).unwrap();
        assert_eq!(variability_disk(&origin, &p).unwrap(), Disk { center: c(1.0, 0.0), radius: 0.0 });

        let z0 = c(0.3, 0.4);
        let zero_lam = EvalPoint::real(z0, 0.0).unwrap();
        let d0 = variability_disk(&zero_lam, &p).unwrap();
        assert_eq!(d0.center, c(1.0, 0.0));
        assert_eq!(d0.radius, 0.5 * z0.norm_sqr());

        assert!(variability_disk(&EvalPoint::new(z0, c(0.1, 0.1)).unwrap(), &p).is_err());
        assert!(variability_disk(&EvalPoint::real(z0, -0.1).unwrap(), &p).is_err());
    }

    #[test]
    fn region_and_boundary_examples() {
        let (pt, p) = example();
        assert_abs_diff_eq!(region_point(c(1.0, 0.0), &pt, &p).unwrap().re, -(1.2f64).ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(region_point(c(0.0, 0.0), &pt, &p).unwrap().re, -(1.1f64).ln(), epsilon = 1e-15);
        // c + a r = 1 at a = -1.
        assert_abs_diff_eq!(region_point(c(-1.0, 0.0), &pt, &p).unwrap().norm(), 0.0, epsilon = 1e-15);
        assert!(region_point(c(1.1, 0.0), &pt, &p).is_err());

        assert_abs_diff_eq!(boundary_point(0.0, &pt, &p).unwrap().re, -(1.2f64).ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(boundary_point(PI, &pt, &p).unwrap().norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn boundary_identity_with_phase() {
        for &(a, b) in &[(0.0, 0.5), (-0.9, -0.1), (-1.0, 1.0)] {
            let p = JanowskiParams::new(a, b).unwrap();
            for &z0 in &[c(0.5, 0.0), c(0.3, 0.4), c(-0.7, 0.0), c(0.0, 0.1)] {
                let pt = EvalPoint::real(z0, 0.3).unwrap();
                let worst = (0..256)
                    .map(|k| {
                        let t = -PI + 2.0 * PI * k as f64 / 256.0;
                        let a = boundary_parameter(t, &pt, &p).unwrap();
                        assert_abs_diff_eq!(a.norm(), 1.0, epsilon = 1e-14);
                        (boundary_point(t, &pt, &p).unwrap() - region_point(a, &pt, &p).unwrap()).norm()
                    })
                    .fold(0.0, f64::max);
                assert!(worst < 1e-12, "A={a} B={b} z0={z0}: {worst}");
            }
        }
    }

    #[test]
    fn curve_grid() {
        let (pt, p) = example();
        assert!(boundary_curve(&pt, &p, 2).is_err());
        let curve = boundary_curve(&pt, &p, 4).unwrap();
        let last = curve.samples().last().unwrap();
        assert_eq!(last.theta, PI);
        assert_abs_diff_eq!(last.value.norm(), 0.0, epsilon = 1e-15);
        let big = boundary_curve(&pt, &p, 64).unwrap();
        for s in big.samples() {
            assert_eq!(contains(s.value, &pt, &p, DEFAULT_TOL).unwrap().status, Membership::Boundary);
        }
    }

    #[test]
    fn zero_lambda_curve_is_log_of_circle() {
        let p = JanowskiParams::new(0.0, 0.5).unwrap();
        let pt = EvalPoint::real(c(0.5, 0.0), 0.0).unwrap();
        for s in boundary_curve(&pt, &p, 128).unwrap().samples() {
            // exponent is -1, so u = exp(-w).
            assert_abs_diff_eq!(((-s.value).exp() - 1.0).norm(), 0.125, epsilon = 1e-14);
        }
    }

    #[test]
    fn contains_examples() {
        let (pt, p) = example();
        let v = contains(c(-(1.2f64).ln(), 0.0), &pt, &p, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, Membership::Boundary);
        assert_eq!(contains(c(0.0, 0.0), &pt, &p, DEFAULT_TOL).unwrap().status, Membership::Boundary);
        let v = contains(c(-(1.125f64).ln(), 0.0), &pt, &p, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, Membership::Interior);
        assert_abs_diff_eq!(v.slack, -0.5, epsilon = 1e-14);
        assert_eq!(contains(c(0.5, 0.0), &pt, &p, DEFAULT_TOL).unwrap().status, Membership::Outside);
        // Another branch of the logarithm.
        let shifted = region_point(c(0.0, 0.0), &pt, &p).unwrap() + c(0.0, 2.0 * PI * p.exponent());
        assert_eq!(contains(shifted, &pt, &p, DEFAULT_TOL).unwrap().status, Membership::Outside);

        let origin = EvalPoint::real(c(0.0, 0.0), 0.5).unwrap();
        assert_eq!(contains(c(0.0, 0.0), &origin, &p, DEFAULT_TOL), Err(Error::DegeneratePoint));
        let unit = EvalPoint::real(c(0.5, 0.0), 1.0).unwrap();
        assert!(matches!(contains(c(0.0, 0.0), &unit, &p, DEFAULT_TOL), Err(Error::Domain(_))));
    }

    #[test]
    fn janowski_examples() {
        let d = janowski_disk(&JanowskiParams::new(0.0, 0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(d.center.re, 4.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.radius, 2.0 / 3.0, epsilon = 1e-15);
        for &(a, b) in &[(0.0, 0.5), (-0.5, 0.5), (0.3, 0.7), (-0.9, -0.1)] {
            let d = janowski_disk(&JanowskiParams::new(a, b).unwrap()).unwrap();
            assert_abs_diff_eq!(d.center.re - d.radius, (1.0 + a) / (1.0 + b), epsilon = 1e-14);
            assert_abs_diff_eq!(d.center.re + d.radius, (1.0 - a) / (1.0 - b), epsilon = 1e-14);
        }
        assert!(janowski_disk(&JanowskiParams::new(-1.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn radius_vanishes_as_lambda_tends_to_one() {
        let p = JanowskiParams::new(-0.5, 0.5).unwrap();
        let z0 = c(0.3, 0.4);
        let mut prev = f64::INFINITY;
        for k in 1..40 {
            let lam = 1.0 - 0.5f64.powi(k);
            let r = variability_disk(&EvalPoint::real(z0, lam).unwrap(), &p).unwrap().radius;
            assert!(r < prev);
            prev = r;
        }
        assert!(prev < 1e-11);
    }

    #[test]
    fn singleton_shapes() {
        let p = JanowskiParams::new(0.0, 0.5).unwrap();
        let origin = EvalPoint::real(c(0.0, 0.0), 0.5).unwrap();
        assert_eq!(variability_region(&origin, &p).unwrap(), RegionShape::Singleton(c(0.0, 0.0)));
        let unit = EvalPoint::real(c(0.5, 0.0), 1.0).unwrap();
        match variability_region(&unit, &p).unwrap() {
            RegionShape::Singleton(v) => assert_abs_diff_eq!(v.re, -(1.25f64).ln(), epsilon = 1e-15),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn serde_validates() {
        let p: JanowskiParams = serde_json::from_str(r#"{"A":0.0,"B":0.5}"#).unwrap();
        assert_eq!(p.b(), 0.5);
        assert!(serde_json::from_str::<JanowskiParams>(r#"{"A":0.6,"B":0.5}"#).is_err());
        let pt: EvalPoint = serde_json::from_str(r#"{"z0":[0.5,0.0],"lambda":[0.5,0.0]}"#).unwrap();
        assert_eq!(pt.z0(), c(0.5, 0.0));
    }

    fn disk_point(max: f64) -> impl Strategy<Value = Complex64> {
        (0.0..max, -PI..PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
    }

    fn params() -> impl Strategy<Value = JanowskiParams> {
        (-1.0f64..1.0, 0.0f64..1.0)
            .prop_filter_map("valid", |(b, s)| {
                let a = -1.0 + s * (b + 1.0);
                JanowskiParams::new(a, b).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn automorphism_inverse(z in disk_point(1.0), lam in disk_point(0.999)) {
            let s = mobius_delta(z, lam).unwrap();
            prop_assert!((mobius_delta_inv(s, lam).unwrap() - z).norm() < 1e-12);
            prop_assert!(s.norm() <= 1.0 + 1e-12);
        }

        #[test]
        fn unit_circle_is_preserved(t in -PI..PI, lam in disk_point(0.99)) {
            let s = mobius_delta(Complex64::from_polar(1.0, t), lam).unwrap();
            prop_assert!((s.norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn disk_image_has_positive_real_part(
            p in params(), z0 in disk_point(0.95), lam in 0.0f64..0.999, a in disk_point(1.0)
        ) {
            let pt = EvalPoint::real(z0, lam).unwrap();
            let d = variability_disk(&pt, &p).unwrap();
            prop_assert!(d.point(a).re > 0.0);
            let v = contains(region_point(a * 0.999, &pt, &p).unwrap(), &pt, &p, DEFAULT_TOL);
            if z0.norm() > 1e-3 && d.radius > 1e-6 {
                prop_assert_eq!(v.unwrap().status, Membership::Interior);
            }
        }

        #[test]
        fn rotation_equivariance(
            p in params(), z0 in disk_point(0.9), lam in disk_point(0.95),
            t in -PI..PI, a in disk_point(1.2)
        ) {
            prop_assume!(z0.norm() > 1e-3);
            // Probe points from a neighbourhood of the region at (e^{it} z0, lam).
            let rotated = EvalPoint::new(Complex64::from_polar(1.0, t) * z0, lam).unwrap();
            let canon = rotated.canonical();
            let d = variability_disk(&canon, &p).unwrap();
            let w = p.exponent() * (d.center + a * d.radius).ln();
            let moved = EvalPoint::new(z0, lam * Complex64::from_polar(1.0, t)).unwrap();
            let v1 = contains(w, &rotated, &p, DEFAULT_TOL).unwrap();
            let v2 = contains(w, &moved, &p, DEFAULT_TOL).unwrap();
            prop_assert_eq!(v1.status, v2.status);
            let v3 = contains(w, &canon, &p, DEFAULT_TOL).unwrap();
            prop_assert_eq!(v1.status, v3.status);
        }
    }
}
