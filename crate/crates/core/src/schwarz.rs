//! Members of the class built from bounded analytic functions.
//!
//! Every Schwarz function with `omega'(0) = lambda` has the form
//! `omega(z) = z delta(z psi(z), lambda)` for some analytic `psi` bounded by 1,
//! and then `f'(z) = (1 + B omega(z))^{(A-B)/B}`. The sampler only produces
//! `psi` whose bound holds by construction.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::region::{delta, JanowskiParams};

/// Closed forms of analytic self-maps of the closed disk.
#[derive(Debug, Clone, PartialEq)]
pub enum InnerForm {
    Constant(Complex64),
    /// `coeff * z^degree`.
    Monomial { degree: u32, coeff: Complex64 },
    /// `scale * rotation * prod (z - alpha_j)/(1 - conj(alpha_j) z)`.
    Blaschke {
        zeros: Vec<Complex64>,
        rotation: Complex64,
        scale: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct InnerFunction(InnerForm);

const UNIT_SLOP: f64 = 1e-15;

impl InnerFunction {
    pub fn constant(c0: Complex64) -> Result<Self> {
        if !(c0.norm() <= 1.0 + UNIT_SLOP) {
            return domain(format!("|c0| <= 1 violated (|c0|={})", c0.norm()));
        }
        Ok(Self(InnerForm::Constant(c0)))
    }

    pub fn monomial(degree: u32, coeff: Complex64) -> Result<Self> {
        if !(coeff.norm() <= 1.0 + UNIT_SLOP) {
            return domain(format!("|eta| <= 1 violated (|eta|={})", coeff.norm()));
        }
        Ok(Self(InnerForm::Monomial { degree, coeff }))
    }

    pub fn blaschke(zeros: Vec<Complex64>, rotation: Complex64, scale: f64) -> Result<Self> {
        if let Some(z) = zeros.iter().find(|z| !(z.norm() < 1.0)) {
            return domain(format!("Blaschke zero must satisfy |alpha| < 1 (got {z})"));
        }
        if !((rotation.norm() - 1.0).abs() <= 1e-12) {
            return domain(format!("|rotation| = 1 violated (|rotation|={})", rotation.norm()));
        }
        if !(0.0..=1.0).contains(&scale) {
            return domain(format!("scale in [0, 1] violated (scale={scale})"));
        }
        Ok(Self(InnerForm::Blaschke { zeros, rotation, scale }))
    }

    pub fn form(&self) -> &InnerForm {
        &self.0
    }

    /// `psi(z)` for `|z| <= 1`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match &self.0 {
            InnerForm::Constant(c0) => *c0,
            InnerForm::Monomial { degree, coeff } => coeff * z.powu(*degree),
            InnerForm::Blaschke { zeros, rotation, scale } => zeros
                .iter()
                .fold(rotation * *scale, |acc, alpha| acc * (z - alpha) / (1.0 - alpha.conj() * z)),
        }
    }
}

/// `psi(z)`; see [`InnerFunction::eval`].
pub fn inner_eval(psi: &InnerFunction, z: Complex64) -> Result<Complex64> {
    if !(z.norm() <= 1.0 + UNIT_SLOP) {
        return domain(format!("|z| <= 1 violated (|z|={})", z.norm()));
    }
    Ok(psi.eval(z))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    /// Upper bound on the modulus of Blaschke zeros.
    pub zero_radius: f64,
    /// Probability that a constant is drawn on the unit circle rather than inside the disk.
    pub unimodular_fraction: f64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            zero_radius: 0.9,
            unimodular_fraction: 0.25,
        }
    }
}

fn uniform_in_disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(-PI..PI))
}

/// Draws an inner function deterministically from `(seed, complexity)`.
///
/// Complexity 0 gives a constant, `k >= 1` a scaled Blaschke product with `k` zeros.
pub fn sample_inner(seed: u64, complexity: usize) -> InnerFunction {
    sample_inner_with(seed, complexity, &SamplerConfig::default())
}

pub fn sample_inner_with(seed: u64, complexity: usize, cfg: &SamplerConfig) -> InnerFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if complexity == 0 {
        let c0 = if rng.gen::<f64>() < cfg.unimodular_fraction {
            Complex64::from_polar(1.0, rng.gen_range(-PI..PI))
        } else {
            uniform_in_disk(&mut rng, 1.0)
        };
        return InnerFunction(InnerForm::Constant(c0));
    }
    let zeros = (0..complexity).map(|_| uniform_in_disk(&mut rng, cfg.zero_radius)).collect();
    let rotation = Complex64::from_polar(1.0, rng.gen_range(-PI..PI));
    let scale = rng.gen::<f64>();
    InnerFunction(InnerForm::Blaschke { zeros, rotation, scale })
}

/// `omega(z) = z delta(z psi(z), lambda)`: a Schwarz function with `omega'(0) = lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstrainedSchwarz {
    inner: InnerFunction,
    lambda: Complex64,
}

impl ConstrainedSchwarz {
    pub fn new(inner: InnerFunction, lambda: Complex64) -> Result<Self> {
        if !(lambda.norm() < 1.0) {
            return domain(format!("|lambda| < 1 violated (|lambda|={})", lambda.norm()));
        }
        Ok(Self { inner, lambda })
    }

    pub fn inner(&self) -> &InnerFunction {
        &self.inner
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }
}

fn check_open_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return domain(format!("|z| < 1 violated (|z|={})", z.norm()));
    }
    Ok(())
}

pub fn omega_eval(s: &ConstrainedSchwarz, z: Complex64) -> Result<Complex64> {
    check_open_disk(z)?;
    Ok(z * delta(z * s.inner.eval(z), s.lambda))
}

/// `log f'(z) = ((A-B)/B) Log(1 + B omega(z))` for the member generated by `s`.
pub fn member_log_fprime(s: &ConstrainedSchwarz, params: &JanowskiParams, z: Complex64) -> Result<Complex64> {
    let w = omega_eval(s, z)?;
    Ok(params.exponent() * (1.0 + params.b() * w).ln())
}

pub fn member_fprime(s: &ConstrainedSchwarz, params: &JanowskiParams, z: Complex64) -> Result<Complex64> {
    member_log_fprime(s, params, z).map(|l| l.exp())
}

/// `1 + z f''/f' = (1 + (2A - B) z^2)/(1 + B z^2)` for the member with `omega(z) = z^2`.
pub fn special_curvature(params: &JanowskiParams, z: Complex64) -> Result<Complex64> {
    check_open_disk(z)?;
    let z2 = z * z;
    Ok((1.0 + (2.0 * params.a() - params.b()) * z2) / (1.0 + params.b() * z2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{boundary_point, contains, EvalPoint, Membership, DEFAULT_TOL};
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sampler_is_deterministic_and_well_formed() {
        for seed in 0..50 {
            assert_eq!(sample_inner(seed, 0), sample_inner(seed, 0));
            match sample_inner(seed, 0).form() {
                InnerForm::Constant(c0) => assert!(c0.norm() <= 1.0 + 1e-15),
                other => panic!("{other:?}"),
            }
            match sample_inner(seed, 3).form() {
                InnerForm::Blaschke { zeros, rotation, scale } => {
                    assert_eq!(zeros.len(), 3);
                    assert!(zeros.iter().all(|a| a.norm() <= 0.9));
                    assert_abs_diff_eq!(rotation.norm(), 1.0, epsilon = 1e-15);
                    assert!((0.0..=1.0).contains(scale));
                }
                other => panic!("{other:?}"),
            }
        }
        assert_ne!(sample_inner(1, 2), sample_inner(2, 2));
    }

    #[test]
    fn inner_eval_examples() {
        let k = InnerFunction::constant(c(0.3, 0.4)).unwrap();
        assert_eq!(inner_eval(&k, c(0.9, 0.0)).unwrap(), c(0.3, 0.4));
        let alpha = c(0.2, -0.5);
        let b = InnerFunction::blaschke(vec![alpha, c(0.1, 0.1)], c(0.0, 1.0), 0.7).unwrap();
        assert_eq!(inner_eval(&b, alpha).unwrap(), c(0.0, 0.0));
        let single = InnerFunction::blaschke(vec![alpha], c(1.0, 0.0), 1.0).unwrap();
        for k in 0..64 {
            let z = Complex64::from_polar(1.0, k as f64 * PI / 32.0);
            assert_abs_diff_eq!(inner_eval(&single, z).unwrap().norm(), 1.0, epsilon = 1e-12);
        }
        let m = InnerFunction::monomial(3, c(0.0, -1.0)).unwrap();
        assert_abs_diff_eq!((inner_eval(&m, c(0.5, 0.0)).unwrap() - c(0.0, -0.125)).norm(), 0.0, epsilon = 1e-16);
        assert!(inner_eval(&m, c(1.5, 0.0)).is_err());
    }

    #[test]
    fn constructors_reject_unbounded_forms() {
        assert!(InnerFunction::constant(c(1.0, 0.1)).is_err());
        assert!(InnerFunction::monomial(2, c(1.1, 0.0)).is_err());
        assert!(InnerFunction::blaschke(vec![c(1.0, 0.0)], c(1.0, 0.0), 1.0).is_err());
        assert!(InnerFunction::blaschke(vec![], c(0.5, 0.0), 1.0).is_err());
        assert!(InnerFunction::blaschke(vec![], c(1.0, 0.0), 1.5).is_err());
        assert!(ConstrainedSchwarz::new(InnerFunction::constant(c(0.0, 0.0)).unwrap(), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn boundary_grid_bound() {
        for seed in 0..40u64 {
            let psi = sample_inner(seed, (seed % 5) as usize);
            let worst = (0..4096)
                .map(|k| psi.eval(Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 4096.0)).norm())
                .fold(0.0, f64::max);
            assert!(worst <= 1.0 + 1e-12, "seed {seed}: {worst}");
        }
    }

    #[test]
    fn omega_examples() {
        let s = ConstrainedSchwarz::new(sample_inner(3, 2), c(0.3, 0.2)).unwrap();
        assert_eq!(omega_eval(&s, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));

        let square = ConstrainedSchwarz::new(InnerFunction::constant(c(1.0, 0.0)).unwrap(), c(0.0, 0.0)).unwrap();
        let z = c(0.3, -0.6);
        assert_abs_diff_eq!((omega_eval(&square, z).unwrap() - z * z).norm(), 0.0, epsilon = 1e-16);

        let h = 1e-6;
        for seed in 0..20 {
            let lam = Complex64::from_polar(0.9 * (seed as f64 / 20.0), seed as f64);
            let s = ConstrainedSchwarz::new(sample_inner(seed, (seed % 4) as usize), lam).unwrap();
            let d = (omega_eval(&s, c(h, 0.0)).unwrap() - omega_eval(&s, c(-h, 0.0)).unwrap()) / (2.0 * h);
            assert!((d - lam).norm() < 1e-6);
        }
    }

    #[test]
    fn member_examples() {
        let p = JanowskiParams::new(-0.5, 0.5).unwrap();
        let s = ConstrainedSchwarz::new(sample_inner(11, 3), c(0.5, 0.0)).unwrap();
        assert_eq!(member_log_fprime(&s, &p, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));

        let z0 = c(0.3, 0.4);
        let pt = EvalPoint::real(z0, 0.5).unwrap();
        for k in 0..32 {
            let theta = -PI + 2.0 * PI * k as f64 / 32.0;
            let s = ConstrainedSchwarz::new(InnerFunction::constant(Complex64::from_polar(1.0, theta)).unwrap(), c(0.5, 0.0))
                .unwrap();
            let w = member_log_fprime(&s, &p, z0).unwrap();
            assert_abs_diff_eq!((w - boundary_point(theta, &pt, &p).unwrap()).norm(), 0.0, epsilon = 1e-15);
            assert_eq!(contains(w, &pt, &p, DEFAULT_TOL).unwrap().status, Membership::Boundary);
        }
    }

    #[test]
    fn member_second_coefficient() {
        let h = 1e-5;
        for seed in 0..30u64 {
            let p = JanowskiParams::new(-0.9, 0.6).unwrap();
            let lam = Complex64::from_polar(0.8, seed as f64 * 0.7);
            let s = ConstrainedSchwarz::new(sample_inner(seed, (seed % 4) as usize), lam).unwrap();
            let d2 = (member_fprime(&s, &p, c(h, 0.0)).unwrap() - member_fprime(&s, &p, c(-h, 0.0)).unwrap()) / (2.0 * h);
            assert!((d2 - lam * (p.a() - p.b())).norm() < 1e-5);
        }
    }

    #[test]
    fn curvature_examples() {
        let p = JanowskiParams::new(0.0, 0.5).unwrap();
        assert_eq!(special_curvature(&p, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let v = special_curvature(&p, c(0.99, 0.0)).unwrap();
        assert_abs_diff_eq!(v.re, 0.342_236_837_690_010_4, epsilon = 1e-15);
        for &(a, b) in &[(0.0, 0.5), (-0.5, 0.5), (0.3, 0.7), (-0.9, -0.1)] {
            let p = JanowskiParams::new(a, b).unwrap();
            let limit = special_curvature(&p, c(1.0 - 1e-9, 0.0)).unwrap().re;
            assert_abs_diff_eq!(limit, (1.0 + 2.0 * a - b) / (1.0 + b), epsilon = 1e-8);
            assert!(limit < (1.0 + a) / (1.0 + b));
        }
    }
}
