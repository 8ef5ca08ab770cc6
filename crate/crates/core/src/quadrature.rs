//! Composite Gauss–Legendre quadrature of complex integrands along straight segments.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes are roots of `P_n`, found by Newton iteration from Chebyshev guesses.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return domain(format!("Gauss-Legendre needs at least 2 nodes (got {n})"));
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integral of `f` along the segment from `start` to `end`, `panels` equal pieces.
    pub fn segment<F>(&self, f: &F, start: Complex64, end: Complex64, panels: usize) -> Complex64
    where
        F: Fn(Complex64) -> Complex64,
    {
        let step = (end - start) / panels as f64;
        let half = step * 0.5;
        let mut total = Complex64::new(0.0, 0.0);
        for p in 0..panels {
            let mid = start + step * (p as f64 + 0.5);
            let mut acc = Complex64::new(0.0, 0.0);
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                acc += *w * f(mid + half * *x);
            }
            total += acc * half;
        }
        total
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub nodes_per_panel: usize,
    pub max_panels: usize,
    pub abs_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            nodes_per_panel: 16,
            max_panels: 1 << 12,
            abs_tol: 1e-12,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nodes_per_panel < 2 {
            return domain("nodes_per_panel >= 2 violated");
        }
        if self.max_panels < 1 {
            return domain("max_panels >= 1 violated");
        }
        if !(self.abs_tol > 0.0) {
            return domain("abs_tol > 0 violated");
        }
        Ok(())
    }
}

/// Adaptive composite quadrature: the panel count doubles until two successive
/// estimates differ by at most `abs_tol`.
pub fn integrate_segment<F>(f: F, start: Complex64, end: Complex64, cfg: &QuadratureConfig) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    cfg.validate()?;
    if start == end {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let rule = GaussLegendre::new(cfg.nodes_per_panel)?;
    let mut panels = 1;
    let mut estimate = rule.segment(&f, start, end, panels);
    let mut achieved = f64::INFINITY;
    while panels * 2 <= cfg.max_panels {
        panels *= 2;
        let refined = rule.segment(&f, start, end, panels);
        achieved = (refined - estimate).norm();
        estimate = refined;
        if achieved <= cfg.abs_tol {
            return Ok(estimate);
        }
    }
    Err(Error::Convergence {
        estimate,
        achieved,
        requested: cfg.abs_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn weights_sum_to_two_and_nodes_symmetric() {
        for n in [2, 3, 5, 16, 33] {
            let r = GaussLegendre::new(n).unwrap();
            assert_abs_diff_eq!(r.weights().iter().sum::<f64>(), 2.0, epsilon = 1e-14);
            for i in 0..n {
                assert_abs_diff_eq!(r.nodes()[i], -r.nodes()[n - 1 - i], epsilon = 1e-15);
            }
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
        }
        assert!(GaussLegendre::new(1).is_err());
    }

    #[test]
    fn two_point_rule() {
        let r = GaussLegendre::new(2).unwrap();
        assert_abs_diff_eq!(r.nodes()[1], 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(r.weights()[0], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn exact_for_degree_2n_minus_1() {
        let r = GaussLegendre::new(5).unwrap();
        // x^9 integrates to 0, x^8 to 2/9 on [-1, 1].
        let f = |z: Complex64| z.powi(8) + z.powi(9);
        let v = r.segment(&f, Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), 1);
        assert_abs_diff_eq!(v.re, 2.0 / 9.0, epsilon = 1e-15);
    }

    #[test]
    fn complex_path() {
        let end = Complex64::new(0.3, 0.6);
        let v = integrate_segment(|z| z.exp(), Complex64::new(0.0, 0.0), end, &QuadratureConfig::default()).unwrap();
        assert_abs_diff_eq!((v - (end.exp() - 1.0)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn non_convergence_is_reported() {
        let cfg = QuadratureConfig {
            nodes_per_panel: 2,
            max_panels: 4,
            abs_tol: 1e-15,
        };
        let err = integrate_segment(|z| 1.0 / (1.001 - z), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), &cfg)
            .unwrap_err();
        match err {
            Error::Convergence { achieved, .. } => assert!(achieved > 1e-15),
            other => panic!("{other:?}"),
        }
    }
}
