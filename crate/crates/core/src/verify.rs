//! Executable checks of the inequalities, identities and equality cases that
//! describe the region of variability.
//!
//! Each suite returns a [`VerificationReport`]. Violations are measured
//! relative to the relevant radius where one exists, so a single tolerance
//! works across parameter grids.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::{log_extremal_fprime, ExtremalSpec};
use crate::geometry::{directed_hausdorff, find_self_intersection, turn_summary};
use crate::region::{
    boundary_curve, boundary_parameter, contains, janowski_disk, variability_disk, variability_region, BoundaryCurve,
    EvalPoint, JanowskiParams, Membership, RegionShape,
};
use crate::schwarz::{member_fprime, member_log_fprime, sample_inner, ConstrainedSchwarz, InnerFunction};
use crate::seed::mix_seed;

/// Failing witnesses kept per report; `failures` counts all of them.
const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Value,
    pub observed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite_name: String,
    pub parameter_sets: usize,
    pub samples: usize,
    pub max_violation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    /// Informational observations (sharpness margins, inclusion witnesses).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<Witness>,
}

impl VerificationReport {
    pub fn new(suite_name: &str, tolerance: f64) -> Self {
        Self {
            suite_name: suite_name.to_string(),
            parameter_sets: 0,
            samples: 0,
            max_violation: 0.0,
            tolerance,
            passed: true,
            failures: 0,
            witnesses: Vec::new(),
            evidence: Vec::new(),
        }
    }

    /// Records one measurement. NaN counts as an infinite violation.
    pub fn observe(&mut self, violation: f64, inputs: impl FnOnce() -> Value) {
        let v = if violation.is_nan() { f64::INFINITY } else { violation };
        self.samples += 1;
        self.max_violation = self.max_violation.max(v);
        if v > self.tolerance {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(Witness {
                    inputs: inputs(),
                    observed: v,
                });
            }
        }
        self.passed = self.max_violation <= self.tolerance;
    }

    pub fn note(&mut self, inputs: Value, observed: f64) {
        self.evidence.push(Witness { inputs, observed });
    }

    /// Combines two partial reports of the same suite.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.parameter_sets += other.parameter_sets;
        self.samples += other.samples;
        self.max_violation = self.max_violation.max(other.max_violation);
        self.failures += other.failures;
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
        self.evidence.extend(other.evidence);
        self.passed = self.max_violation <= self.tolerance;
        self
    }
}

fn merge_all(name: &str, tol: f64, parts: Vec<VerificationReport>) -> VerificationReport {
    parts
        .into_iter()
        .fold(VerificationReport::new(name, tol), VerificationReport::merge)
}

/// Parameter, lambda and z0 grids shared by the suites.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyGrid {
    pub params: Vec<JanowskiParams>,
    pub lambdas: Vec<f64>,
    pub points: Vec<Complex64>,
}

impl Default for VerifyGrid {
    fn default() -> Self {
        let params = [(0.0, 0.5), (-0.5, 0.5), (-1.0, 1.0), (0.3, 0.7), (-0.9, -0.1)]
            .iter()
            .map(|&(a, b)| JanowskiParams::new(a, b).expect("default grid is valid"))
            .collect();
        Self {
            params,
            lambdas: vec![0.0, 0.3, 0.5, 0.9],
            points: vec![
                Complex64::new(0.5, 0.0),
                Complex64::new(0.3, 0.4),
                Complex64::new(-0.7, 0.0),
                Complex64::new(0.0, 0.1),
            ],
        }
    }
}

impl VerifyGrid {
    /// All `(params, point)` pairs, `lambda` real.
    pub fn cases(&self) -> Vec<(JanowskiParams, EvalPoint)> {
        let mut out = Vec::new();
        for p in &self.params {
            for &lam in &self.lambdas {
                for &z0 in &self.points {
                    out.push((*p, EvalPoint::real(z0, lam).expect("grid point valid")));
                }
            }
        }
        out
    }
}

fn cjson(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn case_json(p: &JanowskiParams, pt: &EvalPoint) -> Value {
    json!({"A": p.a(), "B": p.b(), "z0": cjson(pt.z0()), "lambda": cjson(pt.lambda())})
}

/// Inner function for sample `index` of a stream seeded by `seed`.
///
/// Cycles through constants and Blaschke products of 1..=4 zeros, with every
/// seventh sample a monomial.
pub fn sample_member_inner(seed: u64, index: u64) -> InnerFunction {
    let s = mix_seed(&[seed, index]);
    if index % 7 == 6 {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let degree = rng.gen_range(0..6);
        let r = rng.gen::<f64>().sqrt();
        let coeff = Complex64::from_polar(r, rng.gen_range(-PI..PI));
        return InnerFunction::monomial(degree, coeff).expect("|coeff| <= 1");
    }
    sample_inner(s, (index % 5) as usize)
}

fn random_disk_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    Complex64::from_polar(radius * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI))
}

/// Pullback `(f'(z))^{B/(A-B)}` recovered from `log f'(z)`.
fn pullback(log_fprime: Complex64, params: &JanowskiParams) -> Complex64 {
    (log_fprime * params.inverse_exponent()).exp()
}

/// `|(f')^{B/(A-B)} - c| <= r` on sampled members, plus equality for the extremals.
pub fn check_prop1(grid: &VerifyGrid, n_samples: usize, tol: f64, seed: u64) -> VerificationReport {
    let cases = grid.cases();
    let parts = cases
        .par_iter()
        .enumerate()
        .map(|(ci, (params, pt))| {
            let mut rep = VerificationReport::new("prop1", tol);
            rep.parameter_sets = 1;
            let disk = variability_disk(pt, params).expect("real lambda grid");
            let scale = disk.radius.max(f64::EPSILON);
            let mut min_margin = f64::INFINITY;
            for k in 0..n_samples {
                let inner = sample_member_inner(mix_seed(&[seed, ci as u64]), k as u64);
                let s = ConstrainedSchwarz::new(inner, pt.lambda()).expect("|lambda| < 1");
                let u = pullback(member_log_fprime(&s, params, pt.z0()).expect("z0 in disk"), params);
                let excess = ((u - disk.center).norm() - disk.radius) / scale;
                min_margin = min_margin.min(-excess);
                rep.observe(excess.max(0.0), || json!({"case": case_json(params, pt), "sample": k}));
            }
            // Equality case through the extremal family.
            for j in 0..64 {
                let theta = -PI + 2.0 * PI * j as f64 / 64.0;
                let spec = ExtremalSpec::new(Complex64::from_polar(1.0, theta), pt.lambda(), *params)
                    .expect("valid extremal");
                let u = pullback(log_extremal_fprime(&spec, pt.z0()).expect("z0 in disk"), params);
                let gap = if disk.radius == 0.0 {
                    (u - disk.center).norm()
                } else {
                    ((u - disk.center).norm() - disk.radius).abs() / disk.radius
                };
                rep.observe(gap, || json!({"case": case_json(params, pt), "extremal_theta": theta}));
            }
            if pt.z0().norm() > 0.0 && n_samples > 0 {
                rep.note(json!({"case": case_json(params, pt), "min_relative_margin": true}), min_margin);
            }
            rep
        })
        .collect();
    merge_all("prop1", tol, parts)
}

/// The `lambda = 0` bound `|(f')^{B/(A-B)} - 1| <= |B||z|^2` and its sharpness.
pub fn check_corollary0(params: &[JanowskiParams], n_samples: usize, tol: f64, seed: u64) -> VerificationReport {
    let parts = params
        .par_iter()
        .enumerate()
        .map(|(pi, p)| {
            let mut rep = VerificationReport::new("corollary0", tol);
            rep.parameter_sets = 1;
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(&[seed, pi as u64, 0xC0]));
            let zero = Complex64::new(0.0, 0.0);
            for k in 0..n_samples {
                let z = random_disk_point(&mut rng, 0.95);
                let inner = sample_member_inner(mix_seed(&[seed, pi as u64]), k as u64);
                let s = ConstrainedSchwarz::new(inner, zero).expect("lambda = 0");
                let u = pullback(member_log_fprime(&s, p, z).expect("z in disk"), p);
                let bound = p.b().abs() * z.norm_sqr();
                let excess = if bound == 0.0 {
                    (u - 1.0).norm()
                } else {
                    ((u - 1.0).norm() - bound) / bound
                };
                rep.observe(excess.max(0.0), || json!({"A": p.a(), "B": p.b(), "z": cjson(z), "sample": k}));
            }
            // Sharpness: unimodular constants attain the bound.
            for j in 0..32 {
                let eta = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / 32.0);
                let s = ConstrainedSchwarz::new(InnerFunction::constant(eta).expect("unimodular"), zero)
                    .expect("lambda = 0");
                for &z in &[Complex64::new(0.5, 0.0), Complex64::new(-0.3, 0.8), Complex64::new(0.0, 0.9)] {
                    let u = pullback(member_log_fprime(&s, p, z).expect("z in disk"), p);
                    let bound = p.b().abs() * z.norm_sqr();
                    rep.observe(((u - 1.0).norm() - bound).abs() / bound, || {
                        json!({"A": p.a(), "B": p.b(), "z": cjson(z), "eta": cjson(eta)})
                    });
                }
            }
            rep
        })
        .collect();
    merge_all("corollary0", tol, parts)
}

/// Singleton regions for `|lambda| = 1` and `z0 = 0`, and the radius limit `lambda -> 1-`.
pub fn check_unit_lambda(params: &[JanowskiParams], points: &[Complex64], tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new("unit-lambda", tol);
    let units = [0.0, PI / 2.0, 2.0, -PI / 3.0, PI].map(|t| Complex64::from_polar(1.0, t));
    for p in params {
        rep.parameter_sets += 1;
        for &z0 in points {
            // z0 = 0 gives {0} for every lambda.
            for &lam in units.iter().chain([Complex64::new(0.4, 0.0)].iter()) {
                let origin = EvalPoint::new(Complex64::new(0.0, 0.0), lam).expect("valid");
                let v = match variability_region(&origin, p) {
                    Ok(RegionShape::Singleton(v)) => v.norm(),
                    _ => f64::INFINITY,
                };
                rep.observe(v, || json!({"A": p.a(), "B": p.b(), "z0": [0.0, 0.0], "lambda": cjson(lam)}));
            }
            if z0.norm() == 0.0 {
                continue;
            }
            for &lam in &units {
                let pt = EvalPoint::new(z0, lam).expect("valid");
                let expected = p.exponent() * (1.0 + p.b() * lam * z0).ln();
                let singleton = match variability_region(&pt, p) {
                    Ok(RegionShape::Singleton(v)) => v,
                    _ => Complex64::new(f64::NAN, f64::NAN),
                };
                rep.observe((singleton - expected).norm(), || case_json(p, &pt));

                // Regions at lambda_k = 1 - 2^-k shrink onto the singleton.
                let rotated = lam / lam.norm() * z0;
                let mut prev_radius = f64::INFINITY;
                let mut last_spread = f64::INFINITY;
                for k in 1..=40 {
                    let lk = 1.0 - 0.5f64.powi(k);
                    let ptk = EvalPoint::real(rotated, lk).expect("valid");
                    let r = variability_disk(&ptk, p).expect("real lambda").radius;
                    rep.observe(if r < prev_radius { 0.0 } else { 1.0 }, || {
                        json!({"case": case_json(p, &pt), "k": k, "radius": r})
                    });
                    prev_radius = r;
                    last_spread = boundary_curve(&ptk, p, 64)
                        .expect("n >= 3")
                        .values()
                        .map(|w| (w - singleton).norm())
                        .fold(0.0, f64::max);
                }
                rep.observe(last_spread, || json!({"case": case_json(p, &pt), "spread_at_k40": last_spread}));
            }
        }
    }
    rep
}

/// `V_lambda(e^{it} z0) = V_{lambda e^{it}}(z0)`: verdicts agree in both frames.
pub fn check_rotation(
    grid: &VerifyGrid,
    n_rotations: usize,
    n_samples: usize,
    tol: f64,
    seed: u64,
) -> VerificationReport {
    let cases: Vec<_> = grid.cases().into_iter().filter(|(_, pt)| pt.z0().norm() > 0.0).collect();
    let parts = cases
        .par_iter()
        .enumerate()
        .map(|(ci, (params, pt))| {
            let mut rep = VerificationReport::new("rotation", tol);
            rep.parameter_sets = 1;
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(&[seed, ci as u64, 0x707]));
            for j in 0..n_rotations {
                let rot = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n_rotations as f64);
                let rotated = EvalPoint::new(rot * pt.z0(), pt.lambda()).expect("valid");
                let moved = EvalPoint::new(pt.z0(), pt.lambda() * rot).expect("valid");
                let curve = boundary_curve(&rotated, params, 64).expect("n >= 3");
                let (mut lo, mut hi) = (Complex64::new(f64::MAX, f64::MAX), Complex64::new(f64::MIN, f64::MIN));
                for w in curve.values() {
                    lo = Complex64::new(lo.re.min(w.re), lo.im.min(w.im));
                    hi = Complex64::new(hi.re.max(w.re), hi.im.max(w.im));
                }
                let mid = (lo + hi) * 0.5;
                let half = (hi - lo) * 0.75;
                for k in 0..n_samples {
                    let w = match k % 4 {
                        0 => {
                            let theta = rng.gen_range(-PI..PI);
                            crate::region::boundary_point(theta, &rotated, params).expect("real lambda")
                        }
                        1 => {
                            let inner = sample_member_inner(mix_seed(&[seed, ci as u64, j as u64]), k as u64);
                            let s = ConstrainedSchwarz::new(inner, rotated.lambda()).expect("|lambda| < 1");
                            member_log_fprime(&s, params, rotated.z0()).expect("z0 in disk")
                        }
                        _ => Complex64::new(
                            mid.re + half.re * rng.gen_range(-1.0..1.0),
                            mid.im + half.im * rng.gen_range(-1.0..1.0),
                        ),
                    };
                    let v1 = contains(w, &rotated, params, tol).map(|v| v.status);
                    let v2 = contains(w, &moved, params, tol).map(|v| v.status);
                    let mismatch: f64 = match (&v1, &v2) {
                        (Ok(a), Ok(b)) if a == b => 0.0,
                        _ => 1.0,
                    };
                    // Boundary and member samples are attainable values.
                    let escaped = if k % 4 < 2 && matches!(v1, Ok(Membership::Outside)) { 1.0 } else { 0.0 };
                    rep.observe(mismatch.max(escaped), || {
                        json!({"case": case_json(params, pt), "rotation": j, "w": cjson(w),
                               "verdicts": format!("{v1:?} / {v2:?}")})
                    });
                }
            }
            rep
        })
        .collect();
    // Verdict agreement is exact; the tolerance above is the membership tolerance.
    let mut rep = merge_all("rotation", tol, parts);
    rep.tolerance = 0.0;
    rep.passed = rep.max_violation <= 0.0;
    rep
}

/// Compares `{member_log_fprime(Constant(k), z0)}` and `{region_point(a)}` over
/// matching polar grids of the closed disk, both directions of Hausdorff distance.
pub fn check_coverage(point: &EvalPoint, params: &JanowskiParams, grid_n: usize, tol: f64) -> Result<VerificationReport> {
    if grid_n < 2 {
        return Err(Error::Size(format!("coverage grid needs grid_n >= 2 (got {grid_n})")));
    }
    let mut rep = VerificationReport::new("coverage", tol);
    rep.parameter_sets = 1;
    let disk = variability_disk(point, params)?;
    let z0 = point.z0();
    let lam = point.lambda();
    let mut members = Vec::with_capacity(grid_n * grid_n);
    let mut region = Vec::with_capacity(grid_n * grid_n);
    let mut rim = Vec::with_capacity(grid_n);
    for i in 0..grid_n {
        let rho = i as f64 / (grid_n - 1) as f64;
        for j in 0..grid_n {
            let theta = -PI + 2.0 * PI * (j + 1) as f64 / grid_n as f64;
            let k = Complex64::from_polar(rho, theta);
            let s = ConstrainedSchwarz::new(InnerFunction::constant(k)?, lam)?;
            let m = member_log_fprime(&s, params, z0)?;
            members.push(m);
            if i == grid_n - 1 {
                rim.push(m);
            }
            // Disk parameter matching k; rho = 1 reduces to boundary_parameter(theta).
            let a = if z0.norm() == 0.0 {
                Complex64::new(0.0, 0.0)
            } else if rho == 1.0 {
                boundary_parameter(theta, point, params)?
            } else {
                let phase = params.b().signum() * z0 * z0 / z0.norm_sqr();
                phase * (k + lam * z0.conj()) / (1.0 + lam * z0 * k)
            };
            let a = if a.norm() > 1.0 { a / a.norm() } else { a };
            region.push(params.exponent() * disk.point(a).ln());
        }
    }
    let forward = directed_hausdorff(&members, &region);
    let backward = directed_hausdorff(&region, &members);
    let h = forward.max(backward);
    rep.observe(h, || json!({"case": case_json(params, point), "forward": forward, "backward": backward}));
    if z0.norm() > 0.0 {
        let curve = boundary_curve(point, params, grid_n)?;
        let curve: Vec<_> = curve.values().collect();
        let rim_gap = directed_hausdorff(&rim, &curve).max(directed_hausdorff(&curve, &rim));
        rep.observe(rim_gap, || json!({"case": case_json(params, point), "rim_to_boundary": rim_gap}));
    }
    rep.samples = members.len() + region.len();
    Ok(rep)
}

pub fn check_coverage_grid(grid: &VerifyGrid, grid_n: usize, tol: f64) -> Result<VerificationReport> {
    let parts = grid
        .cases()
        .par_iter()
        .map(|(p, pt)| check_coverage(pt, p, grid_n, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_all("coverage", tol, parts))
}

/// Convexity (single-signed turns) and simplicity of a sampled boundary curve.
pub fn check_convexity_and_jordan(curve: &BoundaryCurve, tol: f64) -> Result<VerificationReport> {
    if curve.len() < 16 {
        return Err(Error::Size(format!("convexity check needs >= 16 samples (got {})", curve.len())));
    }
    let poly: Vec<_> = curve.values().collect();
    let summary = turn_summary(&poly).expect("len >= 3");
    if !(summary.shortest_edge > 0.0) {
        return Err(Error::Size("degenerate curve: repeated vertices (singleton region?)".into()));
    }
    let mut rep = VerificationReport::new("convexity", tol);
    rep.parameter_sets = 1;
    rep.observe(summary.worst_reverse_turn.max(0.0), || json!({"worst_reverse_turn": summary.worst_reverse_turn}));
    rep.observe((summary.winding.abs() - 1.0).abs(), || json!({"winding": summary.winding}));
    let crossing = find_self_intersection(&poly);
    rep.observe(if crossing.is_some() { 1.0 } else { 0.0 }, || json!({"crossing_edges": crossing}));
    Ok(rep)
}

pub fn check_convexity_grid(grid: &VerifyGrid, theta_samples: usize, tol: f64) -> Result<VerificationReport> {
    let parts = grid
        .cases()
        .par_iter()
        .filter(|(_, pt)| pt.z0().norm() > 0.0)
        .map(|(p, pt)| {
            let curve = boundary_curve(pt, p, theta_samples)?;
            let mut rep = check_convexity_and_jordan(&curve, tol)?;
            for w in rep.witnesses.iter_mut() {
                w.inputs = json!({"case": case_json(p, pt), "detail": w.inputs.take()});
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_all("convexity", tol, parts))
}

/// Finds real `z` where the curvature of the `omega(z) = z^2` member leaves the
/// Janowski disk, witnessing a member of the class outside the Janowski class.
pub fn check_strict_inclusion(params: &JanowskiParams) -> Result<VerificationReport> {
    let disk = janowski_disk(params)?;
    let mut rep = VerificationReport::new("inclusion", 0.0);
    rep.parameter_sets = 1;
    let mut found = None;
    let mut scanned = 0;
    for k in 1..=40 {
        let z = 1.0 - 0.5f64.powi(k);
        let curv = crate::schwarz::special_curvature(params, Complex64::new(z, 0.0))?;
        let outside = disk.signed_distance(curv);
        scanned += 1;
        if outside > 0.0 {
            found = Some((z, curv, outside));
            break;
        }
    }
    let limit = (1.0 + 2.0 * params.a() - params.b()) / (1.0 + params.b());
    let left = (1.0 + params.a()) / (1.0 + params.b());
    match found {
        Some((z, curv, outside)) => {
            rep.note(
                json!({"A": params.a(), "B": params.b(), "z": z, "curvature": cjson(curv),
                       "limit": limit, "left_endpoint": left}),
                outside,
            );
            rep.observe(0.0, || Value::Null);
        }
        None => rep.observe(1.0, || json!({"A": params.a(), "B": params.b(), "limit": limit})),
    }
    rep.samples = scanned;
    Ok(rep)
}

pub fn check_strict_inclusion_grid(params: &[JanowskiParams]) -> VerificationReport {
    let mut rep = VerificationReport::new("inclusion", 0.0);
    for p in params {
        match check_strict_inclusion(p) {
            Ok(r) => rep = rep.merge(r),
            Err(_) => rep.note(json!({"A": p.a(), "B": p.b(), "skipped": "B = 1"}), 0.0),
        }
    }
    rep
}

/// For `A = 0` and `0 < B <= 1`, `Re f' > 1/2` on sampled members.
pub fn check_halfplane_univalence(b: f64, n_samples: usize, tol: f64, seed: u64) -> Result<VerificationReport> {
    if !(b > 0.0 && b <= 1.0) {
        return Err(Error::Domain(format!("half-plane check needs 0 < B <= 1 (got {b})")));
    }
    let params = JanowskiParams::new(0.0, b)?;
    let mut rep = VerificationReport::new("halfplane", tol);
    rep.parameter_sets = 1;
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(&[seed, b.to_bits(), 0x4A]));
    let mut min_re = f64::INFINITY;
    for k in 0..n_samples {
        let lam = random_disk_point(&mut rng, 0.99);
        let z = random_disk_point(&mut rng, 0.999);
        let s = ConstrainedSchwarz::new(sample_member_inner(mix_seed(&[seed, b.to_bits()]), k as u64), lam)?;
        let re = member_fprime(&s, &params, z)?.re;
        min_re = min_re.min(re);
        rep.observe((0.5 - re).max(0.0), || json!({"B": b, "lambda": cjson(lam), "z": cjson(z), "re_fprime": re}));
    }
    rep.note(json!({"B": b, "min_re_fprime": true, "lower_bound": 1.0 / (1.0 + b)}), min_re);
    // omega(z) = z: f' = 1/(1 + B z) approaches 1/(1 + B) along the radius.
    let approach = 1.0 / (1.0 + b * (1.0 - 1e-9));
    rep.note(json!({"B": b, "omega": "z", "z": 1.0 - 1e-9}), approach);
    Ok(rep)
}

/// Suite selector for the `verify` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Prop1,
    Corollary0,
    UnitLambda,
    Rotation,
    Coverage,
    Convexity,
    Inclusion,
    Halfplane,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Prop1,
        Suite::Corollary0,
        Suite::UnitLambda,
        Suite::Rotation,
        Suite::Coverage,
        Suite::Convexity,
        Suite::Inclusion,
        Suite::Halfplane,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Corollary0 => "corollary0",
            Suite::UnitLambda => "unit-lambda",
            Suite::Rotation => "rotation",
            Suite::Coverage => "coverage",
            Suite::Convexity => "convexity",
            Suite::Inclusion => "inclusion",
            Suite::Halfplane => "halfplane",
        }
    }

    /// Parses a suite name; `"all"` selects every suite.
    pub fn parse_selection(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|s| s.name() == name).map(|s| vec![*s])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub grid: VerifyGrid,
    pub seed: u64,
    pub tol: f64,
    pub n_samples: usize,
    pub theta_samples: usize,
    pub coverage_grid: usize,
    pub rotations: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid: VerifyGrid::default(),
            seed: 0,
            tol: crate::region::DEFAULT_TOL,
            n_samples: 1000,
            theta_samples: 256,
            coverage_grid: 64,
            rotations: 16,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let g = &cfg.grid;
    Ok(match suite {
        Suite::Prop1 => check_prop1(g, cfg.n_samples, cfg.tol, cfg.seed),
        Suite::Corollary0 => check_corollary0(&g.params, cfg.n_samples, cfg.tol, cfg.seed),
        Suite::UnitLambda => check_unit_lambda(&g.params, &g.points, cfg.tol),
        Suite::Rotation => check_rotation(g, cfg.rotations, cfg.n_samples.clamp(4, 200), cfg.tol, cfg.seed),
        Suite::Coverage => check_coverage_grid(g, cfg.coverage_grid, cfg.tol.max(1e-8))?,
        Suite::Convexity => check_convexity_grid(g, cfg.theta_samples.max(16), cfg.tol.max(1e-10))?,
        Suite::Inclusion => check_strict_inclusion_grid(&g.params),
        Suite::Halfplane => [0.25, 0.5, 1.0]
            .iter()
            .map(|&b| check_halfplane_univalence(b, cfg.n_samples, cfg.tol, cfg.seed))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(VerificationReport::new("halfplane", cfg.tol), VerificationReport::merge),
    })
}
