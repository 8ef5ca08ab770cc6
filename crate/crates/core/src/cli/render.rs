//! CSV, SVG and JSON artifact writers.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::region::{BoundaryCurve, EvalPoint, JanowskiParams, Membership};

/// `{:.16e}` (17 significant digits), with negative zero folded to zero.
pub fn fmt17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// 15 significant digits.
pub fn fmt15(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.14e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryRow {
    pub theta: f64,
    pub re: f64,
    pub im: f64,
}

/// JSON region record written by `region` and `sweep`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionRecord {
    pub params: JanowskiParams,
    pub point: EvalPoint,
    /// Center and radius of the disk swept by `(f'(z0))^{B/(A-B)}`.
    pub center: [f64; 2],
    pub radius: f64,
    pub boundary: Vec<BoundaryRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singleton: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RegionRecord {
    pub fn boundary_values(&self) -> Vec<Complex64> {
        self.boundary.iter().map(|r| Complex64::new(r.re, r.im)).collect()
    }
}

pub fn rows_from_curve(curve: &BoundaryCurve) -> Vec<BoundaryRow> {
    curve
        .samples()
        .iter()
        .map(|s| BoundaryRow {
            theta: s.theta,
            re: s.value.re,
            im: s.value.im,
        })
        .collect()
}

pub fn boundary_csv(rows: &[BoundaryRow]) -> String {
    let mut out = String::from("theta,re,im\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", fmt17(r.theta), fmt17(r.re), fmt17(r.im));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    pub seed_index: u64,
    pub re: f64,
    pub im: f64,
    pub verdict: Membership,
}

pub fn samples_csv(rows: &[SampleRow]) -> String {
    let mut out = String::from("seed_index,re,im,verdict\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.seed_index, fmt17(r.re), fmt17(r.im), r.verdict.as_str());
    }
    out
}

const SVG_SIZE: f64 = 800.0;
const SVG_MARGIN: f64 = 0.05;
pub const SVG_BANNER: &str = "<!-- generated by varregion -->";

/// 800x800 SVG: the boundary as a closed stroke-only polyline and the cloud as 1px points.
/// Real axis points right, imaginary axis up.
pub fn render_svg(boundary: &[Complex64], cloud: &[Complex64]) -> String {
    let all: Vec<_> = boundary.iter().chain(cloud).copied().filter(|p| p.is_finite()).collect();
    let (mut lo, mut hi) = (Complex64::new(-1e-3, -1e-3), Complex64::new(1e-3, 1e-3));
    if let Some(first) = all.first() {
        lo = *first;
        hi = *first;
        for p in &all {
            lo = Complex64::new(lo.re.min(p.re), lo.im.min(p.im));
            hi = Complex64::new(hi.re.max(p.re), hi.im.max(p.im));
        }
    }
    let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-12);
    let mid = (lo + hi) * 0.5;
    let usable = SVG_SIZE * (1.0 - 2.0 * SVG_MARGIN);
    let scale = usable / span;
    let map = |p: Complex64| {
        (
            SVG_SIZE / 2.0 + (p.re - mid.re) * scale,
            SVG_SIZE / 2.0 - (p.im - mid.im) * scale,
        )
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(out, "{SVG_BANNER}");
    let _ = writeln!(out, r#"<rect width="800" height="800" fill="white"/>"#);
    if !boundary.is_empty() {
        let pts: Vec<String> = boundary
            .iter()
            .map(|p| {
                let (x, y) = map(*p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        if boundary.len() == 1 {
            let (x, y) = map(boundary[0]);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        } else {
            let _ = writeln!(
                out,
                r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1"/>"#,
                pts.join(" ")
            );
        }
    }
    if !cloud.is_empty() {
        let _ = writeln!(out, r#"<g fill="steelblue">"#);
        for p in cloud {
            let (x, y) = map(*p);
            let _ = writeln!(out, r#"<rect x="{:.3}" y="{:.3}" width="1" height="1"/>"#, x - 0.5, y - 0.5);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

/// Writes via a temporary sibling file and a rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    if let Some(d) = dir {
        std::fs::create_dir_all(d)?;
    }
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp_name = format!(".{}.tmp-{}", name.to_string_lossy(), std::process::id());
    let tmp = match dir {
        Some(d) => d.join(tmp_name),
        None => Path::new(&tmp_name).to_path_buf(),
    };
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formats() {
        assert_eq!(fmt17(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt17(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt17(0.1).parse::<f64>().unwrap(), 0.1);
        assert_eq!(fmt15(1.0 / 3.0), "3.33333333333333e-1");
    }

    #[test]
    fn svg_orientation() {
        let svg = render_svg(&[Complex64::new(0.0, 0.0), Complex64::new(1.0, 1.0)], &[]);
        // (0,0) maps to the lower-left, (1,1) to the upper-right.
        assert!(svg.contains("40.000,760.000 760.000,40.000"), "{svg}");
        assert!(svg.contains(SVG_BANNER));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("sub/out.csv");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(p.parent().unwrap()).unwrap().count(), 1);
    }
}
