//! Planar point-set and polygon utilities used by the verification suites.

use num_complex::Complex64;

/// `max_{a in from} min_{b in to} |a - b|`, by exhaustive search. Zero if either set is empty.
pub fn directed_hausdorff_brute(from: &[Complex64], to: &[Complex64]) -> f64 {
    if from.is_empty() || to.is_empty() {
        return 0.0;
    }
    from.iter()
        .map(|a| to.iter().map(|b| (a - b).norm_sqr()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
        .sqrt()
}

/// Uniform-grid bucket index for exact nearest-neighbour queries.
pub struct PointIndex<'a> {
    points: &'a [Complex64],
    origin: Complex64,
    cell: f64,
    cols: usize,
    rows: usize,
    // CSR layout: `start[c]..start[c + 1]` indexes `order` for cell `c`.
    start: Vec<usize>,
    order: Vec<usize>,
}

impl<'a> PointIndex<'a> {
    pub fn new(points: &'a [Complex64]) -> Self {
        let (mut lo, mut hi) = (
            Complex64::new(f64::INFINITY, f64::INFINITY),
            Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in points {
            lo.re = lo.re.min(p.re);
            lo.im = lo.im.min(p.im);
            hi.re = hi.re.max(p.re);
            hi.im = hi.im.max(p.im);
        }
        let n = points.len().max(1);
        let span = (hi.re - lo.re).max(hi.im - lo.im);
        let cell = if points.is_empty() || !(span > 0.0) {
            1.0
        } else {
            // About two points per cell for a set filling its bounding square.
            span / ((n as f64 / 2.0).sqrt().ceil())
        };
        let cols = if points.is_empty() { 1 } else { ((hi.re - lo.re) / cell).floor() as usize + 1 };
        let rows = if points.is_empty() { 1 } else { ((hi.im - lo.im) / cell).floor() as usize + 1 };
        let origin = if points.is_empty() { Complex64::new(0.0, 0.0) } else { lo };
        let cell_of = |p: &Complex64| {
            let i = (((p.re - origin.re) / cell).floor() as usize).min(cols - 1);
            let j = (((p.im - origin.im) / cell).floor() as usize).min(rows - 1);
            j * cols + i
        };
        let mut counts = vec![0usize; cols * rows + 1];
        for p in points {
            counts[cell_of(p) + 1] += 1;
        }
        for c in 1..counts.len() {
            counts[c] += counts[c - 1];
        }
        let start = counts.clone();
        let mut fill = counts;
        let mut order = vec![0; points.len()];
        for (k, p) in points.iter().enumerate() {
            let c = cell_of(p);
            order[fill[c]] = k;
            fill[c] += 1;
        }
        Self {
            points,
            origin,
            cell,
            cols,
            rows,
            start,
            order,
        }
    }

    /// Distance from `q` to the nearest indexed point (`inf` for an empty index).
    pub fn nearest_distance(&self, q: Complex64) -> f64 {
        if self.points.is_empty() {
            return f64::INFINITY;
        }
        let qi = ((q.re - self.origin.re) / self.cell).floor() as i64;
        let qj = ((q.im - self.origin.im) / self.cell).floor() as i64;
        let (cols, rows) = (self.cols as i64, self.rows as i64);
        // Rings beyond this radius lie entirely outside the grid.
        let max_ring = [qi, cols - 1 - qi, qj, rows - 1 - qj]
            .iter()
            .map(|d| d.unsigned_abs() as i64)
            .max()
            .unwrap_or(0)
            + cols.max(rows);
        let mut best = f64::INFINITY;
        for ring in 0..=max_ring {
            // Every cell on ring `ring` is at least (ring - 1) cells away.
            if ring >= 1 && ((ring - 1) as f64 * self.cell).powi(2) > best {
                break;
            }
            let mut visit = |i: i64, j: i64| {
                if i < 0 || j < 0 || i >= cols || j >= rows {
                    return;
                }
                let c = (j * cols + i) as usize;
                for &k in &self.order[self.start[c]..self.start[c + 1]] {
                    best = best.min((self.points[k] - q).norm_sqr());
                }
            };
            if ring == 0 {
                visit(qi, qj);
                continue;
            }
            for i in (qi - ring)..=(qi + ring) {
                visit(i, qj - ring);
                visit(i, qj + ring);
            }
            for j in (qj - ring + 1)..=(qj + ring - 1) {
                visit(qi - ring, j);
                visit(qi + ring, j);
            }
        }
        best.sqrt()
    }
}

/// Directed Hausdorff distance using a bucket index over `to`.
pub fn directed_hausdorff(from: &[Complex64], to: &[Complex64]) -> f64 {
    if from.is_empty() || to.is_empty() {
        return 0.0;
    }
    let index = PointIndex::new(to);
    from.iter().map(|&a| index.nearest_distance(a)).fold(0.0, f64::max)
}

pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

#[inline]
fn cross(u: Complex64, v: Complex64) -> f64 {
    u.re * v.im - u.im * v.re
}

/// Twice the signed area of the closed polygon (positive when counter-clockwise).
pub fn signed_double_area(poly: &[Complex64]) -> f64 {
    let n = poly.len();
    (0..n).map(|i| cross(poly[i], poly[(i + 1) % n])).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurnSummary {
    /// Largest turn against the polygon orientation, as `sin` of the turning angle.
    pub worst_reverse_turn: f64,
    /// Total signed turning divided by `2 pi`.
    pub winding: f64,
    pub shortest_edge: f64,
}

/// Turning statistics of a closed polygon; `None` with fewer than 3 vertices.
pub fn turn_summary(poly: &[Complex64]) -> Option<TurnSummary> {
    let n = poly.len();
    if n < 3 {
        return None;
    }
    let orientation = signed_double_area(poly).signum();
    let mut worst = f64::NEG_INFINITY;
    let mut total = 0.0;
    let mut shortest = f64::INFINITY;
    for i in 0..n {
        let e1 = poly[(i + 1) % n] - poly[i];
        let e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
        let (l1, l2) = (e1.norm(), e2.norm());
        shortest = shortest.min(l1);
        if l1 == 0.0 || l2 == 0.0 {
            continue;
        }
        let s = cross(e1, e2) / (l1 * l2);
        worst = worst.max(-orientation * s);
        total += cross(e1, e2).atan2(e1.re * e2.re + e1.im * e2.im);
    }
    Some(TurnSummary {
        worst_reverse_turn: worst,
        winding: total / std::f64::consts::TAU,
        shortest_edge: shortest,
    })
}

fn orient(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    cross(b - a, c - a)
}

fn on_segment(a: Complex64, b: Complex64, p: Complex64) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

/// Whether closed segments `[p1, p2]` and `[q1, q2]` meet.
pub fn segments_intersect(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// First pair of non-adjacent edges of the closed polygon that intersect.
pub fn find_self_intersection(poly: &[Complex64]) -> Option<(usize, usize)> {
    let n = poly.len();
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]) {
                return Some((i, j));
            }
        }
    }
    None
}
