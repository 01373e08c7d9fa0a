//! Coordinate conventions, box types, and geometric kernels.
//!
//! All geometry is normalized: coordinates live in `[0, 1]` with the origin at
//! the top-left corner, x growing rightward and y growing downward. Pixels
//! appear only at I/O edges via [`normalize_box`] / [`denormalize_box`].
//! Every operation here is a pure function over immutable values.

use thiserror::Error;

/// Tolerance for clamping float noise at the `[0, 1]` borders. Values within
/// this distance outside the range are clamped; values beyond it are errors.
pub const EPS_GEOM: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("{field} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        field: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },
    #[error("inverted box: {lo_field} = {lo} exceeds {hi_field} = {hi}")]
    Inverted {
        lo_field: &'static str,
        lo: f64,
        hi_field: &'static str,
        hi: f64,
    },
    #[error("{field} = {value} must be finite")]
    NotFinite { field: &'static str, value: f64 },
    #[error("image dimensions must be at least 1x1, got {width}x{height}")]
    BadDims { width: u32, height: u32 },
    #[error("degenerate convex hull: {reason} ({n} input points)")]
    DegenerateHull { reason: &'static str, n: usize },
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is self-intersecting (edges {0} and {1} cross)")]
    SelfIntersecting(usize, usize),
    #[error("polygon winding must be counter-clockwise on screen (signed area {0})")]
    BadWinding(f64),
}

fn unit_interval(field: &'static str, value: f64) -> Result<f64, GeomError> {
    if !value.is_finite() {
        return Err(GeomError::NotFinite { field, value });
    }
    if value < -EPS_GEOM || value > 1.0 + EPS_GEOM {
        return Err(GeomError::OutOfRange {
            field,
            value,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(value.clamp(0.0, 1.0))
}

/// Pixel dimensions of an image frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ImageDims {
    pub width: u32,
    pub height: u32,
}

impl ImageDims {
    pub fn new(width: u32, height: u32) -> Result<Self, GeomError> {
        if width == 0 || height == 0 {
            return Err(GeomError::BadDims { width, height });
        }
        Ok(Self { width, height })
    }
}

/// A point in normalized image coordinates (0 = left/top, 1 = right/bottom).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Result<Self, GeomError> {
        Ok(Self {
            x: unit_interval("x", x)?,
            y: unit_interval("y", y)?,
        })
    }
}

/// An axis-aligned box in normalized coordinates with `x1 <= x2`, `y1 <= y2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisBox {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl AxisBox {
    pub fn new(x1: f64, y1: f64, x2: f64, y2: f64) -> Result<Self, GeomError> {
        let x1 = unit_interval("x1", x1)?;
        let y1 = unit_interval("y1", y1)?;
        let x2 = unit_interval("x2", x2)?;
        let y2 = unit_interval("y2", y2)?;
        if x1 > x2 {
            return Err(GeomError::Inverted {
                lo_field: "x1",
                lo: x1,
                hi_field: "x2",
                hi: x2,
            });
        }
        if y1 > y2 {
            return Err(GeomError::Inverted {
                lo_field: "y1",
                lo: y1,
                hi_field: "y2",
                hi: y2,
            });
        }
        Ok(Self { x1, y1, x2, y2 })
    }

    /// The full unit square, i.e. the whole image frame.
    pub fn full() -> Self {
        Self {
            x1: 0.0,
            y1: 0.0,
            x2: 1.0,
            y2: 1.0,
        }
    }

    pub fn width(&self) -> f64 {
        self.x2 - self.x1
    }

    pub fn height(&self) -> f64 {
        self.y2 - self.y1
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }
}

/// A rotated box: normalized center, normalized side lengths, and an angle in
/// degrees within `[0, 180)` measured from the +x axis toward +y (clockwise on
/// screen). Corners may extend beyond the unit square; consumers that need
/// frame containment check it explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedBox {
    pub cx: f64,
    pub cy: f64,
    pub w: f64,
    pub h: f64,
    pub angle_deg: f64,
}

impl OrientedBox {
    pub fn new(cx: f64, cy: f64, w: f64, h: f64, angle_deg: f64) -> Result<Self, GeomError> {
        let cx = unit_interval("cx", cx)?;
        let cy = unit_interval("cy", cy)?;
        for (field, value) in [("w", w), ("h", h)] {
            if !value.is_finite() {
                return Err(GeomError::NotFinite { field, value });
            }
            if value <= 0.0 || value > 1.0 + EPS_GEOM {
                return Err(GeomError::OutOfRange {
                    field,
                    value,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        if !angle_deg.is_finite() {
            return Err(GeomError::NotFinite {
                field: "angle",
                value: angle_deg,
            });
        }
        if !(0.0..180.0).contains(&angle_deg) {
            return Err(GeomError::OutOfRange {
                field: "angle",
                value: angle_deg,
                min: 0.0,
                max: 180.0,
            });
        }
        Ok(Self {
            cx,
            cy,
            w: w.min(1.0),
            h: h.min(1.0),
            angle_deg,
        })
    }

    /// Corner coordinates in screen counter-clockwise order. May lie outside
    /// the unit square for boxes near the frame border.
    pub fn corners(&self) -> [(f64, f64); 4] {
        let rad = self.angle_deg.to_radians();
        let (sin, cos) = rad.sin_cos();
        let (hw, hh) = (self.w / 2.0, self.h / 2.0);
        let local = [(-hw, -hh), (-hw, hh), (hw, hh), (hw, -hh)];
        local.map(|(dx, dy)| {
            (
                self.cx + dx * cos - dy * sin,
                self.cy + dx * sin + dy * cos,
            )
        })
    }

    /// Does every corner stay inside the frame, up to `eps` of slack?
    pub fn corners_within_frame(&self, eps: f64) -> bool {
        self.corners()
            .iter()
            .all(|&(x, y)| (-eps..=1.0 + eps).contains(&x) && (-eps..=1.0 + eps).contains(&y))
    }
}

/// Reduce an arbitrary angle in degrees into `[0, 180)`. A rectangle is
/// symmetric under 180-degree rotation, so this loses nothing.
pub fn normalize_angle_deg(angle: f64) -> f64 {
    let a = angle.rem_euclid(180.0);
    if a >= 180.0 {
        0.0
    } else {
        a
    }
}

/// A simple polygon with counter-clockwise winding on screen (y-down), which
/// corresponds to a negative signed area under the usual shoelace formula.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        let raw: Vec<(f64, f64)> = vertices.iter().map(|p| (p.x, p.y)).collect();
        let area = shoelace(&raw);
        if area >= 0.0 {
            return Err(GeomError::BadWinding(area));
        }
        if let Some((i, j)) = find_self_intersection(&raw) {
            return Err(GeomError::SelfIntersecting(i, j));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        let raw: Vec<(f64, f64)> = self.vertices.iter().map(|p| (p.x, p.y)).collect();
        shoelace(&raw).abs() / 2.0
    }

    /// Point-in-polygon test including the boundary (within `eps`).
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        let raw: Vec<(f64, f64)> = self.vertices.iter().map(|v| (v.x, v.y)).collect();
        let n = raw.len();
        for i in 0..n {
            let a = raw[i];
            let b = raw[(i + 1) % n];
            // Screen-CCW interior lies on the cross <= 0 side of each edge.
            if cross(a, b, (p.x, p.y)) > eps {
                return false;
            }
        }
        true
    }
}

/// Twice the signed area (shoelace). Negative for screen-CCW winding.
fn shoelace(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len();
    let mut sum = 0.0;
    for i in 0..n {
        let (x1, y1) = pts[i];
        let (x2, y2) = pts[(i + 1) % n];
        sum += x1 * y2 - x2 * y1;
    }
    sum
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn find_self_intersection(pts: &[(f64, f64)]) -> Option<(usize, usize)> {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            // Skip edges sharing a vertex.
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return Some((i, j));
            }
        }
    }
    None
}

fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

/// Convert absolute pixel coordinates to a normalized [`AxisBox`].
pub fn normalize_box(abs: [f64; 4], dims: ImageDims) -> Result<AxisBox, GeomError> {
    let [x1, y1, x2, y2] = abs;
    let (w, h) = (dims.width as f64, dims.height as f64);
    for (field, value, max) in [
        ("x1", x1, w),
        ("y1", y1, h),
        ("x2", x2, w),
        ("y2", y2, h),
    ] {
        if !value.is_finite() {
            return Err(GeomError::NotFinite { field, value });
        }
        if value < 0.0 || value > max {
            return Err(GeomError::OutOfRange {
                field,
                value,
                min: 0.0,
                max,
            });
        }
    }
    if x1 > x2 {
        return Err(GeomError::Inverted {
            lo_field: "x1",
            lo: x1,
            hi_field: "x2",
            hi: x2,
        });
    }
    if y1 > y2 {
        return Err(GeomError::Inverted {
            lo_field: "y1",
            lo: y1,
            hi_field: "y2",
            hi: y2,
        });
    }
    AxisBox::new(x1 / w, y1 / h, x2 / w, y2 / h)
}

/// Convert a normalized [`AxisBox`] back to absolute pixel coordinates.
pub fn denormalize_box(b: AxisBox, dims: ImageDims) -> [f64; 4] {
    let (w, h) = (dims.width as f64, dims.height as f64);
    [b.x1 * w, b.y1 * h, b.x2 * w, b.y2 * h]
}

/// Intersection-over-union of two axis-aligned boxes. Zero-area inputs score
/// 0 by convention so a degenerate model answer never poisons a metric.
pub fn iou(a: AxisBox, b: AxisBox) -> f64 {
    let ix = (a.x2.min(b.x2) - a.x1.max(b.x1)).max(0.0);
    let iy = (a.y2.min(b.y2) - a.y1.max(b.y1)).max(0.0);
    let inter = ix * iy;
    let union = a.area() + b.area() - inter;
    if union <= 0.0 {
        return 0.0;
    }
    inter / union
}

/// Intersection-over-union of two rotated boxes via Sutherland-Hodgman
/// clipping of one corner rectangle against the other. Degenerate boxes
/// (near-zero area) score 0 and log a warning.
pub fn oriented_iou(a: &OrientedBox, b: &OrientedBox) -> f64 {
    let area_a = a.w * a.h;
    let area_b = b.w * b.h;
    if area_a < 1e-12 || area_b < 1e-12 {
        log::warn!("oriented_iou on degenerate box (areas {area_a:.3e}, {area_b:.3e})");
        return 0.0;
    }
    let inter = convex_clip_area(&a.corners(), &b.corners());
    let union = area_a + area_b - inter;
    if union <= 0.0 {
        return 0.0;
    }
    (inter / union).clamp(0.0, 1.0)
}

/// Area of the intersection of two convex polygons wound screen-CCW.
fn convex_clip_area(subject: &[(f64, f64)], clip: &[(f64, f64)]) -> f64 {
    let mut output: Vec<(f64, f64)> = subject.to_vec();
    let n = clip.len();
    for i in 0..n {
        if output.is_empty() {
            return 0.0;
        }
        let p1 = clip[i];
        let p2 = clip[(i + 1) % n];
        let input = std::mem::take(&mut output);
        // Screen-CCW clip polygon: interior is the cross <= 0 side.
        let inside = |q: (f64, f64)| cross(p1, p2, q) <= 0.0;
        let m = input.len();
        for j in 0..m {
            let cur = input[j];
            let prev = input[(j + m - 1) % m];
            let cur_in = inside(cur);
            let prev_in = inside(prev);
            if cur_in {
                if !prev_in {
                    output.push(line_intersection(p1, p2, prev, cur));
                }
                output.push(cur);
            } else if prev_in {
                output.push(line_intersection(p1, p2, prev, cur));
            }
        }
    }
    shoelace(&output).abs() / 2.0
}

fn line_intersection(
    p1: (f64, f64),
    p2: (f64, f64),
    a: (f64, f64),
    b: (f64, f64),
) -> (f64, f64) {
    let dc = (p1.0 - p2.0, p1.1 - p2.1);
    let dp = (a.0 - b.0, a.1 - b.1);
    let n1 = p1.0 * p2.1 - p1.1 * p2.0;
    let n2 = a.0 * b.1 - a.1 * b.0;
    let denom = dc.0 * dp.1 - dc.1 * dp.0;
    (
        (n1 * dp.0 - n2 * dc.0) / denom,
        (n1 * dp.1 - n2 * dc.1) / denom,
    )
}

/// Minimal convex polygon containing all input points (Andrew's monotone
/// chain). Vertices are a subset of the input in screen-CCW order; collinear
/// interior points are excluded.
pub fn convex_hull(points: &[Point]) -> Result<Polygon, GeomError> {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| (p.x, p.y)).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("points are finite"));
    pts.dedup();
    if pts.len() < 3 {
        return Err(GeomError::DegenerateHull {
            reason: "fewer than 3 distinct points",
            n: points.len(),
        });
    }

    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    // Strict left turns in math convention give positive shoelace; reverse to
    // get the screen-CCW winding used everywhere else.
    let mut hull = lower;
    hull.extend(upper);
    if hull.len() < 3 {
        return Err(GeomError::DegenerateHull {
            reason: "all points collinear",
            n: points.len(),
        });
    }
    hull.reverse();
    // Canonical start: lexicographically smallest vertex first.
    let start = hull
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.partial_cmp(b).expect("points are finite"))
        .map(|(i, _)| i)
        .unwrap_or(0);
    hull.rotate_left(start);
    let vertices = hull
        .into_iter()
        .map(|(x, y)| Point::new(x, y))
        .collect::<Result<Vec<_>, _>>()?;
    Polygon::new(vertices)
}

/// Midpoint of a box along each axis.
pub fn box_center(b: AxisBox) -> Point {
    Point {
        x: (b.x1 + b.x2) / 2.0,
        y: (b.y1 + b.y2) / 2.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(x1: f64, y1: f64, x2: f64, y2: f64) -> AxisBox {
        AxisBox::new(x1, y1, x2, y2).unwrap()
    }

    #[test]
    fn normalize_box_divides_by_dims() {
        let dims = ImageDims::new(640, 480).unwrap();
        let b = normalize_box([64.0, 48.0, 320.0, 240.0], dims).unwrap();
        assert_eq!(b, bx(0.1, 0.1, 0.5, 0.5));
        let full = normalize_box([0.0, 0.0, 640.0, 480.0], dims).unwrap();
        assert_eq!(full, AxisBox::full());
    }

    #[test]
    fn normalize_box_rejects_out_of_range_naming_field() {
        let dims = ImageDims::new(640, 480).unwrap();
        let err = normalize_box([0.0, 0.0, 700.0, 480.0], dims).unwrap_err();
        assert!(matches!(err, GeomError::OutOfRange { field: "x2", .. }));
        let err = normalize_box([10.0, 0.0, 5.0, 480.0], dims).unwrap_err();
        assert!(matches!(err, GeomError::Inverted { lo_field: "x1", .. }));
    }

    #[test]
    fn denormalize_examples() {
        let dims = ImageDims::new(100, 200).unwrap();
        assert_eq!(
            denormalize_box(bx(0.5, 0.5, 1.0, 1.0), dims),
            [50.0, 100.0, 100.0, 200.0]
        );
        assert_eq!(
            denormalize_box(bx(0.0, 0.0, 0.0, 0.0), dims),
            [0.0, 0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn axis_box_clamps_eps_noise_and_rejects_beyond() {
        let b = AxisBox::new(-1e-9, 0.0, 1.0 + 1e-9, 1.0).unwrap();
        assert_eq!(b, AxisBox::full());
        assert!(AxisBox::new(-0.01, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn iou_examples() {
        let a = bx(0.0, 0.0, 0.2, 0.2);
        assert_eq!(iou(a, a), 1.0);
        assert_eq!(iou(bx(0.0, 0.0, 0.1, 0.1), bx(0.5, 0.5, 0.6, 0.6)), 0.0);
        let b = bx(0.1, 0.1, 0.3, 0.3);
        // inter = 0.01, union = 0.04 + 0.04 - 0.01 = 0.07
        assert!((iou(a, b) - 1.0 / 7.0).abs() < 1e-12);
        assert_eq!(iou(a, b), iou(b, a));
    }

    #[test]
    fn iou_zero_area_convention() {
        let z = bx(0.2, 0.2, 0.2, 0.6);
        assert_eq!(iou(z, z), 0.0);
        assert_eq!(iou(z, bx(0.0, 0.0, 1.0, 1.0)), 0.0);
    }

    #[test]
    fn iou_containment_special_case() {
        let a = bx(0.0, 0.0, 0.5, 0.5);
        let b = bx(0.1, 0.1, 0.3, 0.3);
        assert!((iou(a, b) - b.area() / a.area()).abs() < 1e-12);
    }

    #[test]
    fn oriented_box_angle_range() {
        assert!(OrientedBox::new(0.5, 0.5, 0.2, 0.1, 180.0).is_err());
        assert!(OrientedBox::new(0.5, 0.5, 0.2, 0.1, 0.0).is_ok());
        assert_eq!(normalize_angle_deg(225.0), 45.0);
        assert_eq!(normalize_angle_deg(-45.0), 135.0);
        assert_eq!(normalize_angle_deg(360.0), 0.0);
    }

    #[test]
    fn oriented_iou_identity_any_angle() {
        for angle in [0.0, 17.5, 45.0, 90.0, 135.0, 179.0] {
            let b = OrientedBox::new(0.5, 0.5, 0.4, 0.2, angle).unwrap();
            assert!((oriented_iou(&b, &b) - 1.0).abs() < 1e-9, "angle {angle}");
        }
    }

    #[test]
    fn oriented_iou_angle_zero_matches_axis_iou() {
        let oa = OrientedBox::new(0.3, 0.3, 0.4, 0.4, 0.0).unwrap();
        let ob = OrientedBox::new(0.5, 0.5, 0.4, 0.4, 0.0).unwrap();
        let aa = bx(0.1, 0.1, 0.5, 0.5);
        let ab = bx(0.3, 0.3, 0.7, 0.7);
        assert!((oriented_iou(&oa, &ob) - iou(aa, ab)).abs() < 1e-9);
    }

    #[test]
    fn oriented_iou_symmetric_and_degenerate() {
        let a = OrientedBox::new(0.4, 0.4, 0.5, 0.2, 30.0).unwrap();
        let b = OrientedBox::new(0.6, 0.5, 0.3, 0.3, 120.0).unwrap();
        assert!((oriented_iou(&a, &b) - oriented_iou(&b, &a)).abs() < 1e-9);
        let thin = OrientedBox::new(0.5, 0.5, 1e-7, 1e-7, 10.0).unwrap();
        assert_eq!(oriented_iou(&thin, &b), 0.0);
    }

    #[test]
    fn convex_hull_square_with_center() {
        let pts = [
            Point::new(0.1, 0.1).unwrap(),
            Point::new(0.9, 0.1).unwrap(),
            Point::new(0.9, 0.9).unwrap(),
            Point::new(0.1, 0.9).unwrap(),
            Point::new(0.5, 0.5).unwrap(),
        ];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.vertices().len(), 4);
        assert!(!hull.vertices().iter().any(|p| p.x == 0.5 && p.y == 0.5));
        assert!((hull.area() - 0.64).abs() < 1e-12);
    }

    #[test]
    fn convex_hull_triangle_and_errors() {
        let tri = [
            Point::new(0.0, 0.0).unwrap(),
            Point::new(1.0, 0.0).unwrap(),
            Point::new(0.5, 0.8).unwrap(),
        ];
        assert_eq!(convex_hull(&tri).unwrap().vertices().len(), 3);
        let two = &tri[..2];
        assert!(matches!(
            convex_hull(two),
            Err(GeomError::DegenerateHull { .. })
        ));
        let collinear = [
            Point::new(0.0, 0.0).unwrap(),
            Point::new(0.5, 0.5).unwrap(),
            Point::new(1.0, 1.0).unwrap(),
        ];
        assert!(matches!(
            convex_hull(&collinear),
            Err(GeomError::DegenerateHull { .. })
        ));
    }

    #[test]
    fn hull_winding_is_screen_ccw() {
        let pts = [
            Point::new(0.0, 0.0).unwrap(),
            Point::new(1.0, 0.0).unwrap(),
            Point::new(1.0, 1.0).unwrap(),
            Point::new(0.0, 1.0).unwrap(),
        ];
        let hull = convex_hull(&pts).unwrap();
        let raw: Vec<(f64, f64)> = hull.vertices().iter().map(|p| (p.x, p.y)).collect();
        assert!(shoelace(&raw) < 0.0);
    }

    #[test]
    fn box_center_examples() {
        let c = box_center(AxisBox::full());
        assert_eq!((c.x, c.y), (0.5, 0.5));
        let c = box_center(bx(0.2, 0.2, 0.2, 0.6));
        assert_eq!((c.x, c.y), (0.2, 0.4));
    }

    #[test]
    fn polygon_rejects_bad_winding_and_self_intersection() {
        // Screen-clockwise square (positive shoelace) must be rejected.
        let cw = vec![
            Point::new(0.0, 0.0).unwrap(),
            Point::new(1.0, 0.0).unwrap(),
            Point::new(1.0, 1.0).unwrap(),
            Point::new(0.0, 1.0).unwrap(),
        ];
        assert!(matches!(Polygon::new(cw), Err(GeomError::BadWinding(_))));
        // Bowtie.
        let bow = vec![
            Point::new(0.0, 0.0).unwrap(),
            Point::new(0.0, 1.0).unwrap(),
            Point::new(1.0, 0.0).unwrap(),
            Point::new(1.0, 1.0).unwrap(),
        ];
        assert!(Polygon::new(bow).is_err());
    }
}
