//! Visual-prompt overlays and image transforms.
//!
//! Each operation is a pure function from `(canvas, args, style)` to a new
//! canvas: repeated calls produce byte-identical buffers, and pixels outside
//! the drawn marks are left untouched. That determinism is what makes
//! golden-image tests and transcript replay possible, so no system fonts, no
//! anti-aliasing, no wall-clock anywhere.

mod canvas;
mod draw;
pub mod font;
mod region;

pub use canvas::{Canvas, Rgb};
pub use region::{remap_box, RegionMap};

use thiserror::Error;

use crate::geometry::{box_center, AxisBox, GeomError, ImageDims, Point, Polygon};

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("pixel buffer length {actual} does not match dimensions (expected {expected})")]
    BufferSize { expected: usize, actual: usize },
    #[error("split too fine: sub-images would be {width}x{height} px (minimum 8x8)")]
    SplitTooFine { width: u32, height: u32 },
    #[error("split arguments invalid: rows={rows}, cols={cols}, overlap={overlap}")]
    BadSplit { rows: u32, cols: u32, overlap: f64 },
    #[error("zoom region has zero area")]
    EmptyRegion,
    #[error("canvas too small for ruler labels: {width}x{height} px (minimum 64 on each edge)")]
    RulerUnfit { width: u32, height: u32 },
    #[error("compass circle lies entirely outside the frame")]
    CompassUnfit,
    #[error("tick interval {0} does not divide 1.0")]
    BadTickInterval(f64),
    #[error("style invalid: {0}")]
    BadStyle(&'static str),
    #[error("scene graph edge ({a}, {b}) references a missing node")]
    GraphInconsistency { a: usize, b: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("png codec: {0}")]
    Codec(String),
    #[error("io on {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Stroke, palette, font and graduation settings shared by all overlays.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlayStyle {
    pub stroke_width: u32,
    pub palette: Vec<Rgb>,
    pub font_size: u32,
    pub tick_interval: f64,
}

impl Default for OverlayStyle {
    fn default() -> Self {
        Self {
            stroke_width: 2,
            palette: vec![
                [230, 25, 25],
                [255, 200, 0],
                [0, 130, 200],
                [60, 180, 75],
                [240, 50, 230],
                [70, 240, 240],
                [245, 130, 48],
                [255, 255, 255],
            ],
            font_size: 14,
            tick_interval: 0.1,
        }
    }
}

impl OverlayStyle {
    fn validate(&self) -> Result<(), RenderError> {
        if self.stroke_width < 1 {
            return Err(RenderError::BadStyle("stroke_width must be >= 1"));
        }
        if self.palette.is_empty() {
            return Err(RenderError::BadStyle("palette must be non-empty"));
        }
        if !(self.tick_interval > 0.0 && self.tick_interval <= 0.5) {
            return Err(RenderError::BadStyle("tick_interval must be in (0, 0.5]"));
        }
        Ok(())
    }

    fn color(&self, i: usize) -> Rgb {
        self.palette[i % self.palette.len()]
    }

    fn font_scale(&self) -> u32 {
        (self.font_size / font::GLYPH_H).max(1)
    }
}

/// Normalized coordinate to pixel index over an extent.
fn px(v: f64, extent: u32) -> i64 {
    (v * (extent - 1) as f64).round() as i64
}

fn box_px(b: AxisBox, dims: ImageDims) -> ((i64, i64), (i64, i64)) {
    (
        (px(b.x1, dims.width), px(b.y1, dims.height)),
        (px(b.x2, dims.width), px(b.y2, dims.height)),
    )
}

const RULER_MAJOR_LEN: i64 = 12;
const RULER_MINOR_LEN: i64 = 6;

/// Crop the image into `rows x cols` sub-images. With `overlap > 0` each
/// region is expanded by that normalized margin where in-bounds, so objects
/// on tile borders appear whole in at least one tile.
pub fn split_image(
    canvas: &Canvas,
    rows: u32,
    cols: u32,
    overlap: f64,
) -> Result<Vec<(Canvas, RegionMap)>, RenderError> {
    if rows < 1 || cols < 1 || !(0.0..0.5).contains(&overlap) {
        return Err(RenderError::BadSplit {
            rows,
            cols,
            overlap,
        });
    }
    let dims = canvas.dims();
    let (w, h) = (dims.width as u64, dims.height as u64);
    let ox = (overlap * dims.width as f64).round() as u64;
    let oy = (overlap * dims.height as f64).round() as u64;
    let mut out = Vec::with_capacity((rows * cols) as usize);
    for r in 0..rows as u64 {
        for c in 0..cols as u64 {
            let x0 = (c * w / cols as u64).saturating_sub(ox) as u32;
            let x1 = (((c + 1) * w / cols as u64 + ox).min(w)) as u32;
            let y0 = (r * h / rows as u64).saturating_sub(oy) as u32;
            let y1 = (((r + 1) * h / rows as u64 + oy).min(h)) as u32;
            if x1 - x0 < 8 || y1 - y0 < 8 {
                return Err(RenderError::SplitTooFine {
                    width: x1 - x0,
                    height: y1 - y0,
                });
            }
            let sub = canvas.crop(x0, y0, x1, y1);
            let region = AxisBox::new(
                x0 as f64 / w as f64,
                y0 as f64 / h as f64,
                x1 as f64 / w as f64,
                y1 as f64 / h as f64,
            )?;
            out.push((
                sub,
                RegionMap {
                    source_region: region,
                    scale: 1.0,
                    parent_dims: dims,
                },
            ));
        }
    }
    Ok(out)
}

/// Crop `region` and resample it to `out_dims` with bilinear interpolation.
pub fn zoom_region(
    canvas: &Canvas,
    region: AxisBox,
    out_dims: ImageDims,
) -> Result<(Canvas, RegionMap), RenderError> {
    if region.area() <= 0.0 {
        return Err(RenderError::EmptyRegion);
    }
    let dims = canvas.dims();
    let x0 = (region.x1 * dims.width as f64).floor() as u32;
    let y0 = (region.y1 * dims.height as f64).floor() as u32;
    let x1 = ((region.x2 * dims.width as f64).ceil() as u32)
        .clamp(x0 + 1, dims.width);
    let y1 = ((region.y2 * dims.height as f64).ceil() as u32)
        .clamp(y0 + 1, dims.height);
    let crop = canvas.crop(x0, y0, x1, y1);
    let resampled = bilinear(&crop, out_dims);
    let actual = AxisBox::new(
        x0 as f64 / dims.width as f64,
        y0 as f64 / dims.height as f64,
        x1 as f64 / dims.width as f64,
        y1 as f64 / dims.height as f64,
    )?;
    let map = RegionMap {
        source_region: actual,
        scale: out_dims.width as f64 / (x1 - x0) as f64,
        parent_dims: dims,
    };
    Ok((resampled, map))
}

fn bilinear(src: &Canvas, out_dims: ImageDims) -> Canvas {
    let (sw, sh) = (src.width() as i64, src.height() as i64);
    let (ow, oh) = (out_dims.width, out_dims.height);
    let mut pixels = Vec::with_capacity((ow * oh) as usize * 3);
    for y in 0..oh {
        let sy = ((y as f64 + 0.5) * sh as f64 / oh as f64 - 0.5).clamp(0.0, (sh - 1) as f64);
        let y0 = sy.floor() as i64;
        let y1 = (y0 + 1).min(sh - 1);
        let fy = sy - y0 as f64;
        for x in 0..ow {
            let sx = ((x as f64 + 0.5) * sw as f64 / ow as f64 - 0.5).clamp(0.0, (sw - 1) as f64);
            let x0 = sx.floor() as i64;
            let x1 = (x0 + 1).min(sw - 1);
            let fx = sx - x0 as f64;
            let p00 = src.get(x0 as u32, y0 as u32);
            let p10 = src.get(x1 as u32, y0 as u32);
            let p01 = src.get(x0 as u32, y1 as u32);
            let p11 = src.get(x1 as u32, y1 as u32);
            for ch in 0..3 {
                let top = p00[ch] as f64 * (1.0 - fx) + p10[ch] as f64 * fx;
                let bot = p01[ch] as f64 * (1.0 - fx) + p11[ch] as f64 * fx;
                let v = top * (1.0 - fy) + bot * fy;
                pixels.push(v.round().clamp(0.0, 255.0) as u8);
            }
        }
    }
    Canvas::from_raw(out_dims, pixels).expect("buffer sized by construction")
}

fn tick_count(tick_interval: f64) -> Result<u32, RenderError> {
    let n = (1.0 / tick_interval).round();
    if n < 2.0 || (n * tick_interval - 1.0).abs() > 1e-9 {
        return Err(RenderError::BadTickInterval(tick_interval));
    }
    Ok(n as u32)
}

fn tick_label(k: u32, n: u32) -> String {
    let s = format!("{:.2}", k as f64 / n as f64);
    let trimmed = s.trim_end_matches('0');
    if trimmed.ends_with('.') {
        format!("{trimmed}0")
    } else {
        trimmed.to_string()
    }
}

/// Overlay graduated rulers along the top and left edges: major ticks with
/// numeric labels at every `tick_interval`, minor ticks at a fifth of that.
pub fn overlay_ruler(canvas: &Canvas, style: &OverlayStyle) -> Result<Canvas, RenderError> {
    style.validate()?;
    let dims = canvas.dims();
    if dims.width < 64 || dims.height < 64 {
        return Err(RenderError::RulerUnfit {
            width: dims.width,
            height: dims.height,
        });
    }
    let n = tick_count(style.tick_interval)?;
    let mut out = canvas.clone();
    let ink = style.color(0);
    let stroke = style.stroke_width;
    let scale = style.font_scale();

    draw::line(&mut out, (0, 0), (dims.width as i64 - 1, 0), stroke, ink);
    draw::line(&mut out, (0, 0), (0, dims.height as i64 - 1), stroke, ink);
    for k in 0..=n {
        let v = k as f64 / n as f64;
        let x = px(v, dims.width);
        let y = px(v, dims.height);
        draw::line(&mut out, (x, 0), (x, RULER_MAJOR_LEN), stroke, ink);
        draw::line(&mut out, (0, y), (RULER_MAJOR_LEN, y), stroke, ink);
        let label = tick_label(k, n);
        draw::text_centered(&mut out, (x, RULER_MAJOR_LEN + 3), &label, scale, ink);
        let ty = (y - (font::text_height(scale) / 2) as i64)
            .clamp(0, dims.height as i64 - font::text_height(scale) as i64);
        draw::text(&mut out, (RULER_MAJOR_LEN + 3, ty), &label, scale, ink);
        if k < n {
            for j in 1..5u32 {
                let vm = v + j as f64 / (5 * n) as f64;
                let xm = px(vm, dims.width);
                let ym = px(vm, dims.height);
                draw::line(&mut out, (xm, 0), (xm, RULER_MINOR_LEN), stroke, ink);
                draw::line(&mut out, (0, ym), (RULER_MINOR_LEN, ym), stroke, ink);
            }
        }
    }
    Ok(out)
}

/// Overlay a compass: a circle with degree graduations every 10 degrees and
/// numeric labels every 30, with 0 degrees along +x and 90 pointing down
/// (screen convention). `radius` is normalized by the larger image dimension.
pub fn overlay_compass(
    canvas: &Canvas,
    center: Point,
    radius: f64,
    style: &OverlayStyle,
) -> Result<Canvas, RenderError> {
    style.validate()?;
    if radius <= 0.0 {
        return Err(RenderError::BadStyle("compass radius must be positive"));
    }
    let dims = canvas.dims();
    let r = (radius * dims.width.max(dims.height) as f64).round() as i64;
    let cx = px(center.x, dims.width);
    let cy = px(center.y, dims.height);
    let (w, h) = (dims.width as i64, dims.height as i64);
    // Entirely outside: either the frame is beyond the ring's reach, or the
    // whole frame sits strictly inside the ring.
    let nearest = ((cx.clamp(0, w - 1) - cx) as f64).hypot((cy.clamp(0, h - 1) - cy) as f64);
    let farthest = [(0, 0), (w - 1, 0), (0, h - 1), (w - 1, h - 1)]
        .iter()
        .map(|&(x, y)| ((x - cx) as f64).hypot((y - cy) as f64))
        .fold(0.0f64, f64::max);
    if nearest > r as f64 || farthest < r as f64 {
        return Err(RenderError::CompassUnfit);
    }

    let mut out = canvas.clone();
    let ink = style.color(1);
    let stroke = style.stroke_width;
    let scale = style.font_scale();
    draw::circle_outline(&mut out, (cx, cy), r, stroke, ink);
    draw::disc(&mut out, (cx, cy), stroke as i64, ink);
    for deg in (0u32..360).step_by(10) {
        let rad = (deg as f64).to_radians();
        let (sin, cos) = rad.sin_cos();
        let inner = if deg % 30 == 0 { r - 12 } else { r - 7 };
        let p1 = (
            cx + (inner as f64 * cos).round() as i64,
            cy + (inner as f64 * sin).round() as i64,
        );
        let p2 = (
            cx + (r as f64 * cos).round() as i64,
            cy + (r as f64 * sin).round() as i64,
        );
        draw::line(&mut out, p1, p2, stroke, ink);
        if deg % 30 == 0 {
            let dist = r as f64 + 8.0 + font::text_height(scale) as f64 / 2.0;
            let lx = cx + (dist * cos).round() as i64;
            let ly = cy + (dist * sin).round() as i64 - (font::text_height(scale) / 2) as i64;
            draw::text_centered(&mut out, (lx, ly), &deg.to_string(), scale, ink);
        }
    }
    Ok(out)
}

/// Mark labelled centroids: a filled dot plus the label text, colors cycling
/// through the palette by item index.
pub fn mark_centroids(
    canvas: &Canvas,
    items: &[(String, Point)],
    style: &OverlayStyle,
) -> Result<Canvas, RenderError> {
    style.validate()?;
    let dims = canvas.dims();
    let mut out = canvas.clone();
    let scale = style.font_scale();
    let r = style.stroke_width as i64 + 2;
    for (i, (label, p)) in items.iter().enumerate() {
        let color = style.color(i);
        let (x, y) = (px(p.x, dims.width), px(p.y, dims.height));
        draw::disc(&mut out, (x, y), r, color);
        draw::text(
            &mut out,
            (x + r + 3, y - (font::text_height(scale) / 2) as i64),
            label,
            scale,
            color,
        );
    }
    Ok(out)
}

/// Draw a convex hull as a closed polyline with dotted vertices.
pub fn mark_convex_hull(
    canvas: &Canvas,
    hull: &Polygon,
    style: &OverlayStyle,
) -> Result<Canvas, RenderError> {
    style.validate()?;
    let dims = canvas.dims();
    let mut out = canvas.clone();
    let color = style.color(0);
    let pts: Vec<(i64, i64)> = hull
        .vertices()
        .iter()
        .map(|p| (px(p.x, dims.width), px(p.y, dims.height)))
        .collect();
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        draw::line(&mut out, a, b, style.stroke_width, color);
    }
    for &p in &pts {
        draw::disc(&mut out, p, style.stroke_width as i64 + 1, color);
    }
    Ok(out)
}

/// Outline boxes with `<index>:<label>` captions at their top-left corner.
pub fn mark_boxes(
    canvas: &Canvas,
    items: &[(usize, String, AxisBox)],
    style: &OverlayStyle,
) -> Result<Canvas, RenderError> {
    style.validate()?;
    let dims = canvas.dims();
    let mut out = canvas.clone();
    let scale = style.font_scale();
    for (index, label, b) in items {
        let color = style.color(*index);
        let (tl, br) = box_px(*b, dims);
        draw::rect_outline(&mut out, tl, br, style.stroke_width, color);
        let caption = format!("{index}:{label}");
        let inset = style.stroke_width as i64 + 2;
        draw::text(&mut out, (tl.0 + inset, tl.1 + inset), &caption, scale, color);
    }
    Ok(out)
}

/// Draw a scene graph: a line between the centers of every related pair of
/// boxes with the relation text at the midpoint.
pub fn mark_scene_graph(
    canvas: &Canvas,
    nodes: &[(usize, AxisBox)],
    edges: &[(usize, usize, String)],
    style: &OverlayStyle,
) -> Result<Canvas, RenderError> {
    style.validate()?;
    let dims = canvas.dims();
    let centers: std::collections::HashMap<usize, Point> = nodes
        .iter()
        .map(|(i, b)| (*i, box_center(*b)))
        .collect();
    for (a, b, _) in edges {
        if !centers.contains_key(a) || !centers.contains_key(b) {
            return Err(RenderError::GraphInconsistency { a: *a, b: *b });
        }
    }
    let mut out = canvas.clone();
    let scale = style.font_scale();
    for (i, b) in nodes {
        let c = centers[i];
        draw::disc(
            &mut out,
            (px(c.x, dims.width), px(c.y, dims.height)),
            style.stroke_width as i64 + 2,
            style.color(*i),
        );
        let _ = b;
    }
    for (a, b, relation) in edges {
        let (ca, cb) = (centers[a], centers[b]);
        let pa = (px(ca.x, dims.width), px(ca.y, dims.height));
        let pb = (px(cb.x, dims.width), px(cb.y, dims.height));
        let color = style.color(a + b);
        draw::line(&mut out, pa, pb, style.stroke_width, color);
        let mid = ((pa.0 + pb.0) / 2, (pa.1 + pb.1) / 2);
        draw::text_centered(
            &mut out,
            (mid.0, mid.1 - (font::text_height(scale) / 2) as i64),
            relation,
            scale,
            color,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(w: u32, h: u32) -> ImageDims {
        ImageDims::new(w, h).unwrap()
    }

    fn quadrant_canvas(w: u32, h: u32) -> Canvas {
        let d = dims(w, h);
        let mut c = Canvas::filled(d, [0, 0, 0]);
        let colors = [[255, 0, 0], [0, 255, 0], [0, 0, 255], [255, 255, 0]];
        for y in 0..h {
            for x in 0..w {
                let q = (y >= h / 2) as usize * 2 + (x >= w / 2) as usize;
                c.put(x as i64, y as i64, colors[q]);
            }
        }
        c
    }

    #[test]
    fn split_2x2_no_overlap_tiles_exactly() {
        let c = quadrant_canvas(100, 100);
        let tiles = split_image(&c, 2, 2, 0.0).unwrap();
        assert_eq!(tiles.len(), 4);
        let expected = [
            AxisBox::new(0.0, 0.0, 0.5, 0.5).unwrap(),
            AxisBox::new(0.5, 0.0, 1.0, 0.5).unwrap(),
            AxisBox::new(0.0, 0.5, 0.5, 1.0).unwrap(),
            AxisBox::new(0.5, 0.5, 1.0, 1.0).unwrap(),
        ];
        for ((sub, map), want) in tiles.iter().zip(expected) {
            assert_eq!(map.source_region, want);
            assert_eq!(sub.dims(), dims(50, 50));
        }
    }

    #[test]
    fn split_1x1_is_identity() {
        let c = quadrant_canvas(64, 48);
        let tiles = split_image(&c, 1, 1, 0.0).unwrap();
        assert_eq!(tiles.len(), 1);
        assert_eq!(tiles[0].0, c);
        assert_eq!(tiles[0].1.source_region, AxisBox::full());
    }

    #[test]
    fn split_overlap_strips_match_parent() {
        let c = quadrant_canvas(100, 100);
        let tiles = split_image(&c, 2, 2, 0.1).unwrap();
        // Top-left tile extends to 60x60; its pixels must equal the parent's.
        let (sub, map) = &tiles[0];
        assert_eq!(map.source_region, AxisBox::new(0.0, 0.0, 0.6, 0.6).unwrap());
        for y in 0..sub.height() {
            for x in 0..sub.width() {
                assert_eq!(sub.get(x, y), c.get(x, y));
            }
        }
        // Bottom-right tile starts at 40,40.
        let (sub, map) = &tiles[3];
        assert_eq!(map.source_region, AxisBox::new(0.4, 0.4, 1.0, 1.0).unwrap());
        for y in 0..sub.height() {
            for x in 0..sub.width() {
                assert_eq!(sub.get(x, y), c.get(x + 40, y + 40));
            }
        }
    }

    #[test]
    fn split_reconstructs_parent_bytes() {
        let c = quadrant_canvas(96, 60);
        let tiles = split_image(&c, 3, 4, 0.0).unwrap();
        let mut rebuilt = Canvas::filled(c.dims(), [7, 7, 7]);
        for (r, row) in tiles.chunks(4).enumerate() {
            for (cix, (sub, map)) in row.iter().enumerate() {
                let x0 = (map.source_region.x1 * 96.0).round() as i64;
                let y0 = (map.source_region.y1 * 60.0).round() as i64;
                let _ = (r, cix);
                for y in 0..sub.height() {
                    for x in 0..sub.width() {
                        rebuilt.put(x0 + x as i64, y0 + y as i64, sub.get(x, y));
                    }
                }
            }
        }
        assert_eq!(rebuilt.pixels(), c.pixels());
    }

    #[test]
    fn split_too_fine_errors() {
        let c = quadrant_canvas(64, 64);
        assert!(matches!(
            split_image(&c, 10, 10, 0.0),
            Err(RenderError::SplitTooFine { .. })
        ));
    }

    #[test]
    fn zoom_full_region_same_dims_is_identity() {
        let c = quadrant_canvas(80, 60);
        let (out, map) = zoom_region(&c, AxisBox::full(), c.dims()).unwrap();
        assert_eq!(out, c);
        assert!(map.is_identity());
    }

    #[test]
    fn zoom_quadrant_preserves_corner_pixels() {
        let c = quadrant_canvas(100, 100);
        let region = AxisBox::new(0.0, 0.0, 0.5, 0.5).unwrap();
        let (out, map) = zoom_region(&c, region, c.dims()).unwrap();
        assert_eq!(out.dims(), c.dims());
        assert_eq!(out.get(0, 0), c.get(0, 0));
        assert_eq!(out.get(99, 99), c.get(49, 49));
        // Remap of the full sub-frame recovers the region.
        let (back, _) = map.remap_box(AxisBox::full());
        assert_eq!(back, region);
        assert!((map.scale - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zoom_zero_area_rejected() {
        let c = quadrant_canvas(32, 32);
        let line = AxisBox::new(0.1, 0.1, 0.1, 0.9).unwrap();
        assert!(matches!(
            zoom_region(&c, line, c.dims()),
            Err(RenderError::EmptyRegion)
        ));
    }

    #[test]
    fn ruler_tick_positions_match_definition() {
        let c = Canvas::filled(dims(640, 480), [0, 0, 0]);
        let style = OverlayStyle::default();
        let out = overlay_ruler(&c, &style).unwrap();
        let ink = style.color(0);
        // Row 8 is below the minor ticks (length 6) but inside the major
        // ticks (length 12); ink there marks exactly the major ticks, plus
        // the left-edge "0.0" label near the corner.
        let y = (RULER_MINOR_LEN + 2) as u32;
        let expected: Vec<i64> = (0..=10).map(|k| px(k as f64 / 10.0, 640)).collect();
        assert_eq!(expected.len(), 11);
        for want in &expected {
            assert_eq!(out.get(*want as u32, y), ink, "no tick at {want}");
        }
        // Between ticks and clear of the corner label there is nothing.
        let mut runs = 0;
        let mut in_run = false;
        for x in 56..640 {
            let hit = out.get(x, y) == ink;
            if hit && !in_run {
                runs += 1;
            }
            in_run = hit;
        }
        assert_eq!(runs, 10, "ticks past the corner label zone");
        assert_eq!(out.get(300, y), [0, 0, 0]);
        // Label "0.5" is centered at x = round(0.5 * 639) = 320.
        let scale = style.font_scale();
        let label_w = font::text_width("0.5", scale) as i64;
        let cx = px(0.5, 640);
        let x0 = cx - label_w / 2;
        let band_y0 = RULER_MAJOR_LEN + 3;
        let mut found = false;
        'outer: for y in band_y0..band_y0 + font::text_height(scale) as i64 {
            for x in x0..x0 + label_w {
                if out.get(x as u32, y as u32) == ink {
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found, "no label ink near x=320");
        // The gap between the "0.4" and "0.5" label boxes stays clean.
        assert_eq!(out.get(292, (band_y0 + 2) as u32), [0, 0, 0]);
    }

    #[test]
    fn ruler_is_deterministic() {
        let c = quadrant_canvas(128, 96);
        let style = OverlayStyle::default();
        let a = overlay_ruler(&c, &style).unwrap();
        let b = overlay_ruler(&c, &style).unwrap();
        assert_eq!(a.content_hash(), b.content_hash());
    }

    #[test]
    fn ruler_rejects_small_canvas_and_bad_tick() {
        let c = Canvas::filled(dims(63, 100), [0, 0, 0]);
        assert!(matches!(
            overlay_ruler(&c, &OverlayStyle::default()),
            Err(RenderError::RulerUnfit { .. })
        ));
        let c = Canvas::filled(dims(100, 100), [0, 0, 0]);
        let style = OverlayStyle {
            tick_interval: 0.3,
            ..OverlayStyle::default()
        };
        assert!(matches!(
            overlay_ruler(&c, &style),
            Err(RenderError::BadTickInterval(_))
        ));
    }

    #[test]
    fn compass_label_90_is_below_center() {
        let c = Canvas::filled(dims(400, 400), [0, 0, 0]);
        let style = OverlayStyle::default();
        let center = Point::new(0.5, 0.5).unwrap();
        let out = overlay_compass(&c, center, 0.3, &style).unwrap();
        let ink = style.color(1);
        let r = (0.3f64 * 400.0).round() as i64;
        let (cx, cy) = (px(0.5, 400), px(0.5, 400));
        let scale = style.font_scale();
        let dist = r as f64 + 8.0 + font::text_height(scale) as f64 / 2.0;
        // Angle-to-position oracle: the 90-degree label anchor is straight
        // down from the center in the y-down convention.
        let anchor_y = cy + dist.round() as i64;
        let mut found = false;
        for y in anchor_y - font::text_height(scale) as i64..=anchor_y + 2 {
            for x in cx - 20..=cx + 20 {
                if out.get(x as u32, y as u32) == ink {
                    found = true;
                }
            }
        }
        assert!(found, "no label ink below center");
        // And no ink in the same window above reflected across the ring
        // interior (the 270 label lives there instead, outside the ring).
        assert_eq!(out.get(cx as u32, (cy + r - 20) as u32), [0, 0, 0]);
    }

    #[test]
    fn compass_determinism_and_unfit() {
        let c = quadrant_canvas(200, 150);
        let style = OverlayStyle::default();
        let center = Point::new(0.5, 0.5).unwrap();
        let a = overlay_compass(&c, center, 0.3, &style).unwrap();
        let b = overlay_compass(&c, center, 0.3, &style).unwrap();
        assert_eq!(a.content_hash(), b.content_hash());
        // A ring that encloses the whole frame never intersects it.
        assert!(matches!(
            overlay_compass(&c, center, 5.0, &style),
            Err(RenderError::CompassUnfit)
        ));
    }

    #[test]
    fn scene_graph_edge_runs_between_centers() {
        let c = Canvas::filled(dims(200, 200), [0, 0, 0]);
        let style = OverlayStyle::default();
        let nodes = vec![
            (0usize, AxisBox::new(0.0, 0.0, 0.2, 0.2).unwrap()),
            (1usize, AxisBox::new(0.8, 0.8, 1.0, 1.0).unwrap()),
        ];
        let edges = vec![(0usize, 1usize, "near".to_string())];
        let out = mark_scene_graph(&c, &nodes, &edges, &style).unwrap();
        // Centers are (0.1, 0.1) -> px 20 and (0.9, 0.9) -> px 179; the
        // segment is an exact diagonal, so (60, 60) lies on it.
        assert_eq!(out.get(60, 60), style.color(1));
        assert!(matches!(
            mark_scene_graph(&c, &nodes, &[(0, 7, "x".into())], &style),
            Err(RenderError::GraphInconsistency { a: 0, b: 7 })
        ));
    }

    #[test]
    fn marks_leave_outside_pixels_untouched() {
        let c = quadrant_canvas(160, 120);
        let style = OverlayStyle::default();
        let items = vec![(0usize, "cat".to_string(), AxisBox::new(0.2, 0.2, 0.6, 0.7).unwrap())];
        let marked = mark_boxes(&c, &items, &style).unwrap();
        // Mask oracle: pixels changed on a black canvas and on an off-color
        // canvas together cover everything the op can draw.
        let black = Canvas::filled(c.dims(), [0, 0, 0]);
        let odd = Canvas::filled(c.dims(), [1, 2, 3]);
        let on_black = mark_boxes(&black, &items, &style).unwrap();
        let on_odd = mark_boxes(&odd, &items, &style).unwrap();
        for y in 0..c.height() {
            for x in 0..c.width() {
                let in_mask = on_black.get(x, y) != [0, 0, 0] || on_odd.get(x, y) != [1, 2, 3];
                if !in_mask {
                    assert_eq!(marked.get(x, y), c.get(x, y), "pixel ({x},{y}) changed");
                }
            }
        }
    }

    #[test]
    fn centroid_and_hull_marks_deterministic() {
        let c = quadrant_canvas(128, 128);
        let style = OverlayStyle::default();
        let items = vec![
            ("a".to_string(), Point::new(0.3, 0.4).unwrap()),
            ("b".to_string(), Point::new(0.7, 0.6).unwrap()),
        ];
        let m1 = mark_centroids(&c, &items, &style).unwrap();
        let m2 = mark_centroids(&c, &items, &style).unwrap();
        assert_eq!(m1, m2);
        let hull = crate::geometry::convex_hull(&[
            Point::new(0.1, 0.1).unwrap(),
            Point::new(0.9, 0.15).unwrap(),
            Point::new(0.8, 0.9).unwrap(),
            Point::new(0.15, 0.8).unwrap(),
        ])
        .unwrap();
        let h1 = mark_convex_hull(&c, &hull, &style).unwrap();
        let h2 = mark_convex_hull(&c, &hull, &style).unwrap();
        assert_eq!(h1.content_hash(), h2.content_hash());
        assert_ne!(h1.content_hash(), c.content_hash());
    }
}
