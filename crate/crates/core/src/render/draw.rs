//! Low-level raster primitives. Integer Bresenham everywhere so output is a
//! pure function of the inputs.

use super::canvas::{Canvas, Rgb};
use super::font;

/// Plot a stroke-width square around a line point.
fn plot_thick(canvas: &mut Canvas, x: i64, y: i64, stroke: u32, color: Rgb) {
    let s = stroke as i64;
    let off = (s - 1) / 2;
    for dy in 0..s {
        for dx in 0..s {
            canvas.put(x - off + dx, y - off + dy, color);
        }
    }
}

pub fn line(canvas: &mut Canvas, a: (i64, i64), b: (i64, i64), stroke: u32, color: Rgb) {
    let (mut x0, mut y0) = a;
    let (x1, y1) = b;
    let dx = (x1 - x0).abs();
    let dy = -(y1 - y0).abs();
    let sx = if x0 < x1 { 1 } else { -1 };
    let sy = if y0 < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    loop {
        plot_thick(canvas, x0, y0, stroke, color);
        if x0 == x1 && y0 == y1 {
            break;
        }
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x0 += sx;
        }
        if e2 <= dx {
            err += dx;
            y0 += sy;
        }
    }
}

pub fn rect_outline(
    canvas: &mut Canvas,
    top_left: (i64, i64),
    bottom_right: (i64, i64),
    stroke: u32,
    color: Rgb,
) {
    let (x0, y0) = top_left;
    let (x1, y1) = bottom_right;
    line(canvas, (x0, y0), (x1, y0), stroke, color);
    line(canvas, (x1, y0), (x1, y1), stroke, color);
    line(canvas, (x1, y1), (x0, y1), stroke, color);
    line(canvas, (x0, y1), (x0, y0), stroke, color);
}

pub fn disc(canvas: &mut Canvas, center: (i64, i64), radius: i64, color: Rgb) {
    let (cx, cy) = center;
    for dy in -radius..=radius {
        for dx in -radius..=radius {
            if dx * dx + dy * dy <= radius * radius {
                canvas.put(cx + dx, cy + dy, color);
            }
        }
    }
}

pub fn circle_outline(canvas: &mut Canvas, center: (i64, i64), radius: i64, stroke: u32, color: Rgb) {
    // Midpoint circle; stroke dilation via thick plotting.
    let (cx, cy) = center;
    let mut x = radius;
    let mut y = 0i64;
    let mut err = 1 - radius;
    while x >= y {
        for (px, py) in [
            (cx + x, cy + y),
            (cx + y, cy + x),
            (cx - y, cy + x),
            (cx - x, cy + y),
            (cx - x, cy - y),
            (cx - y, cy - x),
            (cx + y, cy - x),
            (cx + x, cy - y),
        ] {
            plot_thick(canvas, px, py, stroke, color);
        }
        y += 1;
        if err < 0 {
            err += 2 * y + 1;
        } else {
            x -= 1;
            err += 2 * (y - x) + 1;
        }
    }
}

/// Draw `text` with its top-left corner at `origin`, scaled by `scale`.
pub fn text(canvas: &mut Canvas, origin: (i64, i64), s: &str, scale: u32, color: Rgb) {
    let (mut x, y) = origin;
    let k = scale as i64;
    for c in s.chars() {
        let rows = font::glyph(c);
        for (ry, row) in rows.iter().enumerate() {
            for col in 0..font::GLYPH_W as i64 {
                if row & (0x10 >> col) != 0 {
                    for sy in 0..k {
                        for sx in 0..k {
                            canvas.put(
                                x + col * k + sx,
                                y + ry as i64 * k + sy,
                                color,
                            );
                        }
                    }
                }
            }
        }
        x += font::ADVANCE as i64 * k;
    }
}

/// Draw `text` horizontally centered on `center_x` with top edge at `y`,
/// nudged back into the frame when it would overflow.
pub fn text_centered(canvas: &mut Canvas, center: (i64, i64), s: &str, scale: u32, color: Rgb) {
    let w = font::text_width(s, scale) as i64;
    let mut x = center.0 - w / 2;
    let max_x = canvas.width() as i64 - w;
    if x > max_x {
        x = max_x;
    }
    if x < 0 {
        x = 0;
    }
    text(canvas, (x, center.1), s, scale, color);
}
