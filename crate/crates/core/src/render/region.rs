//! Affine bookkeeping between sub-image views and their parent frame.

use crate::geometry::{AxisBox, ImageDims};

/// Records where a derived view came from, so boxes answered on that view can
/// be mapped back into parent-frame normalized coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMap {
    /// The parent-frame region this view shows.
    pub source_region: AxisBox,
    /// Resample factor from source pixels to view pixels (1.0 for crops).
    pub scale: f64,
    /// Pixel dimensions of the parent frame.
    pub parent_dims: ImageDims,
}

impl RegionMap {
    pub fn identity(parent_dims: ImageDims) -> Self {
        Self {
            source_region: AxisBox::full(),
            scale: 1.0,
            parent_dims,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source_region == AxisBox::full()
    }

    /// Map a box given in this view's normalized coordinates into the parent
    /// frame. The bool reports whether clipping to `[0, 1]` was required.
    pub fn remap_box(&self, b: AxisBox) -> (AxisBox, bool) {
        let sr = self.source_region;
        let (w, h) = (sr.width(), sr.height());
        let raw = [
            sr.x1 + b.x1 * w,
            sr.y1 + b.y1 * h,
            sr.x1 + b.x2 * w,
            sr.y1 + b.y2 * h,
        ];
        let clipped = raw.iter().any(|v| *v < 0.0 || *v > 1.0);
        let c = |v: f64| v.clamp(0.0, 1.0);
        let out = AxisBox::new(c(raw[0]), c(raw[1]), c(raw[2]), c(raw[3]))
            .expect("clamped remap preserves ordering");
        (out, clipped)
    }

    /// Map a parent-frame box into this view's coordinates. Inverse of
    /// [`RegionMap::remap_box`] for boxes inside the source region; `None`
    /// when the region is degenerate.
    pub fn invert_box(&self, b: AxisBox) -> Option<(AxisBox, bool)> {
        let sr = self.source_region;
        let (w, h) = (sr.width(), sr.height());
        if w <= 0.0 || h <= 0.0 {
            return None;
        }
        let raw = [
            (b.x1 - sr.x1) / w,
            (b.y1 - sr.y1) / h,
            (b.x2 - sr.x1) / w,
            (b.y2 - sr.y1) / h,
        ];
        let clipped = raw.iter().any(|v| *v < 0.0 || *v > 1.0);
        let c = |v: f64| v.clamp(0.0, 1.0);
        Some((
            AxisBox::new(c(raw[0]), c(raw[1]), c(raw[2]), c(raw[3]))
                .expect("clamped inverse preserves ordering"),
            clipped,
        ))
    }

    /// Compose with a map derived from this view: `inner` maps a sub-view
    /// into this view, the result maps that sub-view straight to the parent.
    pub fn compose(&self, inner: &RegionMap) -> RegionMap {
        let (region, _) = self.remap_box(inner.source_region);
        RegionMap {
            source_region: region,
            scale: self.scale * inner.scale,
            parent_dims: self.parent_dims,
        }
    }
}

/// Free-function form of [`RegionMap::remap_box`].
pub fn remap_box(b: AxisBox, map: &RegionMap) -> (AxisBox, bool) {
    map.remap_box(b)
}
