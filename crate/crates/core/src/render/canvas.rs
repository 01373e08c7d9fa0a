//! Row-major RGB raster buffer with PNG I/O and content hashing.

use std::path::Path;

use image::codecs::png::PngEncoder;
use image::{ExtendedColorType, ImageEncoder};
use sha2::{Digest, Sha256};

use crate::geometry::ImageDims;

use super::RenderError;

pub type Rgb = [u8; 3];

/// A mutable RGB image. Overlay operations clone it and return a new value;
/// the buffer is never shared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canvas {
    dims: ImageDims,
    pixels: Vec<u8>,
}

impl Canvas {
    /// Solid-color canvas.
    pub fn filled(dims: ImageDims, color: Rgb) -> Self {
        let n = (dims.width * dims.height) as usize;
        let mut pixels = Vec::with_capacity(n * 3);
        for _ in 0..n {
            pixels.extend_from_slice(&color);
        }
        Self { dims, pixels }
    }

    /// Wrap an existing RGB buffer; the length must be `width * height * 3`.
    pub fn from_raw(dims: ImageDims, pixels: Vec<u8>) -> Result<Self, RenderError> {
        let expected = dims.width as usize * dims.height as usize * 3;
        if pixels.len() != expected {
            return Err(RenderError::BufferSize {
                expected,
                actual: pixels.len(),
            });
        }
        Ok(Self { dims, pixels })
    }

    pub fn dims(&self) -> ImageDims {
        self.dims
    }

    pub fn width(&self) -> u32 {
        self.dims.width
    }

    pub fn height(&self) -> u32 {
        self.dims.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> Rgb {
        let i = (y as usize * self.dims.width as usize + x as usize) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    /// Set one pixel; coordinates must be in bounds.
    pub fn set_px(&mut self, x: u32, y: u32, color: Rgb) {
        assert!(x < self.dims.width && y < self.dims.height);
        let i = (y as usize * self.dims.width as usize + x as usize) * 3;
        self.pixels[i..i + 3].copy_from_slice(&color);
    }

    /// Fill the pixel-rect `[x0, x1) x [y0, y1)`, clipped to the frame.
    pub fn fill_rect(&mut self, x0: u32, y0: u32, x1: u32, y1: u32, color: Rgb) {
        for y in y0..y1.min(self.dims.height) {
            for x in x0..x1.min(self.dims.width) {
                self.set_px(x, y, color);
            }
        }
    }

    /// Out-of-bounds coordinates are ignored, so drawing code never clips.
    pub(crate) fn put(&mut self, x: i64, y: i64, color: Rgb) {
        if x < 0 || y < 0 || x >= self.dims.width as i64 || y >= self.dims.height as i64 {
            return;
        }
        let i = (y as usize * self.dims.width as usize + x as usize) * 3;
        self.pixels[i..i + 3].copy_from_slice(&color);
    }

    /// Copy a pixel-rect `[x0, x1) x [y0, y1)` into a new canvas.
    pub(crate) fn crop(&self, x0: u32, y0: u32, x1: u32, y1: u32) -> Canvas {
        debug_assert!(x0 < x1 && y0 < y1 && x1 <= self.width() && y1 <= self.height());
        let (w, h) = (x1 - x0, y1 - y0);
        let mut pixels = Vec::with_capacity((w * h) as usize * 3);
        for y in y0..y1 {
            let row = (y as usize * self.dims.width as usize + x0 as usize) * 3;
            pixels.extend_from_slice(&self.pixels[row..row + (w as usize) * 3]);
        }
        Canvas {
            dims: ImageDims {
                width: w,
                height: h,
            },
            pixels,
        }
    }

    /// Hex SHA-256 over dimensions and raw pixels. Used as the attachment id
    /// and the transcript image key; independent of PNG encoder details.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.dims.width.to_le_bytes());
        hasher.update(self.dims.height.to_le_bytes());
        hasher.update(&self.pixels);
        let digest = hasher.finalize();
        let mut out = String::with_capacity(64);
        for b in digest {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }

    /// Encode as 8-bit RGB PNG, no interlacing.
    pub fn to_png_bytes(&self) -> Result<Vec<u8>, RenderError> {
        let mut out = Vec::new();
        let encoder = PngEncoder::new(&mut out);
        encoder
            .write_image(
                &self.pixels,
                self.dims.width,
                self.dims.height,
                ExtendedColorType::Rgb8,
            )
            .map_err(|e| RenderError::Codec(e.to_string()))?;
        Ok(out)
    }

    pub fn from_png_bytes(bytes: &[u8]) -> Result<Self, RenderError> {
        let img = image::load_from_memory_with_format(bytes, image::ImageFormat::Png)
            .map_err(|e| RenderError::Codec(e.to_string()))?
            .to_rgb8();
        let dims = ImageDims::new(img.width(), img.height())
            .map_err(|e| RenderError::Codec(e.to_string()))?;
        Canvas::from_raw(dims, img.into_raw())
    }

    pub fn save_png(&self, path: &Path) -> Result<(), RenderError> {
        let bytes = self.to_png_bytes()?;
        std::fs::write(path, bytes).map_err(|e| RenderError::Io {
            path: path.display().to_string(),
            source: e,
        })
    }

    pub fn load_png(path: &Path) -> Result<Self, RenderError> {
        let bytes = std::fs::read(path).map_err(|e| RenderError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_png_bytes(&bytes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable_and_content_sensitive() {
        let dims = ImageDims::new(4, 3).unwrap();
        let a = Canvas::filled(dims, [1, 2, 3]);
        let b = Canvas::filled(dims, [1, 2, 3]);
        assert_eq!(a.content_hash(), b.content_hash());
        let mut c = b.clone();
        c.put(0, 0, [9, 9, 9]);
        assert_ne!(a.content_hash(), c.content_hash());
    }

    #[test]
    fn png_round_trip() {
        let dims = ImageDims::new(7, 5).unwrap();
        let mut c = Canvas::filled(dims, [10, 20, 30]);
        c.put(3, 2, [200, 100, 50]);
        let bytes = c.to_png_bytes().unwrap();
        let back = Canvas::from_png_bytes(&bytes).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn bad_buffer_size_rejected() {
        let dims = ImageDims::new(2, 2).unwrap();
        assert!(Canvas::from_raw(dims, vec![0; 11]).is_err());
    }
}
