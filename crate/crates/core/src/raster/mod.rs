//! Image representation and the dataset pipeline: colorspace conversion,
//! bicubic resampling, degradation, patch extraction and augmentation.
//!
//! Intensities are kept as continuous reals in the nominal `[0, 255]` range;
//! quantization to 8-bit happens only when a file is written. All operations
//! here are pure functions and safe to call concurrently.

mod color;
mod io;
mod patches;
mod resample;

pub use color::{rgb_to_ycbcr, ycbcr_to_rgb, RgbImage, YCbCrImage};
pub use io::{read_image, read_pgm, read_png, read_ppm, write_pgm, write_png_gray, write_ppm, LoadedImage};
pub use patches::{augment, extract_patches, AugmentedImage, PatchPair, PatchSet, Rotation};
pub use resample::{bicubic_resize, degrade, degrade_full, modcrop, Degraded};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RasterError {
    #[error("image dimensions {height}x{width} are degenerate")]
    EmptyImage { height: usize, width: usize },
    #[error("data length {got} does not match {height}x{width}={expected}")]
    DataLength { height: usize, width: usize, expected: usize, got: usize },
    #[error("non-finite intensity at index {index}")]
    NonFinite { index: usize },
    #[error("channel dimensions differ: {0}")]
    ChannelMismatch(String),
    #[error("resize scale {scale} produces an empty output for {height}x{width}")]
    DegenerateResize { height: usize, width: usize, scale: f64 },
    #[error("modcrop by {factor} would empty a {height}x{width} image")]
    DegenerateCrop { height: usize, width: usize, factor: usize },
    #[error("image {height}x{width} is smaller than the {size}x{size} patch")]
    ImageTooSmall { height: usize, width: usize, size: usize },
    #[error("images have different dimensions: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{path}: {detail}")]
    Codec { path: String, detail: String },
}

/// A 2-D grayscale raster, one realization of the random field the estimator
/// works on. Row-major `f64` intensities.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl Image {
    /// Builds an image, validating the shape and that every value is finite.
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self, RasterError> {
        if height == 0 || width == 0 {
            return Err(RasterError::EmptyImage { height, width });
        }
        if data.len() != height * width {
            return Err(RasterError::DataLength {
                height,
                width,
                expected: height * width,
                got: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(RasterError::NonFinite { index });
        }
        Ok(Self { height, width, data })
    }

    /// All-zero image. Panics on degenerate dimensions.
    pub fn zeros(height: usize, width: usize) -> Self {
        Self::constant(height, width, 0.0)
    }

    /// Constant-valued image. Panics on degenerate dimensions.
    pub fn constant(height: usize, width: usize, value: f64) -> Self {
        assert!(height > 0 && width > 0, "degenerate image {height}x{width}");
        assert!(value.is_finite());
        Self { height, width, data: vec![value; height * width] }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Pixel count.
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction forbids empty images
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> f64 {
        debug_assert!(y < self.height && x < self.width);
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, value: f64) {
        debug_assert!(y < self.height && x < self.width);
        self.data[y * self.width + x] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn row(&self, y: usize) -> &[f64] {
        &self.data[y * self.width..(y + 1) * self.width]
    }

    /// Crops `[y0, y0+h) x [x0, x0+w)`; panics when the window leaves the image.
    pub fn crop(&self, y0: usize, x0: usize, h: usize, w: usize) -> Image {
        assert!(h > 0 && w > 0 && y0 + h <= self.height && x0 + w <= self.width);
        let mut data = Vec::with_capacity(h * w);
        for y in y0..y0 + h {
            data.extend_from_slice(&self.data[y * self.width + x0..y * self.width + x0 + w]);
        }
        Image { height: h, width: w, data }
    }

    pub fn mean(&self) -> f64 {
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }

    /// Population variance of the intensities.
    pub fn variance(&self) -> f64 {
        let mu = self.mean();
        self.data.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / self.data.len() as f64
    }

    /// Quarter-turn counter-clockwise: an HxW image becomes WxH.
    pub fn rotate90(&self) -> Image {
        let (h, w) = (self.height, self.width);
        let mut data = vec![0.0; h * w];
        for y in 0..h {
            for x in 0..w {
                // (y, x) -> (w-1-x, y) in the WxH output
                data[(w - 1 - x) * h + y] = self.data[y * w + x];
            }
        }
        Image { height: w, width: h, data }
    }

    pub fn rotate180(&self) -> Image {
        let mut data = self.data.clone();
        data.reverse();
        Image { height: self.height, width: self.width, data }
    }

    pub fn rotate270(&self) -> Image {
        self.rotate180().rotate90()
    }

    /// Maximum absolute difference to another image of identical dimensions.
    pub fn max_abs_diff(&self, other: &Image) -> Result<f64, RasterError> {
        if self.height != other.height || self.width != other.width {
            return Err(RasterError::DimensionMismatch(
                self.height, self.width, other.height, other.width,
            ));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates_shape_and_finiteness() {
        assert!(Image::new(0, 3, vec![]).is_err());
        assert!(Image::new(2, 2, vec![0.0; 3]).is_err());
        assert!(Image::new(1, 2, vec![0.0, f64::NAN]).is_err());
        let img = Image::new(2, 3, (0..6).map(f64::from).collect()).unwrap();
        assert_eq!(img.get(1, 2), 5.0);
    }

    #[test]
    fn rotate90_transposes_dimensions() {
        let img = Image::new(2, 3, vec![1., 2., 3., 4., 5., 6.]).unwrap();
        let r = img.rotate90();
        assert_eq!((r.height(), r.width()), (3, 2));
        // column x=2 of the input becomes row 0 of the output
        assert_eq!(r.row(0), &[3., 6.]);
    }

    #[test]
    fn rotate180_twice_is_identity() {
        let img = Image::new(3, 4, (0..12).map(f64::from).collect()).unwrap();
        assert_eq!(img.rotate180().rotate180(), img);
    }

    #[test]
    fn four_quarter_turns_are_identity() {
        let img = Image::new(2, 5, (0..10).map(f64::from).collect()).unwrap();
        assert_eq!(img.rotate90().rotate90().rotate90().rotate90(), img);
        assert_eq!(img.rotate90().rotate270(), img);
    }
}
