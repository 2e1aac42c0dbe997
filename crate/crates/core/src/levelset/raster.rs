use std::collections::VecDeque;
use std::io::{self, Write};

use super::area::{center_mask, Estimator, Lattice};
use crate::error::{check_range, Result};
use crate::maps::DiskMap;

/// Binary image of a sublevel set on `[-1, 1]²`, classified at pixel
/// centres. Row 0 is the top edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterGrid {
    resolution: usize,
    mask: Vec<bool>,
}

impl RasterGrid {
    /// Pixels whose centre lies outside the unit disk are forced to 0.
    pub fn from_mask(resolution: usize, mut mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), resolution * resolution, "mask size");
        let inside = disk_mask(resolution);
        for (bit, keep) in mask.iter_mut().zip(inside) {
            *bit &= keep;
        }
        Self { resolution, mask }
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn get(&self, col: usize, row: usize) -> bool {
        self.mask[row * self.resolution + col]
    }

    pub fn count_set(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    /// Set-pixel area in disk units.
    pub fn area(&self) -> f64 {
        self.count_set() as f64 * Lattice::new(self.resolution).pixel_area()
    }

    /// 0 outside the set, 255 inside.
    pub fn to_gray(&self) -> Vec<u8> {
        self.mask.iter().map(|&b| if b { 255 } else { 0 }).collect()
    }

    pub fn write_pgm<W: Write>(&self, out: W) -> io::Result<()> {
        write_pgm(out, self.resolution, self.resolution, &self.to_gray())
    }

    pub fn write_png<W: Write>(&self, out: W) -> io::Result<()> {
        write_gray_png(out, self.resolution, self.resolution, &self.to_gray())
    }
}

/// Pixels whose centre lies strictly inside the unit disk.
pub fn disk_mask(resolution: usize) -> Vec<bool> {
    let lattice = Lattice::new(resolution);
    (0..resolution)
        .flat_map(|row| (0..resolution).map(move |col| (col, row)))
        .map(|(col, row)| lattice.center(col, row).norm_sqr() < 1.0)
        .collect()
}

/// Binary P5 graymap with maxval 255.
pub fn write_pgm<W: Write>(mut out: W, width: usize, height: usize, gray: &[u8]) -> io::Result<()> {
    assert_eq!(gray.len(), width * height, "pixel buffer size");
    write!(out, "P5\n{width} {height}\n255\n")?;
    out.write_all(gray)?;
    out.flush()
}

/// 8-bit grayscale PNG.
pub fn write_gray_png<W: Write>(
    out: W,
    width: usize,
    height: usize,
    gray: &[u8],
) -> io::Result<()> {
    assert_eq!(gray.len(), width * height, "pixel buffer size");
    let mut encoder = png::Encoder::new(out, width as u32, height as u32);
    encoder.set_color(png::ColorType::Grayscale);
    encoder.set_depth(png::BitDepth::Eight);
    let mut writer = encoder.write_header().map_err(io::Error::other)?;
    writer.write_image_data(gray).map_err(io::Error::other)?;
    writer.finish().map_err(io::Error::other)
}

/// Rasterizes `{z ∈ 𝔻 : |f(z)| < t}` at `resolution × resolution` pixels.
pub fn rasterize_sublevel(map: &dyn DiskMap, t: f64, resolution: usize) -> Result<RasterGrid> {
    check_range("t", t, 0.0, 1.0, "0 <= t <= 1")?;
    Estimator::Grid { resolution }.validate()?;
    if t == 0.0 {
        return Ok(RasterGrid::from_mask(
            resolution,
            vec![false; resolution * resolution],
        ));
    }
    Ok(RasterGrid::from_mask(
        resolution,
        center_mask(map, t, resolution),
    ))
}

/// Number of 4-connected components of set pixels.
pub fn count_components(grid: &RasterGrid) -> usize {
    let n = grid.resolution;
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::new();
    let mut components = 0;
    for start in 0..n * n {
        if !grid.mask[start] || seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(idx) = queue.pop_front() {
            let (row, col) = (idx / n, idx % n);
            let mut visit = |next: usize| {
                if grid.mask[next] && !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            };
            if col > 0 {
                visit(idx - 1);
            }
            if col + 1 < n {
                visit(idx + 1);
            }
            if row > 0 {
                visit(idx - n);
            }
            if row + 1 < n {
                visit(idx + n);
            }
        }
    }
    components
}
