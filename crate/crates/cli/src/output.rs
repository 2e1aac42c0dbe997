use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use diskbound::levelset::{disk_mask, write_gray_png, write_pgm};
use diskbound::RasterGrid;
use serde::Serialize;

/// Collects the files a job writes, relative to its output directory.
pub struct OutputDir {
    root: PathBuf,
    written: Vec<String>,
}

impl OutputDir {
    pub fn create(root: &Path) -> Result<Self> {
        std::fs::create_dir_all(root)
            .with_context(|| format!("creating output directory {}", root.display()))?;
        Ok(Self {
            root: root.to_owned(),
            written: Vec::new(),
        })
    }

    pub fn written(&self) -> &[String] {
        &self.written
    }

    fn open(&mut self, name: &str) -> Result<(PathBuf, BufWriter<File>)> {
        let path = self.root.join(name);
        let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        self.written.push(name.to_owned());
        Ok((path, BufWriter::new(file)))
    }

    pub fn json<T: Serialize + ?Sized>(&mut self, name: &str, value: &T) -> Result<()> {
        let (path, mut out) = self.open(name)?;
        serde_json::to_writer_pretty(&mut out, value)?;
        writeln!(out)
            .and_then(|_| out.flush())
            .with_context(|| format!("writing {}", path.display()))
    }

    pub fn csv(&mut self, name: &str, header: &str, rows: &[String]) -> Result<()> {
        let (path, mut out) = self.open(name)?;
        let mut write = || -> std::io::Result<()> {
            writeln!(out, "{header}")?;
            for row in rows {
                writeln!(out, "{row}")?;
            }
            out.flush()
        };
        write().with_context(|| format!("writing {}", path.display()))
    }

    pub fn pgm(&mut self, name: &str, size: usize, gray: &[u8]) -> Result<()> {
        let (path, out) = self.open(name)?;
        write_pgm(out, size, size, gray).with_context(|| format!("writing {}", path.display()))
    }

    pub fn png(&mut self, name: &str, width: usize, height: usize, gray: &[u8]) -> Result<()> {
        let (path, out) = self.open(name)?;
        write_gray_png(out, width, height, gray)
            .with_context(|| format!("writing {}", path.display()))
    }
}

/// Shades: outside the disk 255, disk 235, reference set only 170,
/// the map's set 40.
pub fn overlay(map_set: &RasterGrid, reference: &RasterGrid) -> Vec<u8> {
    let disk = disk_mask(map_set.resolution());
    map_set
        .mask()
        .iter()
        .zip(reference.mask())
        .zip(disk)
        .map(|((&m, &r), d)| match (d, m, r) {
            (false, _, _) => 255,
            (true, true, _) => 40,
            (true, false, true) => 170,
            (true, false, false) => 235,
        })
        .collect()
}

/// Line plot of `(x, y)` points on a white canvas with axes.
pub struct Plot {
    pub width: usize,
    pub height: usize,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
}

impl Plot {
    const MARGIN: usize = 40;

    fn to_pixel(&self, x: f64, y: f64) -> (i64, i64) {
        let w = (self.width - 2 * Self::MARGIN) as f64;
        let h = (self.height - 2 * Self::MARGIN) as f64;
        let px = Self::MARGIN as f64 + (x - self.x_range.0) / (self.x_range.1 - self.x_range.0) * w;
        let py = (self.height - Self::MARGIN) as f64
            - (y - self.y_range.0) / (self.y_range.1 - self.y_range.0) * h;
        (px.round() as i64, py.round() as i64)
    }

    pub fn render(&self, points: &[(f64, f64)]) -> Vec<u8> {
        let mut canvas = vec![255u8; self.width * self.height];
        let mut line = |a: (i64, i64), b: (i64, i64), shade: u8| {
            let steps = (b.0 - a.0).abs().max((b.1 - a.1).abs()).max(1);
            for s in 0..=steps {
                let x = a.0 + (b.0 - a.0) * s / steps;
                let y = a.1 + (b.1 - a.1) * s / steps;
                if (0..self.width as i64).contains(&x) && (0..self.height as i64).contains(&y) {
                    canvas[y as usize * self.width + x as usize] = shade;
                }
            }
        };
        let origin = self.to_pixel(self.x_range.0, self.y_range.0);
        line(origin, self.to_pixel(self.x_range.1, self.y_range.0), 0);
        line(origin, self.to_pixel(self.x_range.0, self.y_range.1), 0);
        for k in 0..=10 {
            let x = self.x_range.0 + (self.x_range.1 - self.x_range.0) * k as f64 / 10.0;
            let (px, py) = self.to_pixel(x, self.y_range.0);
            line((px, py), (px, py + 5), 0);
            let y = self.y_range.0 + (self.y_range.1 - self.y_range.0) * k as f64 / 10.0;
            let (px, py) = self.to_pixel(self.x_range.0, y);
            line((px - 5, py), (px, py), 0);
        }
        for pair in points.windows(2) {
            let a = self.to_pixel(pair[0].0, pair[0].1);
            let b = self.to_pixel(pair[1].0, pair[1].1);
            line(a, b, 0);
        }
        canvas
    }
}
