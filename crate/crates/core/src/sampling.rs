//! Reproducible uniform sampling of the unit disk.
//!
//! The sample index space `0..n` is cut into fixed chunks of [`CHUNK`]
//! points. Chunk `c` draws from ChaCha8 seeded with the user seed on
//! stream `c`, so every sample is a pure function of `(seed, index)` and
//! the output does not depend on how chunks are scheduled.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::maps::DiskMap;
use crate::par;

/// Samples per RNG stream.
pub const CHUNK: usize = 1 << 16;

/// Name recorded in reports for the generator and its stream layout.
pub const RNG_ALGORITHM: &str = "chacha8/stream-per-65536-chunk";

fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

/// Uniform point of the disk by polar inverse CDF: `r = √u`, `θ = 2πv`.
fn disk_point(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = unit_f64(rng).sqrt();
    let theta = TAU * unit_f64(rng);
    Complex64::from_polar(r, theta)
}

/// The first `n` points of the stream for `seed`.
pub fn disk_points(n: usize, seed: u64) -> Vec<Complex64> {
    let chunks = n.div_ceil(CHUNK);
    par::map_collect(chunks, |c| {
        let mut rng = chunk_rng(seed, c);
        let len = CHUNK.min(n - c * CHUNK);
        (0..len).map(|_| disk_point(&mut rng)).collect::<Vec<_>>()
    })
    .concat()
}

/// `|f|` at the first `n` sample points, in sample order.
pub fn disk_moduli(map: &dyn DiskMap, n: usize, seed: u64) -> Vec<f64> {
    let chunks = n.div_ceil(CHUNK);
    par::map_collect(chunks, |c| {
        let mut rng = chunk_rng(seed, c);
        let len = CHUNK.min(n - c * CHUNK);
        (0..len)
            .map(|_| map.modulus(disk_point(&mut rng)))
            .collect::<Vec<_>>()
    })
    .concat()
}
