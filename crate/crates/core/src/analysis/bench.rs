use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::params::ApproximationParams;
use crate::rational::w_rational;
use crate::reference::w_reference;
use crate::table::CoefficientTable;

pub const BENCH_SEED: u64 = 0x5eed_2013;

/// Median per-point timings of the two w evaluators over one point set.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub points: usize,
    pub repeats: usize,
    pub seed: u64,
    pub median_ns_rational: f64,
    pub median_ns_reference: f64,
    /// reference / rational
    pub speedup: f64,
    /// Σ (Re w + Im w) over the point set; identical on every repeat.
    pub checksum_rational: f64,
    pub checksum_reference: f64,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[benchmark]")?;
        writeln!(f, "points               {}", self.points)?;
        writeln!(f, "repeats              {}", self.repeats)?;
        writeln!(f, "seed                 {:#x}", self.seed)?;
        writeln!(f, "median_ns_rational   {:.2}", self.median_ns_rational)?;
        writeln!(f, "median_ns_reference  {:.2}", self.median_ns_reference)?;
        writeln!(f, "speedup              {:.3}", self.speedup)?;
        writeln!(f, "checksum_rational    {:.17e}", self.checksum_rational)?;
        write!(f, "checksum_reference   {:.17e}", self.checksum_reference)
    }
}

/// Uniform points in [−10, 10] × [0, 10].
pub(crate) fn point_set(points: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..points)
        .map(|_| Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(0.0..10.0)))
        .collect()
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[v.len() / 2]
}

fn time_pass(
    zs: &[Complex64],
    eval: impl Fn(Complex64) -> Result<Complex64>,
) -> Result<(f64, f64)> {
    let start = Instant::now();
    let mut checksum = 0.0;
    for &z in zs {
        let w = eval(black_box(z))?;
        checksum += w.re + w.im;
    }
    let elapsed = start.elapsed().as_nanos() as f64;
    Ok((elapsed.max(1.0) / zs.len() as f64, black_box(checksum)))
}

/// Times w_rational against w_reference, single-threaded, alternating the
/// two so drift in machine load hits both equally.
pub fn benchmark(
    points: usize,
    repeats: usize,
    params: &ApproximationParams,
    seed: u64,
) -> Result<BenchReport> {
    if points < 10_000 {
        return Err(Error::InvalidBenchmark(format!(
            "need at least 10000 points, got {points}"
        )));
    }
    if repeats < 3 || repeats.is_multiple_of(2) {
        return Err(Error::InvalidBenchmark(format!(
            "repeats must be odd and at least 3, got {repeats}"
        )));
    }
    let table = CoefficientTable::new(*params);
    let zs = point_set(points, seed);
    let rational = |z| w_rational(z, &table);
    let reference = |z| w_reference(z, &table);

    // warm-up
    time_pass(&zs[..points.min(10_000)], rational)?;
    time_pass(&zs[..points.min(10_000)], reference)?;

    let mut rational_runs = Vec::with_capacity(repeats);
    let mut reference_runs = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        rational_runs.push(time_pass(&zs, rational)?);
        reference_runs.push(time_pass(&zs, reference)?);
    }
    let checksum_rational = rational_runs[0].1;
    let checksum_reference = reference_runs[0].1;
    let stable =
        |runs: &[(f64, f64)], sum: f64| runs.iter().all(|r| r.1.to_bits() == sum.to_bits());
    assert!(
        stable(&rational_runs, checksum_rational) && stable(&reference_runs, checksum_reference),
        "evaluation is not deterministic"
    );

    let median_ns_rational = median(rational_runs.iter().map(|r| r.0).collect());
    let median_ns_reference = median(reference_runs.iter().map(|r| r.0).collect());
    Ok(BenchReport {
        points,
        repeats,
        seed,
        median_ns_rational,
        median_ns_reference,
        speedup: median_ns_reference / median_ns_rational,
        checksum_rational,
        checksum_reference,
    })
}
