//! Precomputed Fourier data for one parameter set.
//!
//! Every exponential and trigonometric factor of the rational form lives
//! here, so the evaluators do only complex arithmetic at call time. The
//! groupings below (n² times π², then divided by τm²) are deliberate: the
//! low-order bits of the coefficients propagate into the last digits of erf
//! near the origin, where 1 − erfc cancels.

use std::f64::consts::PI;

use crate::error::Result;
use crate::params::ApproximationParams;

/// Immutable coefficient table: a_n (n = 0..=N), A_n and B_n (n = 1..=N),
/// and e^{σ²}.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    params: ApproximationParams,
    fourier: Vec<f64>,
    cos_weights: Vec<f64>,
    sin_weights: Vec<f64>,
    harmonic_sq: Vec<f64>,
    margin_sq: f64,
    exp_shift_sq: f64,
}

impl CoefficientTable {
    pub fn new(params: ApproximationParams) -> Self {
        let terms = params.terms();
        let margin = params.margin();
        let shift = params.shift();
        let pi_sq = PI * PI;
        let margin_sq = margin * margin;
        let norm = 2.0 * PI.sqrt() / margin;

        let harmonic_sq: Vec<f64> = (0..=terms).map(|n| (n * n) as f64 * pi_sq).collect();
        let fourier = harmonic_sq
            .iter()
            .map(|&h| norm * (-h / margin_sq).exp())
            .collect();

        let mut cos_weights = Vec::with_capacity(terms);
        let mut sin_weights = Vec::with_capacity(terms);
        for (n, &h) in harmonic_sq.iter().enumerate().skip(1) {
            let decay = (shift * shift - h / margin_sq).exp();
            let two_n_pi = (2 * n) as f64 * PI;
            let angle = two_n_pi * shift / margin;
            cos_weights.push(2.0 * margin * decay * angle.cos());
            sin_weights.push(two_n_pi * decay * angle.sin());
        }

        Self {
            params,
            fourier,
            cos_weights,
            sin_weights,
            harmonic_sq,
            margin_sq,
            exp_shift_sq: (shift * shift).exp(),
        }
    }

    pub fn params(&self) -> &ApproximationParams {
        &self.params
    }

    pub fn terms(&self) -> usize {
        self.params.terms()
    }

    /// a_0 ..= a_N.
    pub fn fourier(&self) -> &[f64] {
        &self.fourier
    }

    /// A_1 ..= A_N (index 0 holds A_1).
    pub fn cos_weights(&self) -> &[f64] {
        &self.cos_weights
    }

    /// B_1 ..= B_N (index 0 holds B_1).
    pub fn sin_weights(&self) -> &[f64] {
        &self.sin_weights
    }

    /// n²π² for n = 0 ..= N.
    pub fn harmonic_sq(&self) -> &[f64] {
        &self.harmonic_sq
    }

    pub fn margin_sq(&self) -> f64 {
        self.margin_sq
    }

    pub fn exp_shift_sq(&self) -> f64 {
        self.exp_shift_sq
    }
}

impl Default for CoefficientTable {
    fn default() -> Self {
        Self::new(ApproximationParams::default())
    }
}

/// Validates the triple and builds its table.
pub fn build_table(terms: usize, margin: f64, shift: f64) -> Result<CoefficientTable> {
    Ok(CoefficientTable::new(ApproximationParams::new(
        terms, margin, shift,
    )?))
}

/// Value of the truncated cosine series for e^{-(t - 2·shift)²/4}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub value: f64,
    /// |t − 2·shift| exceeds τm, where the series is periodic rather than
    /// Gaussian.
    pub outside_window: bool,
}

/// −a_0/2 + Σ_{n=0..=N} a_n cos(nπ(t − 2·shift)/τm). With `shift = 0` this is
/// the plain Gaussian kernel e^{-t²/4}.
pub fn exp_kernel_approx(t: f64, shift: f64, table: &CoefficientTable) -> KernelValue {
    let margin = table.params().margin();
    let offset = t - 2.0 * shift;
    let fourier = table.fourier();
    let mut value = -0.5 * fourier[0];
    for (n, a) in fourier.iter().enumerate().rev() {
        value += a * (n as f64 * PI * offset / margin).cos();
    }
    KernelValue {
        value,
        outside_window: offset.abs() > margin,
    }
}
