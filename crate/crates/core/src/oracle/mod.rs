//! Independent ground truth for w, erf and erfc.
//!
//! Two algorithmically unrelated routes: adaptive quadrature of the
//! Laplace–Fourier integral
//!
//! w(x + iy) = (1/√π) ∫₀^∞ e^{−t²/4} e^{−yt} e^{ixt} dt,  y > 0,
//!
//! and the Maclaurin series of erf in double-double arithmetic. Neither
//! shares code with the Fourier approximants beyond basic complex
//! arithmetic.

mod fixtures;
mod quadrature;
mod series;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use fixtures::{parse_fixtures, read_fixtures, write_fixtures, FixtureRecord, FixtureSource};

/// Largest |z| accepted by the series oracle.
pub const SERIES_RADIUS: f64 = 4.0;

/// Tolerances and truncation for the quadrature oracle.
///
/// The integrand is bounded by e^{−t²/4}, so `t_max` ≥ 17 already pushes
/// the neglected tail below 1e−30.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub t_max: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-15,
            rel_tol: 1e-14,
            t_max: 20.0,
            max_subdivisions: 4096,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !(positive(self.abs_tol) && positive(self.rel_tol) && positive(self.t_max)) {
            return Err(Error::InvalidParams(format!(
                "quadrature tolerances and t_max must be positive: {self:?}"
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::InvalidParams(
                "quadrature needs at least one subdivision".into(),
            ));
        }
        Ok(())
    }
}

fn finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { re: z.re, im: z.im })
    }
}

/// w(z) for Im z > 0 by adaptive quadrature of the integral representation.
pub fn w_oracle(z: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    finite(z)?;
    spec.validate()?;
    if z.im <= 0.0 {
        return Err(Error::Domain {
            func: "w_oracle",
            re: z.re,
            im: z.im,
            required: "Im z > 0",
        });
    }
    let (x, y) = (z.re, z.im);
    let integrand = |t: f64| {
        let envelope = (-0.25 * t * t - y * t).exp();
        let (s, c) = (x * t).sin_cos();
        Complex64::new(envelope * c, envelope * s)
    };
    let value = quadrature::integrate(
        integrand,
        0.0,
        spec.t_max,
        spec.abs_tol,
        spec.rel_tol,
        spec.max_subdivisions,
    )?;
    Ok(value / PI.sqrt())
}

/// erf(z) by its Maclaurin series, |z| ≤ 4.
pub fn erf_series_oracle(z: Complex64) -> Result<Complex64> {
    finite(z)?;
    let modulus = z.norm();
    if modulus > SERIES_RADIUS {
        return Err(Error::OutOfRange {
            modulus,
            limit: SERIES_RADIUS,
        });
    }
    Ok(series::erf_series(z))
}

/// erfc(z) = 1 − erf(z) by the Maclaurin series, |z| ≤ 4. The subtraction
/// is carried out in extended precision, so small values of erfc keep their
/// relative accuracy.
pub fn erfc_series_oracle(z: Complex64) -> Result<Complex64> {
    erf_series_oracle(z)?;
    Ok(series::erfc_series(z))
}

/// The first `count` partial sums of the erf series (fewer if the series
/// converges sooner).
pub fn erf_series_partial_sums(z: Complex64, count: usize) -> Result<Vec<Complex64>> {
    erf_series_oracle(z)?;
    Ok(series::partial_sums(z, count))
}

/// erfc(z) = e^{−z²} w(iz), Re z > 0.
pub fn erfc_quadrature(z: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    finite(z)?;
    if z.re <= 0.0 {
        return Err(Error::Domain {
            func: "erfc_quadrature",
            re: z.re,
            im: z.im,
            required: "Re z > 0",
        });
    }
    let w = w_oracle(Complex64::new(-z.im, z.re), spec)?;
    Ok((-z * z).exp() * w)
}

/// An oracle value tagged with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: Complex64,
    pub source: FixtureSource,
}

/// erf anywhere the two routes reach: the series inside |z| ≤ 4, the
/// quadrature chain (with oddness for Re z < 0) outside.
pub fn erf_oracle(z: Complex64, spec: &QuadratureSpec) -> Result<OracleValue> {
    finite(z)?;
    if z.norm() <= SERIES_RADIUS {
        return Ok(OracleValue {
            value: series::erf_series(z),
            source: FixtureSource::Series,
        });
    }
    let value = if z.re > 0.0 {
        Complex64::new(1.0, 0.0) - erfc_quadrature(z, spec)?
    } else if z.re < 0.0 {
        -(Complex64::new(1.0, 0.0) - erfc_quadrature(-z, spec)?)
    } else {
        return Err(Error::OutOfRange {
            modulus: z.norm(),
            limit: SERIES_RADIUS,
        });
    };
    Ok(OracleValue {
        value,
        source: FixtureSource::Quadrature,
    })
}

/// erfc anywhere the two routes reach. The quadrature chain is preferred in
/// the right half-plane, where 1 − erf would cancel.
pub fn erfc_oracle(z: Complex64, spec: &QuadratureSpec) -> Result<OracleValue> {
    finite(z)?;
    if z.re > 0.0 {
        Ok(OracleValue {
            value: erfc_quadrature(z, spec)?,
            source: FixtureSource::Quadrature,
        })
    } else if z.re < 0.0 {
        let right = erfc_oracle(-z, spec)?;
        Ok(OracleValue {
            value: Complex64::new(2.0, 0.0) - right.value,
            source: right.source,
        })
    } else {
        Ok(OracleValue {
            value: erfc_series_oracle(z)?,
            source: FixtureSource::Series,
        })
    }
}

/// w anywhere: quadrature above the real axis, w(z) = 2e^{−z²} − w(−z)
/// below it, and e^{−z²}(1 − erf(−iz)) by series on it.
pub fn w_oracle_full(z: Complex64, spec: &QuadratureSpec) -> Result<OracleValue> {
    finite(z)?;
    if z.im > 0.0 {
        Ok(OracleValue {
            value: w_oracle(z, spec)?,
            source: FixtureSource::Quadrature,
        })
    } else if z.im < 0.0 {
        Ok(OracleValue {
            value: (-z * z).exp() * 2.0 - w_oracle(-z, spec)?,
            source: FixtureSource::Quadrature,
        })
    } else {
        let erfc = erfc_series_oracle(Complex64::new(z.im, -z.re))?;
        Ok(OracleValue {
            value: (-z * z).exp() * erfc,
            source: FixtureSource::Series,
        })
    }
}

/// Component-wise disagreement between the series and quadrature routes
/// for erfc(z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossValidation {
    pub series: Complex64,
    pub quadrature: Complex64,
    pub delta_re: f64,
    pub delta_im: f64,
    /// Either component disagrees by more than [`CROSS_VALIDATION_LIMIT`].
    pub flagged: bool,
}

pub const CROSS_VALIDATION_LIMIT: f64 = 1e-12;

fn component_delta(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        (a - b).abs()
    } else {
        ((a - b) / b).abs()
    }
}

/// Runs both oracles at z (|z| ≤ 4, Re z > 0) and compares 1 − erf_series
/// with e^{−z²}·w_quadrature(iz).
pub fn cross_validate(z: Complex64, spec: &QuadratureSpec) -> Result<CrossValidation> {
    let series = erfc_series_oracle(z)?;
    let quadrature = erfc_quadrature(z, spec)?;
    let delta_re = component_delta(series.re, quadrature.re);
    let delta_im = component_delta(series.im, quadrature.im);
    Ok(CrossValidation {
        series,
        quadrature,
        delta_re,
        delta_im,
        flagged: delta_re > CROSS_VALIDATION_LIMIT || delta_im > CROSS_VALIDATION_LIMIT,
    })
}
