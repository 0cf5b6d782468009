//! The shifted-Fourier rational form: w(z) as a superposition of N + 1
//! rational terms in u = σ − iz, and erfc/erf through erfc(z) = e^{-z²} w(iz).
//!
//! No transcendental function is evaluated per call except e^{-z²} in the
//! erfc/erf chain.

use num_complex::Complex64;

use crate::complex_ops::{cdiv, check_finite, check_result, exp_neg_sq};
use crate::error::{Error, Result};
use crate::table::CoefficientTable;

/// e^{σ²}/(τm u) + Σ_{n=1..N} (A_n u + B_n)/(n²π² + τm² u²).
///
/// Terms are accumulated from n = 1 upwards after the leading term; that is
/// the order the published tables were produced with, and reordering moves
/// the last digits of erf near the origin.
pub(crate) fn rational_sum(u: Complex64, table: &CoefficientTable) -> Complex64 {
    let margin = table.params().margin();
    let scaled_sq = (u * u) * table.margin_sq();
    let mut acc = cdiv(Complex64::new(table.exp_shift_sq(), 0.0), u * margin);
    let weights = table.cos_weights().iter().zip(table.sin_weights());
    for ((a, b), h) in weights.zip(&table.harmonic_sq()[1..]) {
        let num = Complex64::new(a * u.re + b, a * u.im);
        let den = Complex64::new(h + scaled_sq.re, scaled_sq.im);
        acc += cdiv(num, den);
    }
    acc
}

/// Complex error function in the closed upper half-plane.
pub fn w_rational(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    check_finite(z)?;
    if z.im < 0.0 {
        return Err(Error::Domain {
            func: "w_rational",
            re: z.re,
            im: z.im,
            required: "Im z >= 0",
        });
    }
    // σ − iz
    let u = Complex64::new(table.params().shift() + z.im, -z.re);
    Ok(rational_sum(u, table))
}

/// Complementary error function in the closed right half-plane.
pub fn erfc_rational(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    check_finite(z)?;
    if z.re < 0.0 {
        return Err(Error::Domain {
            func: "erfc_rational",
            re: z.re,
            im: z.im,
            required: "Re z >= 0",
        });
    }
    let gauss = exp_neg_sq(z, "erfc_rational")?;
    // σ − i(iz) = σ + z
    let u = Complex64::new(table.params().shift() + z.re, z.im);
    check_result(gauss * rational_sum(u, table), z, "erfc_rational")
}

/// erf = 1 − erfc, with the subtraction done exactly once.
pub fn erf_rational(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    Ok(Complex64::new(1.0, 0.0) - erfc_rational(z, table)?)
}
