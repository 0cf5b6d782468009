//! The exponential-carrying Fourier form used as the published reference.
//!
//! Both w and erfc reduce to one kernel in s with Re s ≥ 0:
//!
//! G(s) = (1 − e^{−τm s})/(τm s)
//!        + (τm² s/√π) Σ_{n=1..N} a_n (1 − (−1)ⁿ e^{−τm s})/(n²π² + τm² s²),
//!
//! with w(z) = G(−iz) and erfc(z) = e^{−z²} G(z). Both the leading term at
//! s → 0 and the n-th term at τm s → ±inπ are removable singularities and
//! are evaluated in a cancellation-free form there.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::complex_ops::{cdiv, cexp, cexpm1, check_finite, check_result, exp_neg_sq};
use crate::error::{Error, Result};
use crate::table::CoefficientTable;

/// Below this |τm s| the leading quotient is replaced by its Taylor series.
pub(crate) const LEADING_SERIES_RADIUS: f64 = 1e-2;

/// Distance to a pole ±inπ of the n-th denominator below which the
/// factored form is used.
const POLE_RADIUS: f64 = 0.25;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// (1 − e^{−v})/v by its Taylor series Σ (−v)^k/(k+1)!, k ≤ 7.
fn phi_series(v: Complex64) -> Complex64 {
    const INV_FACT: [f64; 8] = [
        1.0,
        1.0 / 2.0,
        1.0 / 6.0,
        1.0 / 24.0,
        1.0 / 120.0,
        1.0 / 720.0,
        1.0 / 5040.0,
        1.0 / 40320.0,
    ];
    let m = -v;
    INV_FACT
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * m + c)
}

fn phi_stable(v: Complex64) -> Complex64 {
    if v.norm() < LEADING_SERIES_RADIUS {
        phi_series(v)
    } else {
        cdiv(-cexpm1(-v), v)
    }
}

pub(crate) fn reference_kernel(s: Complex64, table: &CoefficientTable) -> Complex64 {
    let margin = table.params().margin();
    let zeta = s * margin;
    let decay = cexp(-zeta);

    let leading = if zeta.norm() < LEADING_SERIES_RADIUS {
        phi_series(zeta)
    } else {
        cdiv(ONE - decay, zeta)
    };

    let scaled_sq = (s * s) * table.margin_sq();
    let mut acc = Complex64::new(0.0, 0.0);
    let terms = table
        .fourier()
        .iter()
        .zip(table.harmonic_sq())
        .enumerate()
        .skip(1);
    for (n, (&a_n, &harmonic_sq)) in terms {
        let harmonic = n as f64 * PI;
        let pole = Complex64::new(0.0, harmonic.copysign(zeta.im));
        let delta = zeta - pole;
        let term = if delta.norm() < POLE_RADIUS {
            // n²π² + ζ² = δ(δ ± 2inπ) and 1 − (−1)ⁿe^{−ζ} = 1 − e^{−δ}
            cdiv(phi_stable(delta), delta + pole * 2.0) * a_n
        } else {
            let signed = if n % 2 == 0 { decay } else { -decay };
            let den = Complex64::new(harmonic_sq + scaled_sq.re, scaled_sq.im);
            cdiv((ONE - signed) * a_n, den)
        };
        acc += term;
    }
    let prefactor = (s * table.margin_sq()) / PI.sqrt();
    leading + prefactor * acc
}

/// Complex error function in the closed upper half-plane, reference form.
pub fn w_reference(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    check_finite(z)?;
    if z.im < 0.0 {
        return Err(Error::Domain {
            func: "w_reference",
            re: z.re,
            im: z.im,
            required: "Im z >= 0",
        });
    }
    // −iz
    Ok(reference_kernel(Complex64::new(z.im, -z.re), table))
}

/// Complementary error function in the closed right half-plane, reference form.
pub fn erfc_reference(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    check_finite(z)?;
    if z.re < 0.0 {
        return Err(Error::Domain {
            func: "erfc_reference",
            re: z.re,
            im: z.im,
            required: "Re z >= 0",
        });
    }
    let gauss = exp_neg_sq(z, "erfc_reference")?;
    check_result(gauss * reference_kernel(z, table), z, "erfc_reference")
}

pub fn erf_reference(z: Complex64, table: &CoefficientTable) -> Result<Complex64> {
    Ok(ONE - erfc_reference(z, table)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::w_rational;

    const E_ERFC_1: f64 = 0.427_583_576_155_807_004_410_750_344_490_515_180_820_159_503_164_25;
    const ERF_1: f64 = 0.842_700_792_949_714_869_341_220_635_082_609_259_296_066_997_966_3;

    /// Second line of the exponential form, transcribed directly in z.
    fn w_collapsed(z: Complex64, t: &CoefficientTable) -> Complex64 {
        let tau = t.params().margin();
        let i = Complex64::new(0.0, 1.0);
        let e = (i * z * tau).exp();
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 1..=t.terms() {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let nf = n as f64 * PI;
            sum += (e * sign - 1.0) * t.fourier()[n] / (nf * nf - z * z * tau * tau);
        }
        i * (1.0 - e) / (z * tau) + i * z * tau * tau / PI.sqrt() * sum
    }

    #[test]
    fn kernel_matches_direct_transcription() {
        let t = CoefficientTable::default();
        for &(x, y) in &[
            (1.0, 1.0),
            (-2.5, 0.3),
            (0.2, 3.0),
            (7.0, 0.01),
            (-0.4, 0.05),
        ] {
            let z = Complex64::new(x, y);
            let a = w_reference(z, &t).unwrap();
            let b = w_collapsed(z, &t);
            assert!((a - b).norm() <= 1e-13 * b.norm(), "{z}: {a} vs {b}");
        }
    }

    #[test]
    fn origin_and_axes() {
        let t = CoefficientTable::default();
        let w = w_reference(Complex64::new(0.0, 0.0), &t).unwrap();
        assert!((w - 1.0).norm() < 1e-12);
        let w = w_reference(Complex64::new(0.0, 1.0), &t).unwrap();
        assert!((w.re - E_ERFC_1).abs() < 1e-12 && w.im.abs() < 1e-12);
        let c = erfc_reference(Complex64::new(0.0, 0.0), &t).unwrap();
        assert!((c - 1.0).norm() < 1e-12);
        let c = erfc_reference(Complex64::new(1.0, 0.0), &t).unwrap();
        assert!((c.re - (1.0 - ERF_1)).abs() < 1e-12);
        let e = erf_reference(Complex64::new(0.0, 0.0), &t).unwrap();
        assert!(e.norm() < 1e-12);
    }

    #[test]
    fn agrees_with_rational_form() {
        let t = CoefficientTable::default();
        let z = Complex64::new(1.0, 1.0);
        let a = w_reference(z, &t).unwrap();
        let b = w_rational(z, &t).unwrap();
        assert!(((a.re - b.re) / b.re).abs() < 1e-13);
        assert!(((a.im - b.im) / b.im).abs() < 1e-13);
    }

    #[test]
    fn near_origin_is_smooth() {
        // across the series/quotient switch at |τm z| = 1e-2
        let t = CoefficientTable::default();
        let r = LEADING_SERIES_RADIUS / 12.0;
        for scale in [0.999, 1.001] {
            let z = Complex64::new(0.0, r * scale);
            let a = w_reference(z, &t).unwrap();
            let b = w_rational(z, &t).unwrap();
            assert!((a - b).norm() < 1e-13, "{a} vs {b}");
        }
        let z = Complex64::new(3e-10, 1e-10);
        let a = w_reference(z, &t).unwrap();
        let b = w_rational(z, &t).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn removable_poles_on_the_boundary() {
        // τm z = nπ on the real axis for w, τm z = inπ on the imaginary axis for erfc
        let t = CoefficientTable::default();
        for n in [1.0, 2.0, 7.0] {
            let x = n * PI / 12.0;
            for dx in [0.0, 1e-9, -3e-6] {
                let z = Complex64::new(x + dx, 0.0);
                let a = w_reference(z, &t).unwrap();
                let b = w_rational(z, &t).unwrap();
                assert!(a.re.is_finite() && a.im.is_finite());
                assert!((a - b).norm() < 1e-13, "{z}: {a} vs {b}");
            }
            let z = Complex64::new(0.0, x);
            let a = erfc_reference(z, &t).unwrap();
            let b = crate::rational::erfc_rational(z, &t).unwrap();
            assert!((a - b).norm() < 1e-13 * b.norm(), "{z}: {a} vs {b}");
        }
    }

    #[test]
    fn domain_errors() {
        let t = CoefficientTable::default();
        assert!(w_reference(Complex64::new(0.0, -1.0), &t).is_err());
        assert!(erfc_reference(Complex64::new(-1.0, 0.0), &t).is_err());
        assert!(erf_reference(Complex64::new(1.0, f64::INFINITY), &t).is_err());
    }
}
