//! Small complex-arithmetic kernels shared by the evaluators.
//!
//! Division uses Smith's scaling rather than `num_complex`'s textbook
//! formula: it never squares the divisor, and it is the operation order the
//! published tables were produced with.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Natural log of `f64::MAX`; `exp` of anything larger is infinite.
pub(crate) const LN_MAX: f64 = 709.782_712_893_384;

#[inline]
pub(crate) fn cdiv(num: Complex64, den: Complex64) -> Complex64 {
    let (a, b) = (num.re, num.im);
    let (c, d) = (den.re, den.im);
    if c.abs() >= d.abs() {
        let ratio = d / c;
        let scale = c + d * ratio;
        Complex64::new((a + b * ratio) / scale, (b - a * ratio) / scale)
    } else {
        let ratio = c / d;
        let scale = c * ratio + d;
        Complex64::new((a * ratio + b) / scale, (b * ratio - a) / scale)
    }
}

/// e^{-z²} as exp(y² − x²)·(cos 2xy − i sin 2xy), or an overflow error when
/// the real exponent leaves the double range.
pub(crate) fn exp_neg_sq(z: Complex64, func: &'static str) -> Result<Complex64> {
    let exponent = z.im * z.im - z.re * z.re;
    if exponent > LN_MAX {
        return Err(Error::Overflow {
            func,
            re: z.re,
            im: z.im,
        });
    }
    let phase = 2.0 * z.re * z.im;
    let modulus = exponent.exp();
    Ok(Complex64::new(
        modulus * phase.cos(),
        -(modulus * phase.sin()),
    ))
}

/// e^{w} for the reference form (exponent already scaled by τm).
#[inline]
pub(crate) fn cexp(w: Complex64) -> Complex64 {
    let modulus = w.re.exp();
    Complex64::new(modulus * w.im.cos(), modulus * w.im.sin())
}

/// e^{w} − 1 without cancellation for small |w|.
pub(crate) fn cexpm1(w: Complex64) -> Complex64 {
    let half_sin = (0.5 * w.im).sin();
    Complex64::new(
        w.re.exp_m1() * w.im.cos() - 2.0 * half_sin * half_sin,
        w.re.exp() * w.im.sin(),
    )
}

pub(crate) fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { re: z.re, im: z.im })
    }
}

/// Rejects a product that left the double range even though e^{-z²} did not.
pub(crate) fn check_result(v: Complex64, z: Complex64, func: &'static str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow {
            func,
            re: z.re,
            im: z.im,
        })
    }
}
