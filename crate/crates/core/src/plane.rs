//! Whole-plane coverage through the reflection identities
//! w(−z) = 2e^{−z²} − w(z), erfc(−z) = 2 − erfc(z) and erf(−z) = −erf(z).
//! Points on the boundary of a half-plane are evaluated directly, except the
//! origin, the fixed point of z → −z, where each identity pins the value
//! exactly: w(0) = erfc(0) = 1 and erf(0) = 0.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::complex_ops::{check_finite, check_result, exp_neg_sq};
use crate::error::{Error, Result};
use crate::rational::{erf_rational, erfc_rational, w_rational};
use crate::reference::{erf_reference, erfc_reference, w_reference};
use crate::table::CoefficientTable;

/// Which approximation backs an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Rational,
    Reference,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Rational => "rational",
            Method::Reference => "reference",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "rational" => Ok(Method::Rational),
            "reference" => Ok(Method::Reference),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

pub fn w_full_plane(z: Complex64, table: &CoefficientTable, method: Method) -> Result<Complex64> {
    check_finite(z)?;
    let upper = |z| match method {
        Method::Rational => w_rational(z, table),
        Method::Reference => w_reference(z, table),
    };
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if z.im >= 0.0 {
        return upper(z);
    }
    let gauss = exp_neg_sq(z, "w_full_plane")?;
    let reflected = upper(-z)?;
    check_result(gauss * 2.0 - reflected, z, "w_full_plane")
}

pub fn erfc_full_plane(
    z: Complex64,
    table: &CoefficientTable,
    method: Method,
) -> Result<Complex64> {
    check_finite(z)?;
    let right = |z| match method {
        Method::Rational => erfc_rational(z, table),
        Method::Reference => erfc_reference(z, table),
    };
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if z.re >= 0.0 {
        right(z)
    } else {
        Ok(Complex64::new(2.0, 0.0) - right(-z)?)
    }
}

pub fn erf_full_plane(z: Complex64, table: &CoefficientTable, method: Method) -> Result<Complex64> {
    check_finite(z)?;
    let right = |z| match method {
        Method::Rational => erf_rational(z, table),
        Method::Reference => erf_reference(z, table),
    };
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if z.re >= 0.0 {
        right(z)
    } else {
        Ok(-right(-z)?)
    }
}

/// Voigt function K(x, y) and its companion L(x, y), the real and imaginary
/// parts of w(x + iy), for y ≥ 0.
pub fn voigt(x: f64, y: f64, table: &CoefficientTable, method: Method) -> Result<(f64, f64)> {
    if y < 0.0 {
        return Err(Error::Domain {
            func: "voigt",
            re: x,
            im: y,
            required: "y >= 0",
        });
    }
    let w = w_full_plane(Complex64::new(x, y), table, method)?;
    Ok((w.re, w.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ERF_1: f64 = 0.842_700_792_949_714_869_341_220_635_082_609_259_296_066_997_966_3;
    const E_ERFC_1: f64 = 0.427_583_576_155_807_004_410_750_344_490_515_180_820_159_503_164_25;

    #[test]
    fn pass_through_is_bit_identical() {
        let t = CoefficientTable::default();
        let z = Complex64::new(1.0, 1.0);
        assert_eq!(
            w_full_plane(z, &t, Method::Rational).unwrap(),
            w_rational(z, &t).unwrap()
        );
        assert_eq!(
            erfc_full_plane(z, &t, Method::Rational).unwrap(),
            erfc_rational(z, &t).unwrap()
        );
        assert_eq!(
            erf_full_plane(z, &t, Method::Reference).unwrap(),
            erf_reference(z, &t).unwrap()
        );
    }

    #[test]
    fn lower_half_reflection() {
        let t = CoefficientTable::default();
        let z = Complex64::new(1.0, -1.0);
        let expected =
            exp_neg_sq(z, "t").unwrap() * 2.0 - w_rational(Complex64::new(-1.0, 1.0), &t).unwrap();
        assert_eq!(w_full_plane(z, &t, Method::Rational).unwrap(), expected);
        // 50-digit value of w(1 − i)
        let exact = Complex64::new(
            -1.137_037_878_351_197_366_452_275_300_071_119_339_666_139_882_668_8,
            2.026_813_791_854_195_018_079_477_079_078_205_299_345_968_663_623_2,
        );
        let got = w_full_plane(z, &t, Method::Reference).unwrap();
        assert!(((got.re - exact.re) / exact.re).abs() < 1e-12);
        assert!(((got.im - exact.im) / exact.im).abs() < 1e-12);
    }

    #[test]
    fn left_half_reflections() {
        let t = CoefficientTable::default();
        let c = erfc_full_plane(Complex64::new(-1.0, 0.0), &t, Method::Rational).unwrap();
        assert!((c.re - (1.0 + ERF_1)).abs() < 1e-12);
        let e = erf_full_plane(Complex64::new(-1.0, 0.0), &t, Method::Rational).unwrap();
        assert!((e.re + ERF_1).abs() < 1e-12);
        let e = erf_full_plane(Complex64::new(-1.0, -1.0), &t, Method::Rational).unwrap();
        assert!((e.re + 1.316151281697949).abs() < 3e-15);
        assert!((e.im + 1.904534692378354e-1).abs() < 3e-16);
        let c = erfc_full_plane(Complex64::new(-0.5, -0.5), &t, Method::Rational).unwrap();
        assert!((c.re - (1.0 + 6.426129148548198e-1)).abs() < 3e-16);
        assert!((c.im - 4.578813944351928e-1).abs() < 3e-16);
    }

    #[test]
    fn erf_vanishes_at_origin() {
        let t = CoefficientTable::default();
        for m in [Method::Rational, Method::Reference] {
            let zero = Complex64::new(0.0, 0.0);
            assert_eq!(erf_full_plane(zero, &t, m).unwrap(), zero);
            assert_eq!(
                erfc_full_plane(zero, &t, m).unwrap(),
                Complex64::new(1.0, 0.0)
            );
            assert_eq!(
                w_full_plane(-zero, &t, m).unwrap(),
                Complex64::new(1.0, 0.0)
            );
            // The direct rational evaluator carries its truncation error of
            // about 1.6e-15 at the origin.
            let direct = match m {
                Method::Rational => erf_rational(zero, &t).unwrap(),
                Method::Reference => erf_reference(zero, &t).unwrap(),
            };
            assert!(direct.norm() < 1e-14, "{m}: {direct}");
        }
    }

    #[test]
    fn voigt_values() {
        let t = CoefficientTable::default();
        let (k, l) = voigt(0.0, 0.0, &t, Method::Rational).unwrap();
        assert!((k - 1.0).abs() < 1e-12 && l.abs() < 1e-12);
        let (k, l) = voigt(0.0, 1.0, &t, Method::Reference).unwrap();
        assert!((k - E_ERFC_1).abs() < 1e-12 && l.abs() < 1e-12);
        assert!(voigt(1.0, -0.5, &t, Method::Rational).is_err());
    }

    #[test]
    fn overflow_reported_in_lower_half() {
        let t = CoefficientTable::default();
        let r = w_full_plane(Complex64::new(0.1, -40.0), &t, Method::Rational);
        assert!(matches!(r, Err(Error::Overflow { .. })));
    }

    #[test]
    fn method_parsing() {
        assert_eq!("rational".parse::<Method>().unwrap(), Method::Rational);
        assert_eq!(Method::Reference.to_string(), "reference");
        assert!("oracle".parse::<Method>().is_err());
    }
}
