//! Paper-style number rendering: 16 significant digits, uppercase `E`, no
//! `+` or leading zeros in the exponent (`9.616493742724747E-1`). Zero is
//! written `0E0`.

use num_complex::Complex64;

pub fn format_sci(v: f64) -> String {
    if v == 0.0 {
        "0E0".to_string()
    } else {
        format!("{v:.15E}")
    }
}

/// `a + bi` or `a - bi`.
pub fn format_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() && z.im != 0.0 {
        format!("{} - {}i", format_sci(z.re), format_sci(-z.im))
    } else {
        format!("{} + {}i", format_sci(z.re), format_sci(z.im))
    }
}
