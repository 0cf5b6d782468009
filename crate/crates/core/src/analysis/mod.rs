//! Accuracy and speed analysis of the rational form against the reference
//! form and the oracle.

mod bench;
mod errmap;
mod format;
mod table;

use num_complex::Complex64;

pub use bench::{benchmark, BenchReport, BENCH_SEED};
pub use errmap::{
    error_map, error_map_points, ErrorMap, ErrorMapRow, Function, Grid, MethodPair, Spacing,
    CSV_HEADER,
};
pub use format::{format_complex, format_sci};
pub use table::{reproduce_table, TableRow, TABLE_CSV_HEADER, TABLE_POINTS};

/// Relative errors of the real and imaginary parts.
///
/// A component whose reference is exactly zero is measured by its absolute
/// error instead, and the corresponding flag is set.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RelativeError {
    pub delta_re: f64,
    pub delta_im: f64,
    pub fallback_re: bool,
    pub fallback_im: bool,
}

fn component(approx: f64, reference: f64) -> (f64, bool) {
    if reference == 0.0 {
        (approx.abs(), true)
    } else {
        ((approx - reference).abs() / reference.abs(), false)
    }
}

pub fn relative_error(approx: Complex64, reference: Complex64) -> RelativeError {
    let (delta_re, fallback_re) = component(approx.re, reference.re);
    let (delta_im, fallback_im) = component(approx.im, reference.im);
    RelativeError {
        delta_re,
        delta_im,
        fallback_re,
        fallback_im,
    }
}

/// Distance in units in the last place between two finite doubles of the
/// same sign (counts representable values strictly between plus one).
pub fn ulp_distance(a: f64, b: f64) -> u64 {
    fn ordered(v: f64) -> i64 {
        let bits = v.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    }
    ordered(a).abs_diff(ordered(b))
}
