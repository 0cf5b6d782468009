use num_complex::Complex64;

use super::{format_sci, relative_error};
use crate::error::{Error, Result};
use crate::params::ApproximationParams;
use crate::rational::erf_rational;
use crate::reference::erf_reference;
use crate::table::CoefficientTable;

/// The seventeen (x, y) points of the published comparison tables.
pub const TABLE_POINTS: [(f64, f64); 17] = [
    (10.0, 10.0),
    (10.0, 5.0),
    (5.0, 5.0),
    (5.0, 1.0),
    (1.0, 1.0),
    (1.0, 0.5),
    (0.5, 0.5),
    (0.5, 0.1),
    (0.1, 0.1),
    (0.1, 0.05),
    (0.05, 0.05),
    (0.05, 0.01),
    (0.01, 0.01),
    (0.01, 0.005),
    (0.005, 0.005),
    (0.005, 0.001),
    (0.001, 0.001),
];

pub const TABLE_CSV_HEADER: &str = "x,y,approx_rational,approx_reference,delta";

/// One table line: a component of erf from the rational and the reference
/// forms, and their relative difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub x: f64,
    pub y: f64,
    pub rational: f64,
    pub reference: f64,
    pub delta: f64,
    pub fallback: bool,
}

impl TableRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            format_sci(self.x),
            format_sci(self.y),
            format_sci(self.rational),
            format_sci(self.reference),
            format_sci(self.delta)
        )
    }
}

/// Table 1 holds real parts, table 2 imaginary parts.
pub fn reproduce_table(id: u8, params: &ApproximationParams) -> Result<Vec<TableRow>> {
    if !(1..=2).contains(&id) {
        return Err(Error::InvalidTableId(id));
    }
    let table = CoefficientTable::new(*params);
    TABLE_POINTS
        .iter()
        .map(|&(x, y)| {
            let z = Complex64::new(x, y);
            let rational = erf_rational(z, &table)?;
            let reference = erf_reference(z, &table)?;
            let err = relative_error(rational, reference);
            Ok(if id == 1 {
                TableRow {
                    x,
                    y,
                    rational: rational.re,
                    reference: reference.re,
                    delta: err.delta_re,
                    fallback: err.fallback_re,
                }
            } else {
                TableRow {
                    x,
                    y,
                    rational: rational.im,
                    reference: reference.im,
                    delta: err.delta_im,
                    fallback: err.fallback_im,
                }
            })
        })
        .collect()
}
