use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use super::{format_sci, relative_error, RelativeError};
use crate::error::{Error, Result};
use crate::oracle::{erf_oracle, erfc_oracle, w_oracle_full, QuadratureSpec};
use crate::params::ApproximationParams;
use crate::plane::{erf_full_plane, erfc_full_plane, w_full_plane, Method};
use crate::table::CoefficientTable;

pub const CSV_HEADER: &str =
    "x,y,re_approx,im_approx,re_ref,im_ref,delta_re,delta_im,fallback_re,fallback_im";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    W,
    Erf,
    Erfc,
}

impl FromStr for Function {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "w" => Ok(Function::W),
            "erf" => Ok(Function::Erf),
            "erfc" => Ok(Function::Erfc),
            other => Err(format!("unknown function `{other}`")),
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Function::W => "w",
            Function::Erf => "erf",
            Function::Erfc => "erfc",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodPair {
    RationalVsReference,
    RationalVsOracle,
}

/// Tensor grid over [x_min, x_max] × [y_min, y_max].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
    pub spacing: Spacing,
}

fn axis(lo: f64, hi: f64, n: usize, spacing: Spacing) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                let f = i as f64 / last;
                match spacing {
                    Spacing::Linear => lo + (hi - lo) * f,
                    Spacing::Log => (lo.ln() + (hi.ln() - lo.ln()) * f).exp(),
                }
            }
        })
        .collect()
}

impl Grid {
    fn validate(&self) -> Result<()> {
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points per axis, got {}x{}",
                self.nx, self.ny
            )));
        }
        let bounds = [self.x_min, self.x_max, self.y_min, self.y_max];
        if bounds.iter().any(|b| !b.is_finite()) {
            return Err(Error::InvalidGrid("bounds must be finite".into()));
        }
        if self.x_min > self.x_max || self.y_min > self.y_max {
            return Err(Error::InvalidGrid("min bound exceeds max bound".into()));
        }
        if self.spacing == Spacing::Log && bounds.iter().any(|&b| b <= 0.0) {
            return Err(Error::InvalidGrid(
                "log spacing needs positive bounds".into(),
            ));
        }
        Ok(())
    }

    /// Grid points in row-major (y, x) order: y outer, x inner.
    pub fn points(&self) -> Result<Vec<(f64, f64)>> {
        self.validate()?;
        let xs = axis(self.x_min, self.x_max, self.nx, self.spacing);
        let ys = axis(self.y_min, self.y_max, self.ny, self.spacing);
        Ok(ys
            .iter()
            .flat_map(|&y| xs.iter().map(move |&x| (x, y)))
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorMapRow {
    pub x: f64,
    pub y: f64,
    pub approx: Complex64,
    pub reference: Complex64,
    pub err: RelativeError,
}

impl ErrorMapRow {
    pub fn to_csv(&self) -> String {
        let flag = |b: bool| if b { "1" } else { "0" };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            format_sci(self.x),
            format_sci(self.y),
            format_sci(self.approx.re),
            format_sci(self.approx.im),
            format_sci(self.reference.re),
            format_sci(self.reference.im),
            format_sci(self.err.delta_re),
            format_sci(self.err.delta_im),
            flag(self.err.fallback_re),
            flag(self.err.fallback_im),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorMap {
    pub rows: Vec<ErrorMapRow>,
    pub max_delta_re: f64,
    pub max_delta_im: f64,
}

fn evaluate(
    func: Function,
    z: Complex64,
    table: &CoefficientTable,
    pair: MethodPair,
    spec: &QuadratureSpec,
) -> Result<(Complex64, Complex64)> {
    let with = |m: Method| match func {
        Function::W => w_full_plane(z, table, m),
        Function::Erf => erf_full_plane(z, table, m),
        Function::Erfc => erfc_full_plane(z, table, m),
    };
    let approx = with(Method::Rational)?;
    let reference = match pair {
        MethodPair::RationalVsReference => with(Method::Reference)?,
        MethodPair::RationalVsOracle => match func {
            Function::W => w_oracle_full(z, spec)?.value,
            Function::Erf => erf_oracle(z, spec)?.value,
            Function::Erfc => erfc_oracle(z, spec)?.value,
        },
    };
    Ok((approx, reference))
}

/// Evaluates `func` by the rational form and by the comparison route of
/// `pair` at each point, in parallel, keeping the input order.
pub fn error_map_points(
    func: Function,
    points: &[(f64, f64)],
    params: &ApproximationParams,
    pair: MethodPair,
    spec: &QuadratureSpec,
) -> Result<ErrorMap> {
    let table = CoefficientTable::new(*params);
    let rows = points
        .par_iter()
        .map(|&(x, y)| {
            let z = Complex64::new(x, y);
            let (approx, reference) =
                evaluate(func, z, &table, pair, spec).map_err(|e| Error::GridPoint {
                    x,
                    y,
                    source: Box::new(e),
                })?;
            Ok(ErrorMapRow {
                x,
                y,
                approx,
                reference,
                err: relative_error(approx, reference),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_delta_re = rows.iter().map(|r| r.err.delta_re).fold(0.0, f64::max);
    let max_delta_im = rows.iter().map(|r| r.err.delta_im).fold(0.0, f64::max);
    Ok(ErrorMap {
        rows,
        max_delta_re,
        max_delta_im,
    })
}

pub fn error_map(
    func: Function,
    grid: &Grid,
    params: &ApproximationParams,
    pair: MethodPair,
) -> Result<ErrorMap> {
    error_map_points(
        func,
        &grid.points()?,
        params,
        pair,
        &QuadratureSpec::default(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_grid_repeats_one_point() {
        let grid = Grid {
            x_min: 0.7,
            x_max: 0.7,
            y_min: 0.2,
            y_max: 0.2,
            nx: 2,
            ny: 2,
            spacing: Spacing::Linear,
        };
        let map = error_map(
            Function::Erf,
            &grid,
            &ApproximationParams::default(),
            MethodPair::RationalVsReference,
        )
        .unwrap();
        assert_eq!(map.rows.len(), 4);
        assert!(map.rows.iter().all(|r| *r == map.rows[0]));
    }

    #[test]
    fn row_major_order() {
        let grid = Grid {
            x_min: 1.0,
            x_max: 3.0,
            y_min: 10.0,
            y_max: 20.0,
            nx: 3,
            ny: 2,
            spacing: Spacing::Linear,
        };
        let pts = grid.points().unwrap();
        assert_eq!(
            pts,
            vec![
                (1.0, 10.0),
                (2.0, 10.0),
                (3.0, 10.0),
                (1.0, 20.0),
                (2.0, 20.0),
                (3.0, 20.0)
            ]
        );
    }

    #[test]
    fn log_axis_hits_endpoints_and_decades() {
        let xs = axis(1e-3, 10.0, 5, Spacing::Log);
        assert_eq!(xs[0], 1e-3);
        assert_eq!(xs[4], 10.0);
        assert!((xs[2] - 0.1).abs() < 1e-15);
    }

    #[test]
    fn grid_validation() {
        let mut g = Grid {
            x_min: 0.0,
            x_max: 1.0,
            y_min: 0.0,
            y_max: 1.0,
            nx: 1,
            ny: 3,
            spacing: Spacing::Linear,
        };
        assert!(g.points().is_err());
        g.nx = 3;
        assert!(g.points().is_ok());
        g.spacing = Spacing::Log;
        assert!(g.points().is_err());
    }

    #[test]
    fn failure_names_the_point() {
        let pts = [(0.5, 0.5), (0.0, 30.0)];
        let err = error_map_points(
            Function::Erfc,
            &pts,
            &ApproximationParams::default(),
            MethodPair::RationalVsReference,
            &QuadratureSpec::default(),
        )
        .unwrap_err();
        match err {
            Error::GridPoint { x, y, source } => {
                assert_eq!((x, y), (0.0, 30.0));
                assert!(matches!(*source, Error::Overflow { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn csv_row_shape() {
        let pts = [(1.0, 1.0)];
        let map = error_map_points(
            Function::Erf,
            &pts,
            &ApproximationParams::default(),
            MethodPair::RationalVsReference,
            &QuadratureSpec::default(),
        )
        .unwrap();
        let line = map.rows[0].to_csv();
        assert_eq!(line.split(',').count(), CSV_HEADER.split(',').count());
        assert!(line.starts_with("1.000000000000000E0,1.000000000000000E0,1.316151281697949E0,"));
        assert!(line.ends_with(",0,0"));
    }
}
