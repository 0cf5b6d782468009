use thiserror::Error;

/// Failures surfaced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid approximation parameters: {0}")]
    InvalidParams(String),

    #[error("non-finite argument {re} + {im}i")]
    NonFinite { re: f64, im: f64 },

    #[error("{func}: argument {re} + {im}i is outside the half-plane {required}")]
    Domain {
        func: &'static str,
        re: f64,
        im: f64,
        required: &'static str,
    },

    #[error("{func}: exp(-z^2) overflows at z = {re} + {im}i")]
    Overflow {
        func: &'static str,
        re: f64,
        im: f64,
    },

    #[error("quadrature did not converge after {subdivisions} subdivisions (error estimate {estimate:e})")]
    NoConvergence { subdivisions: usize, estimate: f64 },

    #[error("series oracle needs |z| <= {limit}, got |z| = {modulus}")]
    OutOfRange { modulus: f64, limit: f64 },

    #[error("no table with id {0}; expected 1 or 2")]
    InvalidTableId(u8),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("at grid point ({x}, {y}): {source}")]
    GridPoint {
        x: f64,
        y: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid benchmark setup: {0}")]
    InvalidBenchmark(String),

    #[error("fixture file: {0}")]
    Fixture(String),
}

impl Error {
    /// True for failures of the numerics (overflow, domain, convergence) as
    /// opposed to malformed requests.
    pub fn is_numeric(&self) -> bool {
        match self {
            Error::Domain { .. }
            | Error::Overflow { .. }
            | Error::NoConvergence { .. }
            | Error::OutOfRange { .. } => true,
            Error::GridPoint { source, .. } => source.is_numeric(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
