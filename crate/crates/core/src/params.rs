use crate::error::{Error, Result};

/// The triple controlling every approximation: number of Fourier terms,
/// margin value τm (half-width of the expansion window) and shift constant σ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproximationParams {
    terms: usize,
    margin: f64,
    shift: f64,
}

impl ApproximationParams {
    pub const DEFAULT_TERMS: usize = 23;
    pub const DEFAULT_MARGIN: f64 = 12.0;
    pub const DEFAULT_SHIFT: f64 = 2.0;

    pub fn new(terms: usize, margin: f64, shift: f64) -> Result<Self> {
        if terms < 1 {
            return Err(Error::InvalidParams(format!(
                "number of terms must be at least 1, got {terms}"
            )));
        }
        if !(margin.is_finite() && margin > 0.0) {
            return Err(Error::InvalidParams(format!(
                "margin must be finite and positive, got {margin}"
            )));
        }
        if !(shift.is_finite() && shift > 0.0) {
            return Err(Error::InvalidParams(format!(
                "shift must be finite and positive, got {shift}"
            )));
        }
        Ok(Self {
            terms,
            margin,
            shift,
        })
    }

    /// N, the highest Fourier harmonic kept.
    pub fn terms(&self) -> usize {
        self.terms
    }

    /// τm.
    pub fn margin(&self) -> f64 {
        self.margin
    }

    /// σ.
    pub fn shift(&self) -> f64 {
        self.shift
    }
}

impl Default for ApproximationParams {
    fn default() -> Self {
        Self {
            terms: Self::DEFAULT_TERMS,
            margin: Self::DEFAULT_MARGIN,
            shift: Self::DEFAULT_SHIFT,
        }
    }
}
