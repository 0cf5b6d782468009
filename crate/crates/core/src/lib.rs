//! Complex error function w(z), erf(z), erfc(z) and the Voigt functions in
//! double precision, from a Fourier expansion of the shifted Gaussian
//! e^{−(t − 2σ)²/4}.
//!
//! Two approximation families share one [`CoefficientTable`]:
//!
//! * the *rational* form, a superposition of N + 1 rational functions of
//!   σ − iz with all exponentials precomputed ([`w_rational`],
//!   [`erf_rational`], [`erfc_rational`]);
//! * the *reference* form, carrying one complex exponential per call
//!   ([`w_reference`], [`erf_reference`], [`erfc_reference`]).
//!
//! Both are valid in a half-plane; the `*_full_plane` functions extend them
//! everywhere through the reflection identities. The [`oracle`] module is an
//! independent quadrature/series ground truth. [`analysis`] holds the
//! accuracy comparisons between the two forms and their benchmark.
//!
//! ```
//! use cerf_core::{erf_full_plane, CoefficientTable, Method};
//! use num_complex::Complex64;
//!
//! let table = CoefficientTable::default(); // N = 23, τm = 12, σ = 2
//! let erf = erf_full_plane(Complex64::new(1.0, 1.0), &table, Method::Rational).unwrap();
//! assert!((erf.re - 1.316151281697949).abs() < 1e-14);
//! ```

pub mod analysis;
mod complex_ops;
mod error;
pub mod oracle;
mod params;
mod plane;
mod rational;
mod reference;
mod table;

pub use error::{Error, Result};
pub use params::ApproximationParams;
pub use plane::{erf_full_plane, erfc_full_plane, voigt, w_full_plane, Method};
pub use rational::{erf_rational, erfc_rational, w_rational};
pub use reference::{erf_reference, erfc_reference, w_reference};
pub use table::{build_table, exp_kernel_approx, CoefficientTable, KernelValue};

/// A point z = x + iy. Every public evaluator rejects non-finite components.
pub type ComplexValue = num_complex::Complex64;
