//! Hardy-Orlicz space computations on the unit disk.
//!
//! The crate covers the calculus of growth functions (type exponents,
//! Young conjugates, doubling conditions), Luxemburg norms and Fourier
//! analysis of boundary functions on the circle, Hardy-space norms of
//! analytic functions, Blaschke/inner/outer/strong factorization, and
//! Hankel-operator boundedness experiments, all at desk scale with
//! explicit tolerances.

pub mod circle;
pub mod error;
pub mod factor;
mod fft;
pub mod growth;
pub mod hankel;
pub mod hardy;
mod numeric;
pub mod spec;
pub mod verify;

pub use circle::{BoundaryFunction, NormReport};
pub use error::{Error, Result};
pub use factor::{AtomicMeasure, FactorizationReport, ZeroList};
pub use growth::{GrowthFunction, IndexEstimate, TypeEstimate, Weight};
pub use hankel::{HankelMatrix, HankelReport};
pub use hardy::{AnalyticFunction, RadialReport};
