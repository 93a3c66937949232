//! Regenerative composition structures: Laplace exponents, decrement
//! matrices, exact composition laws and Monte Carlo samplers.

#[cfg(feature = "cli")]
pub mod cli;
pub mod decrement;
pub mod error;
pub mod io;
pub mod law;
pub mod phi_model;
pub mod sampler;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Backend, Rational, Scalar};
