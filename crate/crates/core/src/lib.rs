//! Polyadic (n-ary) hypercomplex algebras.
//!
//! Exact rational arithmetic is the default scalar field; every algebra is
//! generic over [`numeric::Field`] so the same code runs on tolerance-compared
//! doubles.

pub mod error;
pub mod hypercomplex;
pub mod imaginary;
pub mod norms;
pub mod numeric;
pub mod polyadization;
pub mod props;
pub mod tower;
pub mod vectoralg;
pub mod wire;

pub use error::{Error, Result};
