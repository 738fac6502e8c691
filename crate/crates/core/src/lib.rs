//! Exact rational verification of the dual Hahn and Racah Leonard-pair
//! identities: parameter arrays, value tables, the square `(L* + lambda)^2`,
//! the Racah reparametrization and the `sl_2` even-module realization.

pub mod error;
pub mod hyper;
pub mod leonard;
pub mod matrix;
pub mod params;
pub mod racah;
pub mod rational;
pub mod repr;
pub mod sl2mod;

pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use params::{build_params, DualHahnParams};
pub use rational::Rational;
