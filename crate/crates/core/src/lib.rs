//! Mittag-Leffler functions, fractional Hermite and Mittag-Leffler polynomials,
//! Caputo calculus and closed-form fractional diffusion solutions.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod caputo;
pub mod cli;
pub mod config;
pub mod error;
pub mod fokker_planck;
pub mod format;
pub mod frac_poly;
pub mod fractional_hermite;
pub mod gamma;
pub mod mittag_leffler;
pub mod ml_polynomials;
pub mod sheffer;
pub mod summation;
pub mod verify;

pub use error::{Error, Result};
pub use frac_poly::{BiPoly, FracPoly, Term};
