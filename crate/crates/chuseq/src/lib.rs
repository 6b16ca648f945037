//! Chu sequence cross-correlation toolkit.
//!
//! Chu sequences are unit-modulus polyphase sequences with quadratic phase
//! and perfect periodic autocorrelation. This crate covers the full pair and
//! family structure of their periodic cross-correlations:
//!
//! - [`numtheory`]: factorization, gcd, totient, divisors, unit groups;
//! - [`sequence`]: exact integer-phase generation and brute-force periodic
//!   correlation, the ground-truth oracle for everything else;
//! - [`xcorr`]: closed-form magnitude prediction per root pair and an
//!   independent squared-magnitude evaluator;
//! - [`distribution`]: the distribution of maximum cross-correlation
//!   magnitudes over the whole root family, counted two ways;
//! - [`selection`]: maximal root subsets under a cross-correlation budget,
//!   with constructive and exhaustive selectors.
//!
//! Every closed form is cross-checked against the brute-force path in the
//! test suites; no formula is trusted unverified.

pub mod distribution;
mod error;
pub mod numtheory;
pub mod selection;
pub mod sequence;
pub mod xcorr;

pub use error::{Error, Result};
