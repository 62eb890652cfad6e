//! Exact computational toolkit for the equation
//!
//! ```text
//! (x+1)^k + (x+2)^k + ... + (lx)^k = y^n
//! ```
//!
//! Everything here is exact: rationals are arbitrary precision and kept in
//! lowest terms, root multiplicities come from squarefree decomposition, and
//! the 2-adic arguments are carried out on actual valuations.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command line front
//! end and parallel sweeps live in the `ellsum` crate.

#![no_std]

extern crate alloc;

pub mod bernoulli;
pub mod classifier;
mod error;
pub mod exactnum;
pub mod poly;
pub mod powersum;
pub mod rootstructure;
pub mod search;
pub mod verify;

#[cfg(feature = "serde")]
mod serde_str;

pub use error::{Error, Result};
pub use exactnum::ExactRational;
pub use poly::RationalPolynomial;
pub use powersum::{PowerSumPolynomial, ProblemInstance};
