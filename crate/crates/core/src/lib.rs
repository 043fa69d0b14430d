//! Exact decision of the matrix torsion problem over the rationals.
//!
//! A square rational matrix `M` is *torsion* when two distinct powers of `M`
//! coincide. For a `d × d` matrix this happens exactly when `M` annihilates
//! `z^d · π_n(z)`, where `π_n` is the product of the first `n` cyclotomic
//! polynomials and `n` is any index past which every totient exceeds `d`.
//!
//! The crate provides:
//!
//! * [`poly`]: dense univariate polynomials over `Z` and `Q`, with a
//!   primitive remainder sequence GCD.
//! * [`numtheory`]: totients, divisors, `lcm(1..n)`, cyclotomic polynomials,
//!   both constructions of `π_n`, and the index bound used by the decider.
//! * [`matrix`]: exact rational matrices, binary powering, Horner evaluation
//!   and minimal polynomials.
//! * [`torsion`]: the decision procedures and an independent certificate
//!   checker.
//! * [`mpp`]: the reduction to the matrix power problem.
//! * [`codec`] and [`cli`]: text formats and the `mtorsion` command line.

pub mod cli;
pub mod codec;
pub mod error;
pub mod matrix;
pub mod mpp;
pub mod numtheory;
pub mod par;
pub mod poly;
pub mod rational;
pub mod torsion;

pub use error::{Error, ParseError, Result};
pub use matrix::RatMatrix;
pub use mpp::MppInstance;
pub use numtheory::{CyclotomicCache, TotientTable};
pub use par::Schedule;
pub use poly::{Degree, IntPoly, RatPoly};
pub use rational::Rational;
pub use torsion::{BoundMode, Rejection, TorsionCertificate};
