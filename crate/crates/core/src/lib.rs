//! Exact computer algebra for polynomial symplectic spinors on (ℝ²ⁿ, ω).
//!
//! A spinor is stored as its polynomial part `f(x, q)`; the Gaussian weight
//! `exp(-|q|²/2)` is implicit everywhere. Coefficients live in ℚ(i).

pub mod analysis;
pub mod arith;
pub mod error;
pub mod graded;
pub mod operators;

pub use arith::{parse_spinor, GaussianRational, SpinorMonomial, SpinorPoly};
pub use error::{Error, Result};
