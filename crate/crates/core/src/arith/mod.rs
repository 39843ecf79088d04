//! Exact coefficients and sparse spinor polynomials.

mod gaussian;
mod monomial;
mod poly;
pub mod text;

pub use gaussian::{gr_arith, ArithKind, GaussianRational};
pub use monomial::SpinorMonomial;
pub use poly::SpinorPoly;
pub use text::parse_spinor;
