//! Graded sectors, their operator matrices, and exact subspace algebra.

mod elim;
mod matrix;
mod sector;
mod subspace;

pub use elim::{canonical_span, kernel_basis, rank};
pub use matrix::{coordinates, operator_matrix, operator_matrix_auto, to_poly, SparseMatrix, SparseVec};
pub use sector::{binomial, enumerate_basis, exponent_vectors, GradedBasis, Parity, SectorSpec};
pub use subspace::{joint_kernel, SubspaceBasis, SubspaceDocument};
