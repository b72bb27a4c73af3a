//! Deterministic dense linear algebra: symmetric eigensolving, matrix
//! products and inverses, and exact rational arithmetic for the cone
//! geometry.

mod eigen;
mod matrix;
pub mod rational;

pub use eigen::sym_eigen;
pub use matrix::{gram, Matrix};
pub use rational::{
    nullspace, rank, rat_frac, rat_from_string, rat_int, rat_to_f64, rat_to_string, rationalize,
    row_reduce, Rat, RatMatrix, RationalVector, SnapReport, SNAP_DENOMINATOR_BOUND,
};
