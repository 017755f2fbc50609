//! Exact rational linear algebra: rank, kernels and LP feasibility.

mod lp;
mod matrix;

pub use lp::{lp_feasible, Feasibility};
pub use matrix::{primitive, primitive_integer_vector, Rational, RationalMatrix};
