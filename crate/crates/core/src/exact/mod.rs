//! Exact arithmetic substrate: rationals, polynomials in the coroot
//! coordinates, restricted rational functions and exact linear algebra.

pub mod fraction;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod sparse;

pub use fraction::LinearFraction;
pub use matrix::ExactMatrix;
pub use poly::{Degree, Monomial, Poly};
pub use scalar::Scalar;
pub use sparse::SparseEchelon;
