//! Dense exact linear algebra over arbitrary-precision integers.

mod elim;
mod matrix;
mod poly;
mod vector;

pub use elim::{is_eigenvector, kernel_basis, rank};
pub use matrix::{mat_mul, IntMatrix};
pub use poly::{char_poly, mat_poly_eval, IntPolynomial};
pub use vector::{in_span, rank_of_vectors, same_span, RatVector};
