//! Exact linear algebra over the rationals and over odd prime fields.

mod matrix;
mod primes;
mod scalar;

pub use matrix::{Eliminator, ExactMatrix};
pub use primes::{is_prime, random_prime};
pub use scalar::{Domain, Scalar};
