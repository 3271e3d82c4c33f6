//! Exact integer, polynomial and modular arithmetic shared by the rest of the crate.

pub mod matrix;
pub mod modp;
pub mod poly;
pub mod primes;
pub mod rational;

pub use matrix::IntMatrix;
pub use poly::IntPoly;
