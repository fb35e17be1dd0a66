//! Convolution algebras over commutative monoids with identity, and the
//! structures built from them: polynomials, formal power series, Laurent
//! series, rational functions, principal ideals and quotient rings over
//! exact fields, plus a floating-point layer for l1 sequence algebras on Z
//! and W (Neumann inversion, spectral-radius estimation, evaluation on the
//! unit circle).

pub mod algebra;
pub mod conv;
pub mod error;
pub mod expr;
pub mod ideals;
pub mod l1banach;
pub mod monoid;
pub mod poly;
pub mod scalars;
pub mod series;

pub use error::{Error, Result};

// re-exported so downstream crates name the same integer types
pub use num_bigint;
