//! Exact construction, verification and spectral analysis of compound
//! Lucas and Frierson magic squares of order `3^ℓ`.

pub mod algebra;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod exactmat;
pub mod format;
pub mod radical;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use exactmat::{ExactInt, RationalMatrix, SquareMatrix};
pub use radical::Radical;
