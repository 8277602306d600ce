//! Exact tools for the Frobenius-separability (FS) equation
//! `R¹²R²³ = R²³R¹³ = R¹³R¹²`.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod module;
pub mod scalar;
pub mod subalg;
pub mod tensor;
pub mod verify;
pub mod wf;

pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use scalar::{Field, Scalar};
pub use tensor::FsTensor;
