pub mod annulus;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod matcheck;
pub mod qmatrix;
pub mod qtorus;
pub mod quiver;
pub mod report;
pub mod scalar;
pub mod symfun;

pub use error::{Error, Result};
