pub mod error;
pub mod operator;
pub mod realizations;
pub mod report;
pub mod scalar;
pub mod single_mode;
pub mod spin;
pub mod two_mode;

pub use error::{AlgebraError, Result};
