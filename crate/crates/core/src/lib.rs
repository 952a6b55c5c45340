pub mod arith;
pub mod certificate;
pub mod cli;
pub mod descent;
pub mod error;
pub mod quadform;

pub use error::{Error, Result};
