pub mod error;
pub mod scalar;

pub use error::{Error, Result};
pub mod braid;
pub mod cli;
pub mod hecke;
pub mod lens;
pub mod trace;
pub mod verify;
