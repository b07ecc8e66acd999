pub mod error;
pub mod exactmath;
pub mod lattice;
pub mod polytopes;
pub mod ehrhart;
pub mod diagnostics;
pub mod cli;

pub use error::{Error, Result};
