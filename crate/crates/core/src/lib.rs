pub mod algebra;
pub mod cohomology;
pub mod deformations;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod random;
pub mod structure;
pub mod symalg;

pub use error::{Error, Result};
