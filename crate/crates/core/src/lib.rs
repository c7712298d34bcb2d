pub mod beilinson;
pub mod bott;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactcomb;
pub mod expr;
pub mod schur;
pub mod sheaf;
pub mod ulrich;
pub mod variety;

pub use error::{Error, Result};
