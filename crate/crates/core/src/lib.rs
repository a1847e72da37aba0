//! Iterative operadic theories of n-categories, computed on finite data.

pub mod cli;
pub mod enrich;
pub mod error;
pub mod globop;
pub mod gset;
pub mod interval;
pub mod operads;
pub mod pd;

pub use error::{Error, Result};
