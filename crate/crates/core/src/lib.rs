//! Partition families whose counts obey self-similar recurrences.

pub mod error;
pub mod partition;
pub mod sequence;
pub mod family;
pub mod report;
pub mod bijection;
pub mod series;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
