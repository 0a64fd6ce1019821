//! Exact computations with cluster seeds of unipotent cells and open
//! Richardson varieties.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod laurent;
pub mod minors;
pub mod morphism;
pub mod quiver;
pub mod richardson;
pub mod seed;
pub mod weyl;

pub use error::{Error, Result};
