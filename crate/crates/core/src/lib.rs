//! Exact combinatorial machinery for configuration categories of finite
//! discrete spaces and their box tensor products.
//!
//! Everything in this crate is computed over finite data with exact integer
//! arithmetic: maps of finite sets and the category `Boxfin` they assemble
//! into, finite categories with reference functors to `Fin`, capped
//! simplicial sets and degreewise-discrete simplicial spaces, configuration
//! categories of finite sets (with finite group actions), the levelwise
//! pullback tensor of two spaces over `Fin`, the conservatization functor
//! realized as bounded homotopy colimits, and integral simplicial homology
//! via Smith normal form.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! CLI crate carries file formats, reports and batch pipelines.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boxtensor;
pub mod configcat;
pub mod conservatize;
pub mod delta;
pub mod fincat;
pub mod finset;
pub mod homotopy;
pub mod sspace;

pub use finset::{BoxMor, BoxObj, FinMap, Partition};
