//! Hadamard-type sign matrices, strongly regular graphs and the ψ-coloring of
//! complete multipartite graphs, with exact bound evaluation for two-color
//! multipartite Ramsey numbers of `K_{2,m}`.
//!
//! The crate is `no_std` (it needs `alloc`). Enable `parallel` for rayon-backed
//! certification and search, `serde` for serializable reports.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod bits;
pub mod bounds;
pub mod coloring;
pub mod error;
pub mod gf;
pub mod hadamard;
pub mod srg;

pub use error::{Error, Result};
