//! A workbench for experiments with permutation patterns.
//!
//! The crate revolves around classical pattern containment: a permutation
//! `τ` *contains* `β` when some subsequence of `τ` is order isomorphic to
//! `β`, and *avoids* it otherwise. On top of that single relation it builds
//!
//! * exhaustive enumeration of avoidance classes `Av(B)` ([`enumerate`]),
//! * structural algebra — direct/skew sums, inflations, layered
//!   permutations, and the rank poset with its layered hull ([`algebra`]),
//! * stack sorting, both the greedy one-pass map and exhaustive searches
//!   over serial stack machines ([`stacksort`]),
//! * finite-sample growth-rate bounds ([`growth`]),
//! * exact-arithmetic guessing of polynomial-coefficient recurrences
//!   ([`recurrence`]),
//! * pattern avoidance in integer compositions ([`compositions`]),
//! * and scripted checks of several open conjectures ([`conjectures`]).
//!
//! Everything is exact (machine integers with overflow checks, or
//! arbitrary-precision integers and rationals at the interfaces) and
//! deterministic: repeated runs, at any worker count, produce identical
//! results.
//!
//! Each module has a runnable tour under `examples/`; start with
//! `cargo run --release --example enumeration`.

#![warn(missing_docs)]

pub mod algebra;
pub mod cache;
pub mod cli;
pub mod compositions;
pub mod config;
pub mod conjectures;
pub mod enumerate;
mod error;
pub mod growth;
pub mod perm;
pub mod recurrence;
pub mod report;
pub mod stacksort;

pub use config::EngineConfig;
pub use error::{Error, Result};
pub use perm::Permutation;
