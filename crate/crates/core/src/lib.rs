//! Set partitions, restricted growth functions and run-sorted permutations.
//!
//! The crate covers four layers:
//!
//! * the objects themselves ([`SetPartition`], [`Permutation`], [`RgfWord`]) with
//!   their text and JSON encodings and every statistic used on them;
//! * constructive bijections between the classes ([`bijections`]);
//! * exact counting recurrences over arbitrary-precision integers ([`counting`]) and
//!   an exact trivariate power-series engine for the joint generating function
//!   ([`series`]);
//! * exhaustive generation, both the two-row dynamic program for run-sorted
//!   permutations by number of runs and brute-force oracles ([`generation`]).
//!
//! [`verify`] bundles the structural identities into runnable property suites.
//!
//! Positions and values are 1-based everywhere in the public API.

pub mod bijections;
pub mod counting;
mod error;
pub mod generation;
mod partition;
mod permutation;
mod rgf;
pub mod series;
mod text;
pub mod verify;

pub use crate::error::{Error, Result};
pub use crate::partition::SetPartition;
pub use crate::permutation::{Permutation, RunDecomposition};
pub use crate::rgf::{RgfIter, RgfWord};
