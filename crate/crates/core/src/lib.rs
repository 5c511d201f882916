//! Alignment-free sequence comparison using minimal absent words.
//!
//! The length-weighted distance between two sequences is the sum of `1/|w|²`
//! over the words `w` that are minimal absent words of exactly one of them.
//! It is computed by ordering both MAW sets with the suffix array of the
//! concatenated pair and merging them with constant-time LCE equality tests.
//! Circular sequences are handled through the MAWs of the doubled sequence.

pub mod cli;
pub mod compare;
pub mod error;
pub mod io;
pub mod matrix;
pub mod maw;
pub mod phylo;
pub mod suffix;
pub mod text;

pub use compare::{lw_between, lw_distance, lw_distance_circular, LwResult, PairContext};
pub use error::{Error, Result};
pub use matrix::{pairwise_matrix, Mode};
pub use maw::{circular_maws, compute_maws, MawSet, MawTuple};
pub use suffix::SuffixStructures;
pub use text::{Alphabet, Text};
