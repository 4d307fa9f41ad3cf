//! Semi-local string comparison through transposition networks.
//!
//! A semi-local comparison of `x` against `y` yields the implicit
//! highest-score matrix `A(i, j) = LLCS(x, y[i..j])` as `m + n` critical
//! points ([`CriticalPointSet`]). Several algorithms compute the same set:
//!
//! * [`seaweed_core`]: the `O(mn)` seaweed algorithm.
//! * [`sparse_semilocal`]: quadtree over the dag, match-free blocks evaluated
//!   as `DIAMOND` networks; about `n^1.5` on permutation strings.
//! * [`rle_semilocal`]: run-length compressed inputs, one block per run pair.
//! * [`semilocal_contour`]: only contour cells of the 0/1 network do work;
//!   `O(np)` for LLCS `p`.
//! * [`netsim_semilocal`]: direct network simulation, the reference.
//!
//! ```
//! use semilocal::{seaweed_core, sparse_semilocal};
//!
//! let cps = seaweed_core(b"baabcbca", b"baabcabcabaca");
//! assert_eq!(cps.llcs(), 8);
//! assert_eq!(cps.score(3, 8).unwrap(), 4);
//! assert_eq!(cps.window_scores(3).unwrap()[4], 2);
//! assert_eq!(sparse_semilocal(b"baabcbca", b"baabcabcabaca"), cps);
//! ```

pub mod critical;
pub mod error;
pub mod exec;
pub mod halfint;
pub mod matches;
pub mod netsim;
pub mod oracle;
pub mod rle;
pub mod seaweed;
pub mod sparse;
pub mod zeroone;

pub use critical::CriticalPointSet;
pub use error::{Error, Result};
pub use exec::Execution;
pub use halfint::HalfInt;
pub use matches::{build_match_lists, MatchLists};
pub use netsim::{netsim_semilocal, simulate_lcsnet, EqualPolicy};
pub use oracle::{dense_semilocal_oracle, llcs_dp, DenseScoreMatrix};
pub use rle::{rle_semilocal, RleString};
pub use seaweed::seaweed_core;
pub use sparse::sparse_semilocal;
pub use zeroone::{llcs_01, llcs_banded, semilocal_contour};
