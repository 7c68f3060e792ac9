//! Characteristic sequences of arithmetically Cohen-Macaulay schemes.
//!
//! The sequence calculus ([`macaulay`], [`seqcalc`], [`liaison`], [`linsys`])
//! is pure integer arithmetic. [`pointlab`] measures the same invariants on
//! reduced point groups of plane curves over a prime field by ranks of
//! evaluation matrices, and [`realize`] builds point groups with a prescribed
//! relative sequence. [`verify`] runs the cross-checks between the two sides.

pub mod error;
pub mod liaison;
pub mod linsys;
pub mod macaulay;
pub mod pointlab;
pub mod realize;
pub mod seqcalc;
pub mod verify;

pub use error::{Error, Result};
pub use liaison::{GapSplit, RelCharSeq};
pub use macaulay::{GrowthBoundary, MacaulayRep, ZeroSeqCheck};
pub use pointlab::{Form, PlaneCurve, PointGroup, PrimeField, ProjPoint};
pub use seqcalc::{CharSeq, HilbertFn};

/// Default prime modulus for the geometry engine.
pub const DEFAULT_MODULUS: u64 = 10007;
