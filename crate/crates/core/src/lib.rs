//! Exact Riordan-array calculus over truncated rational power series.
//!
//! A Riordan pair `(g, f)` stands for the lower-triangular matrix whose k-th
//! column has generating function `g·f^k`. This crate builds such pairs,
//! multiplies and inverts them, and characterizes them through their A-, Z-
//! and B-sequences, all in exact rational arithmetic on series truncated at
//! an explicit order.

pub mod catalog;
pub mod compositions;
pub mod group;
pub mod pascal;
pub mod rational;
pub mod riordan;
pub mod sequences;
pub mod series;
pub mod text;

pub use rational::Rational;
pub use riordan::{RiordanError, RiordanPair, Triangle};
pub use sequences::{BSeqKind, BSeqOutcome, BSeqVerdict, SeqError, Witness};
pub use series::{Series, SeriesError, SeriesOrder};
