//! Exact arithmetic for dual-complex numbers and dual-complex Pell quaternions.
//!
//! The crate is layered bottom-up:
//!
//! * [`sequences`] – Pell, Pell-Lucas and modified Pell numbers at any integer index.
//! * [`rings`] – exact coefficient scalars (`BigInt`, `BigRational`, and `QuadRat`
//!   for the field of rationals extended by √2).
//! * [`dual_complex`] – the commutative algebra on the basis `{1, i, ε, iε}`.
//! * [`quaternion`] – Pell and Pell-Lucas quaternions, partial sums, and the exact
//!   Binet evaluation.
//! * [`audit`] – a registry of identities checked by exhaustive exact evaluation.
//! * [`cli`] – the `dcpell` command-line front end.

pub mod audit;
pub mod cli;
pub mod dual_complex;
mod error;
pub mod quaternion;
pub mod rings;
pub mod sequences;

pub use dual_complex::{ConjKind, DualComplex};
pub use error::{Error, Result};
pub use quaternion::{binet_qp, qp, qpl, DCPellQuat, Family};
pub use rings::{BigRational, QuadRat, Ring};
pub use sequences::{seq_at, seq_iterative, seq_pair_fast, seq_range, SeqKind};

pub use num_bigint::BigInt;
