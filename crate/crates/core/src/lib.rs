//! Ordered composite DNA channel toolkit.
//!
//! A composite letter of resolution `k` over a base alphabet of size `q` is a
//! mixture of base letters with weights in multiples of `1/k`. The channel
//! splits every letter into a sorted column of `k` base symbols, transmits each
//! row over its own noisy channel and reassembles the columns on the far side.
//!
//! The crate covers:
//!
//! * [`alphabet`]: decomposition and reconstruction between composite
//!   sequences and row tuples, plus the reversal and shift bijections.
//! * [`balls`]: substitution and deletion error balls, closed-form sizes and
//!   brute-force enumerators.
//! * [`counting`]: run and weight counting functions feeding the deletion bounds.
//! * [`bounds`]: exact rational upper and lower bounds and table emitters.
//! * [`substitution`]: the per-channel product code, the fiber code for a single
//!   error in a known channel and the limited-magnitude code for an unknown channel.
//! * [`deletion`]: VT and systematic ternary single-deletion codes and the four
//!   composite deletion constructions.
//! * [`oracle`]: exhaustive code search and decoder harnesses.
//! * [`capacity`]: capacity of the binary-resolution channel under substitutions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod arith;
pub mod balls;
pub mod bounds;
pub mod capacity;
pub mod counting;
pub mod deletion;
mod error;
pub mod oracle;
pub mod substitution;

pub use alphabet::{CompositeLetter, CompositeParams, CompositeSeq, RowTuple, UNKNOWN};
pub use balls::{DelOutcome, DelSpec, ErrorSpec, SubErrorSpec};
pub use error::{Error, Result};
