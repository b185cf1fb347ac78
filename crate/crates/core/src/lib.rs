//! Parameterized linear codes over projective toric subsets parameterized by
//! simple graphs.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! - [`gfq`]: table-driven arithmetic in GF(q) with canonical encodings.
//! - [`graph`]: simple graphs, components and bipartiteness.
//! - [`toricset`]: enumeration of the point set X and its expected size.
//! - [`evalcode`]: evaluation codes C_X(d), rank, Hilbert function,
//!   exhaustive minimum distance and weight distributions.
//! - [`zeros`]: pullbacks of forms and zero counts over the unit torus.
//! - [`formulas`]: closed forms for the even-cycle codes, in exact integers.
//!
//! Every brute-force routine takes an explicit work budget and fails with
//! [`Error::BudgetExceeded`] instead of running unbounded.

#![no_std]

extern crate alloc;

mod error;
pub mod evalcode;
pub mod formulas;
pub mod gfq;
pub mod graph;
pub mod linalg;
pub mod poly;
pub mod toricset;
pub mod zeros;

pub use error::{Error, Result};
pub use evalcode::LinearCode;
pub use gfq::{Elem, FieldElement, FiniteField};
pub use graph::{ComponentProfile, Graph};
pub use toricset::{ProjectivePoint, ToricSet};

/// Default cap on enumerated tuples, codewords or forms.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Checks `count <= budget`, reporting the required count otherwise.
pub(crate) fn check_budget(count: Option<u128>, budget: u64) -> Result<u128> {
    match count {
        Some(c) if c <= budget as u128 => Ok(c),
        Some(c) => Err(Error::BudgetExceeded { required: c, budget }),
        None => Err(Error::BudgetExceeded { required: u128::MAX, budget }),
    }
}

/// `base^exp` in `u128`, `None` on overflow.
pub(crate) fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}
