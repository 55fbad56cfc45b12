//! Ranks of finite semigroups, with Brandt semigroups `B_n` and their
//! endomorphism monoids `End(B_n)` as the worked family.
//!
//! The five ranks of a finite semigroup `S` are
//!
//! * `r1` (small): the largest `k` such that every `k`-subset is independent,
//! * `r2` (lower): the smallest size of a generating set,
//! * `r3` (intermediate): the largest size of an independent generating set,
//! * `r4` (upper): the largest size of an independent set,
//! * `r5` (large): the smallest `k` such that every `k`-subset generates `S`,
//!
//! and satisfy `r1 <= r2 <= r3 <= r4 <= r5`.

pub mod brandt;
pub mod cli;
pub mod endo;
pub mod error;
pub mod par;
pub mod ranks;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
