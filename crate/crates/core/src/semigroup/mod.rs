//! Finite semigroups as Cayley tables, element subsets, and the primitive
//! predicates (generation, independence, bands, prime subsets).

mod closure;
mod format;
mod set;
mod table;

pub(crate) use closure::prime_unchecked;
pub use closure::{
    closure, idempotents, is_band, is_generating, is_independent, is_prime_subset, Generator,
};
pub use format::{parse_table, write_table};
pub use set::{ElementId, ElementSet};
pub use table::{SemigroupTable, ValidationReport};
