//! Named subsets of `End(B_n)` that witness its ranks.

use crate::endo::{EndoMonoid, Permutation};
use crate::error::{Error, Result};
use crate::semigroup::ElementSet;

/// A smallest generating set: `{φ_(1 2), φ_(1 2 ... n), ξ_(1,1), ξ_θ}` for
/// `n >= 3`, `{φ_(1 2), ξ_(1,1), ξ_θ}` for `n = 2`, and the whole monoid for
/// `n = 1`.
pub fn minimum_generating_set(m: &EndoMonoid) -> Result<ElementSet> {
    let n = m.n();
    let mut ids = Vec::new();
    if n >= 2 {
        ids.push(m.automorphism(&Permutation::transposition(n, 1, 2)?)?);
    }
    if n >= 3 {
        ids.push(m.automorphism(&Permutation::long_cycle(n))?);
    }
    if n == 1 {
        ids.push(m.identity());
    }
    ids.push(m.nonzero_constant(1)?);
    ids.push(m.zero());
    m.table().set_of(ids)
}

/// The adjacent transpositions `φ_(i i+1)` together with `ξ_(1,1)` and
/// `ξ_θ`: an independent generating set of size `n + 1`. Needs `n >= 2`.
pub fn adjacent_transposition_set(m: &EndoMonoid) -> Result<ElementSet> {
    let n = m.n();
    if n < 2 {
        return Err(Error::InvalidInput("needs n >= 2".into()));
    }
    let mut ids = Vec::new();
    for i in 1..n {
        ids.push(m.automorphism(&Permutation::transposition(n, i, i + 1)?)?);
    }
    ids.push(m.nonzero_constant(1)?);
    ids.push(m.zero());
    m.table().set_of(ids)
}

/// `{φ_id} ∪ {ξ_α : α idempotent}`, an independent set of size `n + 2`.
pub fn identity_and_constants(m: &EndoMonoid) -> ElementSet {
    let mut set = m.constants();
    set.insert(m.identity());
    set
}
