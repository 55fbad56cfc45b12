//! The five ranks `r1..r5` of a finite semigroup, computed by search with
//! structural shortcuts where the structure allows one:
//!
//! * a semigroup of size at least 2 that is not a band has `r1 = 1`;
//! * `r5 = |S| - |V| + 1` for a smallest prime subset `V`.
//!
//! Every search is budgeted. A search that runs out of budget reports the
//! best value it can still vouch for, flagged as a lower or upper bound.

mod conjecture;
mod report;
mod search;
pub mod witness;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Meter, SearchConfig};
use crate::semigroup::{is_band, prime_unchecked, ElementSet, SemigroupTable};

pub use conjecture::{
    independent_gen_bound_check, verify_conjecture, ConjectureReport, IndependentGenCheck, Verdict,
};
pub use report::{rank_report, RankReport, RankSelection, ReportJson};

use search::{
    first_combination, greedy_minimal_generating_set, largest_independent, required_elements,
    Target,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FastPath,
    Exhaustive,
    PrunedSearch,
    PrimeSubset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    Exact,
    /// The true rank is at least `value`.
    Lower,
    /// The true rank is at most `value`.
    Upper,
}

/// One computed rank with its witness, if the rank has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank {
    pub value: usize,
    pub bound: Bound,
    pub method: Method,
    /// r1: a dependent set of size `value + 1` (absent when every subset is
    /// independent). r2: a generating set. r3: an independent generating set.
    /// r4: an independent set. r5: a smallest prime subset.
    pub certificate: Option<ElementSet>,
}

impl Rank {
    pub fn is_exact(&self) -> bool {
        self.bound == Bound::Exact
    }

    fn exact(value: usize, method: Method, certificate: Option<ElementSet>) -> Self {
        Rank {
            value,
            bound: Bound::Exact,
            method,
            certificate,
        }
    }
}

/// Small rank. Tables of size >= 2 that are not bands take the fast path.
pub fn small_rank(table: &SemigroupTable, config: &SearchConfig) -> Rank {
    if table.size() >= 2 && !is_band(table) {
        let a = (0..table.size())
            .find(|&a| table.mul(a, a) != a)
            .expect("not a band");
        let aa = table.mul(a, a);
        // {a, a²} is dependent
        return Rank::exact(
            1,
            Method::FastPath,
            Some(ElementSet::from_indices(table.size(), [a, aa])),
        );
    }
    small_rank_exhaustive(table, config)
}

/// Small rank from the definition: scan `k = 2, 3, ...` for a dependent
/// `k`-subset. Dependence is inherited by supersets, so the first such `k`
/// gives `r1 = k - 1`.
pub fn small_rank_exhaustive(table: &SemigroupTable, config: &SearchConfig) -> Rank {
    let n = table.size();
    let meter = Meter::new(config.budget);
    let pool: Vec<usize> = (0..n).collect();
    for k in 2..=n {
        let hit = first_combination(table, &pool, k, &meter, config.execution, |gen, c| {
            !gen.independent(c)
        });
        if let Some(dependent) = hit {
            return Rank::exact(
                k - 1,
                Method::Exhaustive,
                Some(ElementSet::from_indices(n, dependent)),
            );
        }
        if meter.exhausted() {
            return Rank {
                value: k - 1,
                bound: Bound::Lower,
                method: Method::Exhaustive,
                certificate: None,
            };
        }
    }
    Rank::exact(n, Method::Exhaustive, None)
}

/// Lower rank, by size-ascending search over supersets of the elements every
/// generating set must contain. The certificate is the lexicographically
/// smallest generating set of minimum size.
pub fn lower_rank(table: &SemigroupTable, config: &SearchConfig) -> Rank {
    let n = table.size();
    let meter = Meter::new(config.budget);
    let required = required_elements(table, config.execution);
    let pool: Vec<usize> = {
        let req = ElementSet::from_indices(n, required.iter().copied());
        (0..n).filter(|&x| !req.contains(x)).collect()
    };
    for extra in 0..=pool.len() {
        let hit = first_combination(table, &pool, extra, &meter, config.execution, |gen, c| {
            gen.generates_all(required.iter().chain(c).copied())
        });
        if let Some(c) = hit {
            let set = ElementSet::from_indices(n, required.iter().chain(&c).copied());
            return Rank::exact(set.len(), Method::PrunedSearch, Some(set));
        }
        if meter.exhausted() {
            break;
        }
    }
    let fallback = ElementSet::from_indices(n, greedy_minimal_generating_set(table));
    Rank {
        value: fallback.len(),
        bound: Bound::Upper,
        method: Method::PrunedSearch,
        certificate: Some(fallback),
    }
}

/// Intermediate rank: the largest independent generating set, found by a
/// set-enumeration search over independent sets containing the elements
/// every generating set needs.
pub fn intermediate_rank(table: &SemigroupTable, config: &SearchConfig) -> Rank {
    let n = table.size();
    let meter = Meter::new(config.budget);
    let required = required_elements(table, config.execution);
    let req = ElementSet::from_indices(n, required.iter().copied());
    let pool: Vec<usize> = (0..n).filter(|&x| !req.contains(x)).collect();
    // a minimal generating set is independent, so this is always a valid incumbent
    let seed = ElementSet::from_indices(n, greedy_minimal_generating_set(table));
    let outcome = largest_independent(
        table,
        &required,
        &pool,
        Target::Generating,
        Some(seed),
        None,
        &meter,
        config.execution,
    );
    let best = outcome.best.expect("seeded search always has an incumbent");
    Rank {
        value: best.len(),
        bound: if outcome.exhausted {
            Bound::Lower
        } else {
            Bound::Exact
        },
        method: Method::PrunedSearch,
        certificate: Some(best),
    }
}

/// Upper rank: the largest independent set, by branch and bound over the
/// independent sets in lexicographic set-enumeration order.
pub fn upper_rank(table: &SemigroupTable, config: &SearchConfig) -> Rank {
    upper_rank_seeded(table, config, None)
}

/// As [`upper_rank`], starting from a known independent set.
pub fn upper_rank_seeded(
    table: &SemigroupTable,
    config: &SearchConfig,
    seed: Option<ElementSet>,
) -> Rank {
    let meter = Meter::new(config.budget);
    let outcome = upper_rank_search(table, config, seed, None, &meter);
    let best = outcome
        .best
        .unwrap_or_else(|| ElementSet::empty(table.size()));
    Rank {
        value: best.len(),
        bound: if outcome.exhausted {
            Bound::Lower
        } else {
            Bound::Exact
        },
        method: Method::PrunedSearch,
        certificate: Some(best),
    }
}

pub(crate) fn upper_rank_search(
    table: &SemigroupTable,
    config: &SearchConfig,
    seed: Option<ElementSet>,
    stop_at: Option<usize>,
    meter: &Meter,
) -> search::IndependentSearch {
    let pool: Vec<usize> = (0..table.size()).collect();
    largest_independent(
        table,
        &[],
        &pool,
        Target::Any,
        seed,
        stop_at,
        meter,
        config.execution,
    )
}

/// Size-ascending prime subset search. Returns the lexicographically
/// smallest prime subset of minimum size, or, if the budget ran out, the
/// whole table together with `Some(k)` where every prime subset is known to
/// have at least `k` elements.
fn smallest_prime_search(
    table: &SemigroupTable,
    config: &SearchConfig,
) -> (ElementSet, Option<usize>) {
    let n = table.size();
    let meter = Meter::new(config.budget);
    let pool: Vec<usize> = (0..n).collect();
    for k in 1..n {
        let hit = first_combination(table, &pool, k, &meter, config.execution, |_, c| {
            let set = ElementSet::from_indices(n, c.iter().copied());
            prime_unchecked(set.bits(), table)
        });
        if let Some(c) = hit {
            return (ElementSet::from_indices(n, c), None);
        }
        if meter.exhausted() {
            // every prime subset has at least k elements
            return (table.full_set(), Some(k));
        }
    }
    (table.full_set(), None)
}

/// A smallest prime subset. The whole table is prime, so the search always
/// terminates; with a budget too small to finish, the whole table is
/// returned and [`large_rank`] reports an upper bound.
pub fn smallest_prime_subset(table: &SemigroupTable, config: &SearchConfig) -> ElementSet {
    smallest_prime_search(table, config).0
}

/// Large rank `|S| - |V| + 1` for a smallest prime subset `V`. Tables with at
/// most [`LARGE_RANK_CROSS_CHECK_MAX`] elements are also checked against the
/// definition, and a disagreement is an error.
pub fn large_rank(table: &SemigroupTable, config: &SearchConfig) -> Result<Rank> {
    let n = table.size();
    let (prime, lower_size) = smallest_prime_search(table, config);
    if let Some(k) = lower_size {
        return Ok(Rank {
            value: n - k + 1,
            bound: Bound::Upper,
            method: Method::PrimeSubset,
            certificate: Some(prime),
        });
    }
    let value = n - prime.len() + 1;
    if n <= LARGE_RANK_CROSS_CHECK_MAX {
        let by_definition = large_rank_exhaustive(table, config);
        if by_definition.is_exact() && by_definition.value != value {
            return Err(Error::Certificate(format!(
                "large rank from prime subset is {value}, by definition {}",
                by_definition.value
            )));
        }
    }
    Ok(Rank::exact(value, Method::PrimeSubset, Some(prime)))
}

pub const LARGE_RANK_CROSS_CHECK_MAX: usize = 10;

/// Large rank from the definition: the least `k` such that every `k`-subset
/// generates. Generation is inherited by supersets, so scan `k` upwards.
/// The certificate is a largest non-generating subset, if any.
pub fn large_rank_exhaustive(table: &SemigroupTable, config: &SearchConfig) -> Rank {
    let n = table.size();
    let meter = Meter::new(config.budget);
    let pool: Vec<usize> = (0..n).collect();
    let mut witness = None;
    for k in 1..=n {
        let hit = first_combination(table, &pool, k, &meter, config.execution, |gen, c| {
            !gen.generates_all(c.iter().copied())
        });
        match hit {
            Some(c) => witness = Some(ElementSet::from_indices(n, c)),
            None if meter.exhausted() => {
                return Rank {
                    value: k,
                    bound: Bound::Lower,
                    method: Method::Exhaustive,
                    certificate: witness,
                }
            }
            None => return Rank::exact(k, Method::Exhaustive, witness),
        }
    }
    unreachable!("the whole table generates itself")
}

/// Every subset of a table with at most 20 elements, as bit masks, checked
/// in parallel. Used by the exhaustive regime checks.
pub(crate) fn all_subsets<T, F>(
    table: &SemigroupTable,
    config: &SearchConfig,
    f: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut crate::semigroup::Generator<'_>, &[usize]) -> Option<T> + Sync + Send,
{
    let n = table.size();
    if n > 20 {
        return Err(Error::Resource(format!(
            "2^{n} subsets is out of the exhaustive regime"
        )));
    }
    const CHUNK: usize = 1 << 10;
    let total = 1usize << n;
    let chunks = total.div_ceil(CHUNK);
    let parts = par::map_indices(chunks, config.execution, |c| {
        let mut gen = crate::semigroup::Generator::new(table);
        let mut members = Vec::with_capacity(n);
        let mut out = Vec::new();
        for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
            members.clear();
            members.extend((0..n).filter(|&i| mask >> i & 1 == 1));
            if let Some(t) = f(&mut gen, &members) {
                out.push(t);
            }
        }
        out
    });
    Ok(parts.into_iter().flatten().collect())
}
