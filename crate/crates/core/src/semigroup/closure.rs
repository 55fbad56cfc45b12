//! Subsemigroup generation and the predicates built on it.
//!
//! `<U>` is computed as the right Cayley graph orbit of `U`: start from the
//! generators and right-multiply every newly reached element by every
//! generator until nothing new appears. Every product `g1 g2 ... gk` is
//! reached this way, so the result is the least closed superset of `U`.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

use super::set::ElementSet;
use super::table::SemigroupTable;

/// Reusable scratch space for repeated closure computations on one table.
#[derive(Debug, Clone)]
pub struct Generator<'a> {
    table: &'a SemigroupTable,
    seen: FixedBitSet,
    queue: Vec<u32>,
    gens: Vec<usize>,
}

impl<'a> Generator<'a> {
    pub fn new(table: &'a SemigroupTable) -> Self {
        Generator {
            table,
            seen: FixedBitSet::with_capacity(table.size()),
            queue: Vec::with_capacity(table.size()),
            gens: Vec::new(),
        }
    }

    pub fn table(&self) -> &'a SemigroupTable {
        self.table
    }

    /// Runs the orbit computation. Stops early once `stop` is reached (if
    /// given) or the whole table has been generated. Returns the number of
    /// elements reached.
    fn run(&mut self, stop: Option<usize>) -> usize {
        let n = self.table.size();
        self.seen.clear();
        self.queue.clear();
        for &g in &self.gens {
            if !self.seen.put(g) {
                self.queue.push(g as u32);
            }
        }
        let mut count = self.queue.len();
        if let Some(target) = stop {
            if self.seen.contains(target) {
                return count;
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            if count == n {
                break;
            }
            let x = self.queue[head] as usize;
            head += 1;
            let row = self.table.row(x);
            for &g in &self.gens {
                let y = row[g] as usize;
                if !self.seen.put(y) {
                    self.queue.push(y as u32);
                    count += 1;
                    if stop == Some(y) {
                        return count;
                    }
                }
            }
        }
        count
    }

    fn load<I: IntoIterator<Item = usize>>(&mut self, gens: I) {
        self.gens.clear();
        self.gens.extend(gens);
    }

    /// `<gens>` as a bit set borrowed from the scratch buffer.
    pub fn closure_bits<I: IntoIterator<Item = usize>>(&mut self, gens: I) -> &FixedBitSet {
        self.load(gens);
        self.run(None);
        &self.seen
    }

    pub fn closure<I: IntoIterator<Item = usize>>(&mut self, gens: I) -> ElementSet {
        ElementSet::from_bits(self.closure_bits(gens).clone())
    }

    pub fn generates_all<I: IntoIterator<Item = usize>>(&mut self, gens: I) -> bool {
        self.load(gens);
        self.run(None) == self.table.size()
    }

    /// Whether `target` lies in `<gens>`.
    pub fn reaches<I: IntoIterator<Item = usize>>(&mut self, gens: I, target: usize) -> bool {
        self.load(gens);
        if self.gens.is_empty() {
            return false;
        }
        let count = self.run(Some(target));
        count == self.table.size() || self.seen.contains(target)
    }

    /// Independence of the ascending member list `members`.
    pub fn independent(&mut self, members: &[usize]) -> bool {
        (0..members.len()).all(|skip| {
            let target = members[skip];
            let others = members
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &m)| m);
            !self.reaches(others, target)
        })
    }

    /// Given an independent `members`, whether `members ∪ {extra}` is still
    /// independent.
    pub fn extends_independent(&mut self, members: &[usize], extra: usize) -> bool {
        !self.reaches(members.iter().copied(), extra) && self.keeps_independent(members, extra)
    }

    /// Whether no member of `members` falls into the subsemigroup generated
    /// by the other members together with `extra`.
    pub fn keeps_independent(&mut self, members: &[usize], extra: usize) -> bool {
        (0..members.len()).all(|skip| {
            let target = members[skip];
            let others = members
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &m)| m)
                .chain(std::iter::once(extra));
            !self.reaches(others, target)
        })
    }
}

fn check_set(set: &ElementSet, table: &SemigroupTable) -> Result<()> {
    if set.universe() != table.size() {
        return Err(Error::InvalidInput(format!(
            "element set over {} elements used with a table of size {}",
            set.universe(),
            table.size()
        )));
    }
    Ok(())
}

/// The subsemigroup generated by `gens`. `<∅> = ∅`.
pub fn closure(gens: &ElementSet, table: &SemigroupTable) -> Result<ElementSet> {
    check_set(gens, table)?;
    Ok(Generator::new(table).closure(gens.iter()))
}

pub fn is_generating(set: &ElementSet, table: &SemigroupTable) -> Result<bool> {
    check_set(set, table)?;
    Ok(Generator::new(table).generates_all(set.iter()))
}

/// No member lies in the subsemigroup generated by the others. The empty set
/// and every singleton are independent.
pub fn is_independent(set: &ElementSet, table: &SemigroupTable) -> Result<bool> {
    check_set(set, table)?;
    Ok(Generator::new(table).independent(&set.to_vec()))
}

pub fn idempotents(table: &SemigroupTable) -> ElementSet {
    ElementSet::from_indices(
        table.size(),
        (0..table.size()).filter(|&a| table.mul(a, a) == a),
    )
}

pub fn is_band(table: &SemigroupTable) -> bool {
    (0..table.size()).all(|a| table.mul(a, a) == a)
}

/// `ab ∈ U` implies `a ∈ U` or `b ∈ U`. Equivalently, the complement of `U`
/// is closed under the product.
pub fn is_prime_subset(set: &ElementSet, table: &SemigroupTable) -> Result<bool> {
    check_set(set, table)?;
    if set.is_empty() {
        return Err(Error::InvalidInput("prime subsets are nonempty".into()));
    }
    Ok(prime_unchecked(set.bits(), table))
}

pub(crate) fn prime_unchecked(set: &FixedBitSet, table: &SemigroupTable) -> bool {
    let outside: Vec<usize> = (0..table.size()).filter(|&a| !set.contains(a)).collect();
    outside
        .iter()
        .all(|&a| outside.iter().all(|&b| !set.contains(table.mul(a, b))))
}
