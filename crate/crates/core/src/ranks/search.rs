//! Subset searches shared by the rank computations.
//!
//! Two shapes of search are used:
//!
//! * fixed-size scans over `k`-subsets of a candidate pool in lexicographic
//!   order, split by the first member so branches can run concurrently and
//!   the first hit in branch order is the lexicographically smallest;
//! * a set-enumeration tree over independent sets. Independence is
//!   hereditary, so a branch is cut as soon as adding an element breaks it.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use itertools::Itertools;

use crate::par::{self, Execution, Meter};
use crate::semigroup::{ElementSet, Generator, SemigroupTable};

/// First `k`-subset of `pool` (sorted ascending) in lexicographic order that
/// satisfies `accept`. `None` when there is none or the budget ran out; check
/// the meter to tell the two apart.
pub(crate) fn first_combination<F>(
    table: &SemigroupTable,
    pool: &[usize],
    k: usize,
    meter: &Meter,
    execution: Execution,
    accept: F,
) -> Option<Vec<usize>>
where
    F: Fn(&mut Generator<'_>, &[usize]) -> bool + Sync,
{
    if k == 0 {
        let mut gen = Generator::new(table);
        return (meter.tick() && accept(&mut gen, &[])).then(Vec::new);
    }
    if k > pool.len() {
        return None;
    }
    par::find_map_first(pool.len() - k + 1, execution, |i| {
        let mut gen = Generator::new(table);
        let mut candidate = Vec::with_capacity(k);
        for tail in pool[i + 1..].iter().copied().combinations(k - 1) {
            if !meter.tick() {
                return None;
            }
            candidate.clear();
            candidate.push(pool[i]);
            candidate.extend_from_slice(&tail);
            if accept(&mut gen, &candidate) {
                return Some(candidate);
            }
        }
        None
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Target {
    /// Independent sets that generate the whole table.
    Generating,
    /// All independent sets.
    Any,
}

#[derive(Debug, Clone)]
pub(crate) struct IndependentSearch {
    pub best: Option<ElementSet>,
    pub exhausted: bool,
}

struct Shared<'a> {
    table: &'a SemigroupTable,
    meter: &'a Meter,
    target: Target,
    best_size: AtomicUsize,
    stop_at: Option<usize>,
    stop: AtomicBool,
}

/// Largest independent set (optionally generating) containing `root`, with
/// its other members drawn from `pool`. Ties go to the lexicographically
/// smallest set. `seed`, if given, must already satisfy the target and
/// serves as the initial incumbent.
#[allow(clippy::too_many_arguments)]
pub(crate) fn largest_independent(
    table: &SemigroupTable,
    root: &[usize],
    pool: &[usize],
    target: Target,
    seed: Option<ElementSet>,
    stop_at: Option<usize>,
    meter: &Meter,
    execution: Execution,
) -> IndependentSearch {
    let shared = Shared {
        table,
        meter,
        target,
        best_size: AtomicUsize::new(seed.as_ref().map_or(0, ElementSet::len)),
        stop_at,
        stop: AtomicBool::new(false),
    };
    if let (Some(limit), Some(s)) = (stop_at, seed.as_ref()) {
        if s.len() >= limit {
            shared.stop.store(true, Ordering::Relaxed);
        }
    }

    let mut gen = Generator::new(table);
    let mut root_best = seed;
    let branches = shared.visit(&mut gen, root, pool, &mut root_best);

    let results = par::map_indices(branches.len(), execution, |b| {
        let mut gen = Generator::new(table);
        let mut members = root.to_vec();
        let (pos, x) = branches[b];
        let mut local = None;
        if gen.keeps_independent(&members, x) {
            members.push(x);
            shared.descend(&mut gen, &mut members, pool, pos + 1, &mut local);
        }
        local
    });
    let best = results.into_iter().flatten().fold(root_best, pick);
    IndependentSearch {
        best,
        exhausted: meter.exhausted(),
    }
}

fn pick(current: Option<ElementSet>, candidate: ElementSet) -> Option<ElementSet> {
    match current {
        Some(c) if c.len() > candidate.len() || (c.len() == candidate.len() && c <= candidate) => {
            Some(c)
        }
        _ => Some(candidate),
    }
}

impl Shared<'_> {
    /// Records `members` if it meets the target and returns the extension
    /// candidates `(pool position, element)` worth exploring, in order.
    /// `members` is assumed independent.
    fn visit(
        &self,
        gen: &mut Generator<'_>,
        members: &[usize],
        pool: &[usize],
        local: &mut Option<ElementSet>,
    ) -> Vec<(usize, usize)> {
        self.visit_from(gen, members, pool, 0, local)
    }

    fn visit_from(
        &self,
        gen: &mut Generator<'_>,
        members: &[usize],
        pool: &[usize],
        from: usize,
        local: &mut Option<ElementSet>,
    ) -> Vec<(usize, usize)> {
        if self.stop.load(Ordering::Relaxed) || !self.meter.tick() {
            return Vec::new();
        }
        let n = self.table.size();
        let closure = gen.closure_bits(members.iter().copied());
        let generating = closure.count_ones(..) == n;
        if self.target == Target::Any || generating {
            self.record(members, local);
        }
        if generating {
            // every further element is already generated
            return Vec::new();
        }
        let candidates: Vec<(usize, usize)> = pool[from..]
            .iter()
            .enumerate()
            .filter(|&(_, &x)| !closure.contains(x))
            .map(|(k, &x)| (from + k, x))
            .collect();
        if members.len() + candidates.len() < self.best_size.load(Ordering::Relaxed) {
            return Vec::new();
        }
        candidates
    }

    fn descend(
        &self,
        gen: &mut Generator<'_>,
        members: &mut Vec<usize>,
        pool: &[usize],
        from: usize,
        local: &mut Option<ElementSet>,
    ) {
        let candidates = self.visit_from(gen, members, pool, from, local);
        for (k, &(pos, x)) in candidates.iter().enumerate() {
            if self.stop.load(Ordering::Relaxed) || self.meter.exhausted() {
                return;
            }
            // the remaining candidates bound every deeper set
            if members.len() + candidates.len() - k < self.best_size.load(Ordering::Relaxed) {
                return;
            }
            if gen.keeps_independent(members, x) {
                members.push(x);
                self.descend(gen, members, pool, pos + 1, local);
                members.pop();
            }
        }
    }

    fn record(&self, members: &[usize], local: &mut Option<ElementSet>) {
        let set = ElementSet::from_indices(self.table.size(), members.iter().copied());
        let size = set.len();
        self.best_size.fetch_max(size, Ordering::Relaxed);
        if self.stop_at.is_some_and(|limit| size >= limit) {
            self.stop.store(true, Ordering::Relaxed);
        }
        *local = pick(local.take(), set);
    }
}

/// Elements that lie outside the subsemigroup generated by all the other
/// elements. They belong to every generating set.
pub(crate) fn required_elements(table: &SemigroupTable, execution: Execution) -> Vec<usize> {
    let n = table.size();
    par::map_indices(n, execution, |a| {
        let mut gen = Generator::new(table);
        (!gen.reaches((0..n).filter(|&x| x != a), a)).then_some(a)
    })
    .into_iter()
    .flatten()
    .collect()
}

/// A minimal generating set: drop elements from the full set, highest index
/// first, while the rest still generates.
pub(crate) fn greedy_minimal_generating_set(table: &SemigroupTable) -> Vec<usize> {
    let n = table.size();
    let mut gen = Generator::new(table);
    let mut keep = vec![true; n];
    for a in (0..n).rev() {
        keep[a] = false;
        let rest = (0..n).filter(|&x| keep[x]);
        if !gen.generates_all(rest) {
            keep[a] = true;
        }
    }
    (0..n).filter(|&x| keep[x]).collect()
}
