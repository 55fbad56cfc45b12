//! Execution strategy and search budgets.
//!
//! Every subset search in this crate partitions its work by the first
//! element of the candidate subset. With the `parallel` feature those
//! branches run on the rayon pool; without it (or with
//! [`Execution::Sequential`]) they run in order on the calling thread.
//! Reductions are order-independent, so both paths return identical results.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when the crate is built without `parallel`.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Limits for a search. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Budget {
            time: Some(Duration::from_secs_f64(secs)),
            nodes: None,
        }
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = Some(nodes);
        self
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchConfig {
    pub budget: Budget,
    pub execution: Execution,
}

impl SearchConfig {
    pub fn new(budget: Budget, execution: Execution) -> Self {
        SearchConfig { budget, execution }
    }

    pub fn sequential() -> Self {
        SearchConfig::new(Budget::unlimited(), Execution::Sequential)
    }
}

/// Shared, thread-safe budget accounting for one search.
#[derive(Debug)]
pub struct Meter {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

const CLOCK_CHECK_MASK: u64 = 0x3ff;

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            deadline: budget.time.map(|t| Instant::now() + t),
            max_nodes: budget.nodes,
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Count one search node. Returns `false` once the budget is spent.
    pub fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(max) = self.max_nodes {
            if count > max {
                self.exhausted.store(true, Ordering::Relaxed);
                return false;
            }
        }
        if count & CLOCK_CHECK_MASK == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

/// Map every index in `0..len` through `f`, preserving index order in the output.
pub(crate) fn map_indices<T, F>(len: usize, execution: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = execution;
    (0..len).map(f).collect()
}

/// First `Some` in index order.
pub(crate) fn find_map_first<T, F>(len: usize, execution: Execution, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().find_map_first(f);
    }
    let _ = execution;
    (0..len).find_map(f)
}
