use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{Budget, SearchConfig};
use crate::semigroup::{is_generating, is_independent, is_prime_subset, SemigroupTable};

use super::{
    intermediate_rank, large_rank, lower_rank, small_rank, upper_rank_seeded, Bound, Method, Rank,
};

/// Which of `r1..r5` to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankSelection([bool; 5]);

impl RankSelection {
    pub fn all() -> Self {
        RankSelection([true; 5])
    }

    /// `rank` in `1..=5`.
    pub fn contains(self, rank: usize) -> bool {
        self.0[rank - 1]
    }
}

impl Default for RankSelection {
    fn default() -> Self {
        RankSelection::all()
    }
}

impl FromStr for RankSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sel = [false; 5];
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let k = part
                .strip_prefix('r')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|k| (1..=5).contains(k))
                .ok_or_else(|| Error::InvalidInput(format!("unknown rank {part:?}, use r1..r5")))?;
            sel[k - 1] = true;
        }
        if !sel.contains(&true) {
            return Err(Error::InvalidInput("empty rank selection".into()));
        }
        Ok(RankSelection(sel))
    }
}

/// All requested ranks of one table, with replayed certificates.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub n: Option<u32>,
    pub size: usize,
    /// `ranks[k]` is `r(k+1)`, `None` if not requested.
    pub ranks: [Option<Rank>; 5],
    pub labels: Vec<String>,
}

impl RankReport {
    pub fn rank(&self, k: usize) -> Option<&Rank> {
        self.ranks[k - 1].as_ref()
    }

    pub fn value(&self, k: usize) -> Option<usize> {
        self.rank(k).map(|r| r.value)
    }

    pub fn values(&self) -> [Option<usize>; 5] {
        [1, 2, 3, 4, 5].map(|k| self.value(k))
    }

    pub fn budget_exhausted(&self) -> bool {
        self.ranks.iter().flatten().any(|r| !r.is_exact())
    }

    fn labels_of(&self, rank: Option<&Rank>) -> Option<Vec<String>> {
        let cert = rank?.certificate.as_ref()?;
        Some(cert.iter().map(|i| self.labels[i].clone()).collect())
    }

    pub fn to_json(&self) -> ReportJson {
        let per = |f: &dyn Fn(&Rank) -> ReportValue| PerRank {
            r1: self.rank(1).map(f),
            r2: self.rank(2).map(f),
            r3: self.rank(3).map(f),
            r4: self.rank(4).map(f),
            r5: self.rank(5).map(f),
        };
        ReportJson {
            n: self.n,
            size: self.size,
            ranks: per(&|r| ReportValue::Value(r.value)),
            certificates: Certificates {
                r1_dependent: self.labels_of(self.rank(1)),
                r2: self.labels_of(self.rank(2)),
                r3: self.labels_of(self.rank(3)),
                r4: self.labels_of(self.rank(4)),
                r5_prime: self.labels_of(self.rank(5)),
            },
            methods: per(&|r| ReportValue::Method(r.method)),
            bounds: per(&|r| ReportValue::Bound(r.bound)),
            budget_exhausted: self.budget_exhausted(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match self.n {
            Some(n) => {
                let _ = writeln!(out, "End(B_{n}), {} elements", self.size);
            }
            None => {
                let _ = writeln!(out, "semigroup with {} elements", self.size);
            }
        }
        for k in 1..=5 {
            let Some(r) = self.rank(k) else { continue };
            let bound = match r.bound {
                Bound::Exact => "",
                Bound::Lower => " (lower bound, budget exhausted)",
                Bound::Upper => " (upper bound, budget exhausted)",
            };
            let method = serde_json::to_value(r.method).expect("method serializes");
            let _ = write!(
                out,
                "r{k} = {}{bound} [{}]",
                r.value,
                method.as_str().unwrap_or("")
            );
            if let Some(labels) = self.labels_of(Some(r)) {
                let what = match k {
                    1 => "dependent",
                    5 => "prime",
                    _ => "witness",
                };
                let _ = write!(out, "  {what}: {{{}}}", labels.join(", "));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ReportValue {
    Value(usize),
    Method(Method),
    Bound(Bound),
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PerRank<T> {
    pub r1: Option<T>,
    pub r2: Option<T>,
    pub r3: Option<T>,
    pub r4: Option<T>,
    pub r5: Option<T>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Certificates {
    pub r1_dependent: Option<Vec<String>>,
    pub r2: Option<Vec<String>>,
    pub r3: Option<Vec<String>>,
    pub r4: Option<Vec<String>>,
    pub r5_prime: Option<Vec<String>>,
}

/// Serialized form of a [`RankReport`].
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportJson {
    pub n: Option<u32>,
    pub size: usize,
    pub ranks: PerRank<ReportValue>,
    pub certificates: Certificates,
    pub methods: PerRank<ReportValue>,
    pub bounds: PerRank<ReportValue>,
    pub budget_exhausted: bool,
}

fn remaining(budget: Budget, started: Instant) -> Budget {
    Budget {
        time: budget.time.map(|t| {
            t.saturating_sub(started.elapsed())
                .max(Duration::from_millis(1))
        }),
        nodes: budget.nodes,
    }
}

/// Computes the selected ranks of a table, replays every certificate through
/// the semigroup predicates, and checks `r1 <= r2 <= r3 <= r4 <= r5` as far as
/// the computed values and bounds allow. The time budget is shared across all
/// ranks.
pub fn rank_report(
    table: &SemigroupTable,
    n: Option<u32>,
    config: &SearchConfig,
    selection: RankSelection,
) -> Result<RankReport> {
    table.validate_with(config.execution).into_result()?;
    let started = Instant::now();
    let step = || SearchConfig::new(remaining(config.budget, started), config.execution);

    let r1 = selection.contains(1).then(|| small_rank(table, &step()));
    let r2 = selection.contains(2).then(|| lower_rank(table, &step()));
    let r3 = selection
        .contains(3)
        .then(|| intermediate_rank(table, &step()));
    let r4 = selection.contains(4).then(|| {
        // an independent generating set is independent
        let seed = r3.as_ref().and_then(|r| r.certificate.clone());
        upper_rank_seeded(table, &step(), seed)
    });
    let r5 = if selection.contains(5) {
        Some(large_rank(table, &step())?)
    } else {
        None
    };

    let report = RankReport {
        n,
        size: table.size(),
        ranks: [r1, r2, r3, r4, r5],
        labels: (0..table.size()).map(|i| table.label(i)).collect(),
    };
    replay_certificates(&report, table)?;
    check_chain(&report)?;
    Ok(report)
}

fn replay_certificates(report: &RankReport, table: &SemigroupTable) -> Result<()> {
    let fail = |k: usize, what: &str| Err(Error::Certificate(format!("r{k}: {what}")));
    for k in 1..=5 {
        let Some(rank) = report.rank(k) else { continue };
        let Some(cert) = &rank.certificate else {
            if k >= 2 {
                return fail(k, "missing certificate");
            }
            continue;
        };
        match k {
            1 => {
                if cert.len() != rank.value + 1 || is_independent(cert, table)? {
                    return fail(k, "dependent witness does not replay");
                }
            }
            2 => {
                if cert.len() != rank.value || !is_generating(cert, table)? {
                    return fail(k, "generating witness does not replay");
                }
            }
            3 => {
                if cert.len() != rank.value
                    || !is_generating(cert, table)?
                    || !is_independent(cert, table)?
                {
                    return fail(k, "independent generating witness does not replay");
                }
            }
            4 => {
                if cert.len() != rank.value || !is_independent(cert, table)? {
                    return fail(k, "independent witness does not replay");
                }
            }
            _ => {
                if !is_prime_subset(cert, table)? {
                    return fail(k, "prime witness does not replay");
                }
                if rank.is_exact() && rank.value != table.size() - cert.len() + 1 {
                    return fail(k, "value disagrees with the prime subset");
                }
            }
        }
    }
    Ok(())
}

fn check_chain(report: &RankReport) -> Result<()> {
    let lo = |r: &Rank| match r.bound {
        Bound::Exact | Bound::Lower => r.value,
        Bound::Upper => 0,
    };
    let hi = |r: &Rank| match r.bound {
        Bound::Exact | Bound::Upper => r.value,
        Bound::Lower => usize::MAX,
    };
    for i in 1..=5 {
        for j in (i + 1)..=5 {
            if let (Some(a), Some(b)) = (report.rank(i), report.rank(j)) {
                if lo(a) > hi(b) {
                    return Err(Error::ChainViolated(format!(
                        "r{i} = {} exceeds r{j} = {}",
                        a.value, b.value
                    )));
                }
            }
        }
    }
    Ok(())
}
