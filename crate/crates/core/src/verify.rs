//! Per-claim checklist for `End(B_n)`: each check recomputes one known
//! fact about the monoid and reports PASS, FAIL or SKIPPED.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::brandt::build_brandt;
use crate::endo::{
    compose, enumerate_endomorphisms_oracle, enumerate_endomorphisms_structural, factorial,
    phi_of_perm, EndoMonoid, Permutation, ORACLE_MAX_N,
};
use crate::error::Result;
use crate::par::SearchConfig;
use crate::ranks::witness::{
    adjacent_transposition_set, identity_and_constants, minimum_generating_set,
};
use crate::ranks::{
    all_subsets, independent_gen_bound_check, intermediate_rank, large_rank, large_rank_exhaustive,
    lower_rank, small_rank, small_rank_exhaustive, smallest_prime_subset, upper_rank, Rank,
    LARGE_RANK_CROSS_CHECK_MAX,
};
use crate::semigroup::{is_generating, is_independent, is_prime_subset, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skipped,
            detail: detail.into(),
        }
    }

    fn from_result(name: &'static str, result: Result<Check>) -> Check {
        result.unwrap_or_else(|e| Check {
            name,
            status: Status::Fail,
            detail: e.to_string(),
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<7} {}: {}", self.status, self.name, self.detail)
    }
}

pub fn expected_small_rank(n: u32) -> usize {
    if n == 1 {
        3
    } else {
        1
    }
}

pub fn expected_lower_rank(n: u32) -> usize {
    if n <= 2 {
        3
    } else {
        4
    }
}

pub fn expected_intermediate_rank(n: u32) -> usize {
    if n == 1 {
        3
    } else {
        n as usize + 1
    }
}

pub fn expected_large_rank(n: u32) -> usize {
    factorial(n) + n as usize + 1
}

/// Runs every check for `End(B_n)`. Structural failures (the monoid cannot
/// be built) are returned as errors; everything else is a checklist line.
pub fn run_checks(n: u32, config: &SearchConfig) -> Result<Vec<Check>> {
    let brandt = build_brandt(n)?;
    let m = enumerate_endomorphisms_structural(n)?;
    let t = m.table();
    let mut checks = Vec::new();

    checks.push(Check::new(
        "B_n is a semigroup",
        brandt.validate() == ValidationReport::Ok,
        format!(
            "{} elements, associativity checked on all triples",
            brandt.size()
        ),
    ));
    checks.push(Check::new(
        "|End(B_n)| = n! + n + 1",
        m.len() == expected_large_rank(n) && t.validate() == ValidationReport::Ok,
        format!("{} elements, composition table associative", m.len()),
    ));
    checks.push(Check::from_result(
        "End(B_n) = Aut(B_n) ∪ C_I(B_n) (oracle)",
        oracle_check(&m),
    ));
    checks.push(isomorphism_check(&m));
    checks.extend(factorization_checks(&m));
    checks.push(Check::from_result(
        "generating sets contain ξ_θ and a nonzero constant",
        generating_set_check(&m, config),
    ));

    let r1 = small_rank(t, config);
    let mut detail = format!("r1 = {}", r1.value);
    let mut ok = r1.value == expected_small_rank(n);
    if t.size() <= 10 {
        let generic = small_rank_exhaustive(t, config);
        ok &= generic.value == r1.value && generic.is_exact();
        detail.push_str(&format!(", exhaustive search agrees ({})", generic.value));
    }
    checks.push(rank_check("small rank", &r1, ok, detail));

    let r2 = lower_rank(t, config);
    let s = minimum_generating_set(&m)?;
    let s_ok = is_generating(&s, t)?;
    checks.push(rank_check(
        "lower rank",
        &r2,
        r2.value == expected_lower_rank(n) && s_ok && s.len() == expected_lower_rank(n),
        format!(
            "r2 = {}, {{{}}} generates: {s_ok}",
            r2.value,
            t.labels_of(&s).join(", ")
        ),
    ));

    let r3 = intermediate_rank(t, config);
    let mut detail = format!("r3 = {}", r3.value);
    let mut ok = r3.value == expected_intermediate_rank(n);
    if n >= 2 {
        let set = adjacent_transposition_set(&m)?;
        let indep_gen = is_generating(&set, t)? && is_independent(&set, t)?;
        ok &= indep_gen && set.len() == n as usize + 1;
        detail.push_str(&format!(
            ", {{{}}} independent generating: {indep_gen}",
            t.labels_of(&set).join(", ")
        ));
    }
    checks.push(rank_check("intermediate rank", &r3, ok, detail));

    checks.push(if n <= ORACLE_MAX_N {
        let c = independent_gen_bound_check(n, config)?;
        Check::new(
            "independent generating sets have at most n + 1 elements",
            c.holds,
            format!(
                "{} independent generating sets, largest {} (bound {})",
                c.independent_generating_sets, c.max_size, c.bound
            ),
        )
    } else {
        Check::skipped(
            "independent generating sets have at most n + 1 elements",
            format!("exhaustive enumeration limited to n <= {ORACLE_MAX_N}"),
        )
    });

    let u = identity_and_constants(&m);
    let u_ok = is_independent(&u, t)?;
    checks.push(Check::new(
        "upper rank is at least n + 2",
        u_ok && u.len() == n as usize + 2,
        format!("{{{}}} independent: {u_ok}", t.labels_of(&u).join(", ")),
    ));

    let r5 = large_rank(t, config)?;
    let v = smallest_prime_subset(t, config);
    let zero = t.set_of([m.zero()])?;
    let zero_prime = is_prime_subset(&zero, t)?;
    let mut detail = format!(
        "r5 = {}, smallest prime subset {{{}}}, {{xi_theta}} prime: {zero_prime}",
        r5.value,
        t.labels_of(&v).join(", ")
    );
    let mut ok = r5.value == expected_large_rank(n) && zero_prime && v.len() == 1;
    if t.size() <= LARGE_RANK_CROSS_CHECK_MAX {
        let def = large_rank_exhaustive(t, config);
        ok &= def.value == r5.value;
        detail.push_str(&format!(", by definition {}", def.value));
    }
    checks.push(rank_check("large rank", &r5, ok, detail));

    checks.push(if n >= 2 {
        let aut = m.automorphism_subtable();
        let r3 = intermediate_rank(&aut, config);
        let r4 = upper_rank(&aut, config);
        if !r3.is_exact() || !r4.is_exact() {
            Check::skipped("Aut(B_n) ≅ S_n has r3 = r4 = n - 1", "budget exhausted")
        } else {
            Check::new(
                "Aut(B_n) ≅ S_n has r3 = r4 = n - 1",
                r3.value == n as usize - 1 && r4.value == n as usize - 1,
                format!("r3 = {}, r4 = {}", r3.value, r4.value),
            )
        }
    } else {
        Check::skipped("Aut(B_n) ≅ S_n has r3 = r4 = n - 1", "stated for n >= 2")
    });

    Ok(checks)
}

fn rank_check(name: &'static str, rank: &Rank, ok: bool, detail: String) -> Check {
    if rank.is_exact() {
        Check::new(name, ok, detail)
    } else {
        Check::skipped(name, format!("budget exhausted, {detail}"))
    }
}

fn oracle_check(m: &EndoMonoid) -> Result<Check> {
    const NAME: &str = "End(B_n) = Aut(B_n) ∪ C_I(B_n) (oracle)";
    if m.n() > ORACLE_MAX_N {
        return Ok(Check::skipped(
            NAME,
            format!("oracle limited to n <= {ORACLE_MAX_N}"),
        ));
    }
    let oracle = enumerate_endomorphisms_oracle(m.n())?;
    let same = oracle.len() == m.len()
        && oracle
            .iter()
            .zip(m.elements())
            .all(|(a, b)| a.image() == b.image() && a.tag() == b.tag());
    Ok(Check::new(
        NAME,
        same,
        format!("backtracking found {} homomorphisms", oracle.len()),
    ))
}

fn isomorphism_check(m: &EndoMonoid) -> Check {
    let perms = Permutation::all(m.n());
    let images: HashSet<Vec<u32>> = perms
        .iter()
        .map(|p| phi_of_perm(p).image().to_vec())
        .collect();
    let injective = images.len() == perms.len();
    let homomorphic = perms.iter().all(|s| {
        perms.iter().all(|t| {
            let lhs = compose(&phi_of_perm(s), &phi_of_perm(t)).expect("same degree");
            lhs == phi_of_perm(&s.then(t).expect("same degree"))
        })
    });
    Check::new(
        "σ ↦ φ_σ is an isomorphism S_n → Aut(B_n)",
        injective && homomorphic,
        format!(
            "{} permutations, injective: {injective}, φ_σ φ_τ = φ_στ: {homomorphic}",
            perms.len()
        ),
    )
}

/// Factorization properties for products of two factors, and of three
/// factors for the zero map when the monoid is small.
fn factorization_checks(m: &EndoMonoid) -> Vec<Check> {
    let t = m.table();
    let size = m.len();
    let aut = |x: usize| m.element(x).tag().is_automorphism();
    let zero = |x: usize| x == m.zero();
    let nonzero_const = |x: usize| m.element(x).tag().is_nonzero_constant();

    let pairs = || (0..size).flat_map(move |f| (0..size).map(move |g| (f, g)));
    let p1 = pairs().all(|(f, g)| aut(t.mul(f, g)) == (aut(f) && aut(g)));
    let p2_pairs = pairs().all(|(f, g)| !zero(t.mul(f, g)) || zero(f) || zero(g));
    let p2_triples = size > 10
        || (0..size).all(|f| {
            pairs().all(|(g, h)| !zero(t.mul(t.mul(f, g), h)) || zero(f) || zero(g) || zero(h))
        });
    let p3 = pairs().all(|(f, g)| {
        let fg = t.mul(f, g);
        nonzero_const(fg) == ((nonzero_const(f) || nonzero_const(g)) && !zero(fg))
    });
    vec![
        Check::new(
            "fg ∈ Aut iff f, g ∈ Aut",
            p1,
            format!("all {} pairs", size * size),
        ),
        Check::new(
            "fg = ξ_θ implies a factor is ξ_θ",
            p2_pairs && p2_triples,
            if size > 10 {
                format!("all {} pairs", size * size)
            } else {
                format!("all {} pairs and {} triples", size * size, size.pow(3))
            },
        ),
        Check::new(
            "fg is a nonzero constant iff a factor is and fg != ξ_θ",
            p3,
            format!("all {} pairs", size * size),
        ),
    ]
}

fn generating_set_check(m: &EndoMonoid, config: &SearchConfig) -> Result<Check> {
    const NAME: &str = "generating sets contain ξ_θ and a nonzero constant";
    if m.n() > ORACLE_MAX_N {
        return Ok(Check::skipped(
            NAME,
            format!("exhaustive enumeration limited to n <= {ORACLE_MAX_N}"),
        ));
    }
    let zero = m.zero();
    let outcomes = all_subsets(m.table(), config, |gen, members| {
        if !gen.generates_all(members.iter().copied()) {
            return None;
        }
        let has_const = members
            .iter()
            .any(|&x| m.element(x).tag().is_nonzero_constant());
        Some(members.contains(&zero) && has_const)
    })?;
    let violations: Vec<_> = outcomes.iter().filter(|ok| !**ok).collect();
    Ok(Check::new(
        NAME,
        violations.is_empty(),
        format!("{} generating subsets checked", outcomes.len()),
    ))
}
