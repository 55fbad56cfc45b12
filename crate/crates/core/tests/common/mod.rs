//! Brute-force oracles and random semigroup tables shared by the integration
//! tests. The oracles deliberately avoid the library's search code: closure
//! is an all-pairs fixpoint and every rank is read off the full subset
//! lattice.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use semigroup_ranks::semigroup::{ElementSet, SemigroupTable};

/// All-pairs fixpoint: repeatedly add every product of two members.
pub fn naive_closure(table: &SemigroupTable, members: &[usize]) -> Vec<bool> {
    let n = table.size();
    let mut inside = vec![false; n];
    for &m in members {
        inside[m] = true;
    }
    loop {
        let mut grew = false;
        for a in 0..n {
            for b in 0..n {
                if inside[a] && inside[b] {
                    let p = table.row(a)[b] as usize;
                    if !inside[p] {
                        inside[p] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return inside;
        }
    }
}

pub fn members_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn naive_generating(table: &SemigroupTable, members: &[usize]) -> bool {
    naive_closure(table, members).iter().all(|&b| b)
}

pub fn naive_independent(table: &SemigroupTable, members: &[usize]) -> bool {
    members.iter().all(|&a| {
        let rest: Vec<usize> = members.iter().copied().filter(|&b| b != a).collect();
        !naive_closure(table, &rest)[a]
    })
}

pub fn naive_prime(table: &SemigroupTable, members: &[usize]) -> bool {
    let n = table.size();
    let inside: Vec<bool> = (0..n).map(|i| members.contains(&i)).collect();
    !members.is_empty()
        && (0..n)
            .all(|a| (0..n).all(|b| !inside[table.row(a)[b] as usize] || inside[a] || inside[b]))
}

/// The five ranks computed straight from their definitions. Only for tables
/// of at most 12 elements.
pub fn brute_ranks(table: &SemigroupTable) -> [usize; 5] {
    let n = table.size();
    assert!(n <= 12, "brute force limited to 12 elements");
    let mut gen_by_size = vec![true; n + 1];
    let mut indep_by_size = vec![true; n + 1];
    let mut r2 = usize::MAX;
    let mut r3 = 0;
    let mut r4 = 0;
    for mask in 0u32..(1 << n) {
        let m = members_of(mask, n);
        let k = m.len();
        let g = naive_generating(table, &m);
        let i = naive_independent(table, &m);
        gen_by_size[k] &= g;
        indep_by_size[k] &= i;
        if g {
            r2 = r2.min(k);
        }
        if g && i {
            r3 = r3.max(k);
        }
        if i {
            r4 = r4.max(k);
        }
    }
    let r1 = (0..=n).rev().find(|&k| indep_by_size[k]).unwrap();
    let r5 = (1..=n).find(|&k| gen_by_size[k]).unwrap();
    [r1, r2, r3, r4, r5]
}

pub fn set(table: &SemigroupTable, ids: &[usize]) -> ElementSet {
    ElementSet::from_indices(table.size(), ids.iter().copied())
}

/// Random table on `size <= 3` elements by rejection sampling.
fn random_small(rng: &mut impl Rng, size: usize) -> SemigroupTable {
    loop {
        let rows: Vec<Vec<usize>> = (0..size)
            .map(|_| (0..size).map(|_| rng.gen_range(0..size)).collect())
            .collect();
        let t = SemigroupTable::from_rows(&rows).unwrap();
        if t.validate().is_ok() {
            return t;
        }
    }
}

/// Closure of random self-maps of `{0, 1, 2}` under composition, with the
/// resulting semigroup relabelled by a random permutation.
fn random_transformation(rng: &mut impl Rng, size: usize) -> SemigroupTable {
    const DEG: usize = 3;
    loop {
        let gens: Vec<[usize; DEG]> = (0..rng.gen_range(1..=3))
            .map(|_| std::array::from_fn(|_| rng.gen_range(0..DEG)))
            .collect();
        let mut elems: Vec<[usize; DEG]> = Vec::new();
        for g in &gens {
            if !elems.contains(g) {
                elems.push(*g);
            }
        }
        let mut i = 0;
        while i < elems.len() && elems.len() <= size {
            for g in &gens {
                let p: [usize; DEG] = std::array::from_fn(|x| g[elems[i][x]]);
                if !elems.contains(&p) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        if elems.len() != size {
            continue;
        }
        let mut relabel: Vec<usize> = (0..size).collect();
        relabel.shuffle(rng);
        let mut rows = vec![vec![0; size]; size];
        for (a, fa) in elems.iter().enumerate() {
            for (b, fb) in elems.iter().enumerate() {
                // apply a, then b
                let p: [usize; DEG] = std::array::from_fn(|x| fb[fa[x]]);
                let c = elems.iter().position(|e| *e == p).unwrap();
                rows[relabel[a]][relabel[b]] = relabel[c];
            }
        }
        let t = SemigroupTable::from_rows(&rows).unwrap();
        if t.validate().is_ok() {
            return t;
        }
    }
}

/// A validated random semigroup with exactly `size` elements, `1 <= size <= 5`.
pub fn random_semigroup(rng: &mut impl Rng, size: usize) -> SemigroupTable {
    assert!((1..=5).contains(&size));
    if size <= 3 {
        random_small(rng, size)
    } else {
        random_transformation(rng, size)
    }
}
