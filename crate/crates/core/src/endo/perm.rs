use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A bijection on `[n] = {1, ..., n}`, acting on the right: `i·σ = image[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            let k = v as usize;
            if k == 0 || k > n || std::mem::replace(&mut seen[k - 1], true) {
                return Err(Error::InvalidInput(format!(
                    "{image:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// The transposition `(a b)`.
    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        let mut image: Vec<u32> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::InvalidInput(format!(
                "({a} {b}) is not a transposition on [{n}]"
            )));
        }
        image.swap(a as usize - 1, b as usize - 1);
        Ok(Permutation { image })
    }

    /// The full cycle `(1 2 ... n)`.
    pub fn long_cycle(n: u32) -> Self {
        Permutation {
            image: (1..=n).map(|i| i % n + 1).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.image[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    /// `στ`: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidInput(
                "permutations of different degree".into(),
            ));
        }
        Ok(Permutation {
            image: self.image.iter().map(|&i| other.apply(i)).collect(),
        })
    }

    /// All of `S_n` in lexicographic order of image arrays; the identity is first.
    pub fn all(n: u32) -> Vec<Permutation> {
        (1..=n)
            .permutations(n as usize)
            .map(|image| Permutation { image })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.image.iter().join(","))
    }
}

pub fn factorial(n: u32) -> usize {
    (1..=n as usize).product()
}
