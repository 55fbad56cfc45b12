//! The Brandt semigroup `B_n` on `([n] × [n]) ∪ {θ}`.
//!
//! `(i,j) + (k,l) = (i,l)` when `j = k` and `θ` otherwise; `θ` is a
//! two-sided zero. Elements are indexed with `θ` at 0 and the pairs in
//! row-major order after it.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{ElementId, SemigroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrandtElement {
    Zero,
    /// 1-based coordinates.
    Pair(u32, u32),
}

impl BrandtElement {
    pub fn check(self, n: u32) -> Result<Self> {
        match self {
            BrandtElement::Pair(i, j) if !(1..=n).contains(&i) || !(1..=n).contains(&j) => Err(
                Error::InvalidInput(format!("({i},{j}) is not an element of B_{n}")),
            ),
            _ => Ok(self),
        }
    }

    pub fn is_idempotent(self) -> bool {
        match self {
            BrandtElement::Zero => true,
            BrandtElement::Pair(i, j) => i == j,
        }
    }
}

impl fmt::Display for BrandtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrandtElement::Zero => f.write_str("theta"),
            BrandtElement::Pair(i, j) => write!(f, "({i},{j})"),
        }
    }
}

pub fn brandt_add(a: BrandtElement, b: BrandtElement, n: u32) -> Result<BrandtElement> {
    let a = a.check(n)?;
    let b = b.check(n)?;
    Ok(match (a, b) {
        (BrandtElement::Pair(i, j), BrandtElement::Pair(k, l)) if j == k => {
            BrandtElement::Pair(i, l)
        }
        _ => BrandtElement::Zero,
    })
}

/// Fixed bijection between `B_n` and element ids `0..=n²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BrandtIndexing {
    n: u32,
}

impl BrandtIndexing {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("B_n needs n >= 1".into()));
        }
        Ok(BrandtIndexing { n })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn size(self) -> usize {
        (self.n as usize).pow(2) + 1
    }

    pub fn index_of(self, e: BrandtElement) -> Result<ElementId> {
        Ok(match e.check(self.n)? {
            BrandtElement::Zero => ElementId(0),
            BrandtElement::Pair(i, j) => ElementId(1 + (i - 1) * self.n + (j - 1)),
        })
    }

    pub fn element(self, id: ElementId) -> Result<BrandtElement> {
        let size = self.size();
        match id.index() {
            0 => Ok(BrandtElement::Zero),
            k if k < size => {
                let k = (k - 1) as u32;
                Ok(BrandtElement::Pair(k / self.n + 1, k % self.n + 1))
            }
            k => Err(Error::ElementOutOfRange { id: k, size }),
        }
    }

    /// Index of `(i,j)` with 1-based coordinates, unchecked.
    pub(crate) fn pair_index(self, i: u32, j: u32) -> usize {
        (1 + (i - 1) * self.n + (j - 1)) as usize
    }

    pub fn elements(self) -> impl Iterator<Item = BrandtElement> {
        let n = self.n;
        std::iter::once(BrandtElement::Zero)
            .chain((1..=n).flat_map(move |i| (1..=n).map(move |j| BrandtElement::Pair(i, j))))
    }
}

/// `B_n` as a labeled table.
pub fn build_brandt(n: u32) -> Result<SemigroupTable> {
    let indexing = BrandtIndexing::new(n)?;
    let elements: Vec<BrandtElement> = indexing.elements().collect();
    let table = SemigroupTable::from_fn(indexing.size(), |a, b| {
        let sum = brandt_add(elements[a], elements[b], n).expect("indexed elements are valid");
        indexing.index_of(sum).expect("sum is valid").index()
    })?;
    table.with_labels(elements.iter().map(ToString::to_string).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{idempotents, is_band, ValidationReport};
    use BrandtElement::{Pair, Zero};

    #[test]
    fn addition_examples() {
        assert_eq!(brandt_add(Pair(1, 2), Pair(2, 1), 2).unwrap(), Pair(1, 1));
        assert_eq!(brandt_add(Pair(1, 2), Pair(1, 2), 2).unwrap(), Zero);
        assert_eq!(brandt_add(Pair(1, 1), Zero, 2).unwrap(), Zero);
        assert_eq!(brandt_add(Zero, Pair(1, 1), 2).unwrap(), Zero);
        assert!(brandt_add(Pair(3, 1), Pair(1, 1), 2).is_err());
        assert!(brandt_add(Pair(0, 1), Zero, 2).is_err());
    }

    #[test]
    fn indexing_round_trip() {
        let idx = BrandtIndexing::new(3).unwrap();
        assert_eq!(idx.index_of(Zero).unwrap(), ElementId(0));
        assert_eq!(idx.index_of(Pair(1, 1)).unwrap(), ElementId(1));
        assert_eq!(idx.index_of(Pair(2, 3)).unwrap(), ElementId(6));
        for (k, e) in idx.elements().enumerate() {
            assert_eq!(idx.index_of(e).unwrap().index(), k);
            assert_eq!(idx.element(ElementId(k as u32)).unwrap(), e);
        }
        assert!(idx.element(ElementId(10)).is_err());
    }

    #[test]
    fn small_tables() {
        let b1 = build_brandt(1).unwrap();
        assert_eq!(b1.size(), 2);
        assert_eq!(idempotents(&b1).len(), 2);

        let b2 = build_brandt(2).unwrap();
        assert_eq!(b2.size(), 5);
        let idem: Vec<String> = b2.labels_of(&idempotents(&b2));
        assert_eq!(idem, ["theta", "(1,1)", "(2,2)"]);
        assert!(!is_band(&b2));

        let b3 = build_brandt(3).unwrap();
        assert_eq!(b3.size(), 10);
        assert_eq!(b3.validate(), ValidationReport::Ok);
        assert_eq!(
            b3.labels_of(&idempotents(&b3)),
            ["theta", "(1,1)", "(2,2)", "(3,3)"]
        );
        assert!(build_brandt(0).is_err());
    }

    #[test]
    fn zero_is_two_sided() {
        for n in 1..=4 {
            let t = build_brandt(n).unwrap();
            assert_eq!(t.validate(), ValidationReport::Ok);
            assert_eq!(t.size(), (n * n + 1) as usize);
            assert_eq!(idempotents(&t).len(), n as usize + 1);
            for x in 0..t.size() {
                assert_eq!(t.mul(0, x), 0);
                assert_eq!(t.mul(x, 0), 0);
            }
        }
    }
}
