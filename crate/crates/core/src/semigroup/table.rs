use crate::error::{Error, Result};
use crate::par::{self, Execution};

use super::set::{ElementId, ElementSet};

/// A finite magma given by its full Cayley table.
///
/// Construction guarantees a square table whose entries are in range;
/// associativity is checked separately by [`SemigroupTable::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    size: usize,
    products: Vec<u32>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationReport {
    Ok,
    /// First triple `(a, b, c)` in lexicographic order with `(ab)c != a(bc)`.
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, ValidationReport::Ok)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            ValidationReport::Ok => Ok(()),
            ValidationReport::NotAssociative { a, b, c } => Err(Error::NotAssociative { a, b, c }),
        }
    }
}

impl SemigroupTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidInput(
                "table must have at least one element".into(),
            ));
        }
        let mut products = Vec::with_capacity(size * size);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidInput(format!(
                    "row {a} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for &p in row {
                if p >= size {
                    return Err(Error::ElementOutOfRange { id: p, size });
                }
                products.push(p as u32);
            }
        }
        Ok(SemigroupTable {
            size,
            products,
            labels: None,
        })
    }

    /// Builds the table from a product function. Entries must be `< size`.
    pub fn from_fn<F: Fn(usize, usize) -> usize>(size: usize, product: F) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidInput(
                "table must have at least one element".into(),
            ));
        }
        let mut products = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                let p = product(a, b);
                if p >= size {
                    return Err(Error::ElementOutOfRange { id: p, size });
                }
                products.push(p as u32);
            }
        }
        Ok(SemigroupTable {
            size,
            products,
            labels: None,
        })
    }

    pub(crate) fn from_flat(size: usize, products: Vec<u32>) -> Self {
        debug_assert_eq!(products.len(), size * size);
        SemigroupTable {
            size,
            products,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::InvalidInput(format!(
                "{} labels for a table of size {}",
                labels.len(),
                self.size
            )));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
        {
            return Err(Error::InvalidInput(format!(
                "label {bad:?} is empty or has whitespace"
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element, falling back to its index.
    pub fn label(&self, id: usize) -> String {
        match &self.labels {
            Some(labels) => labels[id].clone(),
            None => id.to_string(),
        }
    }

    pub fn labels_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|i| self.label(i)).collect()
    }

    pub fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.products[a.index() * self.size + b.index()])
    }

    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.products[a * self.size + b] as usize
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.products[a * self.size..(a + 1) * self.size]
    }

    pub fn check_id(&self, id: usize) -> Result<()> {
        if id < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                id,
                size: self.size,
            })
        }
    }

    /// Checked construction of an [`ElementSet`] over this table.
    pub fn set_of<I: IntoIterator<Item = usize>>(&self, ids: I) -> Result<ElementSet> {
        let mut set = ElementSet::empty(self.size);
        for id in ids {
            self.check_id(id)?;
            set.insert(id);
        }
        Ok(set)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with(Execution::default())
    }

    pub fn validate_with(&self, execution: Execution) -> ValidationReport {
        let n = self.size;
        let found = par::find_map_first(n, execution, |a| {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        match found {
            None => ValidationReport::Ok,
            Some((a, b, c)) => ValidationReport::NotAssociative { a, b, c },
        }
    }

    /// The subtable on a subset closed under the product. Element `k` of the
    /// result is the `k`-th member of `subset` in ascending order.
    pub fn restrict(&self, subset: &ElementSet) -> Result<SemigroupTable> {
        if subset.universe() != self.size {
            return Err(Error::InvalidInput(
                "subset belongs to a different table".into(),
            ));
        }
        let members = subset.to_vec();
        if members.is_empty() {
            return Err(Error::InvalidInput(
                "cannot restrict to the empty set".into(),
            ));
        }
        let mut position = vec![usize::MAX; self.size];
        for (k, &m) in members.iter().enumerate() {
            position[m] = k;
        }
        let mut products = Vec::with_capacity(members.len() * members.len());
        for &a in &members {
            for &b in &members {
                let p = position[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "subset not closed: {}*{} = {}",
                        self.label(a),
                        self.label(b),
                        self.label(self.mul(a, b))
                    )));
                }
                products.push(p as u32);
            }
        }
        let mut table = SemigroupTable::from_flat(members.len(), products);
        if let Some(labels) = &self.labels {
            table.labels = Some(members.iter().map(|&m| labels[m].clone()).collect());
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_element_is_valid() {
        let t = SemigroupTable::from_rows(&[vec![0]]).unwrap();
        assert_eq!(t.validate(), ValidationReport::Ok);
    }

    #[test]
    fn swap_table_reports_first_triple() {
        // 00 -> 1, 11 -> 0, mixed -> 0
        let t = SemigroupTable::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        // brute-force oracle over all 8 triples
        let mut first = None;
        'outer: for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)) {
                        first = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        let (a, b, c) = first.expect("table is non-associative");
        assert_eq!((a, b, c), (0, 0, 1));
        for mode in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(
                t.validate_with(mode),
                ValidationReport::NotAssociative { a, b, c }
            );
        }
    }

    #[test]
    fn out_of_range_entry_rejected() {
        let err = SemigroupTable::from_rows(&[vec![0, 2], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::ElementOutOfRange { id: 2, size: 2 }));
        assert!(SemigroupTable::from_rows(&[vec![0, 1], vec![0]]).is_err());
        assert!(SemigroupTable::from_rows(&[]).is_err());
    }

    #[test]
    fn restrict_requires_closure() {
        // {0,1} with 0 absorbing, 1*1 = 1; element 2 maps 1*2 -> 2
        let t = SemigroupTable::from_rows(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 0]]).unwrap();
        let sub = t.restrict(&ElementSet::from_indices(3, [0, 1])).unwrap();
        assert_eq!(sub.size(), 2);
        assert_eq!(sub.row(1), &[0, 1]);
        assert!(t.restrict(&ElementSet::from_indices(3, [1, 2])).is_err());
    }
}
