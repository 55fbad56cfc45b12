//! Independent enumeration of `End(B_n)` by backtracking over images.
//!
//! Elements of `B_n` are assigned images in index order. After each choice,
//! the law `f(x+y) = f(x)+f(y)` is propagated over all assigned pairs: an
//! unassigned `x+y` gets its forced value, an assigned one is checked.

use crate::brandt::build_brandt;
use crate::error::{Error, Result};
use crate::semigroup::SemigroupTable;

use super::{is_homomorphism, Endomorphism};

pub const ORACLE_MAX_N: u32 = 3;

const UNSET: u32 = u32::MAX;

pub fn enumerate_endomorphisms_oracle(n: u32) -> Result<Vec<Endomorphism>> {
    if n == 0 {
        return Err(Error::InvalidInput("End(B_n) needs n >= 1".into()));
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Resource(format!(
            "oracle enumeration is limited to n <= {ORACLE_MAX_N}"
        )));
    }
    let table = build_brandt(n)?;
    let mut search = Search {
        table: &table,
        image: vec![UNSET; table.size()],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.descend(0);
    let mut maps = search
        .found
        .into_iter()
        .map(|image| Endomorphism::from_image(n, image))
        .collect::<Result<Vec<_>>>()?;
    maps.sort_by_key(Endomorphism::canonical_key);
    Ok(maps)
}

struct Search<'a> {
    table: &'a SemigroupTable,
    image: Vec<u32>,
    trail: Vec<usize>,
    found: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn descend(&mut self, from: usize) {
        let size = self.table.size();
        let Some(next) = (from..size).find(|&x| self.image[x] == UNSET) else {
            debug_assert!(is_homomorphism(self.table, &self.image));
            self.found.push(self.image.clone());
            return;
        };
        for value in 0..size as u32 {
            let mark = self.trail.len();
            self.assign(next, value);
            if self.propagate() {
                self.descend(next + 1);
            }
            self.undo(mark);
        }
    }

    fn assign(&mut self, x: usize, value: u32) {
        self.image[x] = value;
        self.trail.push(x);
    }

    fn undo(&mut self, mark: usize) {
        for x in self.trail.drain(mark..) {
            self.image[x] = UNSET;
        }
    }

    /// Fixed point of forced assignments; `false` on a contradiction.
    fn propagate(&mut self) -> bool {
        let size = self.table.size();
        loop {
            let mut changed = false;
            for x in 0..size {
                let fx = self.image[x];
                if fx == UNSET {
                    continue;
                }
                for y in 0..size {
                    let fy = self.image[y];
                    if fy == UNSET {
                        continue;
                    }
                    let forced = self.table.mul(fx as usize, fy as usize) as u32;
                    let z = self.table.mul(x, y);
                    match self.image[z] {
                        UNSET => {
                            self.assign(z, forced);
                            changed = true;
                        }
                        fz if fz != forced => return false,
                        _ => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::EndoTag;

    /// Plain enumeration of every self-map of B_n.
    fn brute_force(n: u32) -> Vec<Vec<u32>> {
        let table = build_brandt(n).unwrap();
        let size = table.size();
        let total = size.pow(size as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let image: Vec<u32> = (0..size)
                .map(|_| {
                    let v = (c % size) as u32;
                    c /= size;
                    v
                })
                .collect();
            if is_homomorphism(&table, &image) {
                out.push(image);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=2 {
            let mut oracle: Vec<Vec<u32>> = enumerate_endomorphisms_oracle(n)
                .unwrap()
                .into_iter()
                .map(|f| f.image().to_vec())
                .collect();
            oracle.sort();
            assert_eq!(oracle, brute_force(n));
        }
        assert_eq!(brute_force(1).len(), 3);
        assert_eq!(brute_force(2).len(), 5);
    }

    #[test]
    fn end_b1_is_identity_and_two_constants() {
        let maps = enumerate_endomorphisms_oracle(1).unwrap();
        let tags: Vec<&str> = maps.iter().map(|f| f.tag().kind()).collect();
        assert_eq!(tags, ["automorphism", "nonzero-constant", "zero-constant"]);
        assert_eq!(maps[1].tag(), &EndoTag::NonzeroConstant(1));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate_endomorphisms_oracle(4),
            Err(Error::Resource(_))
        ));
        assert!(enumerate_endomorphisms_oracle(0).is_err());
    }
}
