//! Endomorphisms of `B_n` and the monoid `End(B_n)` under composition.
//!
//! Maps act on the right: `fg` applies `f` first, then `g`. Every
//! endomorphism is either an automorphism `φ_σ: (i,j) ↦ (iσ, jσ)`, the zero
//! constant `ξ_θ`, or a constant `ξ_(i,i)` onto a nonzero idempotent.

mod oracle;
mod perm;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::brandt::{build_brandt, BrandtElement, BrandtIndexing};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::semigroup::{ElementId, ElementSet, SemigroupTable};

pub use oracle::{enumerate_endomorphisms_oracle, ORACLE_MAX_N};
pub use perm::{factorial, Permutation};

/// Largest `n` for which the structural enumeration builds a table by default.
pub const DEFAULT_MAX_N: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EndoTag {
    Automorphism(Permutation),
    ZeroConstant,
    /// Constant onto `(i,i)`, 1-based.
    NonzeroConstant(u32),
}

impl EndoTag {
    pub fn kind(&self) -> &'static str {
        match self {
            EndoTag::Automorphism(_) => "automorphism",
            EndoTag::ZeroConstant => "zero-constant",
            EndoTag::NonzeroConstant(_) => "nonzero-constant",
        }
    }

    pub fn is_automorphism(&self) -> bool {
        matches!(self, EndoTag::Automorphism(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, EndoTag::ZeroConstant)
    }

    pub fn is_nonzero_constant(&self) -> bool {
        matches!(self, EndoTag::NonzeroConstant(_))
    }
}

/// A self-map of `B_n` stored as its image vector over `B_n`'s element ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    n: u32,
    image: Vec<u32>,
    tag: EndoTag,
}

impl Endomorphism {
    /// Checks the homomorphism law and classifies the map.
    pub fn from_image(n: u32, image: Vec<u32>) -> Result<Self> {
        let tag = classify_image(n, &image)?;
        Ok(Endomorphism { n, image, tag })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn tag(&self) -> &EndoTag {
        &self.tag
    }

    /// `(x)f`.
    pub fn apply(&self, x: ElementId) -> ElementId {
        ElementId(self.image[x.index()])
    }

    pub fn label(&self) -> String {
        match &self.tag {
            EndoTag::Automorphism(p) => format!("phi{p}"),
            EndoTag::ZeroConstant => "xi_theta".to_string(),
            EndoTag::NonzeroConstant(i) => format!("xi({i},{i})"),
        }
    }

    /// Position in the canonical order: automorphisms by image array, then
    /// `ξ_(1,1)..ξ_(n,n)`, then `ξ_θ`.
    pub fn canonical_key(&self) -> (u8, Vec<u32>) {
        match &self.tag {
            EndoTag::Automorphism(p) => (0, p.image().to_vec()),
            EndoTag::NonzeroConstant(i) => (1, vec![*i]),
            EndoTag::ZeroConstant => (2, Vec::new()),
        }
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `φ_σ`: `(i,j) ↦ (iσ, jσ)`, `θ ↦ θ`.
pub fn phi_of_perm(sigma: &Permutation) -> Endomorphism {
    let n = sigma.degree();
    let idx = BrandtIndexing::new(n).expect("permutations have degree >= 1");
    let image = idx
        .elements()
        .map(|e| match e {
            BrandtElement::Zero => 0,
            BrandtElement::Pair(i, j) => idx.pair_index(sigma.apply(i), sigma.apply(j)) as u32,
        })
        .collect();
    Endomorphism {
        n,
        image,
        tag: EndoTag::Automorphism(sigma.clone()),
    }
}

/// `ξ_α` for an idempotent `α`; constants onto `(i,j)` with `i != j` are not
/// homomorphisms and are rejected.
pub fn constant_map(target: BrandtElement, n: u32) -> Result<Endomorphism> {
    let idx = BrandtIndexing::new(n)?;
    let value = idx.index_of(target)?.0;
    let tag = match target {
        BrandtElement::Zero => EndoTag::ZeroConstant,
        BrandtElement::Pair(i, j) if i == j => EndoTag::NonzeroConstant(i),
        BrandtElement::Pair(i, j) => {
            return Err(Error::InvalidInput(format!(
                "constant map onto ({i},{j}) is not an endomorphism"
            )))
        }
    };
    Ok(Endomorphism {
        n,
        image: vec![value; idx.size()],
        tag,
    })
}

/// `fg`: `(x)(fg) = ((x)f)g`.
pub fn compose(f: &Endomorphism, g: &Endomorphism) -> Result<Endomorphism> {
    if f.n != g.n {
        return Err(Error::InvalidInput(format!(
            "cannot compose endomorphisms of B_{} and B_{}",
            f.n, g.n
        )));
    }
    let image: Vec<u32> = f.image.iter().map(|&x| g.image[x as usize]).collect();
    let tag = shape_of(f.n, &image).expect("composite of endomorphisms is an endomorphism");
    Ok(Endomorphism { n: f.n, image, tag })
}

/// The trichotomy tag of a homomorphism, or an error if the image breaks the
/// homomorphism law.
pub fn classify(f: &Endomorphism) -> Result<EndoTag> {
    classify_image(f.n, &f.image)
}

fn classify_image(n: u32, image: &[u32]) -> Result<EndoTag> {
    let table = build_brandt(n)?;
    if image.len() != table.size() {
        return Err(Error::InvalidInput(format!(
            "image has {} entries, B_{n} has {}",
            image.len(),
            table.size()
        )));
    }
    if let Some(&bad) = image.iter().find(|&&v| v as usize >= table.size()) {
        return Err(Error::ElementOutOfRange {
            id: bad as usize,
            size: table.size(),
        });
    }
    if !is_homomorphism(&table, image) {
        return Err(Error::InvalidInput(
            "map violates f(x+y) = f(x)+f(y)".into(),
        ));
    }
    shape_of(n, image).ok_or_else(|| {
        Error::InvalidInput(
            "homomorphism is neither an automorphism nor an idempotent constant".into(),
        )
    })
}

pub(crate) fn is_homomorphism(brandt: &SemigroupTable, image: &[u32]) -> bool {
    let size = brandt.size();
    (0..size).all(|x| {
        (0..size).all(|y| {
            let lhs = image[brandt.mul(x, y)] as usize;
            lhs == brandt.mul(image[x] as usize, image[y] as usize)
        })
    })
}

/// Recognizes the three endomorphism shapes without checking the
/// homomorphism law.
fn shape_of(n: u32, image: &[u32]) -> Option<EndoTag> {
    let idx = BrandtIndexing::new(n).ok()?;
    let first = image[0];
    if image.iter().all(|&v| v == first) {
        return match idx.element(ElementId(first)).ok()? {
            BrandtElement::Zero => Some(EndoTag::ZeroConstant),
            BrandtElement::Pair(i, j) if i == j => Some(EndoTag::NonzeroConstant(i)),
            BrandtElement::Pair(..) => None,
        };
    }
    if first != 0 {
        return None;
    }
    let mut sigma = Vec::with_capacity(n as usize);
    for i in 1..=n {
        match idx.element(ElementId(image[idx.pair_index(i, i)])).ok()? {
            BrandtElement::Pair(a, b) if a == b => sigma.push(a),
            _ => return None,
        }
    }
    let sigma = Permutation::new(sigma).ok()?;
    let matches = (1..=n).all(|i| {
        (1..=n).all(|j| {
            image[idx.pair_index(i, j)] as usize == idx.pair_index(sigma.apply(i), sigma.apply(j))
        })
    });
    matches.then_some(EndoTag::Automorphism(sigma))
}

/// `End(B_n)` with its composition table in canonical element order.
#[derive(Debug, Clone)]
pub struct EndoMonoid {
    n: u32,
    elements: Vec<Endomorphism>,
    index: HashMap<Vec<u32>, u32>,
    table: SemigroupTable,
}

pub fn enumerate_endomorphisms_structural(n: u32) -> Result<EndoMonoid> {
    enumerate_structural_with(n, DEFAULT_MAX_N, Execution::default())
}

/// Structural enumeration with an explicit factorial budget `max_n`.
pub fn enumerate_structural_with(n: u32, max_n: u32, execution: Execution) -> Result<EndoMonoid> {
    if n == 0 {
        return Err(Error::InvalidInput("End(B_n) needs n >= 1".into()));
    }
    if n > max_n {
        return Err(Error::Resource(format!(
            "n = {n} exceeds the factorial budget n <= {max_n}"
        )));
    }
    let mut elements: Vec<Endomorphism> = Permutation::all(n).iter().map(phi_of_perm).collect();
    for i in 1..=n {
        elements.push(constant_map(BrandtElement::Pair(i, i), n)?);
    }
    elements.push(constant_map(BrandtElement::Zero, n)?);

    let index: HashMap<Vec<u32>, u32> = elements
        .iter()
        .enumerate()
        .map(|(k, e)| (e.image.clone(), k as u32))
        .collect();
    let size = elements.len();
    let rows = par::map_indices(size, execution, |a| {
        let f = &elements[a].image;
        let mut composite = vec![0u32; f.len()];
        (0..size)
            .map(|b| {
                let g = &elements[b].image;
                for (slot, &x) in composite.iter_mut().zip(f) {
                    *slot = g[x as usize];
                }
                index[&composite]
            })
            .collect::<Vec<u32>>()
    });
    let table = SemigroupTable::from_flat(size, rows.concat())
        .with_labels(elements.iter().map(Endomorphism::label).collect())?;
    table.validate_with(execution).into_result()?;
    Ok(EndoMonoid {
        n,
        elements,
        index,
        table,
    })
}

#[derive(Debug, Serialize)]
pub struct EndoSidecar {
    pub n: u32,
    pub size: usize,
    pub elements: Vec<SidecarElement>,
}

#[derive(Debug, Serialize)]
pub struct SidecarElement {
    pub index: usize,
    pub label: String,
    pub tag: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    pub image: Vec<u32>,
}

impl EndoMonoid {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Endomorphism] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Endomorphism {
        &self.elements[id]
    }

    pub fn table(&self) -> &SemigroupTable {
        &self.table
    }

    pub fn automorphism_count(&self) -> usize {
        factorial(self.n)
    }

    pub fn index_of(&self, f: &Endomorphism) -> Option<usize> {
        (f.n == self.n)
            .then(|| self.index.get(&f.image).map(|&k| k as usize))
            .flatten()
    }

    pub fn automorphism(&self, sigma: &Permutation) -> Result<usize> {
        if sigma.degree() != self.n {
            return Err(Error::InvalidInput(format!(
                "{sigma} is not in S_{}",
                self.n
            )));
        }
        Ok(self
            .index_of(&phi_of_perm(sigma))
            .expect("every automorphism is enumerated"))
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `ξ_(i,i)`.
    pub fn nonzero_constant(&self, i: u32) -> Result<usize> {
        if i == 0 || i > self.n {
            return Err(Error::InvalidInput(format!(
                "({i},{i}) is not in B_{}",
                self.n
            )));
        }
        Ok(self.automorphism_count() + i as usize - 1)
    }

    /// Index of `ξ_θ`.
    pub fn zero(&self) -> usize {
        self.len() - 1
    }

    pub fn automorphisms(&self) -> ElementSet {
        ElementSet::from_indices(self.len(), 0..self.automorphism_count())
    }

    pub fn constants(&self) -> ElementSet {
        ElementSet::from_indices(self.len(), self.automorphism_count()..self.len())
    }

    /// The subtable on `Aut(B_n)`, isomorphic to `S_n`.
    pub fn automorphism_subtable(&self) -> SemigroupTable {
        self.table
            .restrict(&self.automorphisms())
            .expect("Aut(B_n) is closed under composition")
    }

    pub fn sidecar(&self) -> EndoSidecar {
        let idx = BrandtIndexing::new(self.n).expect("n >= 1");
        EndoSidecar {
            n: self.n,
            size: self.len(),
            elements: self
                .elements
                .iter()
                .enumerate()
                .map(|(k, e)| SidecarElement {
                    index: k,
                    label: e.label(),
                    tag: e.tag.kind(),
                    permutation: match &e.tag {
                        EndoTag::Automorphism(p) => Some(p.image().to_vec()),
                        _ => None,
                    },
                    constant: match &e.tag {
                        EndoTag::Automorphism(_) => None,
                        _ => Some(
                            idx.element(ElementId(e.image[0]))
                                .expect("image is in range")
                                .to_string(),
                        ),
                    },
                    image: e.image.clone(),
                })
                .collect(),
        }
    }
}
