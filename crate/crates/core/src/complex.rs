//! The chain complex of labeled injective words.
//!
//! Degree `r` is free on the words of length `r`; the differential is the
//! alternating sum of faces, `d(w) = Σ_{i=1}^{r} (−1)^{i−1} d_{i−1}(w)`.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::SparseIntMatrix;
use crate::words::{words_over, Alphabet, LabeledWord};

/// Where a complex came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Words over the given letters with `labels` labels.
    Letters { letters: Vec<u32>, labels: usize },
    /// Obtained from another complex (subcomplex, quotient, block).
    Derived { description: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    origin: Origin,
    bottom: usize,
    bases: Vec<Vec<LabeledWord>>,
    /// `boundaries[k]` maps degree `bottom + k` to `bottom + k − 1`; the
    /// first one has no rows.
    boundaries: Vec<SparseIntMatrix>,
    index: Vec<HashMap<LabeledWord, usize>>,
}

/// `C_*(A)` for `A = {1, …, n}`.
pub fn build_complex(alpha: Alphabet) -> ChainComplex {
    complex_on_letters(&alpha.letters(), alpha.labels)
}

/// `C_*(A ∖ removed)`, keeping the original letter names.
pub fn restrict_complex(alpha: Alphabet, removed: &[u32]) -> Result<ChainComplex> {
    if let Some(&bad) = removed.iter().find(|&&a| a == 0 || a as usize > alpha.n) {
        return Err(Error::LetterOutOfRange {
            letter: bad,
            n: alpha.n,
        });
    }
    let letters: Vec<u32> = alpha
        .letters()
        .into_iter()
        .filter(|a| !removed.contains(a))
        .collect();
    Ok(complex_on_letters(&letters, alpha.labels))
}

/// The complex on an arbitrary finite letter set.
pub fn complex_on_letters(letters: &[u32], labels: usize) -> ChainComplex {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let bases: Vec<Vec<LabeledWord>> = (0..=sorted.len())
        .map(|r| words_over(&sorted, labels, r))
        .collect();
    let index: Vec<HashMap<LabeledWord, usize>> = bases.iter().map(|b| index_basis(b)).collect();
    let mut boundaries = vec![SparseIntMatrix::zeros(0, 1)];
    for r in 1..bases.len() {
        let columns = bases[r]
            .iter()
            .map(|w| {
                w.faces()
                    .enumerate()
                    .map(|(i, face)| {
                        let sign = if i % 2 == 0 {
                            BigInt::one()
                        } else {
                            -BigInt::one()
                        };
                        (index[r - 1][&face], sign)
                    })
                    .collect()
            })
            .collect();
        boundaries.push(
            SparseIntMatrix::from_columns(bases[r - 1].len(), columns)
                .expect("faces are basis words"),
        );
    }
    ChainComplex {
        origin: Origin::Letters {
            letters: sorted,
            labels,
        },
        bottom: 0,
        bases,
        boundaries,
        index,
    }
}

fn index_basis(basis: &[LabeledWord]) -> HashMap<LabeledWord, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect()
}

impl ChainComplex {
    /// Assembles a complex from explicit data, checking matrix shapes.
    pub fn from_parts(
        origin: Origin,
        bottom: usize,
        bases: Vec<Vec<LabeledWord>>,
        boundaries: Vec<SparseIntMatrix>,
    ) -> Result<Self> {
        if bases.is_empty() || bases.len() != boundaries.len() {
            return Err(Error::Format("need one boundary matrix per degree".into()));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let rows = if k == 0 { 0 } else { bases[k - 1].len() };
            if d.cols() != bases[k].len() || d.rows() != rows {
                return Err(Error::Format(format!(
                    "boundary out of degree {} is {}x{}, expected {}x{}",
                    bottom + k,
                    d.rows(),
                    d.cols(),
                    rows,
                    bases[k].len()
                )));
            }
        }
        let index = bases.iter().map(|b| index_basis(b)).collect();
        Ok(ChainComplex {
            origin,
            bottom,
            bases,
            boundaries,
            index,
        })
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn bottom_degree(&self) -> usize {
        self.bottom
    }

    pub fn top_degree(&self) -> usize {
        self.bottom + self.bases.len() - 1
    }

    pub fn degrees(&self) -> RangeInclusive<usize> {
        self.bottom..=self.top_degree()
    }

    fn slot(&self, degree: usize) -> Option<usize> {
        degree
            .checked_sub(self.bottom)
            .filter(|&k| k < self.bases.len())
    }

    /// Basis of a degree; empty outside the degree range.
    pub fn basis(&self, degree: usize) -> &[LabeledWord] {
        self.slot(degree).map_or(&[], |k| &self.bases[k])
    }

    pub fn rank_of(&self, degree: usize) -> usize {
        self.basis(degree).len()
    }

    pub fn index_of(&self, degree: usize, w: &LabeledWord) -> Option<usize> {
        self.slot(degree)
            .and_then(|k| self.index[k].get(w).copied())
    }

    /// `D_r : C_r → C_{r−1}`, for `r` in the degree range.
    pub fn boundary(&self, degree: usize) -> Option<&SparseIntMatrix> {
        self.slot(degree).map(|k| &self.boundaries[k])
    }

    pub fn boundary_mut(&mut self, degree: usize) -> Option<&mut SparseIntMatrix> {
        self.slot(degree).map(|k| &mut self.boundaries[k])
    }

    /// `D_r`, or the zero map of the right shape outside the range.
    pub fn boundary_or_zero(&self, degree: usize) -> SparseIntMatrix {
        match self.boundary(degree) {
            Some(d) => d.clone(),
            None => SparseIntMatrix::zeros(
                degree.checked_sub(1).map_or(0, |r| self.rank_of(r)),
                self.rank_of(degree),
            ),
        }
    }

    /// Applies the differential to a chain given as coefficients over the
    /// basis of `degree`.
    pub fn apply_boundary(&self, degree: usize, chain: &[BigInt]) -> Vec<BigInt> {
        self.boundary_or_zero(degree).mul_vec(chain)
    }

    /// The same complex with every degree raised by `p`.
    pub fn suspension(&self, p: usize) -> ChainComplex {
        ChainComplex {
            bottom: self.bottom + p,
            ..self.clone()
        }
    }

    /// The complex spanned by the basis words satisfying `keep`.
    ///
    /// Restricting the differential is meaningful when the kept words span a
    /// subcomplex, or when the discarded ones do (then this is the quotient).
    /// The caller chooses which.
    pub fn induced(
        &self,
        description: impl Into<String>,
        keep: impl Fn(&LabeledWord) -> bool,
    ) -> ChainComplex {
        let kept: Vec<Vec<usize>> = self
            .bases
            .iter()
            .map(|b| (0..b.len()).filter(|&i| keep(&b[i])).collect())
            .collect();
        let bases: Vec<Vec<LabeledWord>> = self
            .bases
            .iter()
            .zip(&kept)
            .map(|(b, idx)| idx.iter().map(|&i| b[i].clone()).collect())
            .collect();
        let boundaries = (0..self.bases.len())
            .map(|k| {
                let rows: &[usize] = if k == 0 { &[] } else { &kept[k - 1] };
                self.boundaries[k].select(rows, &kept[k])
            })
            .collect();
        let index = bases.iter().map(|b| index_basis(b)).collect();
        ChainComplex {
            origin: Origin::Derived {
                description: description.into(),
            },
            bottom: self.bottom,
            bases,
            boundaries,
            index,
        }
    }

    /// `Σ_r (−1)^r · rank C_r`.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|r| {
                let size = self.rank_of(r) as i64;
                if r % 2 == 0 {
                    size
                } else {
                    -size
                }
            })
            .sum()
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            origin: self.origin.clone(),
            bottom_degree: self.bottom,
            degrees: self
                .degrees()
                .map(|r| {
                    let d = self.boundary(r).expect("degree in range");
                    DegreeDocument {
                        degree: r,
                        basis: self.basis(r).to_vec(),
                        boundary: d
                            .triplets()
                            .map(|(i, j, v)| (i, j, IntValue(v.clone())))
                            .collect(),
                    }
                })
                .collect(),
        }
    }

    pub fn from_document(doc: ComplexDocument) -> Result<Self> {
        for (k, deg) in doc.degrees.iter().enumerate() {
            if deg.degree != doc.bottom_degree + k {
                return Err(Error::Format(format!(
                    "degree {} listed out of order",
                    deg.degree
                )));
            }
        }
        let bases: Vec<Vec<LabeledWord>> = doc.degrees.iter().map(|d| d.basis.clone()).collect();
        let boundaries = doc
            .degrees
            .into_iter()
            .enumerate()
            .map(|(k, d)| {
                let rows = if k == 0 { 0 } else { bases[k - 1].len() };
                SparseIntMatrix::from_triplets(
                    rows,
                    bases[k].len(),
                    d.boundary.into_iter().map(|(i, j, v)| (i, j, v.0)),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::from_parts(doc.origin, doc.bottom_degree, bases, boundaries)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("complex documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ComplexDocument =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_document(doc)
    }
}

/// `D_{r−1} · D_r = 0` for every consecutive pair of degrees.
pub fn verify_dd_zero(c: &ChainComplex) -> bool {
    c.degrees().skip(1).all(|r| {
        let lower = c.boundary(r - 1).expect("in range");
        let upper = c.boundary(r).expect("in range");
        lower.mul(upper).map(|p| p.is_zero()).unwrap_or(false)
    })
}

/// JSON form of a complex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub origin: Origin,
    pub bottom_degree: usize,
    pub degrees: Vec<DegreeDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeDocument {
    pub degree: usize,
    pub basis: Vec<LabeledWord>,
    /// `(row, col, value)` of the map out of this degree.
    pub boundary: Vec<(usize, usize, IntValue)>,
}

/// An integer written as a JSON number when it fits in `i64`, otherwise as a
/// decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntValue(pub BigInt);

impl Serialize for IntValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for IntValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(IntValue(BigInt::from(v))),
            Raw::Text(t) => t.parse().map(IntValue).map_err(serde::de::Error::custom),
        }
    }
}
