//! Integral homology through exact Smith normal forms.

mod basis;
mod matrix;
mod smith;
mod sparse_elim;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use basis::{HomologyBasis, HomologyCoordinates};
pub use matrix::{DenseIntMatrix, SparseIntMatrix};
pub use smith::{smith_dense, smith_normal_form, SmithForm, Transforms};

use crate::complex::{ChainComplex, IntValue};
use crate::error::{Error, Result};

/// `ℤ^free_rank ⊕ ⨁ ℤ/t_i` with `t_1 | t_2 | …`, every `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            free_rank: usize,
            torsion: Vec<IntValue>,
        }
        Repr {
            free_rank: self.free_rank,
            torsion: self.torsion.iter().cloned().map(IntValue).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            free_rank: usize,
            torsion: Vec<IntValue>,
        }
        let r = Repr::deserialize(d)?;
        Ok(HomologyGroup {
            free_rank: r.free_rank,
            torsion: r.torsion.into_iter().map(|t| t.0).collect(),
        })
    }
}

/// Smith forms (without transforms) of every boundary map of `c`, indexed
/// from the bottom degree. Degrees are reduced concurrently.
pub fn boundary_smith_forms(c: &ChainComplex) -> Vec<SmithForm> {
    let degrees: Vec<usize> = c.degrees().collect();
    degrees
        .par_iter()
        .map(|&r| smith_normal_form(c.boundary(r).expect("degree in range"), false))
        .collect()
}

/// `H_r` from precomputed boundary forms (`forms[k]` belongs to degree
/// `bottom + k`).
pub fn homology_from_forms(
    c: &ChainComplex,
    forms: &[SmithForm],
    r: usize,
) -> Result<HomologyGroup> {
    check_degree(c, r)?;
    assert_eq!(
        forms.len(),
        c.degrees().count(),
        "one Smith form per degree"
    );
    let k = r - c.bottom_degree();
    let outgoing = &forms[k];
    let incoming = forms.get(k + 1);
    Ok(assemble(c.rank_of(r), outgoing, incoming))
}

fn assemble(dim: usize, outgoing: &SmithForm, incoming: Option<&SmithForm>) -> HomologyGroup {
    let in_rank = incoming.map_or(0, SmithForm::rank);
    HomologyGroup {
        free_rank: dim - outgoing.rank() - in_rank,
        torsion: incoming.map(SmithForm::torsion).unwrap_or_default(),
    }
}

fn check_degree(c: &ChainComplex, r: usize) -> Result<()> {
    if c.degrees().contains(&r) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange {
            degree: r as i64,
            low: c.bottom_degree() as i64,
            high: c.top_degree() as i64,
        })
    }
}

/// `H_r = ker D_r / im D_{r+1}`.
pub fn homology_at(c: &ChainComplex, r: usize) -> Result<HomologyGroup> {
    check_degree(c, r)?;
    let outgoing = smith_normal_form(c.boundary(r).expect("checked"), false);
    let incoming = c.boundary(r + 1).map(|d| smith_normal_form(d, false));
    Ok(assemble(c.rank_of(r), &outgoing, incoming.as_ref()))
}

/// Homology in every degree of `c`, bottom first.
pub fn betti_table(c: &ChainComplex) -> Vec<HomologyGroup> {
    betti_table_from_forms(c, &boundary_smith_forms(c))
}

pub fn betti_table_from_forms(c: &ChainComplex, forms: &[SmithForm]) -> Vec<HomologyGroup> {
    c.degrees()
        .map(|r| homology_from_forms(c, forms, r).expect("degree in range"))
        .collect()
}

/// `Σ_r (−1)^r · rank C_r`.
pub fn euler_characteristic(c: &ChainComplex) -> i64 {
    c.euler_characteristic()
}

/// `Σ_r (−1)^r · free_rank H_r` for a table starting at `bottom`.
pub fn homology_euler_characteristic(bottom: usize, table: &[HomologyGroup]) -> i64 {
    table
        .iter()
        .enumerate()
        .map(|(k, h)| {
            if (bottom + k).is_multiple_of(2) {
                h.free_rank as i64
            } else {
                -(h.free_rank as i64)
            }
        })
        .sum()
}

pub(crate) fn is_unit(x: &BigInt) -> bool {
    x.magnitude().is_one()
}
