//! Explicit homology bases.
//!
//! For a degree `r`, a Smith reduction `U·D_r·V = diag` exposes a basis of
//! `ker D_r` (the trailing columns of `V`). The image of `D_{r+1}` written in
//! that kernel basis is reduced once more; the second left transform adapts
//! the kernel basis so that it splits into boundary multiples and free
//! generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::DenseIntMatrix;
use super::smith::smith_dense;
use super::{is_unit, HomologyGroup};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct HomologyBasis {
    degree: usize,
    group: HomologyGroup,
    /// rank of `D_r`
    boundary_rank: usize,
    /// `V⁻¹` of the reduction of `D_r`
    v_inv: DenseIntMatrix,
    /// left transform adapting kernel coordinates to the image of `D_{r+1}`
    adapt: DenseIntMatrix,
    /// invariant factors of the image inside the kernel
    factors: Vec<BigInt>,
    free_generators: Vec<Vec<BigInt>>,
    torsion_generators: Vec<(BigInt, Vec<BigInt>)>,
}

/// Coordinates of a homology class: free part exactly, torsion part reduced
/// modulo each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyCoordinates {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl HomologyCoordinates {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }
}

impl HomologyBasis {
    pub fn compute(c: &ChainComplex, r: usize) -> Result<Self> {
        if !c.degrees().contains(&r) {
            return Err(Error::DegreeOutOfRange {
                degree: r as i64,
                low: c.bottom_degree() as i64,
                high: c.top_degree() as i64,
            });
        }
        let dim = c.rank_of(r);
        let outgoing = smith_dense(c.boundary_or_zero(r).to_dense(), true);
        let t = outgoing.transforms.as_ref().expect("tracked");
        let k = outgoing.rank();
        let kernel_dim = dim - k;

        let incoming = c.boundary_or_zero(r + 1).to_dense();
        let coords = t.v_inv.mul(&incoming);
        for i in 0..k {
            if coords.row(i).iter().any(|x| !x.is_zero()) {
                return Err(Error::Inconsistent(format!(
                    "image of D_{} leaves ker D_{r}",
                    r + 1
                )));
            }
        }
        let mut in_kernel = DenseIntMatrix::zeros(kernel_dim, incoming.cols());
        for i in 0..kernel_dim {
            for j in 0..incoming.cols() {
                in_kernel[(i, j)] = coords[(k + i, j)].clone();
            }
        }
        let image = smith_dense(in_kernel, true);
        let it = image.transforms.as_ref().expect("tracked");
        let s = image.rank();

        // adapted kernel basis: K · adapt⁻¹, K = trailing columns of V
        let kernel_cols: Vec<Vec<BigInt>> = (k..dim).map(|j| t.v.column(j)).collect();
        let kernel = DenseIntMatrix::from_columns(dim, &kernel_cols);
        let adapted = kernel.mul(&it.u_inv);
        let free_generators = (s..kernel_dim).map(|j| adapted.column(j)).collect();
        let torsion_generators = image
            .diag
            .iter()
            .enumerate()
            .filter(|(_, f)| !is_unit(f))
            .map(|(i, f)| (f.clone(), adapted.column(i)))
            .collect();

        Ok(HomologyBasis {
            degree: r,
            group: HomologyGroup {
                free_rank: kernel_dim - s,
                torsion: image.torsion(),
            },
            boundary_rank: k,
            v_inv: t.v_inv.clone(),
            adapt: it.u.clone(),
            factors: image.diag.clone(),
            free_generators,
            torsion_generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &HomologyGroup {
        &self.group
    }

    /// Cycles representing a basis of the free part.
    pub fn free_generators(&self) -> &[Vec<BigInt>] {
        &self.free_generators
    }

    pub fn torsion_generators(&self) -> &[(BigInt, Vec<BigInt>)] {
        &self.torsion_generators
    }

    fn kernel_coordinates(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        let full = self.v_inv.mul_vec(z);
        if full[..self.boundary_rank].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(full[self.boundary_rank..].to_vec())
    }

    pub fn is_cycle(&self, z: &[BigInt]) -> bool {
        self.kernel_coordinates(z).is_some()
    }

    /// Coordinates of the class of the cycle `z`.
    pub fn coordinates(&self, z: &[BigInt]) -> Result<HomologyCoordinates> {
        let kc = self.kernel_coordinates(z).ok_or_else(|| {
            Error::Inconsistent(format!("chain is not a cycle in degree {}", self.degree))
        })?;
        let adapted = self.adapt.mul_vec(&kc);
        let s = self.factors.len();
        let torsion = self
            .factors
            .iter()
            .zip(&adapted)
            .filter(|(f, _)| !is_unit(f))
            .map(|(f, x)| x.mod_floor(f))
            .collect();
        Ok(HomologyCoordinates {
            free: adapted[s..].to_vec(),
            torsion,
        })
    }

    /// Whether the cycle `z` is a boundary.
    pub fn is_boundary(&self, z: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(z)?.is_zero())
    }
}
