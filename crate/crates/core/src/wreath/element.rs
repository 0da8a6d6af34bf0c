use itertools::Itertools;

use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::words::LabeledWord;

/// `(π; g_1, …, g_n) ∈ S_n ⋉ Gⁿ`.
///
/// Products follow `(π; g)·(σ; h) = (πσ; a ↦ g_{σ(a)} h_a)`, the convention
/// under which `(π; g)·(a, γ) = (π(a), g_a γ)` is a left action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub pi: Permutation,
    pub gs: Vec<u32>,
}

impl WreathElement {
    pub fn new(pi: Permutation, gs: Vec<u32>) -> Result<Self> {
        if pi.degree() != gs.len() {
            return Err(Error::DegreeMismatch(pi.degree(), gs.len()));
        }
        Ok(WreathElement { pi, gs })
    }

    pub fn identity(n: usize) -> Self {
        WreathElement {
            pi: Permutation::identity(n),
            gs: vec![0; n],
        }
    }

    /// `(π; e, …, e)`.
    pub fn from_permutation(pi: Permutation) -> Self {
        let n = pi.degree();
        WreathElement { pi, gs: vec![0; n] }
    }

    pub fn degree(&self) -> usize {
        self.gs.len()
    }

    /// The label component `g_a`.
    pub fn g(&self, a: u32) -> u32 {
        self.gs[a as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.pi == Permutation::identity(self.degree()) && self.gs.iter().all(|&g| g == 0)
    }

    pub fn multiply(&self, other: &WreathElement, group: &FiniteGroup) -> Result<WreathElement> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let gs = (1..=self.degree() as u32)
            .map(|a| group.mul(self.g(other.pi.apply(a)), other.g(a)))
            .collect();
        Ok(WreathElement {
            pi: self.pi.compose(&other.pi),
            gs,
        })
    }

    /// `(π⁻¹; a ↦ g_{π⁻¹(a)}⁻¹)`.
    pub fn inverse(&self, group: &FiniteGroup) -> WreathElement {
        let pi_inv = self.pi.inverse();
        let gs = (1..=self.degree() as u32)
            .map(|a| group.inv(self.g(pi_inv.apply(a))))
            .collect();
        WreathElement { pi: pi_inv, gs }
    }

    /// `(π(a), g_a γ)`.
    pub fn act_on_point(&self, group: &FiniteGroup, (a, gamma): (u32, u32)) -> (u32, u32) {
        (self.pi.apply(a), group.mul(self.g(a), gamma))
    }

    /// `(π(a_1), …, π(a_r) | g_{a_1}γ_1, …, g_{a_r}γ_r)`.
    pub fn act_on_word(&self, group: &FiniteGroup, w: &LabeledWord) -> Result<LabeledWord> {
        if let Some(&bad) = w.letters().iter().find(|&&a| a as usize > self.degree()) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                n: self.degree(),
            });
        }
        Ok(w.map_entries(
            |a| self.pi.apply(a),
            |a, gamma| group.mul(self.gs[a - 1], gamma),
        ))
    }

    /// Whether some point of `{1..n} × G` is fixed.
    pub fn has_fixed_point(&self, group: &FiniteGroup) -> bool {
        (1..=self.degree() as u32)
            .cartesian_product(group.elements())
            .any(|p| self.act_on_point(group, p) == p)
    }
}

/// Every element of `G_n`, permutation-major.
pub fn elements(n: usize, group: &FiniteGroup) -> impl Iterator<Item = WreathElement> + '_ {
    Permutation::all(n).flat_map(move |pi| {
        label_vectors(n, group)
            .into_iter()
            .map(move |gs| WreathElement { pi: pi.clone(), gs })
    })
}

pub(crate) fn label_vectors(n: usize, group: &FiniteGroup) -> Vec<Vec<u32>> {
    crate::words::label_sequences(group.order(), n)
}

/// `n! · |G|ⁿ`.
pub fn group_order(n: usize, group: &FiniteGroup) -> u128 {
    (1..=n as u128).product::<u128>() * (group.order() as u128).pow(n as u32)
}
