//! The top rank `d(ℓ)_n` and its fixed-point-free interpretation.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::element::{group_order, label_vectors, WreathElement};
use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::words::IDENTITY_LABEL;

/// Default cap on the number of elements a brute-force count may visit.
pub const DEFAULT_BUDGET: u128 = 20_000_000;

/// `d(ℓ)_n = Σ_{i=0}^{n} (−1)^i · n!/i! · ℓ^{n−i}`.
pub fn derangement_formula(labels: usize, n: usize) -> BigInt {
    let l = BigInt::from(labels);
    let mut total = BigInt::zero();
    for i in 0..=n {
        // n!/i! = (i+1)(i+2)…n
        let falling: BigInt = ((i + 1)..=n).map(BigInt::from).product();
        let term = falling * l.pow((n - i) as u32);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn check_budget(n: usize, group: &FiniteGroup, budget: u128) -> Result<()> {
    let required = group_order(n, group);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Number of `u ∈ G_n` fixing no point of `{1..n} × G`, by enumeration.
/// The permutations are split across worker threads.
pub fn fixed_point_free_count(group: &FiniteGroup, n: usize, budget: u128) -> Result<u128> {
    check_budget(n, group, budget)?;
    let labelings = label_vectors(n, group);
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    Ok(perms
        .par_iter()
        .map(|pi| {
            labelings
                .iter()
                .filter(|gs| {
                    let u = WreathElement {
                        pi: pi.clone(),
                        gs: gs.to_vec(),
                    };
                    !u.has_fixed_point(group)
                })
                .count() as u128
        })
        .sum())
}

/// Number of `(π, γ_1, …, γ_n) ∈ S_n × Γⁿ` with `γ_a ≠ e` whenever `π(a) = a`.
pub fn label_condition_count(labels: usize, n: usize) -> u128 {
    let labelings = crate::words::label_sequences(labels, n);
    Permutation::all(n)
        .map(|pi| {
            labelings
                .iter()
                .filter(|gs| {
                    (1..=n as u32).all(|a| !pi.fixes(a) || gs[a as usize - 1] != IDENTITY_LABEL)
                })
                .count() as u128
        })
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionCount {
    pub subset: Vec<u32>,
    /// `|T_{a_1} ∩ ⋯ ∩ T_{a_i}|` by enumeration
    pub enumerated: u128,
    /// `(n−i)! · ℓ^{n−i}`
    pub formula: u128,
}

impl IntersectionCount {
    pub fn holds(&self) -> bool {
        self.enumerated == self.formula
    }
}

/// Size of `⋂_{a ∈ subset} T_a`, where `T_a = {(π, γ) : π(a) = a, γ_a = e}`,
/// counted over `S_n × Γⁿ` and compared with `(n−i)! · ℓ^{n−i}`.
pub fn intersection_count(labels: usize, n: usize, subset: &[u32]) -> Result<IntersectionCount> {
    if subset.is_empty() {
        return Err(Error::Format("subset must be nonempty".into()));
    }
    if let Some(&bad) = subset.iter().find(|&&a| a == 0 || a as usize > n) {
        return Err(Error::LetterOutOfRange { letter: bad, n });
    }
    let mut members = subset.to_vec();
    members.sort_unstable();
    members.dedup();
    let labelings = crate::words::label_sequences(labels, n);
    let enumerated = Permutation::all(n)
        .map(|pi| {
            labelings
                .iter()
                .filter(|gs| {
                    members
                        .iter()
                        .all(|&a| pi.fixes(a) && gs[a as usize - 1] == IDENTITY_LABEL)
                })
                .count() as u128
        })
        .sum();
    let rest = n - members.len();
    let formula = (1..=rest as u128).product::<u128>() * (labels as u128).pow(rest as u32);
    Ok(IntersectionCount {
        subset: members,
        enumerated,
        formula,
    })
}

pub fn intersection_count_check(labels: usize, n: usize, subset: &[u32]) -> Result<bool> {
    Ok(intersection_count(labels, n, subset)?.holds())
}
