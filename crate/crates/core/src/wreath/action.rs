//! The action of `G_n` on generators: transitivity, stabilizers of the
//! basepoints `x_r`, and the element `t` that moves a face of `x_r` back to
//! `x_{r−1}`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::element::{elements, WreathElement};
use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::words::{words_over, LabeledWord, IDENTITY_LABEL};

/// `x_r = (n−r+1, …, n | e, …, e)`.
pub fn basepoint(n: usize, r: usize) -> Result<LabeledWord> {
    if r > n {
        return Err(Error::DegreeOutOfRange {
            degree: r as i64,
            low: 0,
            high: n as i64,
        });
    }
    let letters = ((n - r + 1) as u32..=n as u32).collect();
    LabeledWord::new(letters, vec![IDENTITY_LABEL; r])
}

/// Orbit of `w` under all of `G_n`.
pub fn orbit(group: &FiniteGroup, n: usize, w: &LabeledWord) -> Result<BTreeSet<LabeledWord>> {
    elements(n, group)
        .map(|u| u.act_on_word(group, w))
        .collect()
}

/// Whether `G_n` acts transitively on the degree-`r` generators, checked by
/// comparing the orbit of `x_r` with the full basis.
pub fn is_transitive(group: &FiniteGroup, n: usize, r: usize) -> Result<bool> {
    let orbit = orbit(group, n, &basepoint(n, r)?)?;
    let letters: Vec<u32> = (1..=n as u32).collect();
    Ok(orbit.into_iter().eq(words_over(&letters, group.order(), r)))
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizerReport {
    pub n: usize,
    pub r: usize,
    pub size: usize,
    /// `(n−r)! · |G|^{n−r}`
    pub expected_size: u128,
    /// The stabilizer is exactly `{(π; g) : π fixes n−r+1..n, g_a = e for a > n−r}`.
    pub is_standard_subgroup: bool,
    /// `|orbit(x_r)| · |Stab(x_r)| = |G_n|`
    pub orbit_stabilizer: bool,
    #[serde(skip)]
    pub elements: Vec<WreathElement>,
}

impl StabilizerReport {
    pub fn holds(&self) -> bool {
        self.is_standard_subgroup
            && self.orbit_stabilizer
            && self.size as u128 == self.expected_size
    }
}

/// `Stab(x_r)` by enumeration, compared with the copy of `G_{n−r}` acting on
/// the first `n − r` letters.
pub fn stabilizer(group: &FiniteGroup, n: usize, r: usize) -> Result<StabilizerReport> {
    let x = basepoint(n, r)?;
    let mut found = Vec::new();
    let mut orbit = BTreeSet::new();
    let mut total: u128 = 0;
    for u in elements(n, group) {
        let image = u.act_on_word(group, &x)?;
        if image == x {
            found.push(u);
        }
        orbit.insert(image);
        total += 1;
    }
    let moved = (n - r + 1) as u32..=n as u32;
    let standard = |u: &WreathElement| {
        moved
            .clone()
            .all(|a| u.pi.fixes(a) && u.g(a) == IDENTITY_LABEL)
    };
    let standard_count = elements(n, group).filter(|u| standard(u)).count();
    let is_standard_subgroup = found.iter().all(standard) && found.len() == standard_count;
    let expected_size = super::element::group_order(n - r, group);
    Ok(StabilizerReport {
        n,
        r,
        size: found.len(),
        expected_size,
        is_standard_subgroup,
        orbit_stabilizer: orbit.len() as u128 * found.len() as u128 == total,
        elements: found,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationReport {
    pub n: usize,
    pub r: usize,
    pub i: usize,
    /// `y = d_{i−1}(x_r)`
    pub y: LabeledWord,
    /// images of `μ = (n−r+1, …, n−r+i)`
    pub mu: Vec<u32>,
    /// `t·y = x_{r−1}`
    pub moves_face_to_basepoint: bool,
    /// `t u t⁻¹ = u` for every `u ∈ Stab(x_r)`
    pub centralizes_stabilizer: bool,
    pub stabilizer_size: usize,
    pub witness: Option<String>,
}

impl ConjugationReport {
    pub fn holds(&self) -> bool {
        self.moves_face_to_basepoint && self.centralizes_stabilizer
    }
}

/// Builds `y = d_{i−1}(x_r)` and `t = (μ; e, …, e)` with `μ` the cycle
/// `(n−r+1, …, n−r+i)`, then checks `t·y = x_{r−1}` and that `t` commutes
/// with the stabilizer of `x_r`.
pub fn conjugation_check(
    group: &FiniteGroup,
    n: usize,
    r: usize,
    i: usize,
) -> Result<ConjugationReport> {
    if !(1 <= i && i <= r && r <= n) {
        return Err(Error::Format(format!(
            "need 1 <= i <= r <= n, got i={i} r={r} n={n}"
        )));
    }
    let x = basepoint(n, r)?;
    let y = x.face(i - 1)?;
    let start = (n - r + 1) as u32;
    let cycle: Vec<u32> = (start..start + i as u32).collect();
    let t = WreathElement::from_permutation(Permutation::cycle(n, &cycle)?);
    let t_inv = t.inverse(group);

    let mut witness = None;
    let moves = t.act_on_word(group, &y)? == basepoint(n, r - 1)?;
    if !moves {
        witness = Some(format!("t·{y} = {}", t.act_on_word(group, &y)?));
    }
    let stab = stabilizer(group, n, r)?;
    let mut centralizes = true;
    for u in &stab.elements {
        let conj = t.multiply(u, group)?.multiply(&t_inv, group)?;
        if &conj != u {
            centralizes = false;
            witness.get_or_insert(format!("t u t⁻¹ ≠ u for u = {u:?}"));
            break;
        }
    }
    Ok(ConjugationReport {
        n,
        r,
        i,
        y,
        mu: t.pi.images().to_vec(),
        moves_face_to_basepoint: moves,
        centralizes_stabilizer: centralizes,
        stabilizer_size: stab.size,
        witness,
    })
}
