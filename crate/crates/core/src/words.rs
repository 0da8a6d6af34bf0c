//! Labeled injective words and their face maps.
//!
//! A generator of degree `r` is a pair of sequences: `r` pairwise distinct
//! letters drawn from `1..=n` and `r` labels drawn from `0..ℓ`. Label `0` is
//! the marked element `e`. The face map `d_j` deletes entry `j + 1` of both
//! sequences.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The label playing the role of the marked element `e`.
pub const IDENTITY_LABEL: u32 = 0;

/// Letters `1..=n` and labels `0..labels`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub n: usize,
    pub labels: usize,
}

impl Alphabet {
    pub fn new(n: usize, labels: usize) -> Result<Self> {
        if labels == 0 {
            return Err(Error::Format("label set must be nonempty".into()));
        }
        Ok(Alphabet { n, labels })
    }

    pub fn letters(&self) -> Vec<u32> {
        (1..=self.n as u32).collect()
    }

    /// `n!/(n-r)! · ℓ^r`, or zero when `r > n`.
    pub fn generator_count(&self, r: usize) -> u128 {
        arrangement_count(self.n, r, self.labels)
    }

    /// Total number of generators over all degrees.
    pub fn total_generators(&self) -> u128 {
        (0..=self.n).map(|r| self.generator_count(r)).sum()
    }
}

pub(crate) fn arrangement_count(n: usize, r: usize, labels: usize) -> u128 {
    if r > n {
        return 0;
    }
    let falling: u128 = ((n - r + 1)..=n).map(|k| k as u128).product();
    falling * (labels as u128).pow(r as u32)
}

/// A generator `(a_1,…,a_r | γ_1,…,γ_r)`.
///
/// Ordering compares letters first, then labels; this is the canonical basis
/// order of every chain group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LabeledWord {
    letters: Vec<u32>,
    labels: Vec<u32>,
}

impl LabeledWord {
    pub fn new(letters: Vec<u32>, labels: Vec<u32>) -> Result<Self> {
        if letters.len() != labels.len() {
            return Err(Error::InvalidWord(format!(
                "{} letters but {} labels",
                letters.len(),
                labels.len()
            )));
        }
        if !letters.iter().all_unique() {
            return Err(Error::InvalidWord(format!(
                "repeated letter in {letters:?}"
            )));
        }
        if letters.contains(&0) {
            return Err(Error::InvalidWord("letters start at 1".into()));
        }
        Ok(LabeledWord { letters, labels })
    }

    pub fn empty() -> Self {
        LabeledWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// 1-based position of `letter`, if it occurs.
    pub fn position(&self, letter: u32) -> Option<usize> {
        self.letters
            .iter()
            .position(|&x| x == letter)
            .map(|i| i + 1)
    }

    pub fn contains(&self, letter: u32) -> bool {
        self.letters.contains(&letter)
    }

    /// Face `d_j`: deletes entry `j + 1` (1-based) of both sequences.
    pub fn face(&self, j: usize) -> Result<LabeledWord> {
        if j >= self.len() {
            return Err(Error::FaceOutOfRange {
                index: j,
                len: self.len(),
            });
        }
        Ok(self.face_unchecked(j))
    }

    pub(crate) fn face_unchecked(&self, j: usize) -> LabeledWord {
        let mut letters = self.letters.clone();
        let mut labels = self.labels.clone();
        letters.remove(j);
        labels.remove(j);
        LabeledWord { letters, labels }
    }

    /// All faces `d_0, …, d_{r-1}` in order.
    pub fn faces(&self) -> impl Iterator<Item = LabeledWord> + '_ {
        (0..self.len()).map(move |j| self.face_unchecked(j))
    }

    /// `(x, a_1, …, a_r | γ, γ_1, …, γ_r)`.
    pub fn prepend(&self, letter: u32, label: u32) -> Result<LabeledWord> {
        if self.contains(letter) {
            return Err(Error::LetterOccurs {
                letter,
                word: self.to_string(),
            });
        }
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        let mut labels = Vec::with_capacity(self.len() + 1);
        labels.push(label);
        labels.extend_from_slice(&self.labels);
        Ok(LabeledWord { letters, labels })
    }

    /// Splits at `k`: the first `k` entries and the remaining ones.
    pub fn split_at(&self, k: usize) -> (LabeledWord, LabeledWord) {
        let (l0, l1) = self.letters.split_at(k);
        let (g0, g1) = self.labels.split_at(k);
        (
            LabeledWord {
                letters: l0.to_vec(),
                labels: g0.to_vec(),
            },
            LabeledWord {
                letters: l1.to_vec(),
                labels: g1.to_vec(),
            },
        )
    }

    /// Concatenation; fails if the letter sets overlap.
    pub fn concat(&self, other: &LabeledWord) -> Result<LabeledWord> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        LabeledWord::new(letters, labels)
    }

    /// Applies a relabeling of letters and labels entrywise.
    pub(crate) fn map_entries(
        &self,
        mut letter: impl FnMut(u32) -> u32,
        mut label: impl FnMut(usize, u32) -> u32,
    ) -> LabeledWord {
        LabeledWord {
            letters: self.letters.iter().map(|&a| letter(a)).collect(),
            labels: self
                .letters
                .iter()
                .zip(&self.labels)
                .map(|(&a, &g)| label(a as usize, g))
                .collect(),
        }
    }
}

impl fmt::Display for LabeledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        write!(
            f,
            "({}|{})",
            self.letters.iter().join(","),
            self.labels.iter().join(",")
        )
    }
}

impl FromStr for LabeledWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidWord(format!("cannot parse {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        if inner.is_empty() {
            return Ok(LabeledWord::empty());
        }
        let (lhs, rhs) = inner.split_once('|').ok_or_else(bad)?;
        let parse = |part: &str| -> Result<Vec<u32>> {
            part.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        LabeledWord::new(parse(lhs)?, parse(rhs)?)
    }
}

impl Serialize for LabeledWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LabeledWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All generators of degree `r` over letters `1..=n`, in canonical order.
pub fn enumerate_generators(alpha: Alphabet, r: i64) -> Result<Vec<LabeledWord>> {
    if r < 0 || r as usize > alpha.n {
        return Err(Error::DegreeOutOfRange {
            degree: r,
            low: 0,
            high: alpha.n as i64,
        });
    }
    Ok(words_over(&alpha.letters(), alpha.labels, r as usize))
}

/// All labeled injective words of length `r` over an arbitrary letter set,
/// sorted canonically. Empty when `r` exceeds the number of letters.
pub fn words_over(letters: &[u32], labels: usize, r: usize) -> Vec<LabeledWord> {
    if r > letters.len() {
        return Vec::new();
    }
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let labelings = label_sequences(labels, r);
    let mut out =
        Vec::with_capacity(labelings.len() * arrangement_count(sorted.len(), r, 1) as usize);
    for arrangement in sorted.iter().copied().permutations(r) {
        for labeling in &labelings {
            out.push(LabeledWord {
                letters: arrangement.clone(),
                labels: labeling.clone(),
            });
        }
    }
    out.sort_unstable();
    out
}

/// Every sequence in `0..labels` of length `r`, lexicographically.
pub(crate) fn label_sequences(labels: usize, r: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(r)];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..labels as u32).map(move |g| {
                    let mut next = prefix.clone();
                    next.push(g);
                    next
                })
            })
            .collect();
    }
    out
}
