use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// `images[i]` is the image of `i + 1`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x as usize - 1], true) {
                return Err(Error::Format(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// The cycle `c_1 ↦ c_2 ↦ … ↦ c_k ↦ c_1`; the empty cycle is the identity.
    pub fn cycle(n: usize, cycle: &[u32]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        if !cycle.iter().all_unique() || cycle.iter().any(|&c| c == 0 || c as usize > n) {
            return Err(Error::Format(format!(
                "{cycle:?} is not a cycle on 1..={n}"
            )));
        }
        for (k, &c) in cycle.iter().enumerate() {
            images[c as usize - 1] = cycle[(k + 1) % cycle.len()];
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, a: u32) -> u32 {
        self.images[a as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&a| self.apply(a)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn fixes(&self, a: u32) -> bool {
        self.apply(a) == a
    }

    /// All of `S_n`, lexicographically by images.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32)
            .permutations(n)
            .map(|images| Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_composition() {
        let mu = Permutation::cycle(4, &[2, 3, 4]).unwrap();
        assert_eq!(mu.images(), &[1, 3, 4, 2]);
        assert_eq!(mu.compose(&mu.inverse()), Permutation::identity(4));
        assert_eq!(
            Permutation::cycle(3, &[]).unwrap(),
            Permutation::identity(3)
        );
        // (1 2)∘(2 3) sends 3 -> 2 -> 1
        let a = Permutation::cycle(3, &[1, 2]).unwrap();
        let b = Permutation::cycle(3, &[2, 3]).unwrap();
        assert_eq!(a.compose(&b).apply(3), 1);
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::cycle(3, &[1, 4]).is_err());
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(0).count(), 1);
    }
}
