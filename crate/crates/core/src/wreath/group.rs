use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table, with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

/// JSON form of a group table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDocument {
    pub order: usize,
    pub table: Vec<Vec<u32>>,
    #[serde(default)]
    pub identity: usize,
}

impl FiniteGroup {
    /// `ℤ/k` with `x · y = x + y mod k`.
    pub fn cyclic(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::GroupAxiom {
                axiom: "nonempty",
                witness: "order 0".into(),
            });
        }
        let table = (0..k)
            .map(|x| (0..k).map(|y| ((x + y) % k) as u32).collect())
            .collect();
        Self::from_table(table, 0)
    }

    /// Validates a multiplication table. When the identity is not element
    /// `0`, the two are swapped so that `0` is always the identity.
    pub fn from_table(table: Vec<Vec<u32>>, identity: usize) -> Result<Self> {
        let k = table.len();
        if k == 0 {
            return Err(Error::GroupAxiom {
                axiom: "nonempty",
                witness: "empty table".into(),
            });
        }
        if let Some(row) = table.iter().position(|r| r.len() != k) {
            return Err(Error::GroupAxiom {
                axiom: "shape",
                witness: format!("row {row} is not of length {k}"),
            });
        }
        if let Some((x, y)) = pairs(k).find(|&(x, y)| table[x][y] as usize >= k) {
            return Err(Error::GroupAxiom {
                axiom: "closure",
                witness: format!("{x}*{y} = {}", table[x][y]),
            });
        }
        if identity >= k {
            return Err(Error::GroupAxiom {
                axiom: "identity",
                witness: format!("index {identity} out of range"),
            });
        }
        let table = if identity == 0 {
            table
        } else {
            swap_labels(&table, 0, identity)
        };
        if let Some(x) = (0..k).find(|&x| table[0][x] as usize != x || table[x][0] as usize != x) {
            return Err(Error::GroupAxiom {
                axiom: "identity",
                witness: format!("e*{x} or {x}*e differs from {x}"),
            });
        }
        for (x, y, z) in pairs(k).flat_map(|(x, y)| (0..k).map(move |z| (x, y, z))) {
            let left = table[table[x][y] as usize][z];
            let right = table[x][table[y][z] as usize];
            if left != right {
                return Err(Error::GroupAxiom {
                    axiom: "associativity",
                    witness: format!("({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}"),
                });
            }
        }
        let mut inverse = Vec::with_capacity(k);
        for (x, row) in table.iter().enumerate() {
            match (0..k).find(|&y| row[y] == 0 && table[y][x] == 0) {
                Some(y) => inverse.push(y as u32),
                None => {
                    return Err(Error::GroupAxiom {
                        axiom: "inverse",
                        witness: format!("{x} has no inverse"),
                    })
                }
            }
        }
        Ok(FiniteGroup { table, inverse })
    }

    pub fn from_document(doc: GroupDocument) -> Result<Self> {
        if doc.order != doc.table.len() {
            return Err(Error::GroupAxiom {
                axiom: "shape",
                witness: format!("order {} but {} rows", doc.order, doc.table.len()),
            });
        }
        Self::from_table(doc.table, doc.identity)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GroupDocument =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_document(doc)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize][y as usize]
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.order() as u32
    }
}

fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |x| (0..k).map(move |y| (x, y)))
}

fn swap_labels(table: &[Vec<u32>], a: usize, b: usize) -> Vec<Vec<u32>> {
    let relabel = |x: usize| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let k = table.len();
    (0..k)
        .map(|x| {
            (0..k)
                .map(|y| relabel(table[relabel(x)][relabel(y)] as usize) as u32)
                .collect()
        })
        .collect()
}
