use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which end of a coefficient interval a sign function selects: `1` is the
/// lower bound and `2` the upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bound {
    Lower,
    Upper,
}

impl Bound {
    pub const ALL: [Bound; 2] = [Bound::Lower, Bound::Upper];

    pub fn flip(self) -> Self {
        match self {
            Bound::Lower => Bound::Upper,
            Bound::Upper => Bound::Lower,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Bound::Lower => 1,
            Bound::Upper => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Bound::Lower),
            2 => Some(Bound::Upper),
            _ => None,
        }
    }
}

/// `(i1 j1 i2 j2)`.
///
/// For a transfer function `g/f` the tuple picks the numerator vertex
/// `g_{i1 j1}` and the denominator vertex `f_{i2 j2}`. For a pair of complex
/// boxes `c0 + jd0`, `c1 + jd1` it reads `(sgn[c0] sgn[d0] sgn[c1] sgn[d1])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexIndexTuple {
    pub i1: Bound,
    pub j1: Bound,
    pub i2: Bound,
    pub j2: Bound,
}

impl VertexIndexTuple {
    pub const fn new(i1: Bound, j1: Bound, i2: Bound, j2: Bound) -> Self {
        Self { i1, j1, i2, j2 }
    }

    const fn from_digits(d: [u8; 4]) -> Self {
        const fn b(x: u8) -> Bound {
            if x == 1 {
                Bound::Lower
            } else {
                Bound::Upper
            }
        }
        Self::new(b(d[0]), b(d[1]), b(d[2]), b(d[3]))
    }

    /// All sixteen tuples in lexicographic order.
    pub fn all() -> impl Iterator<Item = Self> {
        Bound::ALL.into_iter().flat_map(|i1| {
            Bound::ALL.into_iter().flat_map(move |j1| {
                Bound::ALL
                    .into_iter()
                    .flat_map(move |i2| Bound::ALL.into_iter().map(move |j2| Self::new(i1, j1, i2, j2)))
            })
        })
    }

    /// Swaps both odd-part indices. On `ω < 0` the imaginary bounds of a value
    /// set are reached by the opposite odd extremal part, so this converts a
    /// box corner tuple into the vertex tuple realizing it.
    pub fn flip_odd(self) -> Self {
        Self::new(self.i1, self.j1.flip(), self.i2, self.j2.flip())
    }
}

impl fmt::Display for VertexIndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.i1.index(), self.j1.index(), self.i2.index(), self.j2.index())
    }
}

impl FromStr for VertexIndexTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<Bound> = s
            .trim_matches(|c| c == '(' || c == ')')
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| c.to_digit(10).and_then(|d| Bound::from_index(d as u8)))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidTuple(s.to_string()))?;
        match digits[..] {
            [i1, j1, i2, j2] => Ok(Self::new(i1, j1, i2, j2)),
            _ => Err(Error::InvalidTuple(s.to_string())),
        }
    }
}

impl Serialize for VertexIndexTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexIndexTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexSetName {
    I1,
    I2,
    I3,
}

const I1: [[u8; 4]; 12] = [
    [1, 2, 2, 2],
    [1, 2, 2, 1],
    [2, 2, 2, 1],
    [2, 2, 1, 1],
    [2, 1, 1, 1],
    [2, 1, 1, 2],
    [1, 1, 1, 2],
    [1, 1, 2, 2],
    [1, 2, 1, 1],
    [2, 2, 1, 2],
    [2, 1, 2, 2],
    [1, 1, 2, 1],
];

const I2: [[u8; 4]; 8] =
    [[1, 1, 1, 2], [1, 2, 2, 2], [2, 1, 1, 1], [2, 2, 2, 1], [1, 1, 2, 1], [1, 2, 1, 1], [2, 1, 2, 2], [2, 2, 1, 2]];

const I3: [[u8; 4]; 12] = [
    [1, 1, 1, 1],
    [1, 2, 1, 2],
    [2, 2, 2, 2],
    [2, 1, 2, 1],
    [1, 1, 1, 2],
    [1, 2, 2, 2],
    [2, 2, 2, 1],
    [2, 1, 1, 1],
    [1, 2, 1, 1],
    [2, 2, 1, 2],
    [2, 1, 2, 2],
    [1, 1, 2, 1],
];

/// A named list of vertex tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexSet {
    pub name: IndexSetName,
    pub tuples: Vec<VertexIndexTuple>,
}

impl IndexSet {
    pub fn contains(&self, t: &VertexIndexTuple) -> bool {
        self.tuples.contains(t)
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Copy with `t` removed. Only meant for mutation testing of the certificates.
    pub fn without(&self, t: &VertexIndexTuple) -> Self {
        Self { name: self.name, tuples: self.tuples.iter().copied().filter(|x| x != t).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexIndexTuple> {
        self.tuples.iter()
    }
}

pub fn index_set(name: IndexSetName) -> IndexSet {
    let raw: &[[u8; 4]] = match name {
        IndexSetName::I1 => &I1,
        IndexSetName::I2 => &I2,
        IndexSetName::I3 => &I3,
    };
    IndexSet { name, tuples: raw.iter().map(|&d| VertexIndexTuple::from_digits(d)).collect() }
}
