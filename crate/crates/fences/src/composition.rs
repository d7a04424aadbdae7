//! Compositions: the ordered part sequences that index fence posets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// An up or down step along a zigzag. Steps of part i go up when i is odd
/// and down when i is even.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Up,
    Down,
}

/// An ordered sequence of part sizes.
///
/// The usual constructor requires every part to be at least 1. A half-open
/// composition additionally permits the first and/or last part to be 0, which
/// encodes a fence starting with a down step or ending a step early; those
/// arise inside the decomposition-identity verifiers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::ZeroPart { part: p });
        }
        Ok(Composition { parts })
    }

    /// Permits a zero first and/or last part; interior parts must be positive.
    pub fn half_open(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if parts[1..parts.len().saturating_sub(1)].contains(&0) {
            return Err(Error::ZeroPart { part: 0 });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts (segments).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Circular fences require an even number of parts.
    pub fn circular_ok(&self) -> bool {
        self.parts.len().is_multiple_of(2) && self.is_proper()
    }

    pub fn is_proper(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    /// (p_2, ..., p_s, p_1).
    pub fn rotate_left(&self, k: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.rotate_left(k % self.parts.len());
        Composition { parts }
    }

    /// (p_s, p_1, ..., p_{s-1}): the one-step shift used by the complement map.
    pub fn rotate_right(&self, k: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.rotate_right(k % self.parts.len());
        Composition { parts }
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Lexicographically least among all rotations and rotations of the
    /// reversal; circular fences of dihedrally equivalent compositions are
    /// isomorphic, so scan reports are deduplicated by this key.
    pub fn dihedral_canonical(&self) -> Composition {
        let mut best = self.parts.clone();
        for base in [self.parts.clone(), self.reversed().parts] {
            for k in 0..base.len() {
                let mut cand = base.clone();
                cand.rotate_left(k);
                if cand < best {
                    best = cand;
                }
            }
        }
        Composition { parts: best }
    }

    /// The zigzag step sequence: part i contributes that many up steps when i
    /// is odd, down steps when i is even.
    pub fn steps(&self) -> Vec<Step> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            let dir = if i % 2 == 0 { Step::Up } else { Step::Down };
            out.extend(std::iter::repeat_n(dir, p as usize));
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses comma-separated positive integers, e.g. `"2,1,1,3"`. Leading or
    /// trailing zeros are rejected here; use [`Composition::parse_half_open`]
    /// where they are meaningful.
    fn from_str(s: &str) -> Result<Self, Error> {
        Composition::new(parse_parts(s)?)
    }
}

impl Composition {
    pub fn parse_half_open(s: &str) -> Result<Self, Error> {
        Composition::half_open(parse_parts(s)?)
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(s.to_string()))
        })
        .collect()
}

/// All compositions of n in lexicographic order; empty for n = 0.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill(n, &mut prefix, &mut out);
    out
}

fn fill(rest: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if rest == 0 {
        if !prefix.is_empty() {
            out.push(Composition {
                parts: prefix.clone(),
            });
        }
        return;
    }
    for p in 1..=rest {
        prefix.push(p as u32);
        fill(rest - p, prefix, out);
        prefix.pop();
    }
}

/// Compositions of n with an even number of parts, in lexicographic order.
pub fn even_compositions_of(n: usize) -> Vec<Composition> {
    compositions_of(n)
        .into_iter()
        .filter(|c| c.len() % 2 == 0)
        .collect()
}

/// Half-open compositions of `total` with an even number of parts: the first
/// and last parts range over zero as well. Used by the symmetry statements on
/// difference polynomials.
pub fn half_open_even_compositions_of(total: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for first in 0..=total {
        for last in 0..=(total - first) {
            let mid = total - first - last;
            // middle block: even-length proper composition, empty when mid = 0
            let mids: Vec<Vec<u32>> = if mid == 0 {
                vec![Vec::new()]
            } else {
                compositions_of(mid)
                    .into_iter()
                    .filter(|c| c.len() % 2 == 0)
                    .map(|c| c.parts)
                    .collect()
            };
            for m in mids {
                let mut parts = Vec::with_capacity(m.len() + 2);
                parts.push(first as u32);
                parts.extend_from_slice(&m);
                parts.push(last as u32);
                out.push(Composition { parts });
            }
        }
    }
    out.sort();
    out
}
