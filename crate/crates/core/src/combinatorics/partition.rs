use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are never stored, so `(3,1)` and `(3,1,0)` are the same
/// value. The ordering derived here is plain lexicographic on the parts; it is
/// only used for sorting and set membership, never as dominance.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Orbit types are partitions of the ambient dimension.
pub type OrbitType = Partition;

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing and positive"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The dual partition: `(λ^⊥)_i = |{j : λ_j ≥ i}|`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Whether `self` dominates `other`: every prefix sum of `self` is at
    /// least the matching prefix sum of `other`, zero-padding the shorter one.
    ///
    /// Only partitions of the same integer are comparable. For equal weights
    /// the zero-padded comparison agrees with the usual min-length one.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::IncomparableWeights {
                left: self.weight(),
                right: other.weight(),
            });
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut lhs, mut rhs) = (0, 0);
        for i in 0..len {
            lhs += self.part(i);
            rhs += other.part(i);
            if lhs < rhs {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `5,3,2,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The multiplicities of the distinct coordinates of `x`, sorted decreasingly.
pub fn orbit_type<T: Ord>(x: &[T]) -> OrbitType {
    let mut sorted: Vec<&T> = x.iter().collect();
    sorted.sort();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let run = sorted[i..].iter().take_while(|v| **v == sorted[i]).count();
        parts.push(run);
        i += run;
    }
    Partition::from_unsorted(parts)
}

/// All partitions of `n` with at most `max_length` parts, in reverse
/// lexicographic order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    go(n, n, max_length.unwrap_or(n), &mut Vec::new(), &mut out);
    out
}

/// A chain `from = ν⁰ ⊴ ν¹ ⊴ … ⊴ νᵏ = to` where each step moves a single box
/// from row `j` up to row `i < j`.
///
/// At every step the lexicographically earliest legal move is taken (smallest
/// target row, then smallest source row) among those that stay dominated by
/// `to`.
pub fn dominance_chain(from: &Partition, to: &Partition) -> Result<Vec<Partition>> {
    if !to.dominates(from)? {
        return Err(Error::NoChain {
            from: from.clone(),
            to: to.clone(),
        });
    }
    let n = from.weight();
    let mut chain = vec![from.clone()];
    let mut current: Vec<usize> = (0..n).map(|i| from.part(i)).collect();
    while chain.last() != Some(to) {
        let next = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let lifts = i == 0 || current[i - 1] > current[i];
                let drops = current[j] > 0 && current[j] > current.get(j + 1).copied().unwrap_or(0);
                lifts && drops
            })
            .map(|(i, j)| {
                let mut moved = current.clone();
                moved[i] += 1;
                moved[j] -= 1;
                moved
            })
            .find(|moved| to.dominates_unchecked(&Partition::from_unsorted(moved.clone())))
            .expect("a dominated partition below its target always admits a box move");
        current = next;
        chain.push(Partition::from_unsorted(current.clone()));
    }
    Ok(chain)
}
