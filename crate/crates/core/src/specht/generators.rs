use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{orbit_type, Partition};
use crate::error::{Error, Result};
use crate::polyring::{vandermonde, FieldSpec, Polynomial};

/// The columns of a tableau, as a set partition of the indices.
///
/// A Specht polynomial only depends on its tableau's columns up to sign, so
/// these blocks name Specht ideal generators without the `n!` redundancy of
/// raw tableaux. Canonical form: each block ascending, blocks ordered by
/// decreasing size, same-size blocks by their minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnBlocks {
    blocks: Vec<Vec<usize>>,
}

impl ColumnBlocks {
    /// Canonicalizes the given blocks. Blocks must be nonempty, disjoint and
    /// use 1-based indices.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex(w[0]));
        }
        if all.first() == Some(&0) || blocks.iter().any(Vec::is_empty) {
            return Err(Error::Malformed(
                "column blocks must be nonempty sets of 1-based indices".into(),
            ));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Ok(ColumnBlocks { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Column sizes `λ^⊥` as a partition.
    pub fn column_sizes(&self) -> Partition {
        Partition::from_unsorted(self.blocks.iter().map(Vec::len).collect())
    }

    /// The tableau shape `λ`.
    pub fn shape(&self) -> Partition {
        self.column_sizes().conjugate()
    }

    /// Largest index used.
    pub fn max_index(&self) -> usize {
        self.blocks.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Whether the blocks cover exactly `{1, …, n}`.
    pub fn covers(&self, n: usize) -> bool {
        self.blocks.iter().map(Vec::len).sum::<usize>() == n && self.max_index() <= n
    }

    /// `Π Δ(block)` with each block in ascending order.
    pub fn polynomial(&self, field: FieldSpec, nvars: usize) -> Result<Polynomial> {
        self.blocks
            .iter()
            .filter(|b| b.len() > 1)
            .try_fold(Polynomial::one(field, nvars), |acc, b| {
                Ok(&acc * &vandermonde(b, field, nvars)?)
            })
    }
}

impl fmt::Display for ColumnBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let items: Vec<String> = b.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// Parses the display form `{1,3}|{2}|{4}`; the braces are optional.
impl FromStr for ColumnBlocks {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut offset = 0;
        let mut blocks = Vec::new();
        for block in text.split('|') {
            let mut entries = Vec::new();
            let inner = block.trim().trim_start_matches('{').trim_end_matches('}');
            for item in inner.split(',') {
                let index = item.trim().parse::<usize>().map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("expected a column index, found {:?}", item.trim()),
                })?;
                entries.push(index);
            }
            blocks.push(entries);
            offset += block.len() + 1;
        }
        ColumnBlocks::new(blocks)
    }
}

impl fmt::Debug for ColumnBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The canonical column blocks of every Specht polynomial of shape `λ ⊢ n`,
/// in lexicographic order of blocks.
pub fn column_blocks_of_shape(shape: &Partition, n: usize) -> Result<Vec<ColumnBlocks>> {
    if shape.weight() != n {
        return Err(Error::IncomparableWeights {
            left: shape.weight(),
            right: n,
        });
    }
    let sizes = shape.conjugate();

    fn go(
        sizes: &[usize],
        k: usize,
        remaining: &[usize],
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<ColumnBlocks>,
    ) {
        if k == sizes.len() {
            out.push(ColumnBlocks {
                blocks: chosen.clone(),
            });
            return;
        }
        let floor = match chosen.last() {
            Some(prev) if prev.len() == sizes[k] => prev[0],
            _ => 0,
        };
        for block in combinations(remaining, sizes[k]) {
            if block[0] <= floor {
                continue;
            }
            let rest: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|i| !block.contains(i))
                .collect();
            chosen.push(block);
            go(sizes, k + 1, &rest, chosen, out);
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    let all: Vec<usize> = (1..=n).collect();
    go(sizes.parts(), 0, &all, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All ascending `k`-subsets of `items` (which must be ascending).
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut tail in combinations(&items[i + 1..], k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Generators of the Specht ideal of shape `λ`: one polynomial per canonical
/// column set partition. Every Specht polynomial of shape `λ` equals one of
/// these up to sign.
pub fn generators_of_shape(
    shape: &Partition,
    n: usize,
    field: FieldSpec,
) -> Result<Vec<(ColumnBlocks, Polynomial)>> {
    column_blocks_of_shape(shape, n)?
        .into_iter()
        .map(|cb| {
            let p = cb.polynomial(field, n)?;
            Ok((cb, p))
        })
        .collect()
}

/// Whether `x` lies in the Specht variety `V_μ`, decided combinatorially:
/// `x ∈ V_μ` iff its orbit type is not dominated by `μ`.
pub fn point_in_variety<T: Ord>(x: &[T], shape: &Partition) -> Result<bool> {
    if x.len() != shape.weight() {
        return Err(Error::DimensionMismatch {
            expected: shape.weight(),
            actual: x.len(),
        });
    }
    Ok(!shape.dominates_unchecked(&orbit_type(x)))
}
