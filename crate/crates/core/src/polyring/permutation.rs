use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`, acting on polynomials by `X_i ↦ X_{σ(i)}`.
///
/// Composition follows function composition: `(σ∘τ)(i) = σ(τ(i))`, so that
/// `(στ)P = σ(τP)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From the 1-based image list `[σ(1), …, σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            zero_based.push(i - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// The transposition of the 1-based points `i` and `j` (identity if equal).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for a 1-based point `i`; points beyond `n` are fixed.
    pub fn apply(&self, i: usize) -> usize {
        self.images.get(i - 1).map_or(i, |&j| j + 1)
    }

    /// The 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// The signature `ε(σ) ∈ {1, −1}`.
    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.images.len()];
        let mut transpositions = 0;
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Every permutation of `n` points that only moves points inside the
    /// given disjoint 1-based blocks (the Young subgroup `S_{B₁}×⋯×S_{B_k}`).
    pub fn young_subgroup(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
        let mut group = vec![Permutation::identity(n)];
        for block in blocks {
            let arrangements = arrangements(block);
            group = group
                .iter()
                .flat_map(|g| {
                    arrangements.iter().map(move |arr| {
                        let mut images = g.images.clone();
                        for (&from, &to) in block.iter().zip(arr) {
                            images[from - 1] = to - 1;
                        }
                        Permutation { images }
                    })
                })
                .collect();
        }
        group
    }
}

/// All orderings of `items`.
fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in arrangements(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_function_composition() {
        let s = Permutation::from_images(&[2, 3, 1]).unwrap();
        let t = Permutation::transposition(3, 1, 2);
        let st = s.compose(&t);
        for i in 1..=3 {
            assert_eq!(st.apply(i), s.apply(t.apply(i)));
        }
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::transposition(4, 1, 3).sign(), -1);
        assert_eq!(Permutation::from_images(&[2, 3, 1]).unwrap().sign(), 1);
        let a = Permutation::from_images(&[2, 1, 4, 3, 5]).unwrap();
        let b = Permutation::from_images(&[5, 1, 2, 3, 4]).unwrap();
        assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[1, 3]).is_err());
    }

    #[test]
    fn young_subgroup_order() {
        let g = Permutation::young_subgroup(5, &[vec![1, 3, 4], vec![2, 5]]);
        assert_eq!(g.len(), 12);
        assert!(g.iter().all(|s| s.apply(1) != 2 && s.apply(1) != 5));
    }
}
