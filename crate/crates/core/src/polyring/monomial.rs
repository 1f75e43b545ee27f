use std::cmp::Ordering;
use std::fmt;

/// A monomial `X_{i₁}^{e₁}⋯X_{i_k}^{e_k}` stored sparsely as
/// `(variable, exponent)` pairs with 1-based variable indices, sorted by
/// variable, exponents strictly positive.
///
/// `Ord` is graded reverse lexicographic with `X₁ > X₂ > ⋯`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: usize) -> Self {
        Monomial::from_pairs([(index, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables multiply, zero exponents vanish.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// The size of the support.
    pub fn weight(&self) -> usize {
        self.exps.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest variable index present, 0 for the constant monomial.
    pub fn max_var(&self) -> usize {
        self.exps.last().map_or(0, |&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            if j < other.exps.len() && other.exps[j].0 < v {
                return None;
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                let f = other.exps[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == other.exps.len()).then_some(Monomial { exps: out })
    }

    /// Substitutes `X_v ↦ X_{f(v)}`, merging variables that collide.
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // Reverse lex: the last variable where the exponents differ
            // decides, and the smaller exponent there wins.
            let (mut i, mut j) = (self.exps.len(), other.exps.len());
            while i > 0 && j > 0 {
                let (va, ea) = self.exps[i - 1];
                let (vb, eb) = other.exps[j - 1];
                match va.cmp(&vb) {
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal if ea != eb => return eb.cmp(&ea),
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                }
            }
            // Equal degrees force both to run out together.
            j.cmp(&i)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
