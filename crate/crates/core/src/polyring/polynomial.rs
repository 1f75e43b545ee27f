use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::polyring::{FieldSpec, Monomial, Permutation, Scalar};

/// A sparse polynomial in `X₁, …, X_n` over a [`FieldSpec`].
///
/// Terms are kept in a map keyed by monomial with no zero coefficients, so
/// two equal polynomials always have identical representations. Printing
/// lists terms in decreasing graded reverse lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> Self {
        Polynomial::monomial(field, nvars, Monomial::one(), c)
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Polynomial::constant(field, nvars, field.one())
    }

    /// `c · m`. The monomial must live in the first `nvars` variables.
    pub fn monomial(field: FieldSpec, nvars: usize, m: Monomial, c: Scalar) -> Self {
        assert!(
            m.max_var() <= nvars,
            "monomial {m} outside {nvars} variables"
        );
        assert_eq!(c.field(), field, "coefficient from another field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            field,
            nvars,
            terms,
        }
    }

    /// The variable `X_index`.
    pub fn var(field: FieldSpec, nvars: usize, index: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::VariableOutOfRange { index, nvars });
        }
        Ok(Polynomial::monomial(
            field,
            nvars,
            Monomial::var(index),
            field.one(),
        ))
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(field, nvars);
        for (m, c) in terms {
            if m.max_var() > nvars {
                return Err(Error::VariableOutOfRange {
                    index: m.max_var(),
                    nvars,
                });
            }
            field.check_same(&c.field())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// The sum of the terms of total degree exactly `h`.
    pub fn homogeneous_component(&self, h: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == h)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The top-degree component `P_d`, zero for the zero polynomial.
    pub fn leading_form(&self) -> Polynomial {
        match self.degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    /// Indices of the variables that occur in some term.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    /// The size of the support.
    pub fn weight(&self) -> usize {
        self.support().len()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                actual: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        assert!(m.max_var() <= self.nvars);
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.mul(m), c.clone()))
                .collect(),
        }
    }

    /// `σP`: the substitution `X_i ↦ X_{σ(i)}`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Polynomial> {
        if sigma.degree() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                actual: sigma.degree(),
            });
        }
        Ok(Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.map_vars(|v| sigma.apply(v)), c.clone()))
                .collect(),
        })
    }

    /// Substitutes `X_i ↦ Y_{f(i)}` into a ring with `nvars` variables.
    pub fn substitute_vars(&self, nvars: usize, f: impl Fn(usize) -> usize) -> Polynomial {
        let mut out = Polynomial::zero(self.field, nvars);
        for (m, c) in &self.terms {
            let image = m.map_vars(&f);
            assert!(image.max_var() <= nvars);
            out.add_term(image, c.clone());
        }
        out
    }

    /// The exact quotient `P / D`, or [`Error::NotDivisible`] when the
    /// division leaves a remainder.
    ///
    /// Plain multivariate long division by a single divisor in graded
    /// reverse lexicographic order. With one divisor the remainder is zero
    /// iff `D` divides `P`.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead_c.inverse().expect("nonzero leading coefficient");
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero(self.field, self.nvars);
        while let Some((m, c)) = remainder.leading_term() {
            let Some(q_m) = m.checked_div(lead_m) else {
                return Err(Error::NotDivisible);
            };
            let q_c = c * &lead_inv;
            let step = divisor.mul_monomial(&q_m).scale(&q_c);
            remainder = &remainder - &step;
            quotient.add_term(q_m, q_c);
        }
        debug_assert_eq!(&quotient * divisor, *self);
        Ok(quotient)
    }

    /// `P(x)`.
    pub fn evaluate(&self, x: &[Scalar]) -> Result<Scalar> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                actual: x.len(),
            });
        }
        if let Some(bad) = x.iter().find(|v| v.field() != self.field) {
            return Err(Error::FieldMismatch(format!(
                "point coordinate in {} for polynomial over {}",
                bad.field(),
                self.field
            )));
        }
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.exponents() {
                t = &t * &x[v - 1].pow(e);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Whether the polynomial vanishes at `x`, short-circuit friendly for
    /// prime fields.
    pub(crate) fn vanishes_at(&self, x: &[Scalar]) -> bool {
        self.evaluate_unchecked(x).is_zero()
    }
}

fn expect<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("incompatible polynomials: {e}"))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        expect(self.try_add(rhs))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        expect(self.try_sub(rhs))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        expect(self.try_mul(rhs))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}, n={}]({self})", self.field, self.nvars)
    }
}
