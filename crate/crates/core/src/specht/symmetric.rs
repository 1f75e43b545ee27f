//! Certificates that a symmetric ideal containing `P` contains a Specht
//! polynomial of shape `μ(m)^⊥`, for `m` a monomial of the top-degree part.
//!
//! Both constructions first relabel variables so that
//! `m = X₁^{k₁}⋯X_l^{k_l}` with `k₁ ≥ ⋯ ≥ k_l`, the rest of `Supp(P_d)` is
//! `{l+1, …, wt(P_d)}`, and the fresh index sets `I_i` (`|I_i| = k_i`) are
//! taken greedily as the smallest indices above `wt(P_d)`. The target is
//! `Δ(J₁)⋯Δ(J_l)` with `J_i = {i} ∪ I_i` in these relabeled coordinates, and
//! every entry references `σ·P` for some `σ`, composed with the relabeling.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyring::{vandermonde, FieldSpec, Monomial, Permutation, Polynomial, Scalar};
use crate::specht::{Certificate, CertificateEntry, GeneratorRef};

/// The normalized setting shared by both constructions.
#[derive(Debug, Clone)]
pub struct SymmetricSetup {
    /// Sends original indices to relabeled ones.
    pub relabel: Permutation,
    /// `relabel · P`.
    pub relabeled: Polynomial,
    /// Exponents `k₁ ≥ ⋯ ≥ k_l` of `m`.
    pub exponents: Vec<u32>,
    /// `J_i = (i, I_i…)`, ascending.
    pub columns: Vec<Vec<usize>>,
    /// Coefficient of `m` in `P`.
    pub coefficient: Scalar,
}

impl SymmetricSetup {
    pub fn new(p: &Polynomial, m: &Monomial, n: usize) -> Result<Self> {
        if p.nvars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.nvars(),
            });
        }
        let d = p.degree().ok_or_else(|| {
            Error::Precondition("the zero polynomial has no leading monomial".into())
        })?;
        let top = p.homogeneous_component(d);
        let coefficient = top.coefficient(m);
        if coefficient.is_zero() {
            return Err(Error::Precondition(format!(
                "{m} is not a monomial of the top-degree part {top}"
            )));
        }
        let wt = top.weight();
        if d as usize + wt > n {
            return Err(Error::InsufficientVariables {
                required: d as usize + wt,
                available: n,
            });
        }

        let mut heads: Vec<(usize, u32)> = m.exponents().collect();
        heads.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let top_support = top.support();
        let mut order: Vec<usize> = heads.iter().map(|&(v, _)| v).collect();
        order.extend(top_support.iter().copied().filter(|v| m.exponent(*v) == 0));
        order.extend((1..=n).filter(|v| !top_support.contains(v)));
        let mut images = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        let relabel = Permutation::from_images(&images)?;
        let relabeled = p.apply_permutation(&relabel)?;

        let exponents: Vec<u32> = heads.iter().map(|&(_, e)| e).collect();
        let mut next_free = wt + 1;
        let columns = exponents
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let column: Vec<usize> = std::iter::once(i + 1)
                    .chain(next_free..next_free + k as usize)
                    .collect();
                next_free += k as usize;
                column
            })
            .collect();

        Ok(SymmetricSetup {
            relabel,
            relabeled,
            exponents,
            columns,
            coefficient,
        })
    }

    fn field(&self) -> FieldSpec {
        self.relabeled.field()
    }

    fn nvars(&self) -> usize {
        self.relabeled.nvars()
    }

    /// `Δ(J₁)⋯Δ(J_l)`.
    pub fn target(&self) -> Result<Polynomial> {
        self.columns
            .iter()
            .try_fold(Polynomial::one(self.field(), self.nvars()), |acc, j| {
                Ok(&acc * &vandermonde(j, self.field(), self.nvars())?)
            })
    }

    /// `Δ(I₁)⋯Δ(I_l)`.
    fn free_vandermonde(&self) -> Result<Polynomial> {
        self.columns
            .iter()
            .try_fold(Polynomial::one(self.field(), self.nvars()), |acc, j| {
                Ok(&acc * &vandermonde(&j[1..], self.field(), self.nvars())?)
            })
    }

    /// `k₁!⋯k_l!` as an integer.
    pub fn factorial_product(&self) -> u128 {
        self.exponents
            .iter()
            .map(|&k| (1..=k as u128).product::<u128>())
            .product()
    }

    fn into_certificate(
        self,
        terms: BTreeMap<Permutation, Polynomial>,
        original: &Polynomial,
    ) -> Result<Certificate> {
        let target = self.target()?;
        let entries = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(sigma, cofactor)| CertificateEntry {
                cofactor,
                generator: GeneratorRef::Sym {
                    perm: sigma.compose(&self.relabel),
                    index: 0,
                },
            })
            .collect();
        Ok(Certificate::new(target, entries, vec![original.clone()]))
    }
}

/// `Σ_{σ ∈ S_{J₁}×⋯×S_{J_l}} ε(σ) σ(Δ(I₁)⋯Δ(I_l)·P')` before any
/// normalization, where `P'` is the relabeled polynomial.
///
/// When `m` has coefficient `c` in `P` this equals `c·k₁!⋯k_l!·Δ(J₁)⋯Δ(J_l)`.
pub fn antisymmetrized_sum(
    p: &Polynomial,
    m: &Monomial,
    n: usize,
) -> Result<(SymmetricSetup, Polynomial)> {
    let setup = SymmetricSetup::new(p, m, n)?;
    let q = &setup.free_vandermonde()? * &setup.relabeled;
    let mut sum = Polynomial::zero(setup.field(), n);
    for sigma in Permutation::young_subgroup(n, &setup.columns) {
        let image = q.apply_permutation(&sigma)?;
        sum = if sigma.sign() == 1 {
            &sum + &image
        } else {
            &sum - &image
        };
    }
    Ok((setup, sum))
}

/// The antisymmetrization certificate: entries
/// `(ε(σ)·σ(Δ(I₁)⋯Δ(I_l)) / (c·k₁!⋯k_l!), σ·P)` over the Young subgroup of
/// the `J_i`, so `Π(k_i+1)!` entries.
///
/// Needs `k₁!⋯k_l!` invertible in the field, i.e. characteristic 0 or
/// `p > k₁`.
pub fn symmetric_certificate_char0(p: &Polynomial, m: &Monomial, n: usize) -> Result<Certificate> {
    let setup = SymmetricSetup::new(p, m, n)?;
    let field = setup.field();
    let normalizer = setup
        .exponents
        .iter()
        .fold(setup.coefficient.clone(), |acc, &k| {
            &acc * &field.factorial(k)
        })
        .inverse()
        .ok_or_else(|| {
            Error::FactorialNotInvertible(setup.exponents.first().copied().unwrap_or(0))
        })?;

    let free = setup.free_vandermonde()?;
    let group = Permutation::young_subgroup(n, &setup.columns);
    let expected_len: u128 = setup
        .exponents
        .iter()
        .map(|&k| (1..=k as u128 + 1).product::<u128>())
        .product();
    assert_eq!(
        group.len() as u128,
        expected_len,
        "Young subgroup has Π(k_i+1)! elements"
    );

    let terms: BTreeMap<Permutation, Polynomial> = group
        .into_iter()
        .map(|sigma| {
            let sign = field.from_i64(sigma.sign());
            let cofactor = free
                .apply_permutation(&sigma)?
                .scale(&(&sign * &normalizer));
            Ok((sigma, cofactor))
        })
        .collect::<Result<_>>()?;
    let cert = setup.into_certificate(terms, p)?;
    debug_assert!(
        cert.verify(None)?,
        "char-0 symmetric certificate failed to verify"
    );
    Ok(cert)
}

/// The recursive certificate valid over every field.
///
/// With `m`'s coefficient normalized to 1, pick the last column
/// `J_l = (Z₁, …, Z_μ)` still of size ≥ 2 and `τ = (Z₁ Z_μ)`. Then
/// `P − τP = (Z₁ − Z_μ)·Q` where `Q` has top monomial `m/Z₁`, and the
/// certificate for `Q` with `Z_μ` dropped from its column lifts to one for `P`
/// via `R_ρ ← R'_ρ·ρ(M)`, `R_{ρτ} ← −R'_ρ·ρ(M)` with
/// `M = Π_{s=2}^{μ−1}(Z_s − Z_μ)`.
pub fn symmetric_certificate_general(
    p: &Polynomial,
    m: &Monomial,
    n: usize,
) -> Result<Certificate> {
    let setup = SymmetricSetup::new(p, m, n)?;
    let terms = recursive_cofactors(&setup.relabeled, &setup.exponents, &setup.columns)?;
    let cert = setup.into_certificate(terms, p)?;
    debug_assert!(
        cert.verify(None)?,
        "recursive symmetric certificate failed to verify"
    );
    Ok(cert)
}

/// Cofactors `R_σ` with `Σ R_σ·σP = Π Δ(columns)`, where
/// `m = Π X_{columns[i][0]}^{exponents[i]}` is a top-degree monomial of `P`
/// and no other column entry occurs in `P`'s top-degree part.
fn recursive_cofactors(
    p: &Polynomial,
    exponents: &[u32],
    columns: &[Vec<usize>],
) -> Result<BTreeMap<Permutation, Polynomial>> {
    let field = p.field();
    let n = p.nvars();
    let m = Monomial::from_pairs(columns.iter().zip(exponents).map(|(c, &k)| (c[0], k)));
    let c = p.coefficient(&m);
    let c_inv = c
        .inverse()
        .expect("the tracked monomial keeps a nonzero coefficient");

    let Some(l) = exponents.iter().rposition(|&k| k > 0) else {
        // Constant: P = c.
        debug_assert_eq!(p.degree(), Some(0));
        let mut out = BTreeMap::new();
        out.insert(
            Permutation::identity(n),
            Polynomial::constant(field, n, c_inv),
        );
        return Ok(out);
    };

    let normalized = p.scale(&c_inv);
    let column = &columns[l];
    let (head, last) = (column[0], *column.last().expect("nonempty column"));
    let tau = Permutation::transposition(n, head, last);
    let difference = &normalized - &normalized.apply_permutation(&tau)?;
    let linear = &Polynomial::var(field, n, head)? - &Polynomial::var(field, n, last)?;
    let quotient = difference
        .exact_divide(&linear)
        .expect("P - τP is divisible by the transposed variables' difference");

    let mut sub_exponents = exponents.to_vec();
    sub_exponents[l] -= 1;
    let mut sub_columns = columns.to_vec();
    sub_columns[l].pop();
    let inner = recursive_cofactors(&quotient, &sub_exponents, &sub_columns)?;

    let z_last = Polynomial::var(field, n, last)?;
    let multiplier = column[1..column.len() - 1]
        .iter()
        .try_fold(Polynomial::one(field, n), |acc, &s| {
            Ok::<_, Error>(&acc * &(&Polynomial::var(field, n, s)? - &z_last))
        })?;

    let mut out: BTreeMap<Permutation, Polynomial> = BTreeMap::new();
    let mut accumulate = |sigma: Permutation, term: Polynomial| {
        let slot = out
            .entry(sigma)
            .or_insert_with(|| Polynomial::zero(field, n));
        *slot = &*slot + &term;
    };
    for (rho, r) in inner {
        let lifted = &r * &multiplier.apply_permutation(&rho)?;
        accumulate(rho.compose(&tau), -&lifted);
        accumulate(rho, lifted);
    }
    Ok(out
        .into_iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(sigma, r)| (sigma, r.scale(&c_inv)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn poly(text: &str, field: FieldSpec, n: usize) -> Polynomial {
        parse_polynomial(text, field, n).unwrap()
    }

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn square_in_three_variables() {
        let f = FieldSpec::Rational;
        let p = poly("x1^2", f, 3);
        let (setup, sum) = antisymmetrized_sum(&p, &mono(&[(1, 2)]), 3).unwrap();
        assert_eq!(setup.columns, vec![vec![1, 2, 3]]);
        // Σ ε(σ) σ((x2 - x3)·x1²) over S₃ = 2·Δ(1,2,3)
        assert_eq!(
            sum,
            vandermonde(&[1, 2, 3], f, 3).unwrap().scale(&f.from_i64(2))
        );

        let cert = symmetric_certificate_char0(&p, &mono(&[(1, 2)]), 3).unwrap();
        assert_eq!(cert.entries().len(), 6);
        assert_eq!(*cert.target(), vandermonde(&[1, 2, 3], f, 3).unwrap());
        assert!(cert.verify(None).unwrap());
    }

    #[test]
    fn linear_in_two_variables() {
        let f = FieldSpec::Rational;
        let p = poly("x1", f, 2);
        let m = mono(&[(1, 1)]);
        let cert = symmetric_certificate_char0(&p, &m, 2).unwrap();
        assert_eq!(*cert.target(), poly("x1 - x2", f, 2));
        let cofactors: Vec<String> = cert
            .entries()
            .iter()
            .map(|e| e.cofactor.to_string())
            .collect();
        assert_eq!(cofactors, ["1", "-1"]);
        assert!(cert.verify(None).unwrap());
        let general = symmetric_certificate_general(&p, &m, 2).unwrap();
        assert_eq!(general, cert);
    }

    #[test]
    fn lower_order_terms_are_ignored_for_support() {
        let f = FieldSpec::Rational;
        let p = poly("x1*x2 + x3", f, 4);
        let m = mono(&[(1, 1), (2, 1)]);
        let cert = symmetric_certificate_char0(&p, &m, 4).unwrap();
        let setup = SymmetricSetup::new(&p, &m, 4).unwrap();
        assert_eq!(setup.columns, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(cert.entries().len(), 4);
        assert!(cert.verify(None).unwrap());
        assert!(symmetric_certificate_general(&p, &m, 4)
            .unwrap()
            .verify(None)
            .unwrap());
    }

    #[test]
    fn relabels_scattered_support() {
        let f = FieldSpec::Rational;
        let p = poly("3*x4*x2^2 - x5^3 + x1", f, 7);
        let m = mono(&[(2, 2), (4, 1)]);
        let setup = SymmetricSetup::new(&p, &m, 7).unwrap();
        assert_eq!(setup.relabel.apply(2), 1);
        assert_eq!(setup.relabel.apply(4), 2);
        assert_eq!(setup.relabel.apply(5), 3);
        assert_eq!(setup.columns, vec![vec![1, 4, 5], vec![2, 6]]);
        let (_, sum) = antisymmetrized_sum(&p, &m, 7).unwrap();
        assert_eq!(sum, setup.target().unwrap().scale(&f.from_i64(3 * 2)));
        assert!(symmetric_certificate_char0(&p, &m, 7)
            .unwrap()
            .verify(None)
            .unwrap());
        assert!(symmetric_certificate_general(&p, &m, 7)
            .unwrap()
            .verify(None)
            .unwrap());
    }

    #[test]
    fn constant_polynomial_base_case() {
        let f = FieldSpec::Prime(5);
        let p = poly("3", f, 2);
        let cert = symmetric_certificate_general(&p, &Monomial::one(), 2).unwrap();
        assert_eq!(*cert.target(), Polynomial::one(f, 2));
        assert_eq!(cert.entries().len(), 1);
        assert_eq!(cert.entries()[0].cofactor.to_string(), "2");
    }

    #[test]
    fn small_characteristic_needs_the_recursion() {
        let f2 = FieldSpec::Prime(2);
        let p = poly("x1^2", f2, 3);
        let m = mono(&[(1, 2)]);
        assert_eq!(
            symmetric_certificate_char0(&p, &m, 3),
            Err(Error::FactorialNotInvertible(2))
        );
        let cert = symmetric_certificate_general(&p, &m, 3).unwrap();
        assert!(cert.verify(None).unwrap());
        assert_eq!(*cert.target(), vandermonde(&[1, 2, 3], f2, 3).unwrap());
    }

    #[test]
    fn preconditions() {
        let f = FieldSpec::Rational;
        assert!(matches!(
            symmetric_certificate_char0(&poly("x1 + x2", f, 2), &mono(&[(1, 1)]), 2),
            Err(Error::InsufficientVariables { .. })
        ));
        assert!(matches!(
            symmetric_certificate_general(&poly("x1^2 + x2", f, 4), &mono(&[(2, 1)]), 4),
            Err(Error::Precondition(_))
        ));
        assert!(symmetric_certificate_general(&poly("x1", f, 3), &mono(&[(1, 1)]), 4).is_err());
    }
}
