use std::collections::BTreeMap;

use crate::combinatorics::{dominance_chain, Partition};
use crate::error::{Error, Result};
use crate::polyring::{sort_with_sign, vandermonde, FieldSpec, Monomial, Polynomial};
use crate::specht::{Certificate, CertificateEntry, ColumnBlocks, GeneratorRef};

/// Certificate for `Δ(A)Δ(B) ∈ ⟨Δ(S₁)Δ(S₂) : |S₁| = a−1, |S₂| = b+1⟩`.
///
/// With `A = (α₁ < ⋯ < α_a)` and `B` ascending, put
/// `Q = X_{α₁}^{a−b−1} · Δ(α₂,…,α_a) · Δ(α₁, B)`; then
/// `Δ(A)Δ(B) = Σᵢ ε((α₁ αᵢ)) · (α₁ αᵢ)Q`, one entry per `αᵢ`. Each entry's
/// generator is stored in canonical (ascending) column form with the sign
/// moved into the cofactor. Needs `a − b ≥ 2`; holds in every characteristic.
pub fn dominance_step_certificate(
    a_set: &[usize],
    b_set: &[usize],
    field: FieldSpec,
    nvars: usize,
) -> Result<Certificate> {
    let (a, b) = (a_set.len(), b_set.len());
    if a < b + 2 {
        return Err(Error::Precondition(format!(
            "column sizes a = {a}, b = {b} need a - b >= 2"
        )));
    }
    let mut alpha = a_set.to_vec();
    alpha.sort_unstable();
    let mut beta = b_set.to_vec();
    beta.sort_unstable();
    if let Some(&dup) = alpha.iter().find(|i| beta.contains(i)) {
        return Err(Error::DuplicateIndex(dup));
    }

    let target = &vandermonde(&alpha, field, nvars)? * &vandermonde(&beta, field, nvars)?;
    let power = (a - b - 1) as u32;
    let mut entries = Vec::with_capacity(a);
    for (i, &alpha_i) in alpha.iter().enumerate() {
        // Apply the transposition (α₁ αᵢ) to Q's two ordered columns.
        let swap = |v: usize| {
            if v == alpha[0] {
                alpha_i
            } else if v == alpha_i {
                alpha[0]
            } else {
                v
            }
        };
        let first: Vec<usize> = alpha[1..].iter().map(|&v| swap(v)).collect();
        let second: Vec<usize> = std::iter::once(alpha_i)
            .chain(beta.iter().copied())
            .collect();
        let (s1, sign1) = sort_with_sign(&first);
        let (s2, sign2) = sort_with_sign(&second);
        let epsilon = if i == 0 { 1 } else { -1 };
        let cofactor = Polynomial::monomial(
            field,
            nvars,
            Monomial::from_pairs([(alpha_i, power)]),
            field.from_i64(epsilon * sign1 * sign2),
        );
        entries.push(CertificateEntry {
            cofactor,
            generator: GeneratorRef::Specht(ColumnBlocks::new(vec![s1, s2])?),
        });
    }
    let cert = Certificate::new(target, entries, vec![]);
    debug_assert!(cert.verify(None)?, "step certificate failed to verify");
    Ok(cert)
}

/// Certificate expressing the Specht generator of `columns` (shape `λ`) as a
/// combination of shape-`μ` generators, for `λ ⊴ μ`.
///
/// Walks a dominance chain of column-size partitions from `λ^⊥` down to
/// `μ^⊥`; each step moves one box from a column of size `a` to one of size
/// `b` (possibly a new column), with `a − b ≥ 2`, and substitutes the step
/// certificate into every current entry. Entries with the same generator are
/// merged.
pub fn dominance_certificate(
    columns: &ColumnBlocks,
    upper: &Partition,
    field: FieldSpec,
    nvars: usize,
) -> Result<Certificate> {
    if !columns.covers(nvars) {
        return Err(Error::Precondition(format!(
            "columns {columns} do not cover 1..={nvars}"
        )));
    }
    let lower = columns.shape();
    if !upper.dominates(&lower)? {
        return Err(Error::NotDominated {
            lower,
            upper: upper.clone(),
        });
    }
    // λ ⊴ μ  ⟺  μ^⊥ ⊴ λ^⊥, so the column chain runs from μ^⊥ up to λ^⊥ and
    // is walked backwards.
    let chain = dominance_chain(&upper.conjugate(), &columns.column_sizes())?;

    let mut current: BTreeMap<ColumnBlocks, Polynomial> = BTreeMap::new();
    current.insert(columns.clone(), Polynomial::one(field, nvars));
    for step in chain.windows(2).rev() {
        let (finer, coarser) = (&step[0], &step[1]);
        let len = coarser.len().max(finer.len());
        let shrink = (0..len)
            .find(|&i| coarser.part(i) > finer.part(i))
            .expect("some column shrinks");
        let grow = (0..len)
            .find(|&i| coarser.part(i) < finer.part(i))
            .expect("some column grows");
        let (a, b) = (coarser.part(shrink), coarser.part(grow));

        let mut next: BTreeMap<ColumnBlocks, Polynomial> = BTreeMap::new();
        for (blocks, cofactor) in current {
            let a_pos = blocks
                .blocks()
                .iter()
                .position(|blk| blk.len() == a)
                .expect("column of size a");
            let b_pos = if b == 0 {
                None
            } else {
                Some(
                    blocks
                        .blocks()
                        .iter()
                        .position(|blk| blk.len() == b)
                        .expect("column of size b"),
                )
            };
            let a_set = &blocks.blocks()[a_pos];
            let b_set: &[usize] = b_pos.map_or(&[], |k| &blocks.blocks()[k]);
            let others: Vec<Vec<usize>> = blocks
                .blocks()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != a_pos && Some(k) != b_pos)
                .map(|(_, blk)| blk.clone())
                .collect();
            let step_cert = dominance_step_certificate(a_set, b_set, field, nvars)?;
            for entry in step_cert.entries() {
                let GeneratorRef::Specht(pair) = &entry.generator else {
                    unreachable!("step certificates only use Specht generators");
                };
                let mut merged = others.clone();
                merged.extend(pair.blocks().iter().cloned());
                let key = ColumnBlocks::new(merged)?;
                let term = &cofactor * &entry.cofactor;
                let slot = next
                    .entry(key)
                    .or_insert_with(|| Polynomial::zero(field, nvars));
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, c| !c.is_zero());
        current = next;
    }

    let target = columns.polynomial(field, nvars)?;
    let entries = current
        .into_iter()
        .map(|(blocks, cofactor)| CertificateEntry {
            cofactor,
            generator: GeneratorRef::Specht(blocks),
        })
        .collect();
    let cert = Certificate::new(target, entries, vec![]);
    debug_assert!(cert.verify(None)?, "dominance certificate failed to verify");
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn q(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, FieldSpec::Rational, n).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn three_one_step() {
        let f = FieldSpec::Rational;
        let cert = dominance_step_certificate(&[1, 2, 3], &[4], f, 4).unwrap();
        assert_eq!(cert.entries().len(), 3);
        assert!(cert.verify(None).unwrap());
        let expected = [
            ("x1", vec![vec![2, 3], vec![1, 4]]),
            ("-x2", vec![vec![1, 3], vec![2, 4]]),
            ("x3", vec![vec![1, 2], vec![3, 4]]),
        ];
        for (entry, (cof, cols)) in cert.entries().iter().zip(expected) {
            assert_eq!(entry.cofactor, q(cof, 4));
            assert_eq!(
                entry.generator,
                GeneratorRef::Specht(ColumnBlocks::new(cols).unwrap())
            );
        }
        assert!(!cert.target().support().contains(&4));
    }

    #[test]
    fn degenerate_step_into_an_empty_column() {
        let cert = dominance_step_certificate(&[1, 2], &[], FieldSpec::Rational, 2).unwrap();
        assert_eq!(*cert.target(), q("x1 - x2", 2));
        assert_eq!(cert.entries().len(), 2);
        assert!(cert.verify(None).unwrap());
    }

    #[test]
    fn step_needs_a_gap_of_two() {
        assert!(dominance_step_certificate(&[1, 2], &[3], FieldSpec::Rational, 3).is_err());
        assert!(dominance_step_certificate(&[1, 2, 3], &[3], FieldSpec::Rational, 3).is_err());
    }

    #[test]
    fn steps_hold_in_small_characteristic() {
        for f in [FieldSpec::Prime(2), FieldSpec::Prime(3)] {
            let cert = dominance_step_certificate(&[2, 4, 5, 6], &[1, 3], f, 6).unwrap();
            assert!(cert.verify(None).unwrap());
        }
    }

    #[test]
    fn reflexive_certificate_is_trivial() {
        let cols = ColumnBlocks::new(vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        let cert = dominance_certificate(&cols, &p("3,1"), FieldSpec::Rational, 4).unwrap();
        assert_eq!(cert.entries().len(), 1);
        assert_eq!(cert.entries()[0].cofactor, q("1", 4));
    }

    #[test]
    fn chained_certificates() {
        let f = FieldSpec::Rational;
        let col3 = ColumnBlocks::new(vec![vec![1, 2, 3]]).unwrap();
        let cert = dominance_certificate(&col3, &p("2,1"), f, 3).unwrap();
        assert!(cert.verify(None).unwrap());
        assert!(cert.entries().iter().all(|e| match &e.generator {
            GeneratorRef::Specht(cb) => cb.shape() == p("2,1"),
            _ => false,
        }));

        let col4 = ColumnBlocks::new(vec![vec![1, 2, 3, 4]]).unwrap();
        let cert = dominance_certificate(&col4, &p("2,2"), f, 4).unwrap();
        assert!(cert.verify(None).unwrap());
        let cert = dominance_certificate(&col4, &p("4"), f, 4).unwrap();
        assert!(cert.verify(None).unwrap());
    }

    #[test]
    fn refuses_non_dominated_targets() {
        let cols = ColumnBlocks::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(matches!(
            dominance_certificate(&cols, &p("2,1,1"), FieldSpec::Rational, 4),
            Err(Error::NotDominated { .. })
        ));
    }
}
