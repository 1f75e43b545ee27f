//! Helpers and independent oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use specht_core::combinatorics::Partition;
use specht_core::polyring::{FieldSpec, Monomial, Permutation, Polynomial, Scalar};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn mono(pairs: &[(usize, u32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

/// Prefix-sum dominance written out directly from the definition.
pub fn naive_dominates(mu: &[usize], lambda: &[usize]) -> bool {
    assert_eq!(mu.iter().sum::<usize>(), lambda.iter().sum::<usize>());
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0, 0);
    for i in 0..len {
        a += mu.get(i).copied().unwrap_or(0);
        b += lambda.get(i).copied().unwrap_or(0);
        if a < b {
            return false;
        }
    }
    true
}

/// All partitions of `n` by plain recursion on the largest part.
pub fn naive_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of a shape, by removing the cell that
/// holds the largest entry in every possible way.
pub fn count_standard_tableaux(shape: &[usize]) -> u128 {
    if shape.iter().sum::<usize>() <= 1 {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let is_corner = shape[i] > 0 && shape.get(i + 1).copied().unwrap_or(0) < shape[i];
        if is_corner {
            let mut smaller = shape.to_vec();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += count_standard_tableaux(&smaller);
        }
    }
    total
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Every permutation of `1..=n`, as 1-based image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation::from_images(prefix).unwrap());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            prefix.push(v);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// All points of `𝔽_p^n`.
pub fn all_points(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let elements = field.elements().unwrap();
    let mut points = vec![vec![]];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|pt| {
                elements.iter().map(move |e| {
                    let mut next = pt.clone();
                    next.push(e.clone());
                    next
                })
            })
            .collect();
    }
    points
}

/// Random polynomial with up to `max_terms` terms, exponents below `max_exp`
/// and small integer coefficients.
pub fn arb_polynomial(
    field: FieldSpec,
    nvars: usize,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..max_exp, nvars), -6i64..=6);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            field,
            nvars,
            terms.into_iter().map(|(exps, c)| {
                let m = Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i + 1, e)));
                (m, field.from_i64(c))
            }),
        )
        .unwrap()
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

pub fn arb_point(field: FieldSpec, n: usize, range: i64) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-range..=range, n)
        .prop_map(move |xs| xs.into_iter().map(|x| field.from_i64(x)).collect())
}
