use crate::combinatorics::Tableau;
use crate::error::{Error, Result};
use crate::polyring::{FieldSpec, Polynomial};

/// `Δ(S) = Π_{j<k} (X_{s_j} − X_{s_k})` for the ordered index sequence `S`.
///
/// Order matters: swapping two entries of `S` flips the sign.
pub fn vandermonde(indices: &[usize], field: FieldSpec, nvars: usize) -> Result<Polynomial> {
    let mut seen = vec![false; nvars + 1];
    for &i in indices {
        if i == 0 || i > nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::DuplicateIndex(i));
        }
    }
    let mut product = Polynomial::one(field, nvars);
    for (j, &a) in indices.iter().enumerate() {
        for &b in &indices[j + 1..] {
            let factor = &Polynomial::var(field, nvars, a)? - &Polynomial::var(field, nvars, b)?;
            product = &product * &factor;
        }
    }
    Ok(product)
}

/// The Specht polynomial of a tableau: the product of the Vandermondes of
/// its columns, each column read top to bottom.
pub fn specht_polynomial(tableau: &Tableau, field: FieldSpec) -> Result<Polynomial> {
    let n = tableau.shape().weight();
    tableau
        .columns()
        .iter()
        .try_fold(Polynomial::one(field, n), |acc, column| {
            Ok(&acc * &vandermonde(column, field, n)?)
        })
}

/// Sign of the permutation sorting `seq` ascending, together with the sorted
/// sequence: `Δ(seq) = sign · Δ(sorted)`.
pub(crate) fn sort_with_sign(seq: &[usize]) -> (Vec<usize>, i64) {
    let mut inversions = 0usize;
    for (j, a) in seq.iter().enumerate() {
        inversions += seq[j + 1..].iter().filter(|b| *b < a).count();
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    (sorted, if inversions.is_multiple_of(2) { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn q(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, FieldSpec::Rational, n).unwrap()
    }

    #[test]
    fn small_vandermondes() {
        let f = FieldSpec::Rational;
        assert_eq!(vandermonde(&[], f, 3).unwrap(), Polynomial::one(f, 3));
        assert_eq!(vandermonde(&[2], f, 3).unwrap(), Polynomial::one(f, 3));
        assert_eq!(vandermonde(&[1, 2], f, 3).unwrap(), q("x1 - x2", 3));
        assert_eq!(vandermonde(&[1, 1], f, 3), Err(Error::DuplicateIndex(1)));
        assert!(vandermonde(&[1, 4], f, 3).is_err());
    }

    #[test]
    fn ordered_example() {
        let f = FieldSpec::Rational;
        let expected = &(&q("x4 - x8", 8) * &q("x4 - x3", 8)) * &q("x8 - x3", 8);
        assert_eq!(vandermonde(&[4, 8, 3], f, 8).unwrap(), expected);
    }

    #[test]
    fn adjacent_swap_negates() {
        let f = FieldSpec::Prime(7);
        let a = vandermonde(&[1, 3, 2, 4], f, 4).unwrap();
        let b = vandermonde(&[1, 2, 3, 4], f, 4).unwrap();
        assert_eq!(a, -&b);
    }

    #[test]
    fn sort_sign_matches_vandermonde() {
        let f = FieldSpec::Rational;
        for seq in [
            vec![3, 1, 2],
            vec![2, 1],
            vec![4, 3, 2, 1],
            vec![1, 4, 2, 3],
        ] {
            let (sorted, sign) = sort_with_sign(&seq);
            let lhs = vandermonde(&seq, f, 4).unwrap();
            let rhs = vandermonde(&sorted, f, 4).unwrap().scale(&f.from_i64(sign));
            assert_eq!(lhs, rhs, "{seq:?}");
        }
    }

    #[test]
    fn tableau_shapes() {
        let f = FieldSpec::Rational;
        let row = Tableau::new(vec![vec![3, 1, 2]]).unwrap();
        assert_eq!(specht_polynomial(&row, f).unwrap(), Polynomial::one(f, 3));
        let col = Tableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(
            specht_polynomial(&col, f).unwrap(),
            vandermonde(&[1, 2, 3], f, 3).unwrap()
        );
    }
}
