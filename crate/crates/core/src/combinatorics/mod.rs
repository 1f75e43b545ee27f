//! Partitions, tableaux, dominance, and the partition attached to a monomial.

mod partition;
mod tableau;

pub use partition::{dominance_chain, orbit_type, partitions_of, OrbitType, Partition};
pub use tableau::Tableau;

use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// `μ(m) = (λ₁+1, …, λ_l+1, 1^{n−d−l})` where `λ` are the sorted partial
/// degrees of `m`, `d = deg m` and `l = wt m`. Requires `d + l ≤ n`.
pub fn mu_of_monomial(m: &Monomial, n: usize) -> Result<Partition> {
    let d = m.degree() as usize;
    let l = m.weight();
    if d + l > n {
        return Err(Error::InsufficientVariables {
            required: d + l,
            available: n,
        });
    }
    let mut parts: Vec<usize> = m.exponents().map(|(_, e)| e as usize + 1).collect();
    parts.extend(std::iter::repeat_n(1, n - d - l));
    Ok(Partition::from_unsorted(parts))
}

/// The partitions `ν ⊢ n` that are not dominated by `μ(m)^⊥`: the only orbit
/// types a point of a symmetric variety can have once the ideal contains a
/// polynomial with leading monomial `m`.
///
/// Every returned partition has at most `deg m` parts.
pub fn admissible_partitions(n: usize, m: &Monomial) -> Result<Vec<Partition>> {
    let mu_perp = mu_of_monomial(m, n)?.conjugate();
    let d = m.degree() as usize;
    let admissible: Vec<Partition> = partitions_of(n, None)
        .into_iter()
        .filter(|nu| !mu_perp.dominates_unchecked(nu))
        .collect();
    assert!(
        admissible.iter().all(|nu| nu.len() <= d),
        "admissible partition longer than deg m = {d}"
    );
    Ok(admissible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn mu_examples() {
        assert_eq!(
            mu_of_monomial(&mono(&[(2, 1), (4, 4), (5, 2)]), 12).unwrap(),
            p("5,3,2,1,1")
        );
        assert_eq!(
            mu_of_monomial(&mono(&[(1, 1), (2, 1)]), 4).unwrap(),
            p("2,2")
        );
        assert_eq!(mu_of_monomial(&mono(&[(1, 3)]), 6).unwrap(), p("4,1,1"));
        assert_eq!(
            mu_of_monomial(&mono(&[(1, 3)]), 3),
            Err(Error::InsufficientVariables {
                required: 4,
                available: 3
            })
        );
    }

    #[test]
    fn admissible_examples() {
        let x1x2 = mono(&[(1, 1), (2, 1)]);
        assert_eq!(
            admissible_partitions(4, &x1x2).unwrap(),
            vec![p("4"), p("3,1")]
        );
        assert_eq!(
            admissible_partitions(6, &x1x2).unwrap(),
            vec![p("6"), p("5,1")]
        );
    }

    #[test]
    fn squarefree_monomial_keeps_long_first_rows() {
        for d in 1..=3usize {
            for n in (2 * d + 1)..=10 {
                let m = Monomial::from_pairs((1..=d).map(|i| (i, 1)));
                let mu_perp = mu_of_monomial(&m, n).unwrap().conjugate();
                assert_eq!(mu_perp, Partition::new(vec![n - d, d]).unwrap());
                let expected: Vec<Partition> = partitions_of(n, None)
                    .into_iter()
                    .filter(|nu| nu.part(0) > n - d)
                    .collect();
                assert_eq!(admissible_partitions(n, &m).unwrap(), expected);
            }
        }
    }
}
