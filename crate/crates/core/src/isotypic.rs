//! Which isotypic components of `K[X₁,…,X_n]/I` must vanish.
//!
//! When the symmetric ideal `I` contains `P` with `deg P + wt(P_d) ≤ n`, the
//! component of type `λ` is zero for every `λ ⊴ μ(m)^⊥`, `m ∈ Mon(P_d)`. For
//! a symmetry-reduced sums-of-squares program this removes the blocks of size
//! `s_λ = dim S^λ`; the report below counts how much is removed. Everything
//! here is combinatorial and independent of the field.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::combinatorics::{mu_of_monomial, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// Largest `n` for which `n!` fits the `u128` totals of a report.
pub const MAX_REPORT_N: usize = 34;

fn check_monomial(n: usize, m: &Monomial) -> Result<Partition> {
    if m.is_one() {
        return Err(Error::Precondition(
            "the monomial must have positive degree".into(),
        ));
    }
    Ok(mu_of_monomial(m, n)?.conjugate())
}

/// All `λ ⊢ n` with `λ ⊴ μ(m)^⊥`, in reverse lexicographic order.
pub fn killed_partitions(n: usize, m: &Monomial) -> Result<Vec<Partition>> {
    let mu_perp = check_monomial(n, m)?;
    Ok(partitions_of(n, None)
        .into_iter()
        .filter(|lambda| mu_perp.dominates_unchecked(lambda))
        .collect())
}

/// `dim S^λ = n! / Π hook(i, j)`.
pub fn specht_dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut numerator = BigUint::one();
    for k in 2..=lambda.weight() {
        numerator *= k as u64;
    }
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            hooks *= hook as u64;
        }
    }
    numerator / hooks
}

/// Smallest number of variables at which a polynomial whose top-degree part
/// contains `m`, originally given in `n0` variables, starts to qualify.
pub fn activation_threshold(n0: usize, m: &Monomial) -> usize {
    n0.max(m.degree() as usize + m.weight())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsotypicReport {
    pub n: usize,
    pub d: u32,
    #[serde(serialize_with = "display")]
    pub monomial: Monomial,
    pub mu_perp: Partition,
    pub killed: Vec<Partition>,
    pub surviving: Vec<Partition>,
    pub dims: BTreeMap<Partition, u128>,
    /// `Σ s_λ²` over the killed labels.
    pub killed_total: u128,
    /// `Σ s_λ²` over the surviving labels; with `killed_total` it adds up to `n!`.
    pub surviving_total: u128,
    pub eliminated_fraction: f64,
    /// Least `n` with `deg m + wt m ≤ n`.
    pub activation_n: usize,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl IsotypicReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Killed and surviving labels with their block sizes.
///
/// Fails with [`Error::InsufficientVariables`] below the activation
/// threshold, whose `required` field is that threshold.
pub fn pruning_report(n: usize, m: &Monomial) -> Result<IsotypicReport> {
    if n > MAX_REPORT_N {
        return Err(Error::Precondition(format!(
            "reports are limited to n <= {MAX_REPORT_N}"
        )));
    }
    let mu_perp = check_monomial(n, m)?;
    let (killed, surviving): (Vec<Partition>, Vec<Partition>) = partitions_of(n, None)
        .into_iter()
        .partition(|lambda| mu_perp.dominates_unchecked(lambda));
    let dims: BTreeMap<Partition, u128> = killed
        .iter()
        .chain(&surviving)
        .map(|lambda| {
            let s = specht_dimension(lambda).to_u128().expect("n <= 34");
            (lambda.clone(), s)
        })
        .collect();
    let total = |labels: &[Partition]| labels.iter().map(|l| dims[l] * dims[l]).sum::<u128>();
    let killed_total = total(&killed);
    let surviving_total = total(&surviving);
    Ok(IsotypicReport {
        n,
        d: m.degree(),
        monomial: m.clone(),
        mu_perp,
        eliminated_fraction: killed_total as f64 / (killed_total + surviving_total) as f64,
        killed,
        surviving,
        dims,
        killed_total,
        surviving_total,
        activation_n: activation_threshold(0, m),
    })
}
