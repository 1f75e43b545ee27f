//! Solving symmetric polynomial systems through their orbit types.
//!
//! If the symmetric ideal contains `P` of degree `d` with
//! `d + wt(P_d) ≤ n`, then for any `m ∈ Mon(P_d)` no solution has an orbit
//! type dominated by `μ(m)^⊥`. The solution set modulo `S_n` is then the
//! union, over the remaining orbit types `ν`, of the solutions of the system
//! restricted to points with `len(ν)` blocks of repeated coordinates. Over a
//! prime field those restricted systems are small enough to enumerate.

mod report;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{
    admissible_partitions, mu_of_monomial, orbit_type, OrbitType, Partition,
};
use crate::error::{Error, Result};
use crate::polyring::{FieldSpec, Monomial, Polynomial, Scalar};

pub use report::{solve, SolveReport};

/// Default cap on the number of points a finite-field enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Generators `Q₁, …, Q_l` of the symmetric ideal `⟨σQ_i : σ ∈ S_n⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSystem {
    generators: Vec<Polynomial>,
    n: usize,
    field: FieldSpec,
}

impl SymmetricSystem {
    pub fn new(generators: Vec<Polynomial>, n: usize, field: FieldSpec) -> Result<Self> {
        for g in &generators {
            field.check_same(&g.field())?;
            if g.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: g.nvars(),
                });
            }
        }
        Ok(SymmetricSystem {
            generators,
            n,
            field,
        })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

/// A qualifying generator together with one of its top-degree monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingDatum {
    pub generator: usize,
    pub degree: u32,
    pub monomial: Monomial,
    pub mu: Partition,
    pub mu_perp: Partition,
}

/// Every `(P, m, μ(m), μ(m)^⊥)` with `P` a generator satisfying
/// `deg P + wt(P_d) ≤ n` and `m ∈ Mon(P_d)`. Empty when no generator
/// qualifies.
pub fn leading_data(system: &SymmetricSystem) -> Vec<LeadingDatum> {
    let mut out = Vec::new();
    for (index, p) in system.generators.iter().enumerate() {
        let Some(d) = p.degree() else { continue };
        let top = p.homogeneous_component(d);
        if d as usize + top.weight() > system.n {
            continue;
        }
        for m in top.monomials() {
            let mu = mu_of_monomial(m, system.n).expect("d + wt(m) <= d + wt(P_d) <= n");
            out.push(LeadingDatum {
                generator: index,
                degree: d,
                monomial: m.clone(),
                mu_perp: mu.conjugate(),
                mu,
            });
        }
    }
    out
}

/// The qualifying monomial with the fewest admissible orbit types; ties go
/// to the smallest monomial in graded reverse lexicographic order.
pub fn choose_monomial(system: &SymmetricSystem) -> Option<LeadingDatum> {
    leading_data(system).into_iter().min_by(|a, b| {
        let count = |l: &LeadingDatum| {
            admissible_partitions(system.n, &l.monomial)
                .expect("leading data satisfy the support condition")
                .len()
        };
        count(a)
            .cmp(&count(b))
            .then_with(|| a.monomial.cmp(&b.monomial))
    })
}

/// Block index (1-based) of each coordinate when `ν`'s blocks are the
/// consecutive ranges of sizes `ν₁, ν₂, …`.
fn block_of(nu: &Partition) -> Vec<usize> {
    nu.parts()
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| std::iter::repeat_n(b + 1, size))
        .collect()
}

/// `P^ν`: substitute `X_j ↦ Z_b` for `j` in block `b` of `ν`.
pub fn restrict(p: &Polynomial, nu: &Partition) -> Result<Polynomial> {
    if nu.weight() != p.nvars() {
        return Err(Error::IncomparableWeights {
            left: nu.weight(),
            right: p.nvars(),
        });
    }
    let blocks = block_of(nu);
    Ok(p.substitute_vars(nu.len(), |v| blocks[v - 1]))
}

/// The generators `P^ν` for `P` ranging over the images `σQ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedSystem {
    pub nu: Partition,
    pub generators: Vec<Polynomial>,
}

/// All distinct restrictions `(σQ_i)^ν`, σ ∈ S_n, without touching `S_n`:
/// a restriction only depends on which block each support variable of `Q_i`
/// lands in, subject to block capacities `ν_b`.
pub fn restricted_system(system: &SymmetricSystem, nu: &Partition) -> Result<RestrictedSystem> {
    if nu.weight() != system.n {
        return Err(Error::IncomparableWeights {
            left: nu.weight(),
            right: system.n,
        });
    }
    let k = nu.len();
    let mut images = BTreeSet::new();
    for q in &system.generators {
        let support: Vec<usize> = q.support().into_iter().collect();
        let mut capacity = nu.parts().to_vec();
        let mut assignment = vec![0usize; system.n + 1];
        assign_blocks(&support, 0, &mut capacity, &mut assignment, &mut |f| {
            images.insert(q.substitute_vars(k, |v| f[v]));
        });
    }
    Ok(RestrictedSystem {
        nu: nu.clone(),
        generators: images.into_iter().collect(),
    })
}

fn assign_blocks(
    support: &[usize],
    at: usize,
    capacity: &mut [usize],
    assignment: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    if at == support.len() {
        emit(assignment);
        return;
    }
    for b in 0..capacity.len() {
        if capacity[b] == 0 {
            continue;
        }
        capacity[b] -= 1;
        assignment[support[at]] = b + 1;
        assign_blocks(support, at + 1, capacity, assignment, emit);
        capacity[b] += 1;
    }
}

/// `(x₁,…,x₁, x₂,…,x₂, …)` with `x_b` repeated `ν_b` times.
pub fn expand_point(x: &[Scalar], nu: &Partition) -> Result<Vec<Scalar>> {
    if x.len() != nu.len() {
        return Err(Error::DimensionMismatch {
            expected: nu.len(),
            actual: x.len(),
        });
    }
    Ok(block_of(nu).iter().map(|&b| x[b - 1].clone()).collect())
}

/// Canonical representative of an `S_n`-orbit: coordinates sorted by the
/// fixed order on field elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionOrbit {
    pub representative: Vec<Scalar>,
    pub orbit_type: OrbitType,
}

impl SolutionOrbit {
    pub fn distinct_coordinates(&self) -> usize {
        self.orbit_type.len()
    }
}

impl fmt::Display for SolutionOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.representative.iter().map(Scalar::to_string).collect();
        write!(f, "({})", coords.join(","))
    }
}

pub fn canonical_orbit(y: &[Scalar]) -> SolutionOrbit {
    let mut representative = y.to_vec();
    representative.sort();
    SolutionOrbit {
        orbit_type: orbit_type(&representative),
        representative,
    }
}

/// Points of `𝔽_p^k` where every polynomial vanishes, in index order.
fn common_zeros(field: FieldSpec, k: usize, polys: &[Polynomial]) -> Vec<Vec<Scalar>> {
    let elements = field.elements().expect("prime field");
    let p = elements.len() as u128;
    let total = p.pow(k as u32);
    let decode = |mut idx: u128| -> Vec<Scalar> {
        (0..k)
            .map(|_| {
                let digit = (idx % p) as usize;
                idx /= p;
                elements[digit].clone()
            })
            .collect()
    };
    (0..total as u64)
        .into_par_iter()
        .filter_map(|idx| {
            let x = decode(idx as u128);
            polys.iter().all(|g| g.vanishes_at(&x)).then_some(x)
        })
        .collect()
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Solution orbits through the restricted systems of the orbit types not
/// dominated by `μ(m)^⊥`. `m` must come from [`leading_data`].
pub fn solve_over_finite_field(
    system: &SymmetricSystem,
    m: &Monomial,
    budget: u128,
) -> Result<BTreeSet<SolutionOrbit>> {
    let FieldSpec::Prime(p) = system.field else {
        return Err(Error::NotFiniteField);
    };
    if !leading_data(system).iter().any(|l| &l.monomial == m) {
        return Err(Error::Precondition(format!(
            "{m} is not a top-degree monomial of a generator with deg + wt <= n"
        )));
    }
    let admissible = admissible_partitions(system.n, m)?;
    let required: u128 = admissible
        .iter()
        .map(|nu| (p as u128).pow(nu.len() as u32))
        .sum();
    check_budget(required, budget)?;

    let mut orbits = BTreeSet::new();
    for nu in &admissible {
        let restricted = restricted_system(system, nu)?;
        for x in common_zeros(system.field, nu.len(), &restricted.generators) {
            orbits.insert(canonical_orbit(&expand_point(&x, nu)?));
        }
    }
    Ok(orbits)
}

/// Every solution orbit, by scanning all of `𝔽_p^n` against every distinct
/// image `σQ_i`. The oracle for [`solve_over_finite_field`].
pub fn brute_force_variety(
    system: &SymmetricSystem,
    budget: u128,
) -> Result<BTreeSet<SolutionOrbit>> {
    let FieldSpec::Prime(p) = system.field else {
        return Err(Error::NotFiniteField);
    };
    check_budget((p as u128).pow(system.n as u32), budget)?;
    let images = restricted_system(system, &Partition::column(system.n))?;
    Ok(common_zeros(system.field, system.n, &images.generators)
        .iter()
        .map(|y| canonical_orbit(y))
        .collect())
}

/// Outcome of checking that solutions avoid the strata `H_λ`, `λ ⊴ μ(m)^⊥`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataReport {
    pub orbits: usize,
    pub max_distinct_coordinates: usize,
    /// Degree `d` of the generator: the bound on the variety's dimension and
    /// on the number of distinct coordinates of any solution.
    pub dimension_bound: u32,
}

pub fn empty_strata_report(
    solutions: &BTreeSet<SolutionOrbit>,
    mu_perp: &Partition,
    degree: u32,
) -> Result<StrataReport> {
    for orbit in solutions {
        if mu_perp.dominates(&orbit.orbit_type)? {
            return Err(Error::StratumViolation {
                representative: orbit.to_string(),
                orbit_type: orbit.orbit_type.clone(),
                mu_perp: mu_perp.clone(),
            });
        }
    }
    Ok(StrataReport {
        orbits: solutions.len(),
        max_distinct_coordinates: solutions
            .iter()
            .map(SolutionOrbit::distinct_coordinates)
            .max()
            .unwrap_or(0),
        dimension_bound: degree,
    })
}
