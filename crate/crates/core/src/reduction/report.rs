use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{
    brute_force_variety, choose_monomial, empty_strata_report, solve_over_finite_field,
    SolutionOrbit, StrataReport, SymmetricSystem,
};
use crate::combinatorics::{admissible_partitions, Partition};
use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, FieldSpec, Monomial};

#[derive(Deserialize)]
struct SystemWire {
    n: usize,
    field: FieldSpec,
    generators: Vec<String>,
}

impl SymmetricSystem {
    /// Reads `{"n": …, "field": "q" | "gf:P", "generators": [<poly>, …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: SystemWire = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("system JSON: {e}")))?;
        let generators = wire
            .generators
            .iter()
            .map(|g| parse_polynomial(g, wire.field, wire.n))
            .collect::<Result<Vec<_>>>()?;
        SymmetricSystem::new(generators, wire.n, wire.field)
    }
}

/// Everything the reduction pipeline learned about one system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub generator: usize,
    pub degree: u32,
    pub monomial: Monomial,
    pub mu_perp: Partition,
    pub admissible: Vec<Partition>,
    pub orbits: BTreeSet<SolutionOrbit>,
    pub strata: StrataReport,
    /// `None` unless the brute-force comparison was requested.
    pub verified_against_bruteforce: Option<bool>,
}

#[derive(Serialize)]
struct OrbitWire {
    point: Vec<serde_json::Value>,
    #[serde(rename = "type")]
    orbit_type: Partition,
}

#[derive(Serialize)]
struct ReportWire<'a> {
    mu_perp: &'a Partition,
    admissible: &'a [Partition],
    orbits: Vec<OrbitWire>,
    verified_against_bruteforce: bool,
    monomial: String,
    generator: usize,
    degree: u32,
    max_distinct_coordinates: usize,
}

impl SolveReport {
    fn to_wire(&self) -> ReportWire<'_> {
        ReportWire {
            mu_perp: &self.mu_perp,
            admissible: &self.admissible,
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitWire {
                    point: o
                        .representative
                        .iter()
                        .map(|c| match c.residue() {
                            Some(r) => r.into(),
                            None => c.to_string().into(),
                        })
                        .collect(),
                    orbit_type: o.orbit_type.clone(),
                })
                .collect(),
            verified_against_bruteforce: self.verified_against_bruteforce == Some(true),
            monomial: self.monomial.to_string(),
            generator: self.generator,
            degree: self.degree,
            max_distinct_coordinates: self.strata.max_distinct_coordinates,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_wire()).expect("report serializes")
    }
}

/// The full pipeline: pick `m`, solve through the admissible orbit types,
/// check the strata, and optionally compare against brute force.
///
/// A brute-force disagreement is reported through
/// `verified_against_bruteforce`, not as an error.
pub fn solve(system: &SymmetricSystem, verify: bool, budget: u128) -> Result<SolveReport> {
    if !matches!(system.field(), FieldSpec::Prime(_)) {
        return Err(Error::NotFiniteField);
    }
    let datum = choose_monomial(system).ok_or_else(|| {
        Error::Precondition(format!(
            "no generator P has deg(P) + wt(P_d) <= n = {}",
            system.n()
        ))
    })?;
    let admissible = admissible_partitions(system.n(), &datum.monomial)?;
    let orbits = solve_over_finite_field(system, &datum.monomial, budget)?;
    let strata = empty_strata_report(&orbits, &datum.mu_perp, datum.degree)?;
    let verified_against_bruteforce = if verify {
        Some(brute_force_variety(system, budget)? == orbits)
    } else {
        None
    };
    Ok(SolveReport {
        generator: datum.generator,
        degree: datum.degree,
        monomial: datum.monomial,
        mu_perp: datum.mu_perp,
        admissible,
        orbits,
        strata,
        verified_against_bruteforce,
    })
}
