use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, FieldSpec, Permutation, Polynomial};
use crate::specht::ColumnBlocks;

/// What a certificate entry multiplies its cofactor by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorRef {
    /// The Specht generator `Π Δ(block)` of the given columns.
    Specht(ColumnBlocks),
    /// `σ·Q_index` for a polynomial of the referenced system.
    Sym { perm: Permutation, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateEntry {
    pub cofactor: Polynomial,
    pub generator: GeneratorRef,
}

/// A membership certificate `target = Σ cofactor · generator`, checked by
/// exact expansion.
///
/// Certificates that refer to system generators carry that system with them,
/// so they can be verified standalone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    target: Polynomial,
    entries: Vec<CertificateEntry>,
    system: Vec<Polynomial>,
}

impl Certificate {
    pub fn new(
        target: Polynomial,
        entries: Vec<CertificateEntry>,
        system: Vec<Polynomial>,
    ) -> Self {
        Certificate {
            target,
            entries,
            system,
        }
    }

    pub fn target(&self) -> &Polynomial {
        &self.target
    }

    pub fn field(&self) -> FieldSpec {
        self.target.field()
    }

    pub fn nvars(&self) -> usize {
        self.target.nvars()
    }

    pub fn entries(&self) -> &[CertificateEntry] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Vec<CertificateEntry> {
        &mut self.entries
    }

    pub fn system(&self) -> &[Polynomial] {
        &self.system
    }

    /// The polynomial a generator reference stands for.
    pub fn resolve(
        &self,
        generator: &GeneratorRef,
        system: Option<&[Polynomial]>,
    ) -> Result<Polynomial> {
        match generator {
            GeneratorRef::Specht(columns) => {
                if columns.max_index() > self.nvars() {
                    return Err(Error::UnresolvableGenerator(format!(
                        "columns {columns} exceed {} variables",
                        self.nvars()
                    )));
                }
                columns.polynomial(self.field(), self.nvars())
            }
            GeneratorRef::Sym { perm, index } => {
                let system = system.unwrap_or(&self.system);
                let q = system.get(*index).ok_or_else(|| {
                    Error::UnresolvableGenerator(format!(
                        "system generator #{index} (system has {})",
                        system.len()
                    ))
                })?;
                q.apply_permutation(perm)
                    .map_err(|e| Error::UnresolvableGenerator(e.to_string()))
            }
        }
    }

    /// `Σ cofactor · generator`, expanded.
    pub fn expand(&self, system: Option<&[Polynomial]>) -> Result<Polynomial> {
        self.entries.iter().try_fold(
            Polynomial::zero(self.field(), self.nvars()),
            |acc, entry| {
                let g = self.resolve(&entry.generator, system)?;
                acc.try_add(&entry.cofactor.try_mul(&g)?)
            },
        )
    }

    /// Whether the expansion equals the target exactly. `system` overrides
    /// the generators carried by the certificate.
    pub fn verify(&self, system: Option<&[Polynomial]>) -> Result<bool> {
        Ok(self.expand(system)? == self.target)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_wire()).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: CertificateWire = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("certificate JSON: {e}")))?;
        Certificate::from_wire(wire)
    }

    fn to_wire(&self) -> CertificateWire {
        CertificateWire {
            n: Some(self.nvars()),
            target: self.target.to_string(),
            field: FieldWire {
                characteristic: self.field().characteristic(),
            },
            entries: self
                .entries
                .iter()
                .map(|e| EntryWire {
                    cofactor: e.cofactor.to_string(),
                    generator: match &e.generator {
                        GeneratorRef::Specht(cb) => GeneratorWire::Specht {
                            columns: cb.blocks().to_vec(),
                        },
                        GeneratorRef::Sym { perm, index } => GeneratorWire::Sym {
                            perm: perm.images(),
                            index: *index,
                        },
                    },
                })
                .collect(),
            system: self.system.iter().map(Polynomial::to_string).collect(),
        }
    }

    fn from_wire(wire: CertificateWire) -> Result<Self> {
        let field = FieldSpec::from_characteristic(wire.field.characteristic)?;
        let n = match wire.n {
            Some(n) => n,
            None => infer_nvars(&wire),
        };
        let poly = |s: &str| parse_polynomial(s, field, n);
        let entries = wire
            .entries
            .iter()
            .map(|e| {
                let generator = match &e.generator {
                    GeneratorWire::Specht { columns } => {
                        GeneratorRef::Specht(ColumnBlocks::new(columns.clone())?)
                    }
                    GeneratorWire::Sym { perm, index } => GeneratorRef::Sym {
                        perm: Permutation::from_images(perm)?,
                        index: *index,
                    },
                };
                Ok(CertificateEntry {
                    cofactor: poly(&e.cofactor)?,
                    generator,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let system = wire
            .system
            .iter()
            .map(|s| poly(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate {
            target: poly(&wire.target)?,
            entries,
            system,
        })
    }
}

/// Without an explicit `n`, the ambient dimension is the largest index
/// mentioned anywhere.
fn infer_nvars(wire: &CertificateWire) -> usize {
    let mut texts: Vec<&str> = vec![&wire.target];
    texts.extend(wire.entries.iter().map(|e| e.cofactor.as_str()));
    texts.extend(wire.system.iter().map(String::as_str));
    let from_text = texts
        .iter()
        .map(|t| max_variable_index(t))
        .max()
        .unwrap_or(0);
    let from_generators = wire
        .entries
        .iter()
        .map(|e| match &e.generator {
            GeneratorWire::Specht { columns } => {
                columns.iter().flatten().copied().max().unwrap_or(0)
            }
            GeneratorWire::Sym { perm, .. } => perm.len(),
        })
        .max()
        .unwrap_or(0);
    from_text.max(from_generators)
}

fn max_variable_index(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' || bytes[i] == b'X' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(v) = text[start..end].parse::<usize>() {
                best = best.max(v);
            }
            i = end;
        } else {
            i += 1;
        }
    }
    best
}

#[derive(Serialize, Deserialize)]
struct CertificateWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    target: String,
    field: FieldWire,
    entries: Vec<EntryWire>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    system: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct FieldWire {
    #[serde(rename = "char")]
    characteristic: u64,
}

#[derive(Serialize, Deserialize)]
struct EntryWire {
    cofactor: String,
    generator: GeneratorWire,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GeneratorWire {
    Specht { columns: Vec<Vec<usize>> },
    Sym { perm: Vec<usize>, index: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, FieldSpec::Rational, n).unwrap()
    }

    fn two_term() -> Certificate {
        // x1 - x2 = 1·(x1 - x2) with the (1,1)-shape generator
        Certificate::new(
            q("x1^2 - x1*x2", 2),
            vec![CertificateEntry {
                cofactor: q("x1", 2),
                generator: GeneratorRef::Specht(ColumnBlocks::new(vec![vec![1, 2]]).unwrap()),
            }],
            vec![],
        )
    }

    #[test]
    fn verifies_and_detects_tampering() {
        let mut c = two_term();
        assert!(c.verify(None).unwrap());
        c.entries_mut()[0].cofactor = q("x1 + 1", 2);
        assert!(!c.verify(None).unwrap());
    }

    #[test]
    fn empty_certificate_of_zero() {
        let c = Certificate::new(Polynomial::zero(FieldSpec::Prime(3), 3), vec![], vec![]);
        assert!(c.verify(None).unwrap());
    }

    #[test]
    fn sym_references_need_a_system() {
        let c = Certificate::new(
            q("x2", 2),
            vec![CertificateEntry {
                cofactor: q("1", 2),
                generator: GeneratorRef::Sym {
                    perm: Permutation::transposition(2, 1, 2),
                    index: 0,
                },
            }],
            vec![],
        );
        assert!(matches!(
            c.verify(None),
            Err(Error::UnresolvableGenerator(_))
        ));
        assert!(c.verify(Some(&[q("x1", 2)])).unwrap());
        assert!(!c.verify(Some(&[q("x2", 2)])).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let c = two_term();
        let json = c.to_json();
        assert_eq!(
            json,
            r#"{"n":2,"target":"x1^2 - x1*x2","field":{"char":0},"entries":[{"cofactor":"x1","generator":{"kind":"specht","columns":[[1,2]]}}]}"#
        );
        assert_eq!(Certificate::from_json(&json).unwrap(), c);
        let without_n = json.replace(r#""n":2,"#, "");
        assert_eq!(Certificate::from_json(&without_n).unwrap(), c);
        assert!(Certificate::from_json("{}").is_err());
    }
}
