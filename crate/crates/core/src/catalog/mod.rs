//! Built-in presentations of the exceptional periodic algebras of polynomial
//! growth, their standard forms, and two comparison algebras, together with
//! expected dimensions keyed by characteristic class.

mod data;

use crate::fields::{CharClass, FieldSpec};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub use data::ENTRIES;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
    #[error("{entry} has no admissible parameter defaults over {field}")]
    IncompatibleField { entry: String, field: String },
}

/// Hom(ℙ₀,A), Hom(ℙ₁,A), dim ker δ¹, Hom(Ω²,A).
pub type IntermediateDims = [usize; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub class: CharClass,
    pub hh: [Option<usize>; 3],
    pub intermediates: Option<IntermediateDims>,
    pub center_dim: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: &'static str,
    pub text: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// The standard form paired with a non-standard algebra, or vice versa.
    pub partner: Option<&'static str>,
    pub standard: bool,
    pub source: &'static str,
    /// Fields the entry is verified over, as field specifications.
    pub designated: &'static [&'static str],
    pub dim: Option<usize>,
    pub cartan: Option<&'static [&'static [usize]]>,
    pub expectations: &'static [Expectation],
    /// Candidate generators of Ω³ and the characteristic classes they are stated for.
    pub generators: &'static [Generator],
    pub generator_classes: &'static [CharClass],
}

impl CatalogEntry {
    pub fn presentation(&self) -> crate::presentation::Presentation {
        crate::presentation::parse(self.source).expect("catalog presentations parse")
    }

    pub fn expectation(&self, class: CharClass) -> Option<&'static Expectation> {
        self.expectations.iter().find(|e| e.class == class)
    }

    pub fn expected_hh(&self, characteristic: u64) -> Option<[Option<usize>; 3]> {
        self.expectation(CharClass::of(characteristic)).map(|e| e.hh)
    }

    pub fn has_parameter(&self) -> bool {
        !self.presentation().params.is_empty()
    }

    /// `λ = g` over fields of characteristic 2 with a generator, `λ = 2`
    /// otherwise; characteristic 2 prime field admits no value.
    pub fn default_params(&self, field: &FieldSpec) -> Result<BTreeMap<String, String>, CatalogError> {
        let p = self.presentation();
        let mut out = BTreeMap::new();
        for name in &p.params {
            let value = match field {
                FieldSpec::Extension { .. } => "g",
                FieldSpec::Prime(2) => {
                    return Err(CatalogError::IncompatibleField {
                        entry: self.name.into(),
                        field: field.to_string(),
                    })
                }
                _ => "2",
            };
            out.insert(name.clone(), value.to_string());
        }
        Ok(out)
    }

    pub fn designated_fields(&self) -> Vec<FieldSpec> {
        self.designated
            .iter()
            .map(|s| FieldSpec::parse(s).expect("catalog field specs parse"))
            .collect()
    }

    pub fn generators_apply(&self, class: CharClass) -> bool {
        !self.generators.is_empty() && self.generator_classes.contains(&class)
    }
}

pub fn get(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown(name.into()))
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.name)
}

fn class_key(c: CharClass) -> String {
    match serde_json::to_value(c) {
        Ok(Value::String(s)) => s,
        _ => unreachable!("unit variants serialise as strings"),
    }
}

/// Machine-readable expectations table, keyed by entry name.
pub fn expectations_json() -> Value {
    let mut root = serde_json::Map::new();
    for e in ENTRIES {
        let records: serde_json::Map<String, Value> = e
            .expectations
            .iter()
            .map(|x| {
                (
                    class_key(x.class),
                    json!({
                        "hh": x.hh,
                        "intermediates": x.intermediates,
                        "center_dim": x.center_dim,
                    }),
                )
            })
            .collect();
        root.insert(
            e.name.into(),
            json!({
                "partner": e.partner,
                "standard": e.standard,
                "designated_fields": e.designated,
                "dim": e.dim,
                "cartan": e.cartan,
                "expectations": records,
                "generators": e.generators,
                "generator_classes": e.generator_classes.iter().map(|c| class_key(*c)).collect::<Vec<_>>(),
            }),
        );
    }
    Value::Object(root)
}

/// Files written by `catalog export`: one `.qa` per entry plus the table.
pub fn export_files() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = ENTRIES
        .iter()
        .map(|e| (format!("{}.qa", e.name), e.source.to_string()))
        .collect();
    let table = serde_json::to_string_pretty(&expectations_json()).expect("serialisable") + "\n";
    out.push(("expectations.json".into(), table));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_validates() {
        assert_eq!(ENTRIES.len(), 22);
        for e in ENTRIES {
            let p = e.presentation();
            assert_eq!(p.name, e.name);
            assert!(p.validate().is_ok(), "{}", e.name);
            if let Some(partner) = e.partner {
                assert_eq!(get(partner).unwrap().partner, Some(e.name));
            }
        }
    }

    #[test]
    fn lookup_and_expectations() {
        assert_eq!(get("lambda9p").unwrap().expected_hh(0), Some([Some(5), Some(1), Some(0)]));
        assert_eq!(get("lambda6").unwrap().expected_hh(2), Some([Some(5), Some(2), Some(2)]));
        assert_eq!(get("lambda4p").unwrap().expected_hh(5), Some([Some(5), Some(2), Some(2)]));
        assert_eq!(get("lambda1p").unwrap().expected_hh(3), Some([Some(5), Some(4), Some(4)]));
        assert_eq!(get("p_a5").unwrap().expected_hh(2), Some([None, Some(2), Some(2)]));
        assert_eq!(get("mesh_g2").unwrap().expectation(CharClass::Two).unwrap().center_dim, Some(2));
        assert_eq!(get("lambda1").unwrap().expected_hh(2), None);
        assert!(get("lambda11").is_err());
    }

    #[test]
    fn parameter_defaults() {
        let e = get("lambda3p").unwrap();
        let gf4 = FieldSpec::parse("GF(4)").unwrap();
        assert_eq!(e.default_params(&gf4).unwrap()["lambda"], "g");
        assert_eq!(e.default_params(&FieldSpec::Rationals).unwrap()["lambda"], "2");
        assert!(e.default_params(&FieldSpec::Prime(2)).is_err());
        assert!(get("lambda1p").unwrap().default_params(&FieldSpec::Prime(2)).unwrap().is_empty());
    }
}
