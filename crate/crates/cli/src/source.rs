use hochcalc_core::analysis::{AnalysisError, AnyAlgebra};
use hochcalc_core::catalog;
use hochcalc_core::engine::{BuildError, BuildOptions};
use hochcalc_core::fields::FieldSpec;
use hochcalc_core::presentation::{self, Presentation};
use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

/// A failure with its documented exit status.
#[derive(Debug)]
pub enum Failure {
    Mismatch(String),
    Parse(String),
    Build(String),
    Oracle(String),
}

impl Failure {
    pub fn code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Mismatch(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Build(_) => 3,
            Failure::Oracle(_) => 4,
        })
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Parse(m) | Failure::Build(m) | Failure::Oracle(m) => m,
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Field(_) | AnalysisError::Build(BuildError::Presentation(_)) | AnalysisError::Generator { .. } => {
                Failure::Parse(e.to_string())
            }
            _ => Failure::Build(e.to_string()),
        }
    }
}

/// A presentation together with the field and parameter values to build it with.
pub struct Loaded {
    pub name: String,
    pub presentation: Presentation,
    pub field: FieldSpec,
    pub params: BTreeMap<String, String>,
}

impl Loaded {
    pub fn build(&self, opts: BuildOptions) -> Result<AnyAlgebra, Failure> {
        AnyAlgebra::build(&self.field, &self.presentation, &self.params, opts).map_err(Failure::from)
    }
}

pub fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, Failure> {
    raw.iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Failure::Parse(format!("--param expects name=value, got `{kv}`")))
        })
        .collect()
}

pub fn parse_field(raw: Option<&str>) -> Result<Option<FieldSpec>, Failure> {
    raw.map(|s| FieldSpec::parse(s).map_err(|e| Failure::Parse(format!("--field {s}: {e}"))))
        .transpose()
}

/// A catalog entry. Without `--field` its first designated field is used,
/// and parameters default per field.
pub fn from_catalog(name: &str, field: Option<FieldSpec>, params: &BTreeMap<String, String>) -> Result<Loaded, Failure> {
    let entry = catalog::get(name).map_err(|e| Failure::Parse(e.to_string()))?;
    let field = field.unwrap_or_else(|| entry.designated_fields()[0].clone());
    let mut bound = if entry.has_parameter() && params.len() < entry.presentation().params.len() {
        entry.default_params(&field).map_err(|e| Failure::Parse(e.to_string()))?
    } else {
        BTreeMap::new()
    };
    bound.extend(params.clone());
    Ok(Loaded {
        name: entry.name.to_string(),
        presentation: entry.presentation(),
        field,
        params: bound,
    })
}

pub fn from_file(path: &Path, field: Option<FieldSpec>, params: &BTreeMap<String, String>) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let presentation = presentation::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        name: presentation.name.clone(),
        presentation,
        field: field.unwrap_or(FieldSpec::Rationals),
        params: params.clone(),
    })
}

/// A bare source: an existing path is read as a file, anything else names a
/// catalog entry.
pub fn resolve(source: &str, field: Option<FieldSpec>, params: &BTreeMap<String, String>) -> Result<Loaded, Failure> {
    let path = Path::new(source);
    if path.exists() {
        from_file(path, field, params)
    } else {
        from_catalog(source, field, params)
    }
}
