//! Algebras over a field chosen at runtime, and the named cohomology methods
//! that can be run on them.

use crate::engine::{Algebra, BuildError, BuildOptions, Certificate, NakayamaEvidence, SymmetricReport};
use crate::fields::{ExtensionField, Field, FieldError, FieldSpec, PrimeField, Rationals};
use crate::hochschild::{self, Complex, GeneratorError, GeneratorReport, HhDims, HochschildError, Intermediates, ResolutionStopped, ResolutionTerm};
use crate::oracle::{BarComplex, OracleError, OracleReport};
use crate::presentation::Presentation;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("generator {index}: {source}")]
    Generator { index: usize, source: GeneratorError },
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
}

#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Rationals(Algebra<Rationals>),
    Prime(Algebra<PrimeField>),
    Extension(Algebra<ExtensionField>),
}

macro_rules! with_algebra {
    ($a:expr, |$alg:ident| $body:expr) => {
        match $a {
            AnyAlgebra::Rationals($alg) => $body,
            AnyAlgebra::Prime($alg) => $body,
            AnyAlgebra::Extension($alg) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn build(
        spec: &FieldSpec,
        presentation: &Presentation,
        params: &BTreeMap<String, String>,
        opts: BuildOptions,
    ) -> Result<Self, AnalysisError> {
        Ok(match spec {
            FieldSpec::Rationals => AnyAlgebra::Rationals(Algebra::build(Rationals, presentation, params, opts)?),
            FieldSpec::Prime(p) => AnyAlgebra::Prime(Algebra::build(PrimeField::new(*p)?, presentation, params, opts)?),
            FieldSpec::Extension { .. } => {
                AnyAlgebra::Extension(Algebra::build(ExtensionField::from_spec(spec)?, presentation, params, opts)?)
            }
        })
    }

    pub fn field_spec(&self) -> FieldSpec {
        with_algebra!(self, |a| a.field().spec())
    }
    pub fn presentation(&self) -> &Presentation {
        with_algebra!(self, |a| a.presentation())
    }
    pub fn certificate(&self) -> &Certificate {
        with_algebra!(self, |a| a.certificate())
    }
    pub fn dim(&self) -> usize {
        with_algebra!(self, |a| a.dim())
    }
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        with_algebra!(self, |a| a.cartan())
    }
    pub fn center_dim(&self) -> usize {
        with_algebra!(self, |a| a.center().len())
    }
    pub fn nakayama(&self) -> Result<Vec<usize>, NakayamaEvidence> {
        with_algebra!(self, |a| a.nakayama())
    }
    pub fn symmetric(&self, seed: u64) -> SymmetricReport {
        with_algebra!(self, |a| a.symmetric_certify(seed))
    }
    pub fn radical_series(&self) -> Vec<usize> {
        with_algebra!(self, |a| a.radical_series())
    }

    pub fn hh(&self) -> Result<(HhDims, Intermediates), HochschildError> {
        with_algebra!(self, |a| Complex::new(a).hh())
    }

    pub fn oracle(&self, guard: usize) -> Result<OracleReport, OracleError> {
        with_algebra!(self, |a| BarComplex::new(a).hh(guard))
    }

    /// Parses each text as an element of `ℙ₂` and checks that together they
    /// generate `Ω³`.
    pub fn check_generators(&self, texts: &[&str]) -> Result<GeneratorReport, AnalysisError> {
        with_algebra!(self, |a| {
            let c = Complex::new(a);
            let gens = texts
                .iter()
                .enumerate()
                .map(|(index, t)| hochschild::parse_element(a, &c.p2, t).map_err(|source| AnalysisError::Generator { index, source }))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(c.check_omega3_generators(&gens))
        })
    }

    pub fn resolution(&self, n_max: usize, memory_guard: usize) -> Result<Vec<ResolutionTerm>, ResolutionStopped> {
        with_algebra!(self, |a| hochschild::extend_resolution(a, n_max, memory_guard))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodOutput {
    pub hh: [Option<usize>; 3],
    pub intermediates: Option<Intermediates>,
    pub oracle: Option<OracleReport>,
}

pub trait CohomologyMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn compute(&self, alg: &AnyAlgebra) -> Result<MethodOutput, AnalysisError>;
}

pub struct Resolution;

impl CohomologyMethod for Resolution {
    fn name(&self) -> &'static str {
        "resolution"
    }
    fn description(&self) -> &'static str {
        "first three terms of the minimal bimodule resolution"
    }
    fn compute(&self, alg: &AnyAlgebra) -> Result<MethodOutput, AnalysisError> {
        let (hh, inter) = alg.hh()?;
        Ok(MethodOutput {
            hh: [Some(hh.h0), Some(hh.h1), Some(hh.h2)],
            intermediates: Some(inter),
            oracle: None,
        })
    }
}

pub struct Bar {
    pub guard: usize,
}

impl CohomologyMethod for Bar {
    fn name(&self) -> &'static str {
        "bar"
    }
    fn description(&self) -> &'static str {
        "reduced bar complex relative to the vertex idempotents"
    }
    fn compute(&self, alg: &AnyAlgebra) -> Result<MethodOutput, AnalysisError> {
        let report = alg.oracle(self.guard)?;
        Ok(MethodOutput {
            hh: report.hh,
            intermediates: None,
            oracle: Some(report),
        })
    }
}

pub struct Registry {
    methods: BTreeMap<&'static str, Box<dyn CohomologyMethod>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { methods: BTreeMap::new() }
    }

    pub fn with_builtins() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(Resolution));
        r.register(Box::new(Bar {
            guard: crate::oracle::DEFAULT_GUARD,
        }));
        r
    }

    pub fn register(&mut self, method: Box<dyn CohomologyMethod>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Result<&dyn CohomologyMethod, AnalysisError> {
        self.methods
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| AnalysisError::UnknownMethod(name.into()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.methods.keys().copied()
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::with_builtins()
    }
}
