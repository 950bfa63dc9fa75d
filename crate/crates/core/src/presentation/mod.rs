//! Quivers, paths, and the textual presentation format for bound quiver
//! algebras.

mod parse;
mod render;

pub use parse::parse;
pub use render::render;

use crate::fields::{Field, FieldError};
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}: unknown symbol `{name}`")]
    UnknownSymbol { line: usize, name: String },
    #[error("line {line}: `{name}` declared twice")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: arrows do not compose in `{text}`")]
    NonComposable { line: usize, text: String },
    #[error("line {line}: paths in a relation must share source and target")]
    NonUniform { line: usize },
    #[error("line {line}: every path in a relation must have length at least 2")]
    NonAdmissible { line: usize },
    #[error("missing section `{0}`")]
    Missing(&'static str),
    #[error("parameter `{0}` has no value")]
    UnboundParameter(String),
    #[error("`{0}` is not a declared parameter")]
    UnknownParameter(String),
    #[error("parameter `{param}` = {value} violates its field constraint")]
    ConstraintViolated { param: String, value: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Path formed by the arrow sequence, if it composes.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return None;
            }
        }
        Some(Path {
            start: self.arrows[first].source,
            end: self.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.to_vec(),
        })
    }

    /// The subpath made of arrows `i..j` of `p`; empty ranges give an idempotent.
    pub fn subpath(&self, p: &Path, i: usize, j: usize) -> Path {
        if i == j {
            let v = if i < p.arrows.len() {
                self.arrows[p.arrows[i]].source
            } else {
                p.end
            };
            return Path::trivial(v);
        }
        Path {
            start: self.arrows[p.arrows[i]].source,
            end: self.arrows[p.arrows[j - 1]].target,
            arrows: p.arrows[i..j].to_vec(),
        }
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.start]);
        }
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A path in the quiver; composition is left to right, so `a*b` needs
/// `target(a) = source(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            end: other.end,
            arrows,
        })
    }

    /// Positions where `sub` occurs as a consecutive block of arrows.
    pub fn find(&self, sub: &Path) -> Option<usize> {
        let n = sub.arrows.len();
        if n == 0 || n > self.arrows.len() {
            return None;
        }
        self.arrows.windows(n).position(|w| w == sub.arrows.as_slice())
    }
}

/// Length first, then lexicographic in arrow declaration order.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.start.cmp(&other.start))
            .then_with(|| self.end.cmp(&other.end))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A coefficient before parameters are bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Lit(String),
    Param(String),
    Neg(Box<Scalar>),
    Add(Vec<Scalar>),
    Mul(Vec<Scalar>),
}

impl Scalar {
    pub fn eval<F: Field>(&self, f: &F, params: &BTreeMap<String, F::Elem>) -> Result<F::Elem, PresentationError> {
        Ok(match self {
            Scalar::Lit(t) => f.parse(t)?,
            Scalar::Param(p) => params
                .get(p)
                .cloned()
                .ok_or_else(|| PresentationError::UnboundParameter(p.clone()))?,
            Scalar::Neg(x) => f.neg(&x.eval(f, params)?),
            Scalar::Add(xs) => {
                let mut acc = f.zero();
                for x in xs {
                    acc = f.add(&acc, &x.eval(f, params)?);
                }
                acc
            }
            Scalar::Mul(xs) => {
                let mut acc = f.one();
                for x in xs {
                    acc = f.mul(&acc, &x.eval(f, params)?);
                }
                acc
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub factors: Vec<Scalar>,
    pub path: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinComb {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: LinComb,
    pub rhs: LinComb,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub param: String,
    pub excluded: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub params: Vec<String>,
    pub constraints: Vec<Constraint>,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Generators used to build the bimodule resolution; `None` means the
    /// defining relations are used.
    pub resolution_relations: Option<Vec<Relation>>,
}

/// A linear combination of paths with field coefficients and no zero terms.
pub type Poly<F> = BTreeMap<Path, <F as Field>::Elem>;

pub fn poly_add_term<F: Field>(f: &F, poly: &mut Poly<F>, path: Path, c: F::Elem) {
    if f.is_zero(&c) {
        return;
    }
    match poly.get_mut(&path) {
        Some(x) => {
            *x = f.add(x, &c);
            if f.is_zero(x) {
                poly.remove(&path);
            }
        }
        None => {
            poly.insert(path, c);
        }
    }
}

/// Parameters and relations evaluated in a concrete field.
#[derive(Debug, Clone)]
pub struct BoundPresentation<F: Field> {
    pub presentation: Presentation,
    pub params: BTreeMap<String, F::Elem>,
    pub relations: Vec<Poly<F>>,
    pub resolution_relations: Vec<Poly<F>>,
}

impl Relation {
    pub fn bind<F: Field>(&self, f: &F, params: &BTreeMap<String, F::Elem>) -> Result<Poly<F>, PresentationError> {
        let mut out = Poly::<F>::new();
        for (side, sign) in [(&self.lhs, false), (&self.rhs, true)] {
            for t in &side.terms {
                let mut c = f.one();
                for s in &t.factors {
                    c = f.mul(&c, &s.eval(f, params)?);
                }
                if t.negative != sign {
                    c = f.neg(&c);
                }
                poly_add_term(f, &mut out, t.path.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.lhs.terms.iter().chain(&self.rhs.terms).map(|t| &t.path)
    }
}

/// Endpoint and admissibility findings for a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty()
    }
}

impl Presentation {
    pub fn effective_resolution_relations(&self) -> &[Relation] {
        self.resolution_relations.as_deref().unwrap_or(&self.relations)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut problems = Vec::new();
        let all = self
            .relations
            .iter()
            .map(|r| ("relation", r))
            .chain(self.resolution_relations.iter().flatten().map(|r| ("resolution relation", r)));
        for (i, (kind, r)) in all.enumerate() {
            let mut ends = r.paths().map(|p| (p.start, p.end));
            if let Some(first) = ends.next() {
                if ends.any(|e| e != first) {
                    problems.push(format!("{kind} #{i} is not endpoint-uniform"));
                }
            }
            if r.paths().any(|p| p.len() < 2) {
                problems.push(format!("{kind} #{i} has a path of length below 2"));
            }
            for p in r.paths() {
                if self.quiver.path(&p.arrows).as_ref() != Some(p) {
                    problems.push(format!("{kind} #{i} contains a malformed path"));
                }
            }
        }
        ValidationReport { problems }
    }

    /// Evaluates parameters (given as field literals) and relations in `f`.
    pub fn bind<F: Field>(&self, f: &F, values: &BTreeMap<String, String>) -> Result<BoundPresentation<F>, PresentationError> {
        for k in values.keys() {
            if !self.params.contains(k) {
                return Err(PresentationError::UnknownParameter(k.clone()));
            }
        }
        let mut params = BTreeMap::new();
        for p in &self.params {
            let text = values
                .get(p)
                .ok_or_else(|| PresentationError::UnboundParameter(p.clone()))?;
            params.insert(p.clone(), f.parse(text)?);
        }
        for c in &self.constraints {
            let v = params
                .get(&c.param)
                .ok_or_else(|| PresentationError::UnknownParameter(c.param.clone()))?;
            for s in &c.excluded {
                if s.eval(f, &params)? == *v {
                    return Err(PresentationError::ConstraintViolated {
                        param: c.param.clone(),
                        value: f.render(v),
                    });
                }
            }
        }
        let relations = self
            .relations
            .iter()
            .map(|r| r.bind(f, &params))
            .collect::<Result<Vec<_>, _>>()?;
        let resolution_relations = self
            .effective_resolution_relations()
            .iter()
            .map(|r| r.bind(f, &params))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BoundPresentation {
            presentation: self.clone(),
            params,
            relations,
            resolution_relations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{ExtensionField, FieldSpec, PrimeField, Rationals};

    const SAMPLE: &str = "\
# two loops
algebra demo params lambda
field-constraints: lambda not-in {0, 1}
vertices: 1, 2
arrow alpha: 1 -> 1
arrow sigma: 1 -> 2
arrow gamma: 2 -> 1
arrow beta: 2 -> 2
relations:
  alpha^2 = sigma*gamma
  lambda*beta*beta = gamma*sigma
  gamma*alpha = beta*gamma
  alpha*sigma = sigma*beta
";

    #[test]
    fn deglex_order() {
        let q = parse(SAMPLE).unwrap().quiver;
        let aa = q.path(&[0, 0]).unwrap();
        let sg = q.path(&[1, 2]).unwrap();
        let a = q.path(&[0]).unwrap();
        assert!(a < aa && aa < sg);
        assert!(Path::trivial(1) < a);
    }

    #[test]
    fn bind_and_constraints() {
        let p = parse(SAMPLE).unwrap();
        let mut vals = BTreeMap::new();
        assert!(matches!(p.bind(&Rationals, &vals), Err(PresentationError::UnboundParameter(_))));
        vals.insert("lambda".to_string(), "1".to_string());
        assert!(matches!(p.bind(&Rationals, &vals), Err(PresentationError::ConstraintViolated { .. })));
        vals.insert("lambda".to_string(), "2".to_string());
        let b = p.bind(&Rationals, &vals).unwrap();
        assert_eq!(b.relations.len(), 4);
        assert_eq!(b.resolution_relations, b.relations);
        let f2 = PrimeField::new(2).unwrap();
        assert!(matches!(p.bind(&f2, &vals), Err(PresentationError::ConstraintViolated { .. })));
        let f4 = ExtensionField::from_spec(&FieldSpec::parse("GF(4)").unwrap()).unwrap();
        vals.insert("lambda".to_string(), "g".to_string());
        assert!(p.bind(&f4, &vals).is_ok());
        assert!(matches!(p.bind(&Rationals, &vals), Err(PresentationError::Field(_))));
    }

    #[test]
    fn relation_terms_cancel_when_bound() {
        let text = "algebra c\nvertices: 1\narrow a: 1 -> 1\narrow b: 1 -> 1\nrelations:\n  a*b + 2*a*b = b*a\n";
        let p = parse(text).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let b = p.bind(&f3, &BTreeMap::new()).unwrap();
        assert_eq!(b.relations[0].len(), 1);
        let b = p.bind(&Rationals, &BTreeMap::new()).unwrap();
        assert_eq!(b.relations[0].len(), 2);
    }

    #[test]
    fn validate_flags_programmatic_defects() {
        let mut p = parse(SAMPLE).unwrap();
        assert!(p.validate().is_ok());
        let a = p.quiver.path(&[0]).unwrap();
        p.relations[0].rhs.terms[0].path = a;
        let report = p.validate();
        assert!(!report.is_ok());
    }
}
