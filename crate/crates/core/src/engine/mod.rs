//! Finite dimensional algebras given by a certified rewriting system: basis,
//! multiplication table and structural invariants.

pub mod rewrite;
mod structure;

pub use rewrite::{complete, CompletionStats, RewriteError, RewriteSystem, Rule};
pub use structure::{NakayamaEvidence, SymmetricReport, SymmetricVerdict};

use crate::fields::Field;
use crate::linalg::SparseVec;
use crate::presentation::{BoundPresentation, Path, Poly, Presentation, PresentationError, Quiver};
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_DEGREE_CAP: usize = 16;
pub const CAP_ENV: &str = "HOCHCALC_GB_CAP";
const MAX_DIMENSION: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("resolution relations generate a different ideal: {0}")]
    ResolutionIdeal(String),
    #[error("certification failed: {0}")]
    Certification(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub degree_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        let degree_cap = std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_DEGREE_CAP);
        BuildOptions { degree_cap }
    }
}

/// Evidence gathered while building an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub rules: usize,
    pub completion: CompletionStats,
    pub triples_checked: usize,
    pub resolution_ideal_checked: bool,
}

/// Dense coordinates with respect to [`Algebra::basis`].
pub type Element<F> = Vec<<F as Field>::Elem>;

#[derive(Debug, Clone)]
pub struct Algebra<F: Field> {
    field: F,
    bound: BoundPresentation<F>,
    system: RewriteSystem<F>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    table: Vec<Vec<SparseVec<F::Elem>>>,
    corners: Vec<Vec<Vec<usize>>>,
    certificate: Certificate,
}

impl<F: Field> Algebra<F> {
    /// Binds parameters, completes the relations and certifies the result.
    pub fn build(
        field: F,
        presentation: &Presentation,
        params: &BTreeMap<String, String>,
        opts: BuildOptions,
    ) -> Result<Self, BuildError> {
        let bound = presentation.bind(&field, params)?;
        let q = &presentation.quiver;
        let system = complete(&field, q, &bound.relations, opts.degree_cap)?;
        let basis = system.normal_words(q, MAX_DIMENSION)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let n = q.vertices.len();
        let mut corners = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            corners[p.start][p.end].push(i);
        }

        let mut alg = Algebra {
            field,
            bound,
            system,
            basis,
            index,
            table: Vec::new(),
            corners,
            certificate: Certificate {
                rules: 0,
                completion: CompletionStats::default(),
                triples_checked: 0,
                resolution_ideal_checked: false,
            },
        };
        alg.table = alg.build_table();
        alg.certify(opts)?;
        Ok(alg)
    }

    fn build_table(&self) -> Vec<Vec<SparseVec<F::Elem>>> {
        let d = self.basis.len();
        let mut table = vec![vec![Vec::new(); d]; d];
        for (a, pa) in self.basis.iter().enumerate() {
            for (b, pb) in self.basis.iter().enumerate() {
                if let Some(w) = pa.concat(pb) {
                    let mut p = Poly::<F>::new();
                    p.insert(w, self.field.one());
                    table[a][b] = self.sparse_of_normal(&self.normal_form(&p));
                }
            }
        }
        table
    }

    fn sparse_of_normal(&self, p: &Poly<F>) -> SparseVec<F::Elem> {
        let mut v: SparseVec<F::Elem> = p.iter().map(|(w, c)| (self.index[w], c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    fn certify(&mut self, opts: BuildOptions) -> Result<(), BuildError> {
        let f = &self.field;
        let q = &self.bound.presentation.quiver;
        for (i, r) in self.bound.relations.iter().enumerate() {
            if !self.system.reduce(f, q, r).is_empty() {
                return Err(BuildError::Certification(format!("relation #{i} does not vanish")));
            }
        }
        // Ideal equality between defining and resolution relations.
        let mut checked = false;
        if self.bound.resolution_relations != self.bound.relations {
            for (i, r) in self.bound.resolution_relations.iter().enumerate() {
                if !self.system.reduce(f, q, r).is_empty() {
                    return Err(BuildError::ResolutionIdeal(format!("resolution relation #{i} is not in the ideal")));
                }
            }
            // Both ideals contain rad^N, so comparing them modulo rad^N is exact.
            let mut gens = self.bound.resolution_relations.clone();
            for w in paths_of_length(q, self.nilpotency_index()) {
                let mut p = Poly::<F>::new();
                p.insert(w, f.one());
                gens.push(p);
            }
            let other = complete(f, q, &gens, opts.degree_cap)
                .map_err(|e| BuildError::ResolutionIdeal(e.to_string()))?;
            for (i, r) in self.bound.relations.iter().enumerate() {
                if !other.reduce(f, q, r).is_empty() {
                    return Err(BuildError::ResolutionIdeal(format!(
                        "relation #{i} is not generated by the resolution relations"
                    )));
                }
            }
            checked = true;
        }
        let triples = self.check_associativity()?;
        let cartan_sum: usize = self.cartan().iter().flatten().sum();
        if cartan_sum != self.dim() {
            return Err(BuildError::Certification("Cartan entries do not sum to the dimension".into()));
        }
        self.certificate = Certificate {
            rules: self.system.rules.len(),
            completion: self.system.stats.clone(),
            triples_checked: triples,
            resolution_ideal_checked: checked,
        };
        Ok(())
    }

    fn check_associativity(&self) -> Result<usize, BuildError> {
        let d = self.dim();
        let mut count = 0;
        for a in 0..d {
            for b in 0..d {
                if self.basis[a].end != self.basis[b].start {
                    continue;
                }
                for c in 0..d {
                    if self.basis[b].end != self.basis[c].start {
                        continue;
                    }
                    count += 1;
                    let left = self.mul_sparse_basis(&self.table[a][b], c);
                    let right = self.mul_basis_sparse(a, &self.table[b][c]);
                    if left != right {
                        return Err(BuildError::Certification(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis_label(a),
                            self.basis_label(b),
                            self.basis_label(c)
                        )));
                    }
                }
            }
        }
        Ok(count)
    }

    fn mul_sparse_basis(&self, x: &SparseVec<F::Elem>, c: usize) -> Element<F> {
        let mut out = self.zero();
        for (i, xi) in x {
            for (k, y) in &self.table[*i][c] {
                self.field.add_mul_assign(&mut out[*k], xi, y);
            }
        }
        out
    }

    fn mul_basis_sparse(&self, a: usize, x: &SparseVec<F::Elem>) -> Element<F> {
        let mut out = self.zero();
        for (i, xi) in x {
            for (k, y) in &self.table[a][*i] {
                self.field.add_mul_assign(&mut out[*k], xi, y);
            }
        }
        out
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn presentation(&self) -> &Presentation {
        &self.bound.presentation
    }
    pub fn bound(&self) -> &BoundPresentation<F> {
        &self.bound
    }
    pub fn quiver(&self) -> &Quiver {
        &self.bound.presentation.quiver
    }
    pub fn system(&self) -> &RewriteSystem<F> {
        &self.system
    }
    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver().vertices.len()
    }
    pub fn basis_label(&self, i: usize) -> String {
        self.quiver().path_label(&self.basis[i])
    }
    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis indices spanning `e_i A e_j`.
    pub fn corner(&self, i: usize, j: usize) -> &[usize] {
        &self.corners[i][j]
    }

    /// Basis indices spanning `A e_i` (words ending at `i`).
    pub fn left_basis(&self, i: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].end == i).collect()
    }

    /// Basis indices spanning `e_j A` (words starting at `j`).
    pub fn right_basis(&self, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].start == j).collect()
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    pub fn normal_form(&self, p: &Poly<F>) -> Poly<F> {
        self.system.reduce(&self.field, self.quiver(), p)
    }

    pub fn zero(&self) -> Element<F> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element<F> {
        let mut e = self.zero();
        e[i] = self.field.one();
        e
    }

    pub fn element_of_poly(&self, p: &Poly<F>) -> Element<F> {
        let mut e = self.zero();
        for (w, c) in self.normal_form(p) {
            e[self.index[&w]] = c;
        }
        e
    }

    pub fn element_of_path(&self, p: &Path) -> Element<F> {
        let mut poly = Poly::<F>::new();
        poly.insert(p.clone(), self.field.one());
        self.element_of_poly(&poly)
    }

    /// Product of two basis elements as sparse coordinates.
    pub fn mul_basis(&self, a: usize, b: usize) -> &SparseVec<F::Elem> {
        &self.table[a][b]
    }

    pub fn mul(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, z) in &self.table[i][j] {
                    f.add_mul_assign(&mut out[*k], &c, z);
                }
            }
        }
        out
    }

    pub fn render_element(&self, x: &Element<F>) -> String {
        let f = &self.field;
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| {
                if f.is_one(c) {
                    self.basis_label(i)
                } else {
                    format!("({})*{}", f.render(c), self.basis_label(i))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// `c[i][j] = dim e_i A e_j`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        self.corners.iter().map(|row| row.iter().map(Vec::len).collect()).collect()
    }
}

fn paths_of_length(q: &Quiver, n: usize) -> Vec<Path> {
    let mut layer: Vec<Vec<usize>> = (0..q.arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..n {
        layer = layer
            .iter()
            .flat_map(|w| {
                let end = q.arrows[*w.last().expect("nonempty")].target;
                q.arrows.iter().enumerate().filter(move |(_, a)| a.source == end).map(move |(b, _)| {
                    let mut v = w.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    layer.iter().filter_map(|w| q.path(w)).collect()
}
