//! Hochschild cohomology in degrees 0, 1, 2 from the first terms of a
//! projective bimodule resolution, plus syzygy tops and resolution extension.

mod bimodule;
mod generators;

pub use bimodule::FreeBimodule;
pub use generators::{parse_element, GeneratorError, GeneratorReport};

use crate::engine::Algebra;
use crate::fields::Field;
use crate::linalg::{kernel_basis, rank, Matrix, SparseVec, Subspace};
use crate::presentation::Poly;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const MAX_EXTENSION_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HochschildError {
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("sequence is not exact at {0}")]
    NotExact(String),
    #[error("subspace is not closed under the bimodule action")]
    NotActionClosed,
    #[error("resolution length {0} exceeds the cap of {MAX_EXTENSION_DEGREE}")]
    CapExceeded(usize),
    #[error("bimodule of dimension {dim} at degree {degree} exceeds the memory guard")]
    MemoryGuard { degree: usize, dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhDims {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

impl HhDims {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.h0, self.h1, self.h2)
    }
}

/// Dimensions read off along the way to [`HhDims`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intermediates {
    pub hom_p0: usize,
    pub hom_p1: usize,
    pub hom_p2: usize,
    pub ker_delta0: usize,
    pub ker_delta1: usize,
    pub hom_omega2: usize,
    pub dim_p0: usize,
    pub dim_p1: usize,
    pub dim_p2: usize,
    pub dim_omega1: usize,
    pub dim_omega2: usize,
    pub dim_omega3: usize,
}

/// `ϱ(μ)`: each path `α_1…α_m` contributes `Σ_k α_1…α_{k-1} ⊗ α_{k+1}…α_m`
/// in the summand of `α_k`. The summands of `p1` must be the arrows in order.
pub fn rho<F: Field>(alg: &Algebra<F>, p1: &FreeBimodule, mu: &Poly<F>) -> SparseVec<F::Elem> {
    let f = alg.field();
    let q = alg.quiver();
    let mut acc = vec![f.zero(); p1.dim()];
    for (path, c) in mu {
        for k in 0..path.len() {
            let left = alg.element_of_path(&q.subpath(path, 0, k));
            let right = alg.element_of_path(&q.subpath(path, k + 1, path.len()));
            for (i, x) in p1.tensor(alg, path.arrows[k], &left, &right) {
                f.add_mul_assign(&mut acc[i], c, &x);
            }
        }
    }
    FreeBimodule::to_sparse(f, &acc)
}

/// The start of the resolution `ℙ₂ → ℙ₁ → ℙ₀ (→ A)` with its maps.
#[derive(Debug, Clone)]
pub struct Complex<'a, F: Field> {
    alg: &'a Algebra<F>,
    pub p0: FreeBimodule,
    pub p1: FreeBimodule,
    pub p2: FreeBimodule,
    /// `d₁` on the generators of `ℙ₁`: `α ⊗ e_t − e_s ⊗ α`.
    pub d1_images: Vec<SparseVec<F::Elem>>,
    /// `d₂` on the generators of `ℙ₂`: `ϱ(μ)`.
    pub d2_images: Vec<SparseVec<F::Elem>>,
}

impl<'a, F: Field> Complex<'a, F> {
    pub fn new(alg: &'a Algebra<F>) -> Self {
        let q = alg.quiver();
        let n = alg.vertex_count();
        let p0 = FreeBimodule::new(alg, (0..n).map(|i| (i, i)).collect());
        let p1 = FreeBimodule::new(alg, q.arrows.iter().map(|a| (a.source, a.target)).collect());
        let rels = &alg.bound().resolution_relations;
        let p2 = FreeBimodule::new(alg, rels.iter().map(relation_ends::<F>).collect());

        let f = alg.field();
        let d1_images = q
            .arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let arrow = alg.element_of_path(&q.path(&[k]).expect("arrow"));
                let es = alg.basis_element(alg.idempotent(a.source));
                let et = alg.basis_element(alg.idempotent(a.target));
                let mut v = p0.to_dense(f, &p0.tensor(alg, a.target, &arrow, &et));
                for (i, c) in p0.tensor(alg, a.source, &es, &arrow) {
                    v[i] = f.sub(&v[i], &c);
                }
                FreeBimodule::to_sparse(f, &v)
            })
            .collect();
        let d2_images = rels.iter().map(|mu| rho(alg, &p1, mu)).collect();
        Complex {
            alg,
            p0,
            p1,
            p2,
            d1_images,
            d2_images,
        }
    }

    pub fn algebra(&self) -> &'a Algebra<F> {
        self.alg
    }
    pub fn d1_matrix(&self) -> Matrix<F> {
        self.p1.map_matrix(self.alg, &self.p0, &self.d1_images)
    }
    pub fn d2_matrix(&self) -> Matrix<F> {
        self.p2.map_matrix(self.alg, &self.p1, &self.d2_images)
    }
    /// `(z_i) ↦ (α z_t − z_s α)_α` on `⊕ e_iAe_i`.
    pub fn delta0(&self) -> Matrix<F> {
        self.p0.induced_cochain_map(self.alg, &self.p1, &self.d1_images)
    }
    pub fn delta1(&self) -> Matrix<F> {
        self.p1.induced_cochain_map(self.alg, &self.p2, &self.d2_images)
    }

    /// Basis of `ker d₂ ≅ Ω³`.
    pub fn omega3_basis(&self) -> Vec<Vec<F::Elem>> {
        kernel_basis(self.alg.field(), &self.d2_matrix())
    }

    /// `dim {φ ∈ Hom(ℙ₂, A) : φ(ker d₂) = 0}`.
    pub fn hom_omega2_dim(&self, omega3: &[Vec<F::Elem>]) -> usize {
        let f = self.alg.field();
        let xs: Vec<_> = omega3.iter().map(|v| FreeBimodule::to_sparse(f, v)).collect();
        let m = self.p2.evaluation_matrix(self.alg, &xs);
        self.p2.hom_dim(self.alg) - rank(f, &m)
    }

    /// Computes `(h0, h1, h2)` after checking the complex and exactness
    /// conditions that make the formulas valid.
    pub fn hh(&self) -> Result<(HhDims, Intermediates), HochschildError> {
        let alg = self.alg;
        let f = alg.field();
        let d1 = self.d1_matrix();
        let d2 = self.d2_matrix();
        if !d1.mul(f, &d2).expect("shapes").is_zero(f) {
            return Err(HochschildError::NotAComplex("d1 d2 != 0".into()));
        }
        let rank_d1 = rank(f, &d1);
        let rank_d2 = rank(f, &d2);
        if rank_d1 + alg.dim() != self.p0.dim() {
            return Err(HochschildError::NotExact("P0".into()));
        }
        let ker_d1 = self.p1.dim() - rank_d1;
        if rank_d2 != ker_d1 {
            return Err(HochschildError::NotExact("P1".into()));
        }
        let delta0 = self.delta0();
        let delta1 = self.delta1();
        if !delta1.mul(f, &delta0).expect("shapes").is_zero(f) {
            return Err(HochschildError::NotAComplex("delta1 delta0 != 0".into()));
        }
        let omega3 = self.omega3_basis();
        let hom_p0 = self.p0.hom_dim(alg);
        let hom_p1 = self.p1.hom_dim(alg);
        let ker_delta0 = hom_p0 - rank(f, &delta0);
        let ker_delta1 = hom_p1 - rank(f, &delta1);
        let hom_omega2 = self.hom_omega2_dim(&omega3);
        let h1 = (ker_delta0 + ker_delta1).checked_sub(hom_p0);
        let h2 = (ker_delta1 + hom_omega2).checked_sub(hom_p1);
        let (Some(h1), Some(h2)) = (h1, h2) else {
            return Err(HochschildError::NotExact("negative dimension".into()));
        };
        let inter = Intermediates {
            hom_p0,
            hom_p1,
            hom_p2: self.p2.hom_dim(alg),
            ker_delta0,
            ker_delta1,
            hom_omega2,
            dim_p0: self.p0.dim(),
            dim_p1: self.p1.dim(),
            dim_p2: self.p2.dim(),
            dim_omega1: rank_d1,
            dim_omega2: ker_d1,
            dim_omega3: omega3.len(),
        };
        Ok((HhDims { h0: ker_delta0, h1, h2 }, inter))
    }

    /// Checks that `gens` lie in `ker d₂` and generate it as a bimodule.
    pub fn check_omega3_generators(&self, gens: &[SparseVec<F::Elem>]) -> GeneratorReport {
        let alg = self.alg;
        let f = alg.field();
        let d2 = self.d2_matrix();
        let outside: Vec<usize> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| {
                let image = d2.apply(f, &self.p2.to_dense(f, g)).expect("shape");
                image.iter().any(|c| !f.is_zero(c))
            })
            .map(|(i, _)| i)
            .collect();
        let kernel_dim = self.p2.dim() - rank(f, &d2);
        let closure_dim = self.p2.closure(alg, gens).dim();
        GeneratorReport {
            generators: gens.len(),
            outside_kernel: outside,
            closure_dim,
            kernel_dim,
        }
    }
}

fn relation_ends<F: Field>(mu: &Poly<F>) -> (usize, usize) {
    let p = mu.keys().next().expect("relations are nonzero");
    (p.start, p.end)
}

/// Multiplicities `dim e_i (s / (rad·s + s·rad)) e_j` and, for each nonzero
/// pair, lifts of a basis of that top piece (in echelon order).
#[derive(Debug, Clone)]
pub struct Top<F: Field> {
    pub multiplicities: BTreeMap<(usize, usize), usize>,
    pub lifts: Vec<((usize, usize), Vec<F::Elem>)>,
}

impl<F: Field> Top<F> {
    pub fn total(&self) -> usize {
        self.multiplicities.values().sum()
    }
}

fn idempotent_piece<F: Field>(p: &FreeBimodule, alg: &Algebra<F>, x: &[F::Elem], i: usize, j: usize) -> SparseVec<F::Elem> {
    let f = alg.field();
    let sx = FreeBimodule::to_sparse(f, x);
    let l = p.left_mul(alg, alg.idempotent(i), &sx);
    p.right_mul(alg, &l, alg.idempotent(j))
}

/// Top of a sub-bimodule `s` of the free bimodule `p`.
pub fn bimodule_top<F: Field>(alg: &Algebra<F>, p: &FreeBimodule, s: &Subspace<F>) -> Result<Top<F>, HochschildError> {
    let f = alg.field();
    let arrows: Vec<usize> = (0..alg.quiver().arrows.len())
        .map(|k| alg.index_of(&alg.quiver().path(&[k]).expect("arrow")).expect("arrows are normal"))
        .collect();
    let mut radical = Subspace::zero(p.dim());
    for x in s.basis() {
        let sx = FreeBimodule::to_sparse(f, x);
        for &a in &arrows {
            for y in [p.left_mul(alg, a, &sx), p.right_mul(alg, &sx, a)] {
                let y = p.to_dense(f, &y);
                if !s.contains(f, &y).expect("shape") {
                    return Err(HochschildError::NotActionClosed);
                }
                radical.insert(f, y).expect("shape");
            }
        }
    }
    let n = alg.vertex_count();
    let mut multiplicities = BTreeMap::new();
    let mut lifts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut acc = radical.clone();
            let mut count = 0;
            for x in s.basis() {
                let piece = p.to_dense(f, &idempotent_piece(p, alg, x, i, j));
                if acc.insert(f, piece.clone()).expect("shape") {
                    count += 1;
                    lifts.push(((i, j), piece));
                }
            }
            if count > 0 {
                multiplicities.insert((i, j), count);
            }
        }
    }
    Ok(Top { multiplicities, lifts })
}

/// One degree of a minimal resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub degree: usize,
    /// `dim ℙ_n` of the minimal cover of `Ω^n`.
    pub dim_p: usize,
    /// `dim Ω^n`, with `Ω^0 = A`.
    pub dim_omega: usize,
    /// Top multiplicities of `Ω^n`, keyed by vertex labels.
    pub top: Vec<((String, String), usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{reason} (degrees 0..{} complete)", .completed.len())]
pub struct ResolutionStopped {
    pub completed: Vec<ResolutionTerm>,
    pub reason: HochschildError,
}

/// Minimal resolution through degree `n_max`. `ℙ₀`, `ℙ₁`, `ℙ₂` come from the
/// presentation, later terms from tops of kernels. Stops early once a syzygy
/// vanishes.
pub fn extend_resolution<F: Field>(alg: &Algebra<F>, n_max: usize, memory_guard: usize) -> Result<Vec<ResolutionTerm>, ResolutionStopped> {
    let stop = |completed: &[ResolutionTerm], reason| ResolutionStopped {
        completed: completed.to_vec(),
        reason,
    };
    if n_max > MAX_EXTENSION_DEGREE {
        return Err(stop(&[], HochschildError::CapExceeded(n_max)));
    }
    let f = alg.field();
    let q = alg.quiver();
    let label = |v: usize| q.vertices[v].clone();
    let complex = Complex::new(alg);
    let mut out = vec![ResolutionTerm {
        degree: 0,
        dim_p: complex.p0.dim(),
        dim_omega: alg.dim(),
        top: (0..alg.vertex_count()).map(|i| ((label(i), label(i)), 1)).collect(),
    }];

    // Ω¹ = ker(ℙ₀ → A), spanned by the images of d₁.
    let mut prev = complex.p0.clone();
    let mut kernel = complex.p0.closure(alg, &complex.d1_images);
    for n in 1..=n_max {
        let top = if kernel.dim() == 0 {
            Top {
                multiplicities: BTreeMap::new(),
                lifts: Vec::new(),
            }
        } else {
            bimodule_top(alg, &prev, &kernel).map_err(|e| stop(&out, e))?
        };
        let cover = FreeBimodule::new(alg, top.lifts.iter().map(|(k, _)| *k).collect());
        if cover.dim() > memory_guard {
            return Err(stop(&out, HochschildError::MemoryGuard { degree: n, dim: cover.dim() }));
        }
        out.push(ResolutionTerm {
            degree: n,
            dim_p: cover.dim(),
            dim_omega: kernel.dim(),
            top: top
                .multiplicities
                .iter()
                .map(|(&(i, j), &m)| ((label(i), label(j)), m))
                .collect(),
        });
        if kernel.dim() == 0 || n == n_max {
            break;
        }
        let (next, next_kernel) = match n {
            1 => {
                let k = kernel_basis(f, &complex.d1_matrix());
                (complex.p1.clone(), Subspace::span(f, complex.p1.dim(), k).expect("shape"))
            }
            2 => (complex.p2.clone(), Subspace::span(f, complex.p2.dim(), complex.omega3_basis()).expect("shape")),
            _ => {
                let images: Vec<_> = top.lifts.iter().map(|(_, v)| FreeBimodule::to_sparse(f, v)).collect();
                let d = cover.map_matrix(alg, &prev, &images);
                if rank(f, &d) != kernel.dim() {
                    return Err(stop(&out, HochschildError::NotExact(format!("P{n}"))));
                }
                let k = Subspace::span(f, cover.dim(), kernel_basis(f, &d)).expect("shape");
                (cover, k)
            }
        };
        prev = next;
        kernel = next_kernel;
    }
    Ok(out)
}
