//! Free bimodules `⊕ A e_i ⊗ e_j A` with basis `u ⊗ v`, and the linear maps
//! between them and into `A` induced by generator images.

use crate::engine::{Algebra, Element};
use crate::fields::Field;
use crate::linalg::{Matrix, SparseVec, Subspace};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeBimodule {
    summands: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    dim: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    left_pos: Vec<usize>,
    right_pos: Vec<usize>,
}

impl FreeBimodule {
    pub fn new<F: Field>(alg: &Algebra<F>, summands: Vec<(usize, usize)>) -> Self {
        let n = alg.vertex_count();
        let left: Vec<Vec<usize>> = (0..n).map(|i| alg.left_basis(i)).collect();
        let right: Vec<Vec<usize>> = (0..n).map(|j| alg.right_basis(j)).collect();
        let mut left_pos = vec![0; alg.dim()];
        let mut right_pos = vec![0; alg.dim()];
        for list in &left {
            for (p, &b) in list.iter().enumerate() {
                left_pos[b] = p;
            }
        }
        for list in &right {
            for (p, &b) in list.iter().enumerate() {
                right_pos[b] = p;
            }
        }
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dim = 0;
        for &(i, j) in &summands {
            offsets.push(dim);
            dim += left[i].len() * right[j].len();
        }
        FreeBimodule {
            summands,
            offsets,
            dim,
            left,
            right,
            left_pos,
            right_pos,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn summands(&self) -> &[(usize, usize)] {
        &self.summands
    }

    /// Coordinate of `u ⊗ v` in summand `s`.
    pub fn coord(&self, s: usize, u: usize, v: usize) -> usize {
        let (_, j) = self.summands[s];
        self.offsets[s] + self.left_pos[u] * self.right[j].len() + self.right_pos[v]
    }

    /// Inverse of [`Self::coord`].
    pub fn decode(&self, idx: usize) -> (usize, usize, usize) {
        let s = self.offsets.partition_point(|&o| o <= idx) - 1;
        let (i, j) = self.summands[s];
        let r = idx - self.offsets[s];
        let w = self.right[j].len();
        (s, self.left[i][r / w], self.right[j][r % w])
    }

    /// `x e_i ⊗ e_j y` in summand `s`.
    pub fn tensor<F: Field>(&self, alg: &Algebra<F>, s: usize, x: &Element<F>, y: &Element<F>) -> SparseVec<F::Elem> {
        let f = alg.field();
        let (i, j) = self.summands[s];
        let mut out = Vec::new();
        for &u in &self.left[i] {
            if f.is_zero(&x[u]) {
                continue;
            }
            for &v in &self.right[j] {
                if !f.is_zero(&y[v]) {
                    out.push((self.coord(s, u, v), f.mul(&x[u], &y[v])));
                }
            }
        }
        out
    }

    /// `a · x` for a basis element `a` of `A`.
    pub fn left_mul<F: Field>(&self, alg: &Algebra<F>, a: usize, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = alg.field();
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (idx, c) in x {
            let (s, u, v) = self.decode(*idx);
            for (w, d) in alg.mul_basis(a, u) {
                let slot = acc.entry(self.coord(s, *w, v)).or_insert_with(|| f.zero());
                f.add_mul_assign(slot, c, d);
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    /// `x · a` for a basis element `a` of `A`.
    pub fn right_mul<F: Field>(&self, alg: &Algebra<F>, x: &SparseVec<F::Elem>, a: usize) -> SparseVec<F::Elem> {
        let f = alg.field();
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (idx, c) in x {
            let (s, u, v) = self.decode(*idx);
            for (w, d) in alg.mul_basis(v, a) {
                let slot = acc.entry(self.coord(s, u, *w)).or_insert_with(|| f.zero());
                f.add_mul_assign(slot, c, d);
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    pub fn to_dense<F: Field>(&self, f: &F, x: &SparseVec<F::Elem>) -> Vec<F::Elem> {
        let mut v = vec![f.zero(); self.dim];
        for (i, c) in x {
            v[*i] = f.add(&v[*i], c);
        }
        v
    }

    pub fn to_sparse<F: Field>(f: &F, x: &[F::Elem]) -> SparseVec<F::Elem> {
        x.iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Matrix (in column convention) of the bimodule map `self -> target`
    /// sending generator `s` to `images[s]`.
    pub fn map_matrix<F: Field>(&self, alg: &Algebra<F>, target: &FreeBimodule, images: &[SparseVec<F::Elem>]) -> Matrix<F> {
        let f = alg.field();
        let mut m = Matrix::zeros(f, target.dim(), self.dim);
        for (s, &(i, j)) in self.summands.iter().enumerate() {
            for &u in &self.left[i] {
                let left = target.left_mul(alg, u, &images[s]);
                for &v in &self.right[j] {
                    let col = self.coord(s, u, v);
                    for (r, c) in target.right_mul(alg, &left, v) {
                        m.set(r, col, c);
                    }
                }
            }
        }
        m
    }

    /// Coordinates of `Hom(self, A) = ⊕_s e_i A e_j`: (summand, basis word) pairs.
    pub fn hom_coords<F: Field>(&self, alg: &Algebra<F>) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (s, &(i, j)) in self.summands.iter().enumerate() {
            for &w in alg.corner(i, j) {
                out.push((s, w));
            }
        }
        out
    }

    pub fn hom_dim<F: Field>(&self, alg: &Algebra<F>) -> usize {
        self.summands.iter().map(|&(i, j)| alg.corner(i, j).len()).sum()
    }

    /// `φ(x)` where `φ` sends generator `s` to the basis word `w`.
    pub fn evaluate<F: Field>(&self, alg: &Algebra<F>, s: usize, w: usize, x: &SparseVec<F::Elem>) -> Element<F> {
        let f = alg.field();
        let mut out = alg.zero();
        for (idx, c) in x {
            let (t, u, v) = self.decode(*idx);
            if t != s {
                continue;
            }
            for (uw, d) in alg.mul_basis(u, w) {
                let cd = f.mul(c, d);
                for (k, e) in alg.mul_basis(*uw, v) {
                    f.add_mul_assign(&mut out[*k], &cd, e);
                }
            }
        }
        out
    }

    /// Matrix of `φ ↦ (φ(x_1), ..., φ(x_m))` from `Hom(self, A)` to `A^m`.
    pub fn evaluation_matrix<F: Field>(&self, alg: &Algebra<F>, xs: &[SparseVec<F::Elem>]) -> Matrix<F> {
        let f = alg.field();
        let coords = self.hom_coords(alg);
        let d = alg.dim();
        let mut m = Matrix::zeros(f, xs.len() * d, coords.len());
        for (col, &(s, w)) in coords.iter().enumerate() {
            for (e, x) in xs.iter().enumerate() {
                let val = self.evaluate(alg, s, w, x);
                for (k, c) in val.into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        m.set(e * d + k, col, c);
                    }
                }
            }
        }
        m
    }

    /// Matrix of `Hom(self, A) -> Hom(source, A)`, `φ ↦ φ ∘ d`, where `d` sends
    /// generator `t` of `source` to `images[t]` in `self`.
    pub fn induced_cochain_map<F: Field>(&self, alg: &Algebra<F>, source: &FreeBimodule, images: &[SparseVec<F::Elem>]) -> Matrix<F> {
        let f = alg.field();
        let cols = self.hom_coords(alg);
        let rows = source.hom_coords(alg);
        let row_of: BTreeMap<(usize, usize), usize> = rows.iter().enumerate().map(|(r, &k)| (k, r)).collect();
        let mut m = Matrix::zeros(f, rows.len(), cols.len());
        for (col, &(s, w)) in cols.iter().enumerate() {
            for (t, x) in images.iter().enumerate() {
                let val = self.evaluate(alg, s, w, x);
                for (k, c) in val.into_iter().enumerate() {
                    if f.is_zero(&c) {
                        continue;
                    }
                    let r = row_of
                        .get(&(t, k))
                        .expect("a bimodule map preserves the idempotent corners");
                    m.set(*r, col, c);
                }
            }
        }
        m
    }

    /// `e_a x e_b` for every pair of vertices, dropping zero pieces.
    pub fn corner_pieces<F: Field>(&self, alg: &Algebra<F>, x: &SparseVec<F::Elem>) -> Vec<((usize, usize), SparseVec<F::Elem>)> {
        let mut parts: BTreeMap<(usize, usize), SparseVec<F::Elem>> = BTreeMap::new();
        for (idx, c) in x {
            let (_, u, v) = self.decode(*idx);
            let key = (alg.basis()[u].start, alg.basis()[v].end);
            parts.entry(key).or_default().push((*idx, c.clone()));
        }
        parts.into_iter().collect()
    }

    /// The sub-bimodule generated by `gens`.
    pub fn closure<F: Field>(&self, alg: &Algebra<F>, gens: &[SparseVec<F::Elem>]) -> Subspace<F> {
        let f = alg.field();
        let mut span = Subspace::zero(self.dim);
        for g in gens {
            for ((a, b), piece) in self.corner_pieces(alg, g) {
                for &u in &self.left[a] {
                    let left = self.left_mul(alg, u, &piece);
                    if left.is_empty() {
                        continue;
                    }
                    for &v in &self.right[b] {
                        let y = self.right_mul(alg, &left, v);
                        if !y.is_empty() {
                            span.insert(f, self.to_dense(f, &y)).unwrap();
                        }
                    }
                }
            }
        }
        span
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::BuildOptions;
    use crate::fields::Rationals;
    use crate::presentation::parse;

    fn algebra() -> Algebra<Rationals> {
        let text = "algebra t\nvertices: 1, 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelations:\n  a*b*a = 0\n  b*a*b = 0\n";
        Algebra::build(Rationals, &parse(text).unwrap(), &Default::default(), BuildOptions { degree_cap: 16 }).unwrap()
    }

    #[test]
    fn coordinates_roundtrip() {
        let alg = algebra();
        let p = FreeBimodule::new(&alg, vec![(0, 0), (0, 1), (1, 1)]);
        for idx in 0..p.dim() {
            let (s, u, v) = p.decode(idx);
            assert_eq!(p.coord(s, u, v), idx);
        }
    }

    #[test]
    fn actions_commute() {
        let alg = algebra();
        let p = FreeBimodule::new(&alg, vec![(0, 1), (1, 0)]);
        for idx in 0..p.dim() {
            let x = vec![(idx, Rationals.one())];
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    let l = p.right_mul(&alg, &p.left_mul(&alg, a, &x), b);
                    let r = p.left_mul(&alg, a, &p.right_mul(&alg, &x, b));
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn free_module_is_generated_by_its_generators() {
        let alg = algebra();
        let p = FreeBimodule::new(&alg, vec![(0, 1), (1, 1)]);
        let e0 = alg.basis_element(alg.idempotent(0));
        let e1 = alg.basis_element(alg.idempotent(1));
        let g0 = p.tensor(&alg, 0, &e0, &e1);
        let g1 = p.tensor(&alg, 1, &e1, &e1);
        assert_eq!(p.closure(&alg, &[g0, g1]).dim(), p.dim());
    }
}
