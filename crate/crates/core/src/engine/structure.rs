use super::{Algebra, Element};
use crate::fields::Field;
use crate::linalg::{kernel_basis, Matrix, Subspace};
use rand::SeedableRng;
use serde::Serialize;

/// Why the Nakayama permutation could not be read off.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NakayamaEvidence {
    /// `soc(e_i A)` is not one dimensional.
    SocleNotSimple { vertex: usize, socle_dim: usize },
    /// Two vertices share a socle.
    NotPermutation { vertices: (usize, usize), target: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymmetricVerdict {
    Certified,
    RefutedByNakayama,
    RefutedExhaustive,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricReport {
    pub verdict: SymmetricVerdict,
    /// Dimension of the space of trace functionals (vanishing on `[A, A]`).
    pub trace_space_dim: usize,
    pub candidates_tried: u64,
    /// A nondegenerate symmetrising form, rendered on the basis.
    pub form: Option<Vec<String>>,
}

pub const EXHAUSTIVE_LIMIT: u128 = 1 << 20;
pub const RANDOM_TRIALS: usize = 1000;

impl<F: Field> Algebra<F> {
    /// Basis of the centre, computed on all of `A` from commutation with the
    /// idempotents and the arrows.
    pub fn center(&self) -> Vec<Element<F>> {
        let f = self.field();
        let d = self.dim();
        let q = self.quiver();
        let mut gens: Vec<usize> = (0..self.vertex_count()).map(|v| self.idempotent(v)).collect();
        for a in 0..q.arrows.len() {
            gens.push(self.index_of(&q.path(&[a]).unwrap()).expect("arrows are normal"));
        }
        let mut m = Matrix::zeros(f, gens.len() * d, d);
        for (gi, &g) in gens.iter().enumerate() {
            for z in 0..d {
                for (k, c) in self.mul_basis(g, z) {
                    let cur = m.get(gi * d + k, z).clone();
                    m.set(gi * d + k, z, f.add(&cur, c));
                }
                for (k, c) in self.mul_basis(z, g) {
                    let cur = m.get(gi * d + k, z).clone();
                    m.set(gi * d + k, z, f.sub(&cur, c));
                }
            }
        }
        kernel_basis(f, &m)
    }

    fn span_products(&self, space: &Subspace<F>, rad: &[usize]) -> Subspace<F> {
        let f = self.field();
        let mut out = Subspace::zero(self.dim());
        for x in space.basis() {
            for &r in rad {
                let y = self.mul(x, &self.basis_element(r));
                out.insert(f, y).expect("ambient matches");
            }
        }
        out
    }

    /// Dimensions of `rad^1, rad^2, ...` down to zero.
    pub fn radical_series(&self) -> Vec<usize> {
        let f = self.field();
        let rad: Vec<usize> = (0..self.dim()).filter(|&b| !self.basis()[b].is_empty()).collect();
        let mut cur = Subspace::span(f, self.dim(), rad.iter().map(|&b| self.basis_element(b))).unwrap();
        let mut dims = Vec::new();
        while cur.dim() > 0 {
            dims.push(cur.dim());
            cur = self.span_products(&cur, &rad);
        }
        dims
    }

    /// Least `n` with `rad^n = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.radical_series().len() + 1
    }

    /// Basis of `{x in e_i A : x * arrow = 0 for every arrow}`.
    fn right_socle(&self, i: usize) -> Vec<Element<F>> {
        let f = self.field();
        let d = self.dim();
        let cols = self.right_basis(i);
        let arrows: Vec<usize> = (0..self.quiver().arrows.len())
            .map(|a| self.index_of(&self.quiver().path(&[a]).unwrap()).unwrap())
            .collect();
        let mut m = Matrix::zeros(f, arrows.len() * d, cols.len());
        for (ai, &a) in arrows.iter().enumerate() {
            for (j, &x) in cols.iter().enumerate() {
                for (k, c) in self.mul_basis(x, a) {
                    m.set(ai * d + k, j, c.clone());
                }
            }
        }
        kernel_basis(f, &m)
            .into_iter()
            .map(|v| {
                let mut e = self.zero();
                for (j, c) in v.into_iter().enumerate() {
                    e[cols[j]] = c;
                }
                e
            })
            .collect()
    }

    /// The permutation `nu` with `soc(e_i A)` isomorphic to the simple at `nu(i)`.
    pub fn nakayama(&self) -> Result<Vec<usize>, NakayamaEvidence> {
        let f = self.field();
        let n = self.vertex_count();
        let mut nu = Vec::with_capacity(n);
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let soc = self.right_socle(i);
            if soc.len() != 1 {
                return Err(NakayamaEvidence::SocleNotSimple { vertex: i, socle_dim: soc.len() });
            }
            let x = &soc[0];
            let ends: Vec<usize> = (0..self.dim())
                .filter(|&b| !f.is_zero(&x[b]))
                .map(|b| self.basis()[b].end)
                .collect();
            let j = ends[0];
            debug_assert!(ends.iter().all(|&e| e == j));
            if let Some(prev) = owner[j] {
                return Err(NakayamaEvidence::NotPermutation { vertices: (prev, i), target: j });
            }
            owner[j] = Some(i);
            nu.push(j);
        }
        Ok(nu)
    }

    /// Trace functionals: `t` with `t(xy) = t(yx)` for all basis `x, y`.
    fn trace_functionals(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field();
        let d = self.dim();
        let mut commutators = Subspace::zero(d);
        for x in 0..d {
            for y in x + 1..d {
                let mut c = self.zero();
                for (k, v) in self.mul_basis(x, y) {
                    c[*k] = f.add(&c[*k], v);
                }
                for (k, v) in self.mul_basis(y, x) {
                    c[*k] = f.sub(&c[*k], v);
                }
                commutators.insert(f, c).unwrap();
            }
        }
        let m = Matrix::from_rows(f, d, commutators.basis().to_vec()).unwrap();
        kernel_basis(f, &m)
    }

    /// Left socle vectors `w_j` spanning `e_j soc(A_A)` when each is a line;
    /// `None` if some such space is not one dimensional.
    fn left_socle_lines(&self) -> Option<Vec<Element<F>>> {
        let f = self.field();
        let d = self.dim();
        let arrows: Vec<usize> = (0..self.quiver().arrows.len())
            .map(|a| self.index_of(&self.quiver().path(&[a]).unwrap()).unwrap())
            .collect();
        let mut lines = Vec::new();
        for j in 0..self.vertex_count() {
            let cols = self.right_basis(j);
            let mut m = Matrix::zeros(f, arrows.len() * d, cols.len());
            for (ai, &a) in arrows.iter().enumerate() {
                for (c, &x) in cols.iter().enumerate() {
                    for (k, v) in self.mul_basis(a, x) {
                        m.set(ai * d + k, c, v.clone());
                    }
                }
            }
            let ker = kernel_basis(f, &m);
            if ker.len() != 1 {
                return None;
            }
            let mut e = self.zero();
            for (c, v) in ker[0].iter().enumerate() {
                e[cols[c]] = v.clone();
            }
            lines.push(e);
        }
        Some(lines)
    }

    /// Whether the bilinear form `(x, y) -> t(xy)` is nondegenerate.
    pub fn form_is_nondegenerate(&self, t: &[F::Elem]) -> bool {
        let f = self.field();
        let d = self.dim();
        let mut gram = Matrix::zeros(f, d, d);
        for x in 0..d {
            for y in 0..d {
                let mut s = f.zero();
                for (k, v) in self.mul_basis(x, y) {
                    f.add_mul_assign(&mut s, v, &t[*k]);
                }
                gram.set(x, y, s);
            }
        }
        crate::linalg::rank(f, &gram) == d
    }

    /// Searches for a nondegenerate trace functional.
    ///
    /// A trace functional is nondegenerate exactly when it is nonzero on every
    /// minimal left ideal, and those are the lines `K w_j` of the left socle,
    /// so each candidate costs one evaluation per vertex.
    pub fn symmetric_certify(&self, seed: u64) -> SymmetricReport {
        let f = self.field();
        let traces = self.trace_functionals();
        let report = |verdict, tried, form: Option<Vec<F::Elem>>| SymmetricReport {
            verdict,
            trace_space_dim: traces.len(),
            candidates_tried: tried,
            form: form.map(|t| t.iter().map(|c| f.render(c)).collect()),
        };
        match self.nakayama() {
            Ok(nu) if nu.iter().enumerate().all(|(i, &j)| i == j) => {}
            _ => return report(SymmetricVerdict::RefutedByNakayama, 0, None),
        }
        let Some(lines) = self.left_socle_lines() else {
            return report(SymmetricVerdict::RefutedByNakayama, 0, None);
        };
        // values[j][s] = traces[s](w_j)
        let values: Vec<Vec<F::Elem>> = lines
            .iter()
            .map(|w| {
                traces
                    .iter()
                    .map(|t| {
                        let mut s = f.zero();
                        for (a, b) in t.iter().zip(w) {
                            f.add_mul_assign(&mut s, a, b);
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        if values.iter().any(|row| row.iter().all(|x| f.is_zero(x))) {
            return report(SymmetricVerdict::RefutedExhaustive, 0, None);
        }
        let combine = |coeffs: &[F::Elem]| -> Vec<F::Elem> {
            let mut t = vec![f.zero(); self.dim()];
            for (c, basis) in coeffs.iter().zip(&traces) {
                if f.is_zero(c) {
                    continue;
                }
                for (slot, b) in t.iter_mut().zip(basis) {
                    f.add_mul_assign(slot, c, b);
                }
            }
            t
        };
        let works = |coeffs: &[F::Elem]| {
            values.iter().all(|row| {
                let mut s = f.zero();
                for (a, b) in row.iter().zip(coeffs) {
                    f.add_mul_assign(&mut s, a, b);
                }
                !f.is_zero(&s)
            })
        };
        let k = traces.len();
        let exhaustive = f
            .order()
            .and_then(|q| q.checked_pow(k as u32))
            .filter(|&total| total <= EXHAUSTIVE_LIMIT);
        if let Some(total) = exhaustive {
            let q = f.order().unwrap() as u64;
            for idx in 0..total as u64 {
                let mut rest = idx;
                let coeffs: Vec<F::Elem> = (0..k)
                    .map(|_| {
                        let c = f.element(rest % q);
                        rest /= q;
                        c
                    })
                    .collect();
                if works(&coeffs) {
                    let t = combine(&coeffs);
                    debug_assert!(self.form_is_nondegenerate(&t));
                    return report(SymmetricVerdict::Certified, idx + 1, Some(t));
                }
            }
            return report(SymmetricVerdict::RefutedExhaustive, total as u64, None);
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for trial in 0..RANDOM_TRIALS {
            let coeffs: Vec<F::Elem> = (0..k).map(|_| f.random(&mut rng)).collect();
            if works(&coeffs) {
                let t = combine(&coeffs);
                debug_assert!(self.form_is_nondegenerate(&t));
                return report(SymmetricVerdict::Certified, trial as u64 + 1, Some(t));
            }
        }
        report(SymmetricVerdict::Unresolved, RANDOM_TRIALS as u64, None)
    }
}

#[cfg(test)]
mod tests {
    use crate::engine::{Algebra, BuildOptions, SymmetricVerdict};
    use crate::fields::{Field, PrimeField, Rationals};
    use crate::presentation::parse;
    use std::collections::BTreeMap;

    fn build<F: Field>(f: F, text: &str) -> Algebra<F> {
        Algebra::build(f, &parse(text).unwrap(), &BTreeMap::new(), BuildOptions { degree_cap: 16 }).unwrap()
    }

    #[test]
    fn truncated_polynomial_is_symmetric() {
        let a = build(Rationals, "algebra t\nvertices: 1\narrow x: 1 -> 1\nrelations:\n  x^3 = 0\n");
        assert_eq!(a.center().len(), 3);
        assert_eq!(a.nakayama().unwrap(), vec![0]);
        assert_eq!(a.nilpotency_index(), 3);
        let r = a.symmetric_certify(1);
        assert_eq!(r.verdict, SymmetricVerdict::Certified);
    }

    #[test]
    fn cyclic_nakayama_algebra_rotates() {
        // Two vertices, arrows both ways, all paths of length 2 vanish.
        let text = "algebra c\nvertices: 1, 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelations:\n  a*b = 0\n  b*a = 0\n";
        let a = build(PrimeField::new(2).unwrap(), text);
        assert_eq!(a.nakayama().unwrap(), vec![1, 0]);
        assert_eq!(a.symmetric_certify(1).verdict, SymmetricVerdict::RefutedByNakayama);
    }

    #[test]
    fn hereditary_algebra_has_no_nakayama_permutation() {
        let text = "algebra h\nvertices: 1, 2, 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\nrelations:\n  a*b = 0\n";
        let a = build(Rationals, text);
        assert!(a.nakayama().is_err());
    }

    #[test]
    fn two_loop_algebra_over_gf2() {
        // k<x,y>/(x^2, y^2, xy + yx) is symmetric.
        let text = "algebra e\nvertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelations:\n  x^2 = 0\n  y^2 = 0\n  x*y = y*x\n";
        let a = build(PrimeField::new(2).unwrap(), text);
        assert_eq!(a.dim(), 4);
        let r = a.symmetric_certify(1);
        assert_eq!(r.verdict, SymmetricVerdict::Certified);
        assert!(r.form.is_some());
    }
}
