//! Hochschild cohomology from the reduced bar complex relative to the
//! subalgebra spanned by the vertex idempotents.
//!
//! `C^0 = ⊕ e_iAe_i`; for `n ≥ 1`, `C^n` has one block `e_{s(b_1)}Ae_{t(b_n)}`
//! per composable tuple `(b_1, …, b_n)` of radical basis words.

use crate::engine::Algebra;
use crate::fields::Field;
use crate::linalg::{SparseEchelon, SparseVec};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Cochain spaces above this dimension are not built.
pub const DEFAULT_GUARD: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("consecutive differentials starting in degree {0} do not compose to zero")]
    NotAComplex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    /// `None` where the size guard skipped the degree.
    pub hh: [Option<usize>; 3],
    pub cochain_dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub skipped_c3_dim: Option<usize>,
}

struct Cochains {
    tuples: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
    dim: usize,
}

impl Cochains {
    fn new<F: Field>(alg: &Algebra<F>, tuples: Vec<Vec<usize>>, corner_of: impl Fn(&[usize]) -> (usize, usize)) -> Self {
        let mut offsets = Vec::with_capacity(tuples.len());
        let mut dim = 0;
        for t in &tuples {
            offsets.push(dim);
            let (i, j) = corner_of(t);
            dim += alg.corner(i, j).len();
        }
        let index = tuples.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        Cochains {
            tuples,
            offsets,
            index,
            dim,
        }
    }
}

pub struct BarComplex<'a, F: Field> {
    alg: &'a Algebra<F>,
    radical: Vec<usize>,
    /// Position of each basis word inside its corner.
    corner_pos: Vec<usize>,
}

impl<'a, F: Field> BarComplex<'a, F> {
    pub fn new(alg: &'a Algebra<F>) -> Self {
        let radical = (0..alg.dim()).filter(|&b| !alg.basis()[b].is_empty()).collect();
        let mut corner_pos = vec![0; alg.dim()];
        let n = alg.vertex_count();
        for i in 0..n {
            for j in 0..n {
                for (p, &b) in alg.corner(i, j).iter().enumerate() {
                    corner_pos[b] = p;
                }
            }
        }
        BarComplex { alg, radical, corner_pos }
    }

    fn start(&self, b: usize) -> usize {
        self.alg.basis()[b].start
    }
    fn end(&self, b: usize) -> usize {
        self.alg.basis()[b].end
    }

    fn tuples(&self, n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return (0..self.alg.vertex_count()).map(|i| vec![i]).collect();
        }
        let mut out: Vec<Vec<usize>> = self.radical.iter().map(|&b| vec![b]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for t in &out {
                let last = *t.last().unwrap();
                for &b in &self.radical {
                    if self.start(b) == self.end(last) {
                        let mut u = t.clone();
                        u.push(b);
                        next.push(u);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn cochains(&self, n: usize) -> Cochains {
        let tuples = self.tuples(n);
        if n == 0 {
            Cochains::new(self.alg, tuples, |t| (t[0], t[0]))
        } else {
            Cochains::new(self.alg, tuples, |t| (self.start(t[0]), self.end(*t.last().unwrap())))
        }
    }

    /// Dimension of `C^n` without materialising it.
    pub fn cochain_dim(&self, n: usize) -> usize {
        if n == 0 {
            return (0..self.alg.vertex_count()).map(|i| self.alg.corner(i, i).len()).sum();
        }
        let v = self.alg.vertex_count();
        // counts[i][j]: composable tuples of length k from i to j.
        let mut counts = vec![vec![0usize; v]; v];
        for &b in &self.radical {
            counts[self.start(b)][self.end(b)] += 1;
        }
        let single = counts.clone();
        for _ in 1..n {
            let mut next = vec![vec![0usize; v]; v];
            for i in 0..v {
                for m in 0..v {
                    if counts[i][m] == 0 {
                        continue;
                    }
                    for j in 0..v {
                        next[i][j] = next[i][j].saturating_add(counts[i][m].saturating_mul(single[m][j]));
                    }
                }
            }
            counts = next;
        }
        let mut total = 0usize;
        for i in 0..v {
            for j in 0..v {
                total = total.saturating_add(counts[i][j].saturating_mul(self.alg.corner(i, j).len()));
            }
        }
        total
    }

    /// Rows of `δ^n : C^n → C^{n+1}`, one per coordinate of `C^{n+1}`.
    fn differential_rows(&self, n: usize, src: &Cochains, tgt: &Cochains) -> Vec<SparseVec<F::Elem>> {
        let alg = self.alg;
        let f = alg.field();
        let sign = |k: usize| if k % 2 == 0 { f.one() } else { f.neg(&f.one()) };
        let mut rows = Vec::with_capacity(tgt.dim);
        for u in &tgt.tuples {
            let (ci, cj) = (self.start(u[0]), self.end(*u.last().unwrap()));
            let height = alg.corner(ci, cj).len();
            if height == 0 {
                continue;
            }
            // acc[row within corner] : column -> coefficient
            let mut acc: Vec<BTreeMap<usize, F::Elem>> = vec![BTreeMap::new(); height];
            let add = |acc: &mut Vec<BTreeMap<usize, F::Elem>>, col: usize, word: usize, c: F::Elem| {
                let r = self.corner_pos[word];
                let slot = acc[r].entry(col).or_insert_with(|| f.zero());
                *slot = f.add(slot, &c);
            };
            let block = |t: &[usize]| -> Option<(usize, &[usize])> {
                let k = *src.index.get(t)?;
                let (i, j) = if n == 0 {
                    (t[0], t[0])
                } else {
                    (self.start(t[0]), self.end(*t.last().unwrap()))
                };
                Some((src.offsets[k], alg.corner(i, j)))
            };

            // u_1 · f(u_2, …)
            let head: Vec<usize> = if n == 0 { vec![self.end(u[0])] } else { u[1..].to_vec() };
            if let Some((off, words)) = block(&head) {
                for (p, &w) in words.iter().enumerate() {
                    for (x, c) in alg.mul_basis(u[0], w) {
                        add(&mut acc, off + p, *x, c.clone());
                    }
                }
            }
            // Σ (−1)^i f(…, u_i u_{i+1}, …)
            for i in 0..n {
                let s = sign(i + 1);
                for (x, c) in alg.mul_basis(u[i], u[i + 1]) {
                    let mut t = u[..i].to_vec();
                    t.push(*x);
                    t.extend_from_slice(&u[i + 2..]);
                    if let Some((off, words)) = block(&t) {
                        let sc = f.mul(&s, c);
                        for (p, &w) in words.iter().enumerate() {
                            add(&mut acc, off + p, w, sc.clone());
                        }
                    }
                }
            }
            // (−1)^{n+1} f(u_1, …, u_n) · u_{n+1}
            let tail: Vec<usize> = if n == 0 { vec![self.start(u[0])] } else { u[..n].to_vec() };
            if let Some((off, words)) = block(&tail) {
                let s = sign(n + 1);
                for (p, &w) in words.iter().enumerate() {
                    for (x, c) in alg.mul_basis(w, u[n]) {
                        add(&mut acc, off + p, *x, f.mul(&s, c));
                    }
                }
            }
            for row in acc {
                rows.push(row.into_iter().filter(|(_, c)| !f.is_zero(c)).collect());
            }
        }
        rows
    }

    fn rank(&self, rows: &[SparseVec<F::Elem>]) -> usize {
        let f = self.alg.field();
        let mut e = SparseEchelon::new();
        for r in rows {
            e.insert(f, r.clone());
        }
        e.rank()
    }

    /// `(h0, h1, h2)`, skipping `h2` when `dim C^3` exceeds `guard`.
    pub fn hh(&self, guard: usize) -> Result<OracleReport, OracleError> {
        let f = self.alg.field();
        let c3_dim = self.cochain_dim(3);
        let top = if c3_dim > guard { 2 } else { 3 };
        let spaces: Vec<Cochains> = (0..=top).map(|n| self.cochains(n)).collect();
        let mut diffs: Vec<Vec<SparseVec<F::Elem>>> = Vec::new();
        for n in 0..top {
            diffs.push(self.differential_rows(n, &spaces[n], &spaces[n + 1]));
        }
        for n in 1..diffs.len() {
            for row in &diffs[n] {
                let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
                for (j, c) in row {
                    for (k, d) in &diffs[n - 1][*j] {
                        let slot = acc.entry(*k).or_insert_with(|| f.zero());
                        f.add_mul_assign(slot, c, d);
                    }
                }
                if acc.values().any(|c| !f.is_zero(c)) {
                    return Err(OracleError::NotAComplex(n - 1));
                }
            }
        }
        let ranks: Vec<usize> = diffs.iter().map(|d| self.rank(d)).collect();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim).collect();
        let h0 = dims[0] - ranks[0];
        let h1 = dims[1] - ranks[1] - ranks[0];
        let h2 = (top == 3).then(|| dims[2] - ranks[2] - ranks[1]);
        Ok(OracleReport {
            hh: [Some(h0), Some(h1), h2],
            cochain_dims: dims,
            ranks,
            skipped_c3_dim: (top == 2).then_some(c3_dim),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::BuildOptions;
    use crate::fields::{PrimeField, Rationals};
    use crate::presentation::parse;

    fn build<F: Field>(f: F, text: &str) -> Algebra<F> {
        Algebra::build(f, &parse(text).unwrap(), &Default::default(), BuildOptions { degree_cap: 16 }).unwrap()
    }

    #[test]
    fn semisimple() {
        let alg = build(Rationals, "algebra kk\nvertices: 1, 2\n");
        let r = BarComplex::new(&alg).hh(DEFAULT_GUARD).unwrap();
        assert_eq!(r.hh, [Some(2), Some(0), Some(0)]);
    }

    #[test]
    fn dual_numbers() {
        // K[x]/x²: HH^n has dimension 2 in char 2 and alternates 1, 1 otherwise
        // in positive degree, with HH⁰ = A.
        let text = "algebra d\nvertices: 1\narrow x: 1 -> 1\nrelations:\n  x^2 = 0\n";
        let q = BarComplex::new(&build(Rationals, text)).hh(DEFAULT_GUARD).unwrap();
        assert_eq!(q.hh, [Some(2), Some(1), Some(1)]);
        let two = BarComplex::new(&build(PrimeField::new(2).unwrap(), text)).hh(DEFAULT_GUARD).unwrap();
        assert_eq!(two.hh, [Some(2), Some(2), Some(2)]);
    }

    #[test]
    fn cochain_dims_match_enumeration() {
        let text = "algebra t\nvertices: 1, 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelations:\n  a*b*a = 0\n  b*a*b = 0\n";
        let alg = build(Rationals, text);
        let bar = BarComplex::new(&alg);
        for n in 0..4 {
            assert_eq!(bar.cochain_dim(n), bar.cochains(n).dim);
        }
    }

    #[test]
    fn guard_skips_degree_two() {
        let text = "algebra d\nvertices: 1\narrow x: 1 -> 1\nrelations:\n  x^3 = 0\n";
        let alg = build(Rationals, text);
        let r = BarComplex::new(&alg).hh(1).unwrap();
        assert_eq!(r.hh[2], None);
        assert!(r.skipped_c3_dim.is_some());
    }
}
