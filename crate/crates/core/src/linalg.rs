//! Dense and sparse exact linear algebra over any [`Field`].
//!
//! Matrices act on column vectors: a map `V -> W` is stored with
//! `dim W` rows and `dim V` columns.

use crate::fields::Field;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(f: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn from_rows(f: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(f, rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            m.data[i * cols..(i + 1) * cols].clone_from_slice(&r);
        }
        Ok(m)
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(f: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(f, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                if !f.is_zero(x) {
                    m.set(i, j, x.clone());
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i * self.cols + j] = x;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, f: &F, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let idx = i * out.cols + j;
                        f.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, f: &F, v: &[F::Elem]) -> Result<Vec<F::Elem>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = vec![f.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, x) in self.row(i).iter().zip(v) {
                if !f.is_zero(a) && !f.is_zero(x) {
                    f.add_mul_assign(o, a, x);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(f: &F, m: &Matrix<F>) -> Rref<F> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        let mut support = Vec::new();
        for j in c..cols {
            let idx = r * cols + j;
            if !f.is_zero(&a.data[idx]) {
                a.data[idx] = f.mul(&a.data[idx], &inv);
                support.push(j);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            let neg = f.neg(&factor);
            for &j in &support {
                let pv = a.data[r * cols + j].clone();
                f.add_mul_assign(&mut a.data[i * cols + j], &neg, &pv);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F>) -> usize {
    rref(f, m).pivots.len()
}

/// A basis of `{v : m v = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(f: &F, m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    let Rref { matrix: r, pivots } = rref(f, m);
    let mut is_pivot = vec![None; m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (row, &c) in pivots.iter().enumerate() {
            let x = r.get(row, free);
            if !f.is_zero(x) {
                v[c] = f.neg(x);
            }
        }
        basis.push(v);
    }
    basis
}

/// A subspace of `F^n` kept in reduced echelon form, supporting incremental
/// insertion and membership tests.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span<I>(f: &F, ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(f, v)?;
        }
        Ok(s)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, v: &[F::Elem]) -> Result<(), LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    /// Residue of `v` modulo the subspace, in canonical form.
    pub fn reduce(&self, f: &F, v: &[F::Elem]) -> Result<Vec<F::Elem>, LinalgError> {
        self.check(v)?;
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[c]) {
                continue;
            }
            let neg = f.neg(&w[c]);
            for (j, x) in row.iter().enumerate().skip(c) {
                if !f.is_zero(x) {
                    f.add_mul_assign(&mut w[j], &neg, x);
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> Result<bool, LinalgError> {
        Ok(self.reduce(f, v)?.iter().all(|x| f.is_zero(x)))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &F, v: Vec<F::Elem>) -> Result<bool, LinalgError> {
        let mut w = self.reduce(f, &v)?;
        let Some(c) = w.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        let inv = f.inv(&w[c]).expect("nonzero");
        for x in w.iter_mut().skip(c) {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[c]) {
                continue;
            }
            let neg = f.neg(&row[c]);
            for (j, x) in w.iter().enumerate().skip(c) {
                if !f.is_zero(x) {
                    f.add_mul_assign(&mut row[j], &neg, x);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(pos, c);
        self.rows.insert(pos, w);
        Ok(true)
    }

    pub fn is_subspace_of(&self, f: &F, other: &Self) -> Result<bool, LinalgError> {
        for r in &self.rows {
            if !other.contains(f, r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub type SparseVec<E> = Vec<(usize, E)>;

/// Sparse semi-echelon basis used for rank computations on large, very sparse
/// maps.
#[derive(Debug, Clone)]
pub struct SparseEchelon<F: Field> {
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: HashMap<usize, usize>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        SparseEchelon {
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector given as (index, value) pairs; returns whether the rank grew.
    pub fn insert(&mut self, f: &F, v: SparseVec<F::Elem>) -> bool {
        let mut w: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (i, x) in v {
            if f.is_zero(&x) {
                continue;
            }
            let slot = w.entry(i).or_insert_with(|| f.zero());
            *slot = f.add(slot, &x);
            if f.is_zero(slot) {
                w.remove(&i);
            }
        }
        let mut cursor = 0;
        loop {
            let hit = w
                .range(cursor..)
                .find(|(c, _)| self.pivot_row.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((c, x)) = hit else { break };
            let neg = f.neg(&x);
            for (j, y) in &self.rows[self.pivot_row[&c]] {
                let slot = w.entry(*j).or_insert_with(|| f.zero());
                f.add_mul_assign(slot, &neg, y);
                if f.is_zero(slot) {
                    w.remove(j);
                }
            }
            cursor = c + 1;
        }
        let Some((&c, lead)) = w.iter().next() else {
            return false;
        };
        let inv = f.inv(lead).expect("nonzero");
        let row: SparseVec<F::Elem> = w.into_iter().map(|(j, y)| (j, f.mul(&y, &inv))).collect();
        self.pivot_row.insert(c, self.rows.len());
        self.rows.push(row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        let f = Rationals;
        let cols = rows[0].len();
        Matrix::from_rows(&f, cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_kernel_small() {
        let f = Rationals;
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&f, &m), 2);
        let k = kernel_basis(&f, &m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&f, &k[0]).unwrap().iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows: Vec<Vec<i64>> = vec![vec![1, 1], vec![1, -1]];
        let f2 = PrimeField::new(2).unwrap();
        let m2 = Matrix::from_rows(&f2, 2, rows.iter().map(|r| r.iter().map(|&x| f2.from_i64(x)).collect()).collect())
            .unwrap();
        assert_eq!(rank(&f2, &m2), 1);
        let f3 = PrimeField::new(3).unwrap();
        let m3 = Matrix::from_rows(&f3, 2, rows.iter().map(|r| r.iter().map(|&x| f3.from_i64(x)).collect()).collect())
            .unwrap();
        assert_eq!(rank(&f3, &m3), 2);
    }

    #[test]
    fn dimension_errors() {
        let f = Rationals;
        let s = Subspace::<Rationals>::zero(3);
        assert!(s.contains(&f, &[f.one()]).is_err());
        assert!(q(&[&[1, 2]]).apply(&f, &[f.one()]).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<u64>)> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u64..5, r * c)))
    }

    proptest! {
        #[test]
        fn rank_nullity((_r, c, data) in arb_matrix()) {
            let f = PrimeField::new(5).unwrap();
            let m = Matrix::from_rows(&f, c, data.chunks(c).map(|x| x.to_vec()).collect()).unwrap();
            let k = kernel_basis(&f, &m);
            prop_assert_eq!(rank(&f, &m) + k.len(), c);
            for v in &k {
                prop_assert!(m.apply(&f, v).unwrap().iter().all(|x| *x == 0));
            }
            prop_assert_eq!(rank(&f, &m), rank(&f, &m.transpose()));
        }

        #[test]
        fn subspace_and_sparse_agree((r, c, data) in arb_matrix()) {
            let f = PrimeField::new(5).unwrap();
            let rows: Vec<Vec<u64>> = data.chunks(c).map(|x| x.to_vec()).collect();
            let m = Matrix::from_rows(&f, c, rows.clone()).unwrap();
            let s = Subspace::span(&f, c, rows.clone()).unwrap();
            let mut sp = SparseEchelon::<PrimeField>::new();
            for row in &rows {
                sp.insert(&f, row.iter().cloned().enumerate().collect());
            }
            prop_assert_eq!(s.dim(), rank(&f, &m));
            prop_assert_eq!(sp.rank(), rank(&f, &m));
            for row in &rows {
                prop_assert!(s.contains(&f, row).unwrap());
            }
            let _ = r;
        }
    }
}
