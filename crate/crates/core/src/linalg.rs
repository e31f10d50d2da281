//! Dense exact linear algebra over a [`Field`]: Gaussian elimination,
//! rank/kernel/solve, incremental row spans, and a simultaneous
//! eigenbasis routine for commuting operators over prime fields.

use thiserror::Error;

use crate::field::{Field, PrimeField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not invariant under the given operator")]
    NotInvariant,
    #[error("operators do not split into one-dimensional common eigenspaces")]
    NotFullySplit,
}

/// Dense row-major matrix carrying its field context.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Mat { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Mat { field, rows: r, cols: c, data }
    }

    pub fn from_columns(field: F, cols: Vec<Vec<F::Elem>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        assert!(cols.iter().all(|x| x.len() == r), "ragged columns");
        let mut m = Mat::zero(field, r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Mat::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = &self.field;
        let mut out = Mat::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.at(i, j), &f.mul(a, other.at(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot nonzero");
            for j in col..self.cols {
                let v = f.mul(self.at(row, j), &inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = f.sub(self.at(r, j), &f.mul(&factor, self.at(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref().len()
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant of square matrix");
        let f = self.field.clone();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = f.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !f.is_zero(m.at(r, col))) else {
                return f.zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = f.neg(&det);
            }
            let pivot = m.at(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("pivot nonzero");
            for r in col + 1..n {
                if !f.is_zero(m.at(r, col)) {
                    let factor = f.mul(m.at(r, col), &inv);
                    for j in col..n {
                        let v = f.sub(m.at(r, j), &f.mul(&factor, m.at(col, j)));
                        m.set(r, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of square matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut aug = Mat::zero(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            let one = f.one();
            aug.set(i, n + i, one);
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        let mut inv = Mat::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.at(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Solves `self * X = rhs` exactly. Returns `None` when inconsistent.
    /// Free variables, if any, are set to zero.
    pub fn solve_matrix(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "solve shape");
        let f = self.field.clone();
        let (r, c, k) = (self.rows, self.cols, rhs.cols);
        let mut aug = Mat::zero(f.clone(), r, c + k);
        for i in 0..r {
            for j in 0..c {
                aug.set(i, j, self.at(i, j).clone());
            }
            for j in 0..k {
                aug.set(i, c + j, rhs.at(i, j).clone());
            }
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= c) {
            return None;
        }
        let mut x = Mat::zero(f, c, k);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, aug.at(row, c + j).clone());
            }
        }
        Some(x)
    }

    /// Basis of the right kernel, deterministic ordering by free column.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &p) in pivot_set.iter().enumerate() {
                v[p] = f.neg(m.at(row, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// Incremental echelonized row span: tracks the dimension of a growing
/// span and membership, with exact arithmetic.
#[derive(Clone, Debug)]
pub struct RowSpan<F: Field> {
    field: F,
    cols: usize,
    /// Echelon rows, each normalized to leading coefficient 1, ordered by pivot.
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpan<F> {
    pub fn new(field: F, cols: usize) -> Self {
        RowSpan { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    fn reduce(&self, v: &mut Vec<F::Elem>) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let factor = v[p].clone();
                for j in p..self.cols {
                    v[j] = f.sub(&v[j], &f.mul(&factor, &row[j]));
                }
            }
        }
    }

    /// Inserts a vector; returns `true` if the span grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.cols, "row span width");
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("leading entry nonzero");
        for x in v.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        // keep prior rows fully reduced against the new one
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert!(rp != p);
            if !f.is_zero(&row[p]) {
                let factor = row[p].clone();
                for j in p..self.cols {
                    row[j] = f.sub(&row[j], &f.mul(&factor, &v[j]));
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }
}

/// Common eigenbasis of a family of commuting, simultaneously
/// diagonalizable operators over GF(q).
///
/// Subspaces are split by each operator in turn, eigenvalues scanned in
/// increasing residue order, so the output ordering is deterministic.
/// Fails with [`LinalgError::NotFullySplit`] if the family does not split
/// the space into one-dimensional common eigenspaces over GF(q).
pub fn simultaneous_eigenbasis(
    field: PrimeField,
    ops: &[Mat<PrimeField>],
) -> Result<Vec<Vec<u64>>, LinalgError> {
    let n = match ops.first() {
        Some(m) => m.rows(),
        None => return Err(LinalgError::NotFullySplit),
    };
    for m in ops {
        if m.rows() != n || m.cols() != n {
            return Err(LinalgError::DimensionMismatch(format!(
                "operator is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let mut spaces = vec![Mat::identity(field, n)];
    for op in ops {
        if spaces.iter().all(|s| s.cols() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.cols() == 1 {
                next.push(space);
                continue;
            }
            let restricted = restrict_operator(op, &space)?;
            let mut split_dim = 0;
            for lambda in 0..field.modulus() {
                let shifted = shift_diagonal(&restricted, lambda);
                if !field.is_zero(&shifted.det()) {
                    continue;
                }
                let kernel = shifted.nullspace();
                split_dim += kernel.len();
                let cols: Vec<Vec<u64>> = kernel
                    .into_iter()
                    .map(|k| space.mul_vec(&k))
                    .collect();
                next.push(Mat::from_columns(field, cols));
            }
            if split_dim != space.cols() {
                return Err(LinalgError::NotFullySplit);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.cols() != 1) {
        return Err(LinalgError::NotFullySplit);
    }
    Ok(spaces.into_iter().map(|s| s.column(0)).collect())
}

/// Matrix of `op` restricted to the column space of `basis`:
/// solves `op * basis = basis * T`.
fn restrict_operator(
    op: &Mat<PrimeField>,
    basis: &Mat<PrimeField>,
) -> Result<Mat<PrimeField>, LinalgError> {
    let image = op.mul_mat(basis);
    basis.solve_matrix(&image).ok_or(LinalgError::NotInvariant)
}

fn shift_diagonal(m: &Mat<PrimeField>, lambda: u64) -> Mat<PrimeField> {
    let f = *m.field();
    let mut out = m.clone();
    for i in 0..m.rows() {
        let v = f.sub(m.at(i, i), &lambda);
        out.set(i, i, v);
    }
    out
}
