//! Dense linear algebra over a prime field.
//!
//! Every basis returned from this module is in canonical reduced row echelon
//! form, so identical inputs always produce bit-identical outputs.

use std::fmt;

use crate::Error;

/// Largest supported characteristic. Root finding in [`crate::poly`] scans the
/// field, so the characteristic is kept small.
pub const MAX_PRIME: u32 = 65521;

/// The prime field `F_p`. Elements are plain `u32` residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, Error> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidInput(format!(
                "field characteristic must be a prime in 2..={MAX_PRIME}, got {p}"
            )));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric lift into `(-p/2, p/2]`, handy for printing.
    pub fn to_signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over a [`PrimeField`]. Zero-row and zero-column
/// shapes are allowed and behave as the obvious empty maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.p());
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from signed integer rows, reducing entries mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(field, rows, columns.len(), |r, c| columns[c][r])
    }

    pub fn column_vector(field: PrimeField, v: &[u32]) -> Self {
        Self::from_columns(field, v.len(), &[v.to_vec()])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (j, &b) in orow.iter().enumerate() {
                    acc[j] = (acc[j] + a * b as u64) % p;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.data[i * other.cols + j] = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack_all(field: PrimeField, rows: usize, parts: &[Matrix]) -> Matrix {
        parts
            .iter()
            .fold(Matrix::zeros(field, rows, 0), |acc, m| acc.hstack(m))
    }

    pub fn vstack_all(field: PrimeField, cols: usize, parts: &[Matrix]) -> Matrix {
        parts
            .iter()
            .fold(Matrix::zeros(field, 0, cols), |acc, m| acc.vstack(m))
    }

    pub fn block_diag(field: PrimeField, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Self::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Self::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Self::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(m.get(row, col));
            if inv != 1 {
                for c in col..m.cols {
                    let v = m.get(row, c);
                    m.data[row * m.cols + c] = f.mul(v, inv);
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right null space, one column per free variable of the
    /// reduced echelon form, in increasing free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let ech = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &ech.pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut out = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (i, &pc) in ech.pivots.iter().enumerate() {
                out.set(pc, k, f.neg(ech.reduced.get(i, fc)));
            }
        }
        out
    }

    /// Canonical basis (as columns) of the column space.
    pub fn column_space(&self) -> Matrix {
        let ech = self.transpose().rref();
        ech.reduced.select_rows(&(0..ech.rank()).collect::<Vec<_>>()).transpose()
    }

    /// Canonical basis (as rows) of the row space.
    pub fn row_space(&self) -> Matrix {
        let ech = self.rref();
        ech.reduced.select_rows(&(0..ech.rank()).collect::<Vec<_>>())
    }

    /// Some `x` with `self * x = b`, free variables set to zero, or `None`.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: row counts differ");
        let f = self.field;
        let aug = self.hstack(b);
        let ech = aug.rref();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (i, &pc) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, ech.reduced.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    /// A surjection `q` out of the codomain with `ker q = im self`.
    pub fn cokernel_projection(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// A right inverse of a matrix with full row rank.
    pub fn right_inverse(&self) -> Matrix {
        let id = Matrix::identity(self.field, self.rows);
        self.solve(&id)
            .expect("right_inverse requires full row rank")
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() || self.rank() != self.rows {
            return None;
        }
        self.solve(&Matrix::identity(self.field, self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.rows == 0 || self.pow(self.rows as u32).is_zero()
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn column_span_contains(&self, other: &Matrix) -> bool {
        if other.cols == 0 || other.is_zero() {
            return true;
        }
        self.solve(other).is_some()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "Matrix<F_{}>{}x{}[", self.field.p(), self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(fmt, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(fmt, "{}", row.join(" "))?;
        }
        write!(fmt, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn rank_examples() {
        let k = f(101);
        assert_eq!(Matrix::identity(k, 3).rank(), 3);
        assert_eq!(Matrix::zeros(k, 2, 3).rank(), 0);
        assert_eq!(Matrix::from_rows(f(2), &[vec![1, 1], vec![1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = f(101);
        assert_eq!(Matrix::identity(k, 3).kernel_basis().cols(), 0);
        let z = Matrix::zeros(k, 2, 3).kernel_basis();
        assert_eq!(z, Matrix::identity(k, 3));
        let k2 = f(2);
        let ker = Matrix::from_rows(k2, &[vec![1, 1], vec![1, 1]]).kernel_basis();
        assert_eq!(ker, Matrix::from_rows(k2, &[vec![1], vec![1]]));
    }

    #[test]
    fn solve_examples() {
        let k = f(101);
        let b = Matrix::from_rows(k, &[vec![4], vec![7]]);
        assert_eq!(Matrix::identity(k, 2).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(k, 2, 2).solve(&b), None);
        let m = Matrix::from_rows(k, &[vec![1, 0], vec![0, 0]]);
        let rhs = Matrix::from_rows(k, &[vec![1], vec![0]]);
        assert_eq!(m.solve(&rhs), Some(Matrix::from_rows(k, &[vec![1], vec![0]])));
    }

    #[test]
    fn cokernel_examples() {
        let k = f(101);
        let q = Matrix::identity(k, 3).cokernel_projection();
        assert_eq!((q.rows(), q.cols()), (0, 3));
        assert_eq!(
            Matrix::zeros(k, 2, 2).cokernel_projection(),
            Matrix::identity(k, 2)
        );
        let q = Matrix::from_rows(k, &[vec![1], vec![0]]).cokernel_projection();
        assert_eq!(q, Matrix::from_rows(k, &[vec![0, 1]]));
    }

    #[test]
    fn empty_shapes() {
        let k = f(7);
        let a = Matrix::zeros(k, 0, 3);
        let b = Matrix::zeros(k, 3, 0);
        assert_eq!(a.mul(&b).rows(), 0);
        assert_eq!(b.mul(&a), Matrix::zeros(k, 3, 3));
        assert_eq!(a.kernel_basis(), Matrix::identity(k, 3));
        assert_eq!(b.cokernel_projection(), Matrix::identity(k, 3));
    }

    #[test]
    fn inverse_and_nilpotent() {
        let k = f(5);
        let m = Matrix::from_rows(k, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(k, 2));
        let n = Matrix::from_rows(k, &[vec![0, 1], vec![0, 0]]);
        assert!(n.is_nilpotent());
        assert!(!m.is_nilpotent());
        assert!(n.inverse().is_none());
    }
}
