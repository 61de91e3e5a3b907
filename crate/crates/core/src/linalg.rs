//! Dense exact vectors and matrices.
//!
//! Elimination always takes the first nonzero entry of a column as pivot, so
//! every result (rank, inverse, kernel basis) is reproducible bit for bit.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Coordinates of an element with respect to a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: FieldSpec, coords: Vec<Scalar>) -> Self {
        debug_assert!(coords.iter().all(|c| c.field() == field));
        Vector { field, coords }
    }

    pub fn zeros(field: FieldSpec, dim: usize) -> Self {
        Vector::new(field, vec![field.zero(); dim])
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        let mut v = Vector::zeros(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn from_i64s(field: FieldSpec, xs: &[i64]) -> Self {
        Vector::new(field, xs.iter().map(|&x| field.from_i64(x)).collect())
    }

    /// Parses comma-separated scalar literals.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|s| field.parse_scalar(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector::new(field, coords))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector::new(self.field, self.coords.iter().map(|c| c * s).collect())
    }

    pub fn axpy(&mut self, s: &Scalar, other: &Vector) {
        for (c, o) in self.coords.iter_mut().zip(&other.coords) {
            if !o.is_zero() {
                *c += &(s * o);
            }
        }
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector::new(self.field, self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector::new(self.field, self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A dense matrix, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), rows, "column length mismatch");
            for i in 0..rows {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::new(self.field, (0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        let mut out = Vector::zeros(self.field, self.rows);
        for j in 0..self.cols {
            if v[j].is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.coords[i] += &(a * &v[j]);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            entries: self.entries.iter().map(|e| e * s).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(Matrix {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
            ..self.clone()
        })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pivot_entry = m.get(r, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pivot_entry);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().take_while(|&&c| c < n).count();
        if rank < n {
            return Err(Error::NotInvertible { rank, size: n });
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Basis of the null space, itself in reduced echelon form: each basis
    /// vector has a leading 1 and the vectors are ordered by leading position.
    pub fn kernel(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -red.get(r, f);
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return Vec::new();
        }
        let basis = Matrix::from_rows(self.field, raw).expect("uniform rows");
        let (echelon, piv) = basis.rref();
        (0..piv.len())
            .map(|r| Vector::new(self.field, echelon.row(r).to_vec()))
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
