//! Finite-dimensional algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Structure constants `c[i][j][k]` with `eᵢ·eⱼ = Σₖ c[i][j][k] eₖ`,
/// stored flat in `i, j, k` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    entries: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zeros(field: FieldSpec, dim: usize) -> Self {
        StructureTensor {
            dim,
            entries: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_entries(dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: entries.len(),
            });
        }
        Ok(StructureTensor { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// The product `eᵢ·eⱼ` as a coordinate slice.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.entries[start..start + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }
}

/// A vector space with one bilinear product, and optionally a declared unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    field: FieldSpec,
    basis: Vec<String>,
    tensor: StructureTensor,
    unit: Option<Vector>,
}

impl Algebra {
    /// Builds an algebra, checking shapes and, when a unit is declared, that
    /// it really is a two-sided unit on every basis vector.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        basis: Vec<String>,
        tensor: StructureTensor,
        unit: Option<Vector>,
    ) -> Result<Self> {
        let dim = tensor.dim();
        if basis.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: basis.len(),
            });
        }
        if let Some(bad) = tensor.entries().iter().find(|s| s.field() != field) {
            return Err(Error::NotInField {
                value: bad.to_string(),
                field,
            });
        }
        if let Some(u) = &unit {
            if u.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: u.dim(),
                });
            }
        }
        let alg = Algebra {
            name: name.into(),
            field,
            basis,
            tensor,
            unit,
        };
        if let Some(u) = &alg.unit {
            alg.check_unit(u)?;
        }
        Ok(alg)
    }

    /// Builds an algebra from a closure giving each basis product.
    pub fn from_fn(
        name: impl Into<String>,
        field: FieldSpec,
        basis: &[&str],
        mut product: impl FnMut(usize, usize) -> Vec<i64>,
    ) -> Result<Self> {
        let d = basis.len();
        let mut tensor = StructureTensor::zeros(field, d);
        for i in 0..d {
            for j in 0..d {
                let coords = product(i, j);
                if coords.len() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: coords.len(),
                    });
                }
                for (k, c) in coords.into_iter().enumerate() {
                    tensor.set(i, j, k, field.from_i64(c));
                }
            }
        }
        Algebra::new(name, field, basis.iter().map(|s| s.to_string()).collect(), tensor, None)
    }

    fn check_unit(&self, u: &Vector) -> Result<()> {
        let mut failures = Vec::new();
        for i in 0..self.dim() {
            let e = Vector::basis(self.field, self.dim(), i);
            let left = self.multiply_unchecked(u, &e);
            if left != e {
                failures.push(format!(
                    "{}·{} = {} ≠ {}",
                    self.render(u),
                    self.basis[i],
                    self.render(&left),
                    self.basis[i]
                ));
            }
            let right = self.multiply_unchecked(&e, u);
            if right != e {
                failures.push(format!(
                    "{}·{} = {} ≠ {}",
                    self.basis[i],
                    self.render(u),
                    self.render(&right),
                    self.basis[i]
                ));
            }
        }
        if failures.is_empty() {
            Ok(())
        } else {
            Err(Error::NotAUnit(failures.join("; ")))
        }
    }

    /// Returns a copy carrying the given unit annotation (validated).
    pub fn with_unit(self, unit: Option<Vector>) -> Result<Self> {
        Algebra::new(self.name, self.field, self.basis, self.tensor, unit)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Copy with a replaced structure tensor and unit, same basis and field.
    pub(crate) fn with_tensor(&self, name: String, tensor: StructureTensor, unit: Option<Vector>) -> Result<Self> {
        Algebra::new(name, self.field, self.basis.clone(), tensor, unit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.field, self.dim())
    }

    /// Bilinear product `u·v` expanded through the structure constants.
    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        for w in [u, v] {
            if w.dim() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: w.dim(),
                });
            }
        }
        Ok(self.multiply_unchecked(u, v))
    }

    pub(crate) fn multiply_unchecked(&self, u: &Vector, v: &Vector) -> Vector {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, c) in self.tensor.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&uv * c);
                    }
                }
            }
        }
        Vector::new(self.field, out)
    }

    /// Renders a vector as a linear combination of basis labels.
    pub fn render(&self, v: &Vector) -> String {
        let mut parts = Vec::new();
        for (c, label) in v.coords().iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let term = if c.is_one() {
                label.clone()
            } else if c == &-self.field.one() {
                format!("-{label}")
            } else if c.to_string().contains('/') {
                format!("({c}){label}")
            } else {
                format!("{c}{label}")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, dim {})", self.name, self.field, self.dim())
    }
}

/// A linear endomorphism `D: A → A`; column `k` is `D(eₖ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn from_images(field: FieldSpec, images: &[Vector]) -> Self {
        LinearMap {
            matrix: Matrix::from_columns(field, images.len(), images),
        }
    }

    pub fn identity(field: FieldSpec, dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(field, dim),
        }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(field, dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.matrix.apply(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scale(&-self.matrix.field().one()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn zero_algebra_products_vanish() {
        let z = corpus::zero_algebra(Q, 3);
        let u = Vector::from_i64s(Q, &[1, 2, 3]);
        let v = Vector::from_i64s(Q, &[-1, 0, 5]);
        assert!(z.multiply(&u, &v).unwrap().is_zero());
    }

    #[test]
    fn dual_number_square() {
        let dual = corpus::dual_numbers(Q);
        let one_plus_x = Vector::from_i64s(Q, &[1, 1]);
        let sq = dual.multiply(&one_plus_x, &one_plus_x).unwrap();
        assert_eq!(sq, Vector::from_i64s(Q, &[1, 2]));
        assert_eq!(dual.render(&sq), "1 + 2x");
    }

    #[test]
    fn basis_products_read_the_tensor() {
        let ut = corpus::upper_triangular(Q);
        for i in 0..3 {
            for j in 0..3 {
                let p = ut.multiply(&ut.basis_vector(i), &ut.basis_vector(j)).unwrap();
                assert_eq!(p.coords(), ut.tensor().product_of_basis(i, j));
            }
        }
    }

    #[test]
    fn multiply_rejects_wrong_dimension() {
        let dual = corpus::dual_numbers(Q);
        let short = Vector::from_i64s(Q, &[1]);
        assert!(matches!(
            dual.multiply(&short, &short),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn bogus_unit_names_the_failing_product() {
        let dual = corpus::dual_numbers(Q);
        let err = dual.with_unit(Some(Vector::from_i64s(Q, &[0, 1]))).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("x·x = 0 ≠ x"), "{msg}");
    }

    #[test]
    fn multiply_is_bilinear() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for alg in corpus::all(Q) {
            let d = alg.dim();
            let rand_vec = |rng: &mut rand_chacha::ChaCha8Rng| {
                Vector::new(Q, (0..d).map(|_| Q.from_i64(rng.random_range(-4..5))).collect())
            };
            for _ in 0..5 {
                let (u, u2, v) = (rand_vec(&mut rng), rand_vec(&mut rng), rand_vec(&mut rng));
                let alpha = Q.from_i64(rng.random_range(-4..5));
                let lhs = alg.multiply(&(&u.scale(&alpha) + &u2), &v).unwrap();
                let rhs = &alg.multiply(&u, &v).unwrap().scale(&alpha) + &alg.multiply(&u2, &v).unwrap();
                assert_eq!(lhs, rhs, "{}", alg.name());
                let lhs = alg.multiply(&v, &(&u.scale(&alpha) + &u2)).unwrap();
                let rhs = &alg.multiply(&v, &u).unwrap().scale(&alpha) + &alg.multiply(&v, &u2).unwrap();
                assert_eq!(lhs, rhs, "{}", alg.name());
            }
        }
    }
}
