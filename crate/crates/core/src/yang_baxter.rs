//! Operators on `V⊗V`, the braid and quantum Yang–Baxter checks, and the two
//! operator families built from an associative algebra and from a Lie
//! algebra with a central element.
//!
//! Index convention: the basis tensor `eᵢ⊗eⱼ` has index `i·d + j`, and column
//! `i·d + j` of an operator matrix holds the coordinates of `R(eᵢ⊗eⱼ)`. On
//! `V⊗V⊗V`, `eᵢ⊗eⱼ⊗eₖ` has index `i·d² + j·d + k`.

use std::fmt;

use crate::algebra::Algebra;
use crate::axioms::{check_associative, check_lie};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Name of the index convention recorded in operator files.
pub const CONVENTION: &str = "column-major-basis-image";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSquareOperator {
    dim: usize,
    matrix: Matrix,
}

impl TensorSquareOperator {
    pub fn new(dim: usize, matrix: Matrix) -> Result<Self> {
        let side = dim * dim;
        if matrix.rows() != side || matrix.cols() != side {
            return Err(Error::DimensionMismatch {
                expected: side,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        Ok(TensorSquareOperator { dim, matrix })
    }

    pub fn identity(field: FieldSpec, dim: usize) -> Self {
        TensorSquareOperator {
            dim,
            matrix: Matrix::identity(field, dim * dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Coordinates of `R(eᵢ⊗eⱼ)`.
    pub fn image(&self, i: usize, j: usize) -> Vector {
        self.matrix.column(i * self.dim + j)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim * self.dim
    }
}

/// The twist `τ(v⊗w) = w⊗v`.
pub fn twist(field: FieldSpec, dim: usize) -> TensorSquareOperator {
    let mut m = Matrix::zeros(field, dim * dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            m.set(j * dim + i, i * dim + j, field.one());
        }
    }
    TensorSquareOperator { dim, matrix: m }
}

/// `first ∘ second`: apply `second`, then `first`.
pub fn compose(first: &TensorSquareOperator, second: &TensorSquareOperator) -> Result<TensorSquareOperator> {
    if first.dim != second.dim {
        return Err(Error::DimensionMismatch {
            expected: first.dim,
            found: second.dim,
        });
    }
    Ok(TensorSquareOperator {
        dim: first.dim,
        matrix: first.matrix.mul(&second.matrix)?,
    })
}

/// Which pair of tensor slots an operator acts on inside `V⊗V⊗V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    P12,
    P23,
    P13,
}

/// `R¹²`, `R²³` or `R¹³` as a `d³×d³` matrix, built by moving indices
/// directly.
pub fn lift(r: &TensorSquareOperator, position: Position) -> Matrix {
    let d = r.dim;
    let idx3 = |a: usize, b: usize, c: usize| (a * d + b) * d + c;
    let mut out = Matrix::zeros(r.field(), d * d * d, d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // the pair of slots R acts on
                let (x, y) = match position {
                    Position::P12 => (i, j),
                    Position::P23 => (j, k),
                    Position::P13 => (i, k),
                };
                let col = idx3(i, j, k);
                for p in 0..d {
                    for q in 0..d {
                        let c = r.matrix.get(p * d + q, x * d + y);
                        if c.is_zero() {
                            continue;
                        }
                        let row = match position {
                            Position::P12 => idx3(p, q, k),
                            Position::P23 => idx3(i, p, q),
                            Position::P13 => idx3(p, j, q),
                        };
                        out.set(row, col, c.clone());
                    }
                }
            }
        }
    }
    out
}

/// `R¹³ = (I⊗τ)(R⊗I)(I⊗τ)` computed as three Kronecker-built matrix
/// products.
pub fn lift13_by_conjugation(r: &TensorSquareOperator) -> Matrix {
    let field = r.field();
    let id = Matrix::identity(field, r.dim);
    let i_tau = id.kron(twist(field, r.dim).matrix());
    let r_i = r.matrix.kron(&id);
    i_tau
        .mul(&r_i)
        .and_then(|m| m.mul(&i_tau))
        .expect("square matrices of equal side")
}

/// First entry where two matrices differ, in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryDifference {
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Outcome of a braid or QYBE check. Invertibility is reported alongside
/// the equation so that non-invertible solutions stay visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorReport {
    pub equation: &'static str,
    pub holds: bool,
    pub first_difference: Option<EntryDifference>,
    pub invertible: bool,
    pub rank: usize,
}

impl OperatorReport {
    /// Equation holds and the operator is invertible.
    pub fn is_yang_baxter_operator(&self) -> bool {
        self.holds && self.invertible
    }
}

impl fmt::Display for OperatorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_difference {
            None => writeln!(f, "{}: PASS", self.equation)?,
            Some(d) => writeln!(
                f,
                "{}: FAIL  first difference at ({}, {}): lhs = {}, rhs = {}",
                self.equation, d.row, d.col, d.lhs, d.rhs
            )?,
        }
        writeln!(f, "invertible: {} (rank {})", if self.invertible { "yes" } else { "no" }, self.rank)
    }
}

fn compare(equation: &'static str, r: &TensorSquareOperator, lhs: &Matrix, rhs: &Matrix) -> OperatorReport {
    let mut first_difference = None;
    'outer: for row in 0..lhs.rows() {
        for col in 0..lhs.cols() {
            if lhs.get(row, col) != rhs.get(row, col) {
                first_difference = Some(EntryDifference {
                    row,
                    col,
                    lhs: lhs.get(row, col).clone(),
                    rhs: rhs.get(row, col).clone(),
                });
                break 'outer;
            }
        }
    }
    let rank = r.rank();
    OperatorReport {
        equation,
        holds: first_difference.is_none(),
        first_difference,
        invertible: rank == r.dim * r.dim,
        rank,
    }
}

fn triple(a: &Matrix, b: &Matrix, c: &Matrix) -> Matrix {
    a.mul(b).and_then(|m| m.mul(c)).expect("equal sides")
}

/// `R¹² R²³ R¹² = R²³ R¹² R²³`.
pub fn check_braid(r: &TensorSquareOperator) -> OperatorReport {
    let r12 = lift(r, Position::P12);
    let r23 = lift(r, Position::P23);
    compare("braid", r, &triple(&r12, &r23, &r12), &triple(&r23, &r12, &r23))
}

/// `R¹² R¹³ R²³ = R²³ R¹³ R¹²`.
pub fn check_qybe(r: &TensorSquareOperator) -> OperatorReport {
    let r12 = lift(r, Position::P12);
    let r13 = lift(r, Position::P13);
    let r23 = lift(r, Position::P23);
    compare("qybe", r, &triple(&r12, &r13, &r23), &triple(&r23, &r13, &r12))
}

/// `(α, β, γ)` of `a⊗b ↦ α·ab⊗1 + β·1⊗ab − γ·a⊗b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YBFamilyParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl YBFamilyParams {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Self {
        YBFamilyParams { alpha, beta, gamma }
    }
}

/// Which of the three parameter regimes, if any, `(α, β, γ)` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YbCase {
    /// α = γ ≠ 0, β ≠ 0
    CaseI,
    /// β = γ ≠ 0, α ≠ 0
    CaseII,
    /// α = β = 0, γ ≠ 0
    CaseIII,
    NoCase,
}

impl fmt::Display for YbCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YbCase::CaseI => "I (alpha = gamma != 0, beta != 0)",
            YbCase::CaseII => "II (beta = gamma != 0, alpha != 0)",
            YbCase::CaseIII => "III (alpha = beta = 0, gamma != 0)",
            YbCase::NoCase => "none (not a Yang-Baxter family member)",
        })
    }
}

/// Precedence I > II > III when several hold (α = β = γ ≠ 0).
pub fn classify_params(p: &YBFamilyParams) -> YbCase {
    let (a, b, g) = (&p.alpha, &p.beta, &p.gamma);
    if a == g && !a.is_zero() && !b.is_zero() {
        YbCase::CaseI
    } else if b == g && !b.is_zero() && !a.is_zero() {
        YbCase::CaseII
    } else if a.is_zero() && b.is_zero() && !g.is_zero() {
        YbCase::CaseIII
    } else {
        YbCase::NoCase
    }
}

/// An operator plus any non-fatal warnings raised while building it.
#[derive(Debug, Clone)]
pub struct YbConstruction {
    pub operator: TensorSquareOperator,
    pub warnings: Vec<String>,
}

/// `a⊗b ↦ α·ab⊗1 + β·1⊗ab − γ·a⊗b` on a unital algebra. Non-associative
/// input is accepted with a warning.
pub fn build_assoc_yb(alg: &Algebra, params: &YBFamilyParams) -> Result<YbConstruction> {
    let unit = alg.unit().ok_or_else(|| Error::MissingUnit(alg.name().to_string()))?;
    let field = alg.field();
    let d = alg.dim();
    let mut m = Matrix::zeros(field, d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            let ab = alg.tensor().product_of_basis(i, j);
            for (k, c) in ab.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (l, u) in unit.coords().iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    let cu = c * u;
                    let left = k * d + l;
                    let v = m.get(left, col) + &(&params.alpha * &cu);
                    m.set(left, col, v);
                    let right = l * d + k;
                    let v = m.get(right, col) + &(&params.beta * &cu);
                    m.set(right, col, v);
                }
            }
            let v = m.get(col, col) - &params.gamma;
            m.set(col, col, v);
        }
    }
    let mut warnings = Vec::new();
    if !check_associative(alg)?.passed() {
        warnings.push(format!(
            "{} is not associative; the braid verdict is still computed",
            alg.name()
        ));
    }
    Ok(YbConstruction {
        operator: TensorSquareOperator { dim: d, matrix: m },
        warnings,
    })
}

fn require_lie(alg: &Algebra) -> Result<()> {
    let report = check_lie(alg)?;
    let failed = report.failures().next().map(|v| v.name.clone());
    match failed {
        Some(name) => Err(Error::NotLie(name)),
        None => Ok(()),
    }
}

/// Basis of the center `{z : [z, x] = 0 for all x}` of a Lie algebra.
pub fn center(alg: &Algebra) -> Result<Vec<Vector>> {
    require_lie(alg)?;
    let d = alg.dim();
    let field = alg.field();
    // row (i, k): coefficient of e_k in [z, e_i] = Σ_j z_j c[j][i][k]
    let mut system = Matrix::zeros(field, d * d, d);
    for i in 0..d {
        for k in 0..d {
            for j in 0..d {
                system.set(i * d + k, j, alg.tensor().get(j, i, k).clone());
            }
        }
    }
    Ok(system.kernel())
}

/// `α` and the central element `z` of `x⊗y ↦ α[x,y]⊗z + y⊗x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieYBParams {
    pub alpha: Scalar,
    pub z: Vector,
}

/// `x⊗y ↦ α[x,y]⊗z + y⊗x`, with the bracket being the algebra's product.
pub fn build_lie_yb(alg: &Algebra, params: &LieYBParams) -> Result<TensorSquareOperator> {
    require_lie(alg)?;
    let d = alg.dim();
    if params.z.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: params.z.dim(),
        });
    }
    for i in 0..d {
        let bracket = alg.multiply(&params.z, &alg.basis_vector(i))?;
        if !bracket.is_zero() {
            return Err(Error::NotCentral {
                label: alg.basis()[i].clone(),
                value: alg.render(&bracket),
            });
        }
    }
    let field = alg.field();
    let mut m = Matrix::zeros(field, d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            for (k, c) in alg.tensor().product_of_basis(i, j).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let ac = &params.alpha * c;
                for (l, zl) in params.z.coords().iter().enumerate() {
                    if zl.is_zero() {
                        continue;
                    }
                    let v = m.get(k * d + l, col) + &(&ac * zl);
                    m.set(k * d + l, col, v);
                }
            }
            let swap = j * d + i;
            let v = m.get(swap, col) + &field.one();
            m.set(swap, col, v);
        }
    }
    Ok(TensorSquareOperator { dim: d, matrix: m })
}
