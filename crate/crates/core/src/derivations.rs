//! The six-term and two-term derivation formulas and a Leibniz-rule checker.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, LinearMap};
use crate::error::{Error, Result};
use crate::identity::{verify_identity, AxiomReport, Expr, IdentitySpec};
use crate::linalg::Vector;
use crate::scalar::FieldSpec;

/// Seed used for the random sample vectors in derivation sweeps.
pub const DEFAULT_SEED: u64 = 0x5eed_0d01;

/// Which formula to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    SixTerm,
    TwoTerm,
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Formula::SixTerm => "D(x) = a(bx) + b(ax) + (ax)b - a(xb) - (xb)a - (xa)b",
            Formula::TwoTerm => "D(x) = a(bx) - (xa)b",
        })
    }
}

fn check_dims(alg: &Algebra, a: &Vector, b: &Vector) -> Result<()> {
    for v in [a, b] {
        if v.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: v.dim(),
            });
        }
    }
    Ok(())
}

fn build(alg: &Algebra, a: &Vector, b: &Vector, column: impl Fn(&Vector) -> Result<Vector>) -> Result<LinearMap> {
    check_dims(alg, a, b)?;
    let images = (0..alg.dim())
        .map(|k| column(&alg.basis_vector(k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearMap::from_images(alg.field(), &images))
}

/// `D(x) = a(bx) + b(ax) + (ax)b − a(xb) − (xb)a − (xa)b`.
pub fn derivation_six_term(alg: &Algebra, a: &Vector, b: &Vector) -> Result<LinearMap> {
    build(alg, a, b, |x| {
        let m = |u: &Vector, v: &Vector| alg.multiply(u, v);
        let ax = m(a, x)?;
        let bx = m(b, x)?;
        let xb = m(x, b)?;
        let xa = m(x, a)?;
        let plus = &(&m(a, &bx)? + &m(b, &ax)?) + &m(&ax, b)?;
        let minus = &(&m(a, &xb)? + &m(&xb, a)?) + &m(&xa, b)?;
        Ok(&plus - &minus)
    })
}

/// `D(x) = a(bx) − (xa)b`.
pub fn derivation_two_term(alg: &Algebra, a: &Vector, b: &Vector) -> Result<LinearMap> {
    build(alg, a, b, |x| {
        let left = alg.multiply(a, &alg.multiply(b, x)?)?;
        let right = alg.multiply(&alg.multiply(x, a)?, b)?;
        Ok(&left - &right)
    })
}

pub fn derivation(alg: &Algebra, a: &Vector, b: &Vector, formula: Formula) -> Result<LinearMap> {
    match formula {
        Formula::SixTerm => derivation_six_term(alg, a, b),
        Formula::TwoTerm => derivation_two_term(alg, a, b),
    }
}

/// `D(x·y) = D(x)·y + x·D(y)`.
pub fn leibniz_identity(d: LinearMap) -> IdentitySpec {
    let (x, y) = (Expr::var(0), Expr::var(1));
    let lhs = Expr::apply(0, Expr::mul(x.clone(), y.clone()));
    let rhs = Expr::sum(vec![
        (1, Expr::mul(Expr::apply(0, x.clone()), y.clone())),
        (1, Expr::mul(x, Expr::apply(0, y))),
    ]);
    IdentitySpec::with_maps("leibniz", &["x", "y"], lhs, rhs, vec![("D".into(), d)]).expect("well-formed")
}

/// Leibniz rule as a polynomial identity in formal `x`, `y`.
pub fn check_derivation(alg: &Algebra, d: &LinearMap) -> Result<AxiomReport> {
    if d.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: d.dim(),
        });
    }
    verify_identity(alg, &leibniz_identity(d.clone()))
}

/// Leibniz rule on every pair of basis vectors; returns the first failing
/// pair.
pub fn check_derivation_on_basis(alg: &Algebra, d: &LinearMap) -> Result<Option<(usize, usize)>> {
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (x, y) = (alg.basis_vector(i), alg.basis_vector(j));
            let lhs = d.apply(&alg.multiply(&x, &y)?)?;
            let rhs = &alg.multiply(&d.apply(&x)?, &y)? + &alg.multiply(&x, &d.apply(&y)?)?;
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// `count` reproducible vectors of dimension `dim`. Over ℚ the coordinates
/// are integers in `[-3, 3]`; over 𝔽p they are uniform residues.
pub fn random_vectors(field: FieldSpec, dim: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let coords = (0..dim)
                .map(|_| match field.order() {
                    Some(p) => field.from_i64(rng.random_range(0..p as i64)),
                    None => field.from_i64(rng.random_range(-3..=3)),
                })
                .collect();
            Vector::new(field, coords)
        })
        .collect()
}
