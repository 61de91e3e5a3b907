//! Algebras derived from a single product: commutator, circle product and the
//! two-parameter deformation `αab + βba`.

use crate::algebra::{Algebra, StructureTensor};
use crate::error::{Error, Result};
use crate::identity::{verify_identity, AxiomReport, Expr, IdentitySpec};
use crate::scalar::Scalar;

/// Coefficients of `θ′(a⊗b) = α·ab + β·ba`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformParams {
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl DeformParams {
    pub fn new(alpha: Scalar, beta: Scalar) -> Self {
        DeformParams { alpha, beta }
    }
}

fn mix(alg: &Algebra, alpha: &Scalar, beta: &Scalar) -> StructureTensor {
    let d = alg.dim();
    let c = alg.tensor();
    let mut out = StructureTensor::zeros(alg.field(), d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v = &(alpha * c.get(i, j, k)) + &(beta * c.get(j, i, k));
                out.set(i, j, k, v);
            }
        }
    }
    out
}

/// `[a, b] = ab − ba`. The unit annotation is dropped.
pub fn commutator(alg: &Algebra) -> Algebra {
    let f = alg.field();
    let tensor = mix(alg, &f.one(), &-f.one());
    alg.with_tensor(format!("{}/lie", alg.name()), tensor, None)
        .expect("same shape, no unit")
}

/// `a ∘ b = ½(ab + ba)`; keeps the unit. Undefined in characteristic 2.
pub fn symmetrize(alg: &Algebra) -> Result<Algebra> {
    let f = alg.field();
    if f.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let half = f.from_i64(2).inv()?;
    let tensor = mix(alg, &half, &half);
    alg.with_tensor(format!("{}/jordan", alg.name()), tensor, alg.unit().cloned())
}

/// `θ′(a⊗b) = α·ab + β·ba`. The unit survives only when `α + β = 1`.
pub fn deform(alg: &Algebra, params: &DeformParams) -> Result<Algebra> {
    for s in [&params.alpha, &params.beta] {
        if s.field() != alg.field() {
            return Err(Error::NotInField {
                value: s.to_string(),
                field: alg.field(),
            });
        }
    }
    let tensor = mix(alg, &params.alpha, &params.beta);
    let unit = if (&params.alpha + &params.beta).is_one() {
        alg.unit().cloned()
    } else {
        None
    };
    alg.with_tensor(
        format!("{}/deform({},{})", alg.name(), params.alpha, params.beta),
        tensor,
        unit,
    )
}

/// `[a, b∘c] + [b, c∘a] + [c, a∘b] = 0` with bracket and circle built from
/// the same product.
pub fn compatibility_identity() -> IdentitySpec {
    let (a, b, c) = (Expr::var(0), Expr::var(1), Expr::var(2));
    let lhs = Expr::sum(vec![
        (1, Expr::bracket(a.clone(), Expr::circle(b.clone(), c.clone()))),
        (1, Expr::bracket(b.clone(), Expr::circle(c.clone(), a.clone()))),
        (1, Expr::bracket(c, Expr::circle(a, b))),
    ]);
    IdentitySpec::new("compat", &["a", "b", "c"], lhs, Expr::Zero).expect("well-formed")
}

pub fn check_compatibility(alg: &Algebra) -> Result<AxiomReport> {
    if alg.field().characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    verify_identity(alg, &compatibility_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_associative, check_jordan, check_lie, check_ujla};
    use crate::corpus;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn commutator_of_commutative_is_abelian() {
        let c = commutator(&corpus::dual_numbers(Q));
        assert!(c.tensor().is_zero());
        assert!(c.unit().is_none());
        assert_eq!(c.name(), "dual-numbers/lie");
    }

    #[test]
    fn commutator_of_upper_triangular() {
        let c = commutator(&corpus::upper_triangular(Q));
        let e = |i| c.basis_vector(i);
        let br = |i, j| c.render(&c.multiply(&e(i), &e(j)).unwrap());
        assert_eq!(br(0, 1), "E12");
        assert_eq!(br(1, 2), "E12");
        assert_eq!(br(0, 2), "0");
        assert_eq!(br(1, 0), "-E12");
    }

    #[test]
    fn commutator_doubles_heisenberg() {
        let h = corpus::heisenberg(Q);
        let c = commutator(&h);
        let xy = c.multiply(&c.basis_vector(0), &c.basis_vector(1)).unwrap();
        assert_eq!(c.render(&xy), "2z");
    }

    #[test]
    fn symmetrize_examples() {
        let dual = corpus::dual_numbers(Q);
        let s = symmetrize(&dual).unwrap();
        assert_eq!(s.tensor(), dual.tensor());
        assert_eq!(s.unit(), dual.unit());
        for lie in corpus::lie(Q) {
            assert!(symmetrize(&lie).unwrap().tensor().is_zero(), "{lie}");
        }
        let f2 = FieldSpec::prime(2).unwrap();
        let err = symmetrize(&corpus::dual_numbers(f2)).unwrap_err();
        assert!(err.to_string().contains("symmetrization undefined in characteristic 2"));
    }

    #[test]
    fn deform_special_values() {
        let ut = corpus::upper_triangular(Q);
        let half = Q.parse_scalar("1/2").unwrap();
        let jordan = deform(&ut, &DeformParams::new(half.clone(), half)).unwrap();
        assert!(check_jordan(&jordan).unwrap().passed());
        let lie = deform(&ut, &DeformParams::new(Q.one(), -Q.one())).unwrap();
        assert!(check_lie(&lie).unwrap().passed());
        assert!(lie.unit().is_none());
        let same = deform(&ut, &DeformParams::new(Q.one(), Q.zero())).unwrap();
        assert_eq!(same.tensor(), ut.tensor());
        assert_eq!(same.unit(), ut.unit());
    }

    #[test]
    fn deform_agrees_with_named_functors() {
        let half = Q.parse_scalar("1/2").unwrap();
        for alg in corpus::all(Q) {
            let d1 = deform(&alg, &DeformParams::new(Q.one(), -Q.one())).unwrap();
            assert_eq!(d1.tensor(), commutator(&alg).tensor());
            let d2 = deform(&alg, &DeformParams::new(half.clone(), half.clone())).unwrap();
            assert_eq!(d2.tensor(), symmetrize(&alg).unwrap().tensor());
            let c = commutator(&alg);
            let doubled = deform(&c, &DeformParams::new(Q.from_i64(2), Q.zero())).unwrap();
            assert_eq!(commutator(&c).tensor(), doubled.tensor());
        }
    }

    #[test]
    fn compatibility_examples() {
        for alg in corpus::associative(Q) {
            assert!(check_compatibility(&alg).unwrap().passed(), "{alg}");
        }
        assert!(check_compatibility(&corpus::zero_algebra(Q, 3)).unwrap().passed());
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            check_compatibility(&corpus::dual_numbers(f2)),
            Err(Error::CharacteristicTwo)
        ));
    }

    #[test]
    fn ujla_gives_lie_and_jordan() {
        for alg in corpus::all(Q) {
            if !check_ujla(&alg).unwrap().passed() {
                continue;
            }
            assert!(check_lie(&commutator(&alg)).unwrap().passed(), "{alg}");
            assert!(check_jordan(&symmetrize(&alg).unwrap()).unwrap().passed(), "{alg}");
        }
    }

    #[test]
    fn deformations_of_associative_algebras_over_f5_are_ujla() {
        let f5 = FieldSpec::prime(5).unwrap();
        let elems = f5.elements().unwrap();
        for alg in corpus::associative(f5).into_iter().filter(|a| a.dim() <= 3) {
            assert!(check_associative(&alg).unwrap().passed());
            for alpha in &elems {
                for beta in &elems {
                    let d = deform(&alg, &DeformParams::new(alpha.clone(), beta.clone())).unwrap();
                    assert!(check_ujla(&d).unwrap().passed(), "{}", d.name());
                }
            }
        }
    }
}
