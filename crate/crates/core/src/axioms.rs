//! Named axiom suites: associative, Lie, Jordan and UJLA.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::identity::{verify_all, AxiomReport, IdentitySpec, Semantics};

pub const UJLA_NAMES: [&str; 5] = ["ujla.1", "ujla.2a", "ujla.2b", "ujla.2c", "ujla.2d"];

const CHAR_TWO_JORDAN: &str =
    "Jordan axioms checked in characteristic 2, where the usual Jordan theory degenerates";

fn spec(name: &str, vars: &[&str], text: &str) -> IdentitySpec {
    IdentitySpec::parse(name, vars, text).expect("built-in identity parses")
}

pub fn associative_identities() -> Vec<IdentitySpec> {
    vec![spec("assoc", &["a", "b", "c"], "(a*b)*c = a*(b*c)")]
}

/// `aa = 0` rather than antisymmetry, so characteristic 2 is handled.
pub fn lie_identities() -> Vec<IdentitySpec> {
    vec![
        spec("lie.alt", &["a"], "a*a = 0"),
        spec("lie.jacobi", &["a", "b", "c"], "(a*b)*c + (b*c)*a + (c*a)*b = 0"),
    ]
}

/// Commutativity and the Jordan identity `(ab)(aa) = a(b(aa))`.
pub fn jordan_identities() -> Vec<IdentitySpec> {
    vec![
        spec("jordan.comm", &["a", "b"], "a*b = b*a"),
        spec("jordan.main", &["a", "b"], "(a*b)*(a*a) = a*(b*(a*a))"),
    ]
}

/// The cyclic three-term identity followed by the four degree-4 identities,
/// in their conventional order.
pub fn ujla_identities() -> Vec<IdentitySpec> {
    let ab = &["a", "b"];
    vec![
        spec(
            UJLA_NAMES[0],
            &["a", "b", "c"],
            "(a*b)*c + (b*c)*a + (c*a)*b = a*(b*c) + b*(c*a) + c*(a*b)",
        ),
        spec(UJLA_NAMES[1], ab, "((a*a)*b)*a = (a*a)*(b*a)"),
        spec(UJLA_NAMES[2], ab, "(a*b)*(a*a) = a*(b*(a*a))"),
        spec(UJLA_NAMES[3], ab, "(b*(a*a))*a = (b*a)*(a*a)"),
        spec(UJLA_NAMES[4], ab, "(a*a)*(a*b) = a*((a*a)*b)"),
    ]
}

pub fn check_associative(alg: &Algebra) -> Result<AxiomReport> {
    check_associative_with(alg, Semantics::Polynomial)
}

pub fn check_associative_with(alg: &Algebra, semantics: Semantics) -> Result<AxiomReport> {
    verify_all(alg, &associative_identities(), semantics)
}

pub fn check_lie(alg: &Algebra) -> Result<AxiomReport> {
    check_lie_with(alg, Semantics::Polynomial)
}

pub fn check_lie_with(alg: &Algebra, semantics: Semantics) -> Result<AxiomReport> {
    verify_all(alg, &lie_identities(), semantics)
}

pub fn check_jordan(alg: &Algebra) -> Result<AxiomReport> {
    check_jordan_with(alg, Semantics::Polynomial)
}

pub fn check_jordan_with(alg: &Algebra, semantics: Semantics) -> Result<AxiomReport> {
    let mut report = verify_all(alg, &jordan_identities(), semantics)?;
    if alg.field().characteristic() == 2 {
        report.notes.push(CHAR_TWO_JORDAN.into());
    }
    Ok(report)
}

pub fn check_ujla(alg: &Algebra) -> Result<AxiomReport> {
    check_ujla_with(alg, Semantics::Polynomial)
}

pub fn check_ujla_with(alg: &Algebra, semantics: Semantics) -> Result<AxiomReport> {
    verify_all(alg, &ujla_identities(), semantics)
}

/// Suite names accepted by [`check_suite`].
pub const SUITES: [&str; 4] = ["assoc", "lie", "jordan", "ujla"];

pub fn check_suite(alg: &Algebra, suite: &str, semantics: Semantics) -> Option<Result<AxiomReport>> {
    Some(match suite {
        "assoc" => check_associative_with(alg, semantics),
        "lie" => check_lie_with(alg, semantics),
        "jordan" => check_jordan_with(alg, semantics),
        "ujla" => check_ujla_with(alg, semantics),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn associative_examples() {
        assert!(check_associative(&corpus::dual_numbers(Q)).unwrap().passed());
        assert!(check_associative(&corpus::upper_triangular(Q)).unwrap().passed());
        let cross = corpus::cross_product(Q);
        let r = check_associative(&cross).unwrap();
        assert!(!r.passed());
        assert!(r.witnesses_valid(&cross));
        // (e1·e1)·e2 = 0 but e1·(e1·e2) = e1·e3 = −e2
        let e = |i| cross.basis_vector(i);
        let lhs = cross.multiply(&cross.multiply(&e(0), &e(0)).unwrap(), &e(1)).unwrap();
        let rhs = cross.multiply(&e(0), &cross.multiply(&e(0), &e(1)).unwrap()).unwrap();
        assert!(lhs.is_zero());
        assert_eq!(cross.render(&rhs), "-e2");
    }

    #[test]
    fn lie_examples() {
        assert!(check_lie(&corpus::heisenberg(Q)).unwrap().passed());
        assert!(check_lie(&corpus::abelian(Q, 3)).unwrap().passed());
        let dual = corpus::dual_numbers(Q);
        let r = check_lie(&dual).unwrap();
        assert!(!r.verdict("lie.alt").unwrap().holds);
        assert!(r.witnesses_valid(&dual));
    }

    #[test]
    fn jordan_examples() {
        let sym = crate::functors::symmetrize(&corpus::upper_triangular(Q)).unwrap();
        assert!(check_jordan(&sym).unwrap().passed());
        let heis = corpus::heisenberg(Q);
        let r = check_jordan(&heis).unwrap();
        assert!(!r.verdict("jordan.comm").unwrap().holds);
        assert!(r.witnesses_valid(&heis));
        for a in [corpus::dual_numbers(Q), corpus::group_algebra_c2(Q), corpus::ground_field(Q)] {
            assert!(check_jordan(&a).unwrap().passed(), "{}", a.name());
        }
    }

    #[test]
    fn jordan_in_characteristic_two_carries_a_caveat() {
        let f2 = FieldSpec::prime(2).unwrap();
        let r = check_jordan(&corpus::dual_numbers(f2)).unwrap();
        assert!(r.passed());
        assert_eq!(r.notes.len(), 1);
        assert!(check_jordan(&corpus::dual_numbers(Q)).unwrap().notes.is_empty());
    }

    #[test]
    fn ujla_report_shape() {
        let r = check_ujla(&corpus::zero_algebra(Q, 2)).unwrap();
        let names: Vec<&str> = r.verdicts.iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, UJLA_NAMES);
        assert!(r.passed());
    }

    #[test]
    fn classical_classes_are_ujla() {
        for field in [Q, FieldSpec::prime(3).unwrap()] {
            for alg in corpus::associative(field).iter().chain(&corpus::lie(field)).chain(&corpus::jordan(field)) {
                assert!(check_ujla(alg).unwrap().passed(), "{alg}");
            }
        }
    }

    #[test]
    fn a_non_ujla_tensor_fails_with_valid_witness() {
        // F2, e0·e1 = e0 and everything else 0: the left side of ujla.1 is
        // (a0b1c1 + b0c1a1 + c0a1b1)e0 while every right-side word vanishes
        let f2 = FieldSpec::prime(2).unwrap();
        let alg = Algebra::from_fn("e0e1", f2, &["e0", "e1"], |i, j| match (i, j) {
            (0, 1) => vec![1, 0],
            _ => vec![0, 0],
        })
        .unwrap();
        let r = check_ujla(&alg).unwrap();
        assert!(!r.passed());
        assert!(!r.verdict("ujla.1").unwrap().holds);
        assert!(r.witnesses_valid(&alg));
    }
}
