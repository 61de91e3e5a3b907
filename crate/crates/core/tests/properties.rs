use itertools::Itertools;
use proptest::prelude::*;

use nonassoc::axioms::{
    associative_identities, check_associative, check_suite, check_ujla, jordan_identities, lie_identities,
    ujla_identities, SUITES,
};
use nonassoc::classify::{act, enumerate_ujla, general_linear_group, SearchSpec};
use nonassoc::identity::verify_identity_with;
use nonassoc::linalg::Matrix;
use nonassoc::yang_baxter::{check_braid, check_qybe, compose, lift, lift13_by_conjugation, twist, Position, TensorSquareOperator};
use nonassoc::{Algebra, FieldSpec, Semantics, StructureTensor, Vector};

const Q: FieldSpec = FieldSpec::Rationals;

/// `Q[x]/(f)` for monic `f = x^n + c_{n-1}x^{n-1} + … + c_0`, basis `1, x, …`.
fn truncated_polynomial_algebra(coeffs: &[i64]) -> Algebra {
    let n = coeffs.len();
    // x^k reduced mod f, for k < 2n - 1
    let mut powers: Vec<Vec<i64>> = (0..n).map(|k| (0..n).map(|i| i64::from(i == k)).collect()).collect();
    for _ in n..2 * n - 1 {
        let prev = powers.last().unwrap().clone();
        let top = prev[n - 1];
        let mut next = vec![0; n];
        for i in 1..n {
            next[i] = prev[i - 1];
        }
        for i in 0..n {
            next[i] -= top * coeffs[i];
        }
        powers.push(next);
    }
    let labels: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    Algebra::from_fn("quotient", Q, &labels, |i, j| powers[i + j].clone()).unwrap()
}

/// The same algebra written in the basis `fᵢ = Σₐ g[a][i] eₐ`.
fn change_basis(alg: &Algebra, g: &Matrix) -> Algebra {
    let d = alg.dim();
    let inv = g.inverse().unwrap();
    let mut t = StructureTensor::zeros(alg.field(), d);
    for i in 0..d {
        for j in 0..d {
            let prod = alg.multiply(&g.column(i), &g.column(j)).unwrap();
            let coords = inv.apply(&prod).unwrap();
            for k in 0..d {
                t.set(i, j, k, coords[k].clone());
            }
        }
    }
    Algebra::new("changed", alg.field(), alg.basis().to_vec(), t, None).unwrap()
}

fn invertible_q(d: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..=2, d * d)
        .prop_map(move |e| {
            let rows: Vec<&[i64]> = e.chunks(d).collect();
            Matrix::from_i64_rows(Q, &rows)
        })
        .prop_filter("invertible", |m| m.rank() == m.rows())
}

fn quotient_case() -> impl Strategy<Value = (Vec<i64>, Matrix)> {
    (1usize..=4).prop_flat_map(|n| (proptest::collection::vec(-3i64..=3, n), invertible_q(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associative_quotients_are_ujla((coeffs, g) in quotient_case()) {
        let alg = change_basis(&truncated_polynomial_algebra(&coeffs), &g);
        prop_assert!(check_associative(&alg).unwrap().passed());
        prop_assert!(check_ujla(&alg).unwrap().passed());
    }
}

fn f3_tensor() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..3, 8)
}

proptest! {
    #[test]
    fn failure_witnesses_revalidate(c in f3_tensor()) {
        let spec = SearchSpec::new(2, 3, Semantics::Polynomial).unwrap();
        let alg = spec.algebra(&c);
        for suite in SUITES {
            for semantics in [Semantics::Polynomial, Semantics::Pointwise] {
                let report = check_suite(&alg, suite, semantics).unwrap().unwrap();
                prop_assert!(report.witnesses_valid(&alg));
                for v in report.failures() {
                    let inst = v.witness.as_ref().and_then(|w| w.instance());
                    if semantics == Semantics::Pointwise {
                        prop_assert!(inst.is_some());
                    }
                    if let Some(i) = inst {
                        prop_assert_ne!(&i.lhs, &i.rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_witness_is_a_real_triple(c in f3_tensor()) {
        let spec = SearchSpec::new(2, 3, Semantics::Polynomial).unwrap();
        let alg = spec.algebra(&c);
        let report = check_associative(&alg).unwrap();
        let failure = report.failures().next().cloned();
        if let Some(v) = failure {
            let i = v.witness.as_ref().unwrap().instance().unwrap();
            let (a, b, cc) = (&i.assignment[0].1, &i.assignment[1].1, &i.assignment[2].1);
            let l = alg.multiply(&alg.multiply(a, b).unwrap(), cc).unwrap();
            let r = alg.multiply(a, &alg.multiply(b, cc).unwrap()).unwrap();
            prop_assert_ne!(l, r);
        }
    }

    #[test]
    fn ujla_is_invariant_under_basis_change(index in 0u64..6561, g in 0usize..48) {
        let spec = SearchSpec::new(2, 3, Semantics::Polynomial).unwrap();
        let c = spec.tensor_at(index);
        let group = general_linear_group(2, 3);
        let gm = &group[g];
        let field = spec.field();
        let m = Matrix::from_i64_rows(field, &[&[gm[0] as i64, gm[1] as i64], &[gm[2] as i64, gm[3] as i64]]);
        let inv = m.inverse().unwrap();
        let gi: Vec<u32> = (0..4).map(|n| inv.get(n / 2, n % 2).residue().unwrap()).collect();
        let image = act(2, 3, gm, &gi, &c);
        let before = check_ujla(&spec.algebra(&c)).unwrap().passed();
        let after = check_ujla(&spec.algebra(&image)).unwrap().passed();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn lift13_agrees_with_conjugation(entries in proptest::collection::vec(-3i64..=3, 16)) {
        let rows: Vec<&[i64]> = entries.chunks(4).collect();
        let r = TensorSquareOperator::new(2, Matrix::from_i64_rows(Q, &rows)).unwrap();
        prop_assert_eq!(lift(&r, Position::P13), lift13_by_conjugation(&r));
    }

    #[test]
    fn braid_matches_qybe_after_twist(entries in proptest::collection::vec(0i64..2, 16)) {
        let f2 = FieldSpec::prime(2).unwrap();
        let rows: Vec<&[i64]> = entries.chunks(4).collect();
        let r = TensorSquareOperator::new(2, Matrix::from_i64_rows(f2, &rows)).unwrap();
        let tau = twist(f2, 2);
        let braid = check_braid(&r).holds;
        prop_assert_eq!(braid, check_qybe(&compose(&r, &tau).unwrap()).holds);
        prop_assert_eq!(braid, check_qybe(&compose(&tau, &r).unwrap()).holds);
    }

    #[test]
    fn multiply_is_bilinear_over_f5(c in proptest::collection::vec(0i64..5, 8),
                                    u in proptest::collection::vec(0i64..5, 2),
                                    w in proptest::collection::vec(0i64..5, 2),
                                    v in proptest::collection::vec(0i64..5, 2),
                                    s in 0i64..5) {
        let f5 = FieldSpec::prime(5).unwrap();
        let t = StructureTensor::from_entries(2, c.iter().map(|&x| f5.from_i64(x)).collect()).unwrap();
        let alg = Algebra::new("r", f5, vec!["p".into(), "q".into()], t, None).unwrap();
        let (u, w, v) = (Vector::from_i64s(f5, &u), Vector::from_i64s(f5, &w), Vector::from_i64s(f5, &v));
        let s = f5.from_i64(s);
        let lhs = alg.multiply(&(&u.scale(&s) + &w), &v).unwrap();
        let rhs = &alg.multiply(&u, &v).unwrap().scale(&s) + &alg.multiply(&w, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Formal and pointwise checks agree for multilinear identities on every
/// algebra of dimension ≤ 2 over 𝔽2 and 𝔽3; for the others, formal truth
/// still implies pointwise truth.
#[test]
fn multilinear_identities_agree_with_pointwise_evaluation() {
    let ids = [associative_identities(), lie_identities(), jordan_identities(), ujla_identities()].concat();
    assert!(ids.iter().filter(|i| i.is_multilinear()).count() >= 4);
    for p in [2, 3] {
        for d in 1..=2 {
            let spec = SearchSpec::new(d, p, Semantics::Polynomial).unwrap();
            for index in 0..spec.space_size() {
                let alg = spec.algebra(&spec.tensor_at(index));
                for id in &ids {
                    let formal = verify_identity_with(&alg, id, Semantics::Polynomial).unwrap().passed();
                    let pointwise = verify_identity_with(&alg, id, Semantics::Pointwise).unwrap().passed();
                    if id.is_multilinear() {
                        assert_eq!(formal, pointwise, "{} on F{p} tensor {index}", id.name());
                    } else if formal {
                        assert!(pointwise, "{} on F{p} tensor {index}", id.name());
                    }
                }
            }
        }
    }
}

#[test]
fn classification_survivors_contain_f3_classical_tensors() {
    let spec = SearchSpec::new(2, 3, Semantics::Polynomial).unwrap();
    let survivors = enumerate_ujla(&spec).unwrap().survivors;
    let ids = [associative_identities(), lie_identities(), jordan_identities()];
    let classical: Vec<u64> = (0..spec.space_size())
        .filter(|&i| {
            let alg = spec.algebra(&spec.tensor_at(i));
            ids.iter().any(|set| set.iter().all(|id| {
                verify_identity_with(&alg, id, Semantics::Polynomial).unwrap().passed()
            }))
        })
        .collect();
    assert!(!classical.is_empty());
    assert!(classical.iter().all(|i| survivors.binary_search(i).is_ok()));
    assert!(survivors.iter().tuple_windows().all(|(a, b)| a < b));
}
