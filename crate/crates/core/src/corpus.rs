//! A small library of named algebras used by tests, the acceptance suite and
//! the shipped example files.

use crate::algebra::{Algebra, StructureTensor};
use crate::functors;
use crate::linalg::Vector;
use crate::scalar::FieldSpec;

fn build(name: &str, field: FieldSpec, basis: &[&str], table: &[((usize, usize), &[(usize, i64)])]) -> Algebra {
    let d = basis.len();
    Algebra::from_fn(name, field, basis, |i, j| {
        let mut out = vec![0; d];
        for ((a, b), terms) in table {
            if (*a, *b) == (i, j) {
                for &(k, c) in *terms {
                    out[k] += c;
                }
            }
        }
        out
    })
    .expect("corpus table is well-formed")
}

fn with_unit(alg: Algebra, unit: &[i64]) -> Algebra {
    let field = alg.field();
    alg.with_unit(Some(Vector::from_i64s(field, unit)))
        .expect("corpus unit is a unit")
}

pub fn zero_algebra(field: FieldSpec, dim: usize) -> Algebra {
    let labels: Vec<String> = (0..dim).map(|i| format!("e{i}")).collect();
    Algebra::new("zero", field, labels, StructureTensor::zeros(field, dim), None).expect("zero algebra")
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field(field: FieldSpec) -> Algebra {
    with_unit(build("ground-field", field, &["1"], &[((0, 0), &[(0, 1)])]), &[1])
}

/// ℚ[x]/(x²) with basis {1, x}.
pub fn dual_numbers(field: FieldSpec) -> Algebra {
    let alg = build(
        "dual-numbers",
        field,
        &["1", "x"],
        &[((0, 0), &[(0, 1)]), ((0, 1), &[(1, 1)]), ((1, 0), &[(1, 1)])],
    );
    with_unit(alg, &[1, 0])
}

/// Upper-triangular 2×2 matrices, basis E11, E12, E22.
pub fn upper_triangular(field: FieldSpec) -> Algebra {
    let alg = build(
        "upper-triangular-2x2",
        field,
        &["E11", "E12", "E22"],
        &[
            ((0, 0), &[(0, 1)]),
            ((0, 1), &[(1, 1)]),
            ((1, 2), &[(1, 1)]),
            ((2, 2), &[(2, 1)]),
        ],
    );
    with_unit(alg, &[1, 0, 1])
}

/// Full 2×2 matrix algebra, basis E11, E12, E21, E22.
pub fn matrices_2x2(field: FieldSpec) -> Algebra {
    let idx = |r: usize, c: usize| r * 2 + c;
    let alg = Algebra::from_fn("matrices-2x2", field, &["E11", "E12", "E21", "E22"], |i, j| {
        let (a, b) = (i / 2, i % 2);
        let (c, d) = (j / 2, j % 2);
        let mut out = vec![0; 4];
        if b == c {
            out[idx(a, d)] = 1;
        }
        out
    })
    .expect("matrix units");
    with_unit(alg, &[1, 0, 0, 1])
}

/// Strictly upper-triangular 3×3 matrices (non-unital, nilpotent).
pub fn strictly_upper_3x3(field: FieldSpec) -> Algebra {
    build("strictly-upper-3x3", field, &["E12", "E13", "E23"], &[((0, 2), &[(1, 1)])])
}

/// Group algebra of the cyclic group of order 2, basis {1, g}.
pub fn group_algebra_c2(field: FieldSpec) -> Algebra {
    let alg = build(
        "group-algebra-c2",
        field,
        &["1", "g"],
        &[
            ((0, 0), &[(0, 1)]),
            ((0, 1), &[(1, 1)]),
            ((1, 0), &[(1, 1)]),
            ((1, 1), &[(0, 1)]),
        ],
    );
    with_unit(alg, &[1, 0])
}

/// Heisenberg Lie algebra: xy = z = −yx.
pub fn heisenberg(field: FieldSpec) -> Algebra {
    build(
        "heisenberg",
        field,
        &["x", "y", "z"],
        &[((0, 1), &[(2, 1)]), ((1, 0), &[(2, -1)])],
    )
}

/// ℚ³ with the cross product.
pub fn cross_product(field: FieldSpec) -> Algebra {
    build(
        "cross-product",
        field,
        &["e1", "e2", "e3"],
        &[
            ((0, 1), &[(2, 1)]),
            ((1, 0), &[(2, -1)]),
            ((1, 2), &[(0, 1)]),
            ((2, 1), &[(0, -1)]),
            ((2, 0), &[(1, 1)]),
            ((0, 2), &[(1, -1)]),
        ],
    )
}

/// sl₂ with basis e, f, h.
pub fn sl2(field: FieldSpec) -> Algebra {
    build(
        "sl2",
        field,
        &["e", "f", "h"],
        &[
            ((2, 0), &[(0, 2)]),
            ((0, 2), &[(0, -2)]),
            ((2, 1), &[(1, -2)]),
            ((1, 2), &[(1, 2)]),
            ((0, 1), &[(2, 1)]),
            ((1, 0), &[(2, -1)]),
        ],
    )
}

pub fn abelian(field: FieldSpec, dim: usize) -> Algebra {
    zero_algebra(field, dim).with_name(format!("abelian-{dim}"))
}

/// The two-dimensional non-abelian Lie algebra, [x, y] = y.
pub fn affine_line(field: FieldSpec) -> Algebra {
    build("affine-line", field, &["x", "y"], &[((0, 1), &[(1, 1)]), ((1, 0), &[(1, -1)])])
}

/// Jordan algebra of the standard symmetric form on a 2-dim space:
/// basis 1, v1, v2 with vᵢvⱼ = δᵢⱼ·1.
pub fn spin_factor(field: FieldSpec) -> Algebra {
    let alg = build(
        "spin-factor-2",
        field,
        &["1", "v1", "v2"],
        &[
            ((0, 0), &[(0, 1)]),
            ((0, 1), &[(1, 1)]),
            ((1, 0), &[(1, 1)]),
            ((0, 2), &[(2, 1)]),
            ((2, 0), &[(2, 1)]),
            ((1, 1), &[(0, 1)]),
            ((2, 2), &[(0, 1)]),
        ],
    );
    with_unit(alg, &[1, 0, 0])
}

pub fn associative(field: FieldSpec) -> Vec<Algebra> {
    vec![
        ground_field(field),
        dual_numbers(field),
        upper_triangular(field),
        matrices_2x2(field),
        strictly_upper_3x3(field),
        group_algebra_c2(field),
    ]
}

pub fn lie(field: FieldSpec) -> Vec<Algebra> {
    vec![
        heisenberg(field),
        cross_product(field),
        sl2(field),
        abelian(field, 3),
        affine_line(field),
        functors::commutator(&upper_triangular(field)),
    ]
}

/// Jordan examples; the symmetrized matrix algebras need ½, so they are
/// omitted in characteristic 2.
pub fn jordan(field: FieldSpec) -> Vec<Algebra> {
    let mut out = vec![ground_field(field), dual_numbers(field), spin_factor(field)];
    if field.characteristic() != 2 {
        out.push(functors::symmetrize(&upper_triangular(field)).expect("char ≠ 2"));
        out.push(functors::symmetrize(&matrices_2x2(field)).expect("char ≠ 2"));
    }
    out
}

/// Every corpus algebra once.
pub fn all(field: FieldSpec) -> Vec<Algebra> {
    let mut out = associative(field);
    out.extend(lie(field));
    out.extend(
        jordan(field)
            .into_iter()
            .filter(|a| !matches!(a.name(), "ground-field" | "dual-numbers")),
    );
    out.push(zero_algebra(field, 2));
    out
}
