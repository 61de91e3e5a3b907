//! Small operators checked against plain integer matrices built by hand.

use nonassoc::corpus;
use nonassoc::yang_baxter::{
    build_assoc_yb, build_lie_yb, check_braid, check_qybe, lift, twist, LieYBParams, Position, TensorSquareOperator,
    YBFamilyParams,
};
use nonassoc::{FieldSpec, Vector};

const Q: FieldSpec = FieldSpec::Rationals;

type M = Vec<Vec<i64>>;

fn zeros(n: usize) -> M {
    vec![vec![0; n]; n]
}

fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

fn kron(a: &M, b: &M) -> M {
    let (n, m) = (a.len(), b.len());
    let mut c = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    c[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    c
}

fn eye(n: usize) -> M {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn swap(d: usize) -> M {
    let mut t = zeros(d * d);
    for i in 0..d {
        for j in 0..d {
            t[j * d + i][i * d + j] = 1;
        }
    }
    t
}

fn as_ints(op: &TensorSquareOperator) -> M {
    let m = op.matrix();
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|s| s.to_string().parse().unwrap()).collect())
        .collect()
}

fn braid_holds(r: &M, d: usize) -> bool {
    let r12 = kron(r, &eye(d));
    let r23 = kron(&eye(d), r);
    mul(&mul(&r12, &r23), &r12) == mul(&mul(&r23, &r12), &r23)
}

fn qybe_holds(r: &M, d: usize) -> bool {
    let r12 = kron(r, &eye(d));
    let r23 = kron(&eye(d), r);
    let it = kron(&eye(d), &swap(d));
    let r13 = mul(&mul(&it, &r12), &it);
    mul(&mul(&r12, &r13), &r23) == mul(&mul(&r23, &r13), &r12)
}

/// Dual numbers, (α, β, γ) = (1, 1, 1), written out column by column:
/// 1⊗1 ↦ 1⊗1, 1⊗x ↦ x⊗1, x⊗1 ↦ 1⊗x, x⊗x ↦ −x⊗x.
fn dual_111() -> M {
    let mut r = zeros(4);
    r[0][0] = 1;
    r[2][1] = 1;
    r[1][2] = 1;
    r[3][3] = -1;
    r
}

#[test]
fn dual_numbers_operator_matches_hand_computation() {
    let p = YBFamilyParams::new(Q.one(), Q.one(), Q.one());
    let op = build_assoc_yb(&corpus::dual_numbers(Q), &p).unwrap().operator;
    assert_eq!(as_ints(&op), dual_111());
    assert!(braid_holds(&dual_111(), 2));
    assert!(check_braid(&op).holds);
}

#[test]
fn twist_satisfies_qybe_by_hand() {
    assert!(qybe_holds(&swap(2), 2));
    assert!(check_qybe(&twist(Q, 2)).holds);
    assert_eq!(as_ints(&twist(Q, 2)), swap(2));
}

#[test]
fn lift13_of_twist_by_hand() {
    let it = kron(&eye(2), &swap(2));
    let expected = mul(&mul(&it, &kron(&swap(2), &eye(2))), &it);
    let got: M = {
        let m = lift(&twist(Q, 2), Position::P13);
        (0..8).map(|r| m.row(r).iter().map(|s| s.to_string().parse().unwrap()).collect()).collect()
    };
    assert_eq!(got, expected);
    // e_i⊗e_j⊗e_k ↦ e_k⊗e_j⊗e_i
    for col in 0..8 {
        let (i, j, k) = (col / 4, (col / 2) % 2, col % 2);
        assert_eq!(expected[k * 4 + j * 2 + i][col], 1);
    }
}

#[test]
fn heisenberg_lie_operator_by_hand() {
    // [x,y] = z, [y,x] = -z; φ(eᵢ⊗eⱼ) = [eᵢ,eⱼ]⊗z + eⱼ⊗eᵢ with α = 1
    let mut r = swap(3);
    let z = 2;
    r[z * 3 + z][1] += 1; // x⊗y
    r[z * 3 + z][3] -= 1; // y⊗x
    let z_vec = Vector::from_i64s(Q, &[0, 0, 1]);
    let op = build_lie_yb(&corpus::heisenberg(Q), &LieYBParams { alpha: Q.one(), z: z_vec }).unwrap();
    assert_eq!(as_ints(&op), r);
    assert!(braid_holds(&r, 3));
    assert!(check_braid(&op).holds);
}

#[test]
fn qybe_of_braid_solutions_composed_with_twist() {
    let r = dual_111();
    assert!(qybe_holds(&mul(&r, &swap(2)), 2));
    assert!(qybe_holds(&mul(&swap(2), &r), 2));
}
