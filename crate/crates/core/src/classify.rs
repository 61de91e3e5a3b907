//! Exhaustive search for UJLA structures in dimension ≤ 2 over 𝔽2, 𝔽3, 𝔽5,
//! with reduction to isomorphism classes under change of basis.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Algebra, StructureTensor};
use crate::axioms::{ujla_identities, UJLA_NAMES};
use crate::error::{Error, Result};
use crate::identity::{first_failure, IdentitySpec, Semantics};
use crate::linalg::Matrix;
use crate::scalar::FieldSpec;

pub const SUPPORTED_PRIMES: [u32; 3] = [2, 3, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpec {
    dim: usize,
    prime: u32,
    semantics: Semantics,
}

impl SearchSpec {
    pub fn new(dim: usize, prime: u32, semantics: Semantics) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(Error::Unsupported(format!("classification dimension must be 1 or 2 (got {dim})")));
        }
        if !SUPPORTED_PRIMES.contains(&prime) {
            return Err(Error::Unsupported(format!("classification prime must be 2, 3 or 5 (got {prime})")));
        }
        Ok(SearchSpec { dim, prime, semantics })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::prime(self.prime as u64).expect("supported primes are prime")
    }

    /// `p^(d³)`.
    pub fn space_size(&self) -> u64 {
        (self.prime as u64).pow((self.dim * self.dim * self.dim) as u32)
    }

    /// Structure constants of the tensor with the given scan index, as
    /// residues. The first entry is the most significant digit, so index
    /// order is lexicographic order.
    pub fn tensor_at(&self, index: u64) -> Vec<u32> {
        let n = self.dim.pow(3);
        let p = self.prime as u64;
        let mut digits = vec![0u32; n];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % p) as u32;
            rest /= p;
        }
        digits
    }

    pub fn index_of(&self, tensor: &[u32]) -> u64 {
        tensor.iter().fold(0, |acc, &c| acc * self.prime as u64 + c as u64)
    }

    pub fn algebra(&self, tensor: &[u32]) -> Algebra {
        let field = self.field();
        let entries = tensor.iter().map(|&c| field.from_i64(c as i64)).collect();
        let t = StructureTensor::from_entries(self.dim, entries).expect("d³ entries");
        let labels = (0..self.dim).map(|i| format!("e{i}")).collect();
        Algebra::new(format!("t{}", self.index_of(tensor)), field, labels, t, None).expect("unit-free algebra")
    }
}

impl fmt::Display for SearchSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} over F{} ({} semantics)", self.dim, self.prime, self.semantics)
    }
}

/// A tensor excluded by the scan, with the first identity it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub index: u64,
    pub identity: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    /// Lexicographically least tensor in the orbit.
    pub representative: Vec<u32>,
    pub orbit_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub spec: SearchSpec,
    pub scanned: u64,
    /// Scan indices of the UJLA tensors, ascending.
    pub survivors: Vec<u64>,
    pub rejections: Vec<Rejection>,
    /// Sorted by representative.
    pub classes: Vec<IsoClass>,
}

impl ClassificationResult {
    pub fn ujla_count(&self) -> usize {
        self.survivors.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn representatives(&self) -> Vec<Algebra> {
        self.classes
            .iter()
            .enumerate()
            .map(|(n, c)| self.spec.algebra(&c.representative).with_name(format!("class-{n}")))
            .collect()
    }
}

fn scan_one(spec: &SearchSpec, specs: &[IdentitySpec], index: u64) -> Result<Option<usize>> {
    first_failure(&spec.algebra(&spec.tensor_at(index)), specs, spec.semantics)
}

fn scan(spec: &SearchSpec, specs: &[IdentitySpec], indices: &[u64]) -> Result<Vec<(u64, Option<usize>)>> {
    indices
        .par_iter()
        .map(|&i| scan_one(spec, specs, i).map(|f| (i, f)))
        .collect()
}

/// Scan indices passing every identity in `specs`, ascending.
pub fn sub_scan(spec: &SearchSpec, specs: &[IdentitySpec]) -> Result<Vec<u64>> {
    let all: Vec<u64> = (0..spec.space_size()).collect();
    Ok(scan(spec, specs, &all)?
        .into_iter()
        .filter_map(|(i, f)| f.is_none().then_some(i))
        .collect())
}

fn assemble(spec: SearchSpec, mut outcomes: Vec<(u64, Option<usize>)>) -> ClassificationResult {
    outcomes.sort_by_key(|(i, _)| *i);
    let mut survivors = Vec::new();
    let mut rejections = Vec::new();
    for (index, failure) in outcomes {
        match failure {
            None => survivors.push(index),
            Some(n) => rejections.push(Rejection {
                index,
                identity: UJLA_NAMES[n],
            }),
        }
    }
    let classes = orbit_classes(&spec, &survivors);
    ClassificationResult {
        spec,
        scanned: spec.space_size(),
        survivors,
        rejections,
        classes,
    }
}

/// Scans every tensor in lexicographic order, keeps the UJLA ones and groups
/// them into isomorphism classes.
pub fn enumerate_ujla(spec: &SearchSpec) -> Result<ClassificationResult> {
    let all: Vec<u64> = (0..spec.space_size()).collect();
    Ok(assemble(*spec, scan(spec, &ujla_identities(), &all)?))
}

/// Same as [`enumerate_ujla`] but visiting tensors in a seeded random order.
pub fn enumerate_ujla_shuffled(spec: &SearchSpec, seed: u64) -> Result<ClassificationResult> {
    let mut order: Vec<u64> = (0..spec.space_size()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Ok(assemble(*spec, scan(spec, &ujla_identities(), &order)?))
}

/// All of `GL_d(𝔽p)` as residue matrices, row-major, in lexicographic order.
pub fn general_linear_group(dim: usize, prime: u32) -> Vec<Vec<u32>> {
    let field = FieldSpec::prime(prime as u64).expect("prime");
    std::iter::repeat_n(0..prime, dim * dim)
        .multi_cartesian_product()
        .filter(|m| to_matrix(field, dim, m).rank() == dim)
        .collect()
}

fn to_matrix(field: FieldSpec, dim: usize, m: &[u32]) -> Matrix {
    let mut out = Matrix::zeros(field, dim, dim);
    for (n, &v) in m.iter().enumerate() {
        out.set(n / dim, n % dim, field.from_i64(v as i64));
    }
    out
}

fn inverse(dim: usize, prime: u32, g: &[u32]) -> Vec<u32> {
    let field = FieldSpec::prime(prime as u64).expect("prime");
    let inv = to_matrix(field, dim, g).inverse().expect("element of GL");
    (0..dim * dim)
        .map(|n| inv.get(n / dim, n % dim).residue().expect("finite field"))
        .collect()
}

/// Structure constants after the change of basis `fᵢ = Σₐ g[a][i] eₐ`:
/// `c′ᵢⱼₗ = Σ g[a][i] g[b][j] c[a][b][k] g⁻¹[l][k]`.
pub fn act(dim: usize, prime: u32, g: &[u32], g_inv: &[u32], c: &[u32]) -> Vec<u32> {
    let p = prime as u64;
    let d = dim;
    let mut out = vec![0u32; d * d * d];
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                let mut acc = 0u64;
                for a in 0..d {
                    for b in 0..d {
                        let gg = g[a * d + i] as u64 * g[b * d + j] as u64 % p;
                        for k in 0..d {
                            let t = c[(a * d + b) * d + k] as u64 * g_inv[l * d + k] as u64 % p;
                            acc = (acc + gg * t) % p;
                        }
                    }
                }
                out[(i * d + j) * d + l] = acc as u32;
            }
        }
    }
    out
}

fn orbit_classes(spec: &SearchSpec, survivors: &[u64]) -> Vec<IsoClass> {
    let (d, p) = (spec.dim, spec.prime);
    let group: Vec<(Vec<u32>, Vec<u32>)> = general_linear_group(d, p)
        .into_iter()
        .map(|g| {
            let inv = inverse(d, p, &g);
            (g, inv)
        })
        .collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut classes = BTreeMap::new();
    for &index in survivors {
        let c = spec.tensor_at(index);
        if seen.contains(&c) {
            continue;
        }
        let orbit: HashSet<Vec<u32>> = group.iter().map(|(g, gi)| act(d, p, g, gi, &c)).collect();
        let representative = orbit.iter().min().expect("orbit contains c").clone();
        classes.insert(representative.clone(), orbit.len());
        seen.extend(orbit);
    }
    classes
        .into_iter()
        .map(|(representative, orbit_size)| IsoClass {
            representative,
            orbit_size,
        })
        .collect()
}

/// A basis change `g` (columns are the images of `a`'s basis in `b`) with
/// `g(uv) = g(u)g(v)`, found by exhausting `GL_d(𝔽p)`; the identity is
/// tried first.
pub fn are_isomorphic(a: &Algebra, b: &Algebra) -> Result<Option<Matrix>> {
    let field = a.field();
    if field != b.field() {
        return Err(Error::Unsupported(format!(
            "isomorphism test across fields {} and {}",
            field,
            b.field()
        )));
    }
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let Some(p) = field.order() else {
        return Err(Error::Unsupported("isomorphism search needs a finite field".into()));
    };
    if a.dim() > 2 {
        return Err(Error::Unsupported(format!(
            "isomorphism search is limited to dimension ≤ 2 (got {})",
            a.dim()
        )));
    }
    let d = a.dim();
    let identity = Matrix::identity(field, d);
    if is_homomorphism(a, b, &identity)? {
        return Ok(Some(identity));
    }
    for g in general_linear_group(d, p as u32) {
        let g = to_matrix(field, d, &g);
        if is_homomorphism(a, b, &g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

fn is_homomorphism(a: &Algebra, b: &Algebra, g: &Matrix) -> Result<bool> {
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = g.apply(&a.multiply(&a.basis_vector(i), &a.basis_vector(j))?)?;
            let rhs = b.multiply(&g.column(i), &g.column(j))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_ujla;

    fn spec(d: usize, p: u32) -> SearchSpec {
        SearchSpec::new(d, p, Semantics::Polynomial).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(SearchSpec::new(3, 2, Semantics::Polynomial).is_err());
        assert!(SearchSpec::new(2, 7, Semantics::Polynomial).is_err());
        assert!(SearchSpec::new(0, 2, Semantics::Polynomial).is_err());
        assert_eq!(spec(2, 5).space_size(), 390_625);
    }

    #[test]
    fn index_round_trip() {
        let s = spec(2, 3);
        for i in [0, 1, 2, 3, 100, 6560] {
            assert_eq!(s.index_of(&s.tensor_at(i)), i);
        }
        assert_eq!(s.tensor_at(1), vec![0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn group_orders() {
        assert_eq!(general_linear_group(1, 2).len(), 1);
        assert_eq!(general_linear_group(1, 3).len(), 2);
        assert_eq!(general_linear_group(2, 2).len(), 6);
        assert_eq!(general_linear_group(2, 3).len(), 48);
        assert_eq!(general_linear_group(2, 5).len(), 480);
    }

    #[test]
    fn dimension_one() {
        let r = enumerate_ujla(&spec(1, 2)).unwrap();
        assert_eq!((r.scanned, r.ujla_count(), r.class_count()), (2, 2, 2));
        let r = enumerate_ujla(&spec(1, 3)).unwrap();
        assert_eq!((r.scanned, r.ujla_count(), r.class_count()), (3, 3, 2));
        assert_eq!(r.classes[1].representative, vec![1]);
        assert_eq!(r.classes[1].orbit_size, 2);
    }

    #[test]
    fn dim_one_f3_isomorphism_witness() {
        let s = spec(1, 3);
        let g = are_isomorphic(&s.algebra(&[1]), &s.algebra(&[2])).unwrap().unwrap();
        assert_eq!(g.get(0, 0).residue(), Some(2));
        assert!(are_isomorphic(&s.algebra(&[0]), &s.algebra(&[1])).unwrap().is_none());
        let self_iso = are_isomorphic(&s.algebra(&[2]), &s.algebra(&[2])).unwrap().unwrap();
        assert_eq!(self_iso, Matrix::identity(s.field(), 1));
    }

    #[test]
    fn isomorphism_needs_finite_field() {
        let q = crate::corpus::dual_numbers(FieldSpec::Rationals);
        assert!(matches!(are_isomorphic(&q, &q), Err(Error::Unsupported(_))));
    }

    #[test]
    fn action_matches_isomorphism() {
        let s = spec(2, 3);
        let c = s.tensor_at(1234);
        for g in general_linear_group(2, 3).into_iter().take(10) {
            let gi = inverse(2, 3, &g);
            let image = act(2, 3, &g, &gi, &c);
            let m = to_matrix(s.field(), 2, &g);
            // g maps the basis f of the transformed algebra onto a's basis
            assert!(is_homomorphism(&s.algebra(&image), &s.algebra(&c), &m).unwrap());
        }
    }

    #[test]
    fn representatives_are_ujla_and_distinct() {
        let r = enumerate_ujla(&spec(2, 2)).unwrap();
        let reps = r.representatives();
        for a in &reps {
            assert!(check_ujla(a).unwrap().passed());
        }
        for (x, y) in reps.iter().tuple_combinations() {
            assert!(are_isomorphic(x, y).unwrap().is_none());
        }
        let total: usize = r.classes.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total, r.ujla_count());
        assert_eq!(r.rejections.len() + r.ujla_count(), 256);
    }
}
