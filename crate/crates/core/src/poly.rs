//! Multivariate polynomials in commuting indeterminates with exact
//! coefficients.

use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

/// Exponent vector over the indeterminates, in their canonical order.
pub type Monomial = Vec<u8>;

/// A polynomial stored as `monomial → coefficient`; zero coefficients are
/// never kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalPolynomial {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl FormalPolynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        FormalPolynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The indeterminate with index `i`.
    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(field, nvars);
        p.terms.insert(exps, field.one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u8]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The first nonzero term in key order.
    pub fn first_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// `self += s · other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &FormalPolynomial) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            let delta = if s.is_one() { c.clone() } else { s * c };
            self.accumulate(m.clone(), &delta);
        }
    }

    fn accumulate(&mut self, m: Monomial, delta: &Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(delta.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += delta;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> FormalPolynomial {
        let mut out = Self::zero(self.field, self.nvars);
        out.add_scaled(s, self);
        out
    }

    pub fn mul(&self, other: &FormalPolynomial) -> FormalPolynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.field, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.accumulate(m, &(c1 * c2));
            }
        }
        out
    }

    pub fn sub(&self, other: &FormalPolynomial) -> FormalPolynomial {
        let mut out = self.clone();
        out.add_scaled(&-self.field.one(), other);
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong arity");
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    term = &term * x;
                }
            }
            acc += &term;
        }
        acc
    }

    /// Renders a monomial with the given indeterminate names, e.g. `a0^2*b1`.
    pub fn render_monomial(m: &[u8], names: &[String]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}
