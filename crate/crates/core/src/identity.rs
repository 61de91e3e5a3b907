//! Identity specifications and the engine that verifies them.
//!
//! An identity is an equation between linear combinations of binary product
//! trees over abstract variables. Under polynomial semantics each variable
//! `v` becomes `Σᵢ vᵢ eᵢ` with fresh commuting indeterminates `vᵢ`; both sides
//! are expanded into one [`FormalPolynomial`] per basis coordinate, and the
//! identity holds iff every coordinate difference is the zero polynomial.
//! Under pointwise semantics (finite fields only) both sides are evaluated on
//! every assignment of concrete vectors.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::poly::{FormalPolynomial, Monomial};
use crate::scalar::{FieldSpec, Scalar};

/// Upper bound on assignments tried when looking for a concrete
/// counterexample to a failed polynomial identity.
const INSTANCE_SEARCH_BUDGET: usize = 20_000;

/// Upper bound on the number of points a pointwise check may visit.
pub const POINTWISE_LIMIT: u64 = 1 << 24;

/// A linear combination of product trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Zero,
    Var(usize),
    Product(Box<Expr>, Box<Expr>),
    /// Application of the linear map with the given index.
    Apply(usize, Box<Expr>),
    Sum(Vec<(BigRational, Expr)>),
}

impl Expr {
    pub fn var(i: usize) -> Expr {
        Expr::Var(i)
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Product(Box::new(a), Box::new(b))
    }

    pub fn apply(map: usize, e: Expr) -> Expr {
        Expr::Apply(map, Box::new(e))
    }

    pub fn sum(terms: Vec<(i64, Expr)>) -> Expr {
        Expr::Sum(
            terms
                .into_iter()
                .map(|(c, e)| (BigRational::from_integer(BigInt::from(c)), e))
                .collect(),
        )
    }

    /// `[a, b] = ab − ba`.
    pub fn bracket(a: Expr, b: Expr) -> Expr {
        Expr::sum(vec![(1, Expr::mul(a.clone(), b.clone())), (-1, Expr::mul(b, a))])
    }

    /// `a ∘ b = ½(ab + ba)`.
    pub fn circle(a: Expr, b: Expr) -> Expr {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Expr::Sum(vec![
            (half.clone(), Expr::mul(a.clone(), b.clone())),
            (half, Expr::mul(b, a)),
        ])
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Zero => None,
            Expr::Var(i) => Some(*i),
            Expr::Product(a, b) => a.max_var().max(b.max_var()),
            Expr::Apply(_, e) => e.max_var(),
            Expr::Sum(ts) => ts.iter().filter_map(|(_, e)| e.max_var()).max(),
        }
    }

    fn max_map(&self) -> Option<usize> {
        match self {
            Expr::Zero | Expr::Var(_) => None,
            Expr::Product(a, b) => a.max_map().max(b.max_map()),
            Expr::Apply(m, e) => Some(*m).max(e.max_map()),
            Expr::Sum(ts) => ts.iter().filter_map(|(_, e)| e.max_map()).max(),
        }
    }

    /// Variable multiplicities of every word in the expansion (zero
    /// coefficients are not simplified away).
    fn words(&self, nvars: usize) -> Vec<Vec<usize>> {
        match self {
            Expr::Zero => vec![],
            Expr::Var(i) => {
                let mut w = vec![0; nvars];
                w[*i] = 1;
                vec![w]
            }
            Expr::Apply(_, e) => e.words(nvars),
            Expr::Product(a, b) => {
                let (wa, wb) = (a.words(nvars), b.words(nvars));
                wa.iter()
                    .cartesian_product(wb.iter())
                    .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
                    .collect()
            }
            Expr::Sum(ts) => ts
                .iter()
                .filter(|(c, _)| !c.is_zero())
                .flat_map(|(_, e)| e.words(nvars))
                .collect(),
        }
    }

    fn render(&self, vars: &[String], maps: &[String], out: &mut String, top: bool) {
        match self {
            Expr::Zero => out.push('0'),
            Expr::Var(i) => out.push_str(&vars[*i]),
            Expr::Product(a, b) => {
                if !top {
                    out.push('(');
                }
                a.render(vars, maps, out, false);
                out.push('*');
                b.render(vars, maps, out, false);
                if !top {
                    out.push(')');
                }
            }
            Expr::Apply(m, e) => {
                out.push_str(maps.get(*m).map_or("D", String::as_str));
                out.push('(');
                e.render(vars, maps, out, true);
                out.push(')');
            }
            Expr::Sum(ts) => {
                if !top {
                    out.push('(');
                }
                for (n, (c, e)) in ts.iter().enumerate() {
                    let neg = c < &BigRational::zero();
                    if n > 0 {
                        out.push_str(if neg { " - " } else { " + " });
                    } else if neg {
                        out.push('-');
                    }
                    let abs = if neg { -c.clone() } else { c.clone() };
                    if !abs.is_one() {
                        out.push_str(&Scalar::Rational(abs).to_string());
                        out.push(' ');
                    }
                    e.render(vars, maps, out, true);
                }
                if !top {
                    out.push(')');
                }
            }
        }
    }
}

/// An equation `lhs = rhs` over named variables, optionally referring to
/// linear maps by index.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySpec {
    name: String,
    vars: Vec<String>,
    lhs: Expr,
    rhs: Expr,
    maps: Vec<(String, LinearMap)>,
}

impl IdentitySpec {
    pub fn new(name: impl Into<String>, vars: &[&str], lhs: Expr, rhs: Expr) -> Result<Self> {
        Self::with_maps(name, vars, lhs, rhs, Vec::new())
    }

    pub fn with_maps(
        name: impl Into<String>,
        vars: &[&str],
        lhs: Expr,
        rhs: Expr,
        maps: Vec<(String, LinearMap)>,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        if let Some(dup) = vars.iter().duplicates().next() {
            return Err(Error::MalformedIdentity(format!("variable {dup:?} declared twice")));
        }
        for side in [&lhs, &rhs] {
            if let Some(v) = side.max_var() {
                if v >= vars.len() {
                    return Err(Error::MalformedIdentity(format!("variable index {v} is undeclared")));
                }
            }
            if let Some(m) = side.max_map() {
                if m >= maps.len() {
                    return Err(Error::MalformedIdentity(format!("map index {m} is undeclared")));
                }
            }
        }
        Ok(IdentitySpec {
            name: name.into(),
            vars,
            lhs,
            rhs,
            maps,
        })
    }

    /// Parses `lhs = rhs`. Products are written `x*y` and must be fully
    /// parenthesized (`(a*b)*c`); `[x,y]` is the commutator, `{x,y}` the
    /// circle product ½(xy + yx), and terms may carry rational coefficients.
    pub fn parse(name: impl Into<String>, vars: &[&str], text: &str) -> Result<Self> {
        Self::parse_with_maps(name, vars, Vec::new(), text)
    }

    /// Like [`IdentitySpec::parse`], with named linear maps usable as
    /// `D(expr)`.
    pub fn parse_with_maps(
        name: impl Into<String>,
        vars: &[&str],
        maps: Vec<(String, LinearMap)>,
        text: &str,
    ) -> Result<Self> {
        let map_names: Vec<&str> = maps.iter().map(|(n, _)| n.as_str()).collect();
        let mut parser = Parser::new(text, vars, &map_names)?;
        let lhs = parser.expr()?;
        parser.expect(&Token::Eq)?;
        let rhs = parser.expr()?;
        parser.finish()?;
        Self::with_maps(name, vars, lhs, rhs, maps)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn lhs(&self) -> &Expr {
        &self.lhs
    }

    pub fn rhs(&self) -> &Expr {
        &self.rhs
    }

    /// Every word on both sides contains every variable exactly once.
    pub fn is_multilinear(&self) -> bool {
        let n = self.vars.len();
        self.lhs
            .words(n)
            .into_iter()
            .chain(self.rhs.words(n))
            .all(|w| w.iter().all(|&c| c == 1))
    }

    pub fn render(&self) -> String {
        let names: Vec<String> = self.maps.iter().map(|(n, _)| n.clone()).collect();
        let mut out = String::new();
        self.lhs.render(&self.vars, &names, &mut out, true);
        out.push_str(" = ");
        self.rhs.render(&self.vars, &names, &mut out, true);
        out
    }

    fn compile(&self, field: FieldSpec) -> Result<(CExpr, CExpr)> {
        Ok((compile(&self.lhs, field)?, compile(&self.rhs, field)?))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Eq,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(s.parse().expect("digits")));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
            continue;
        }
        out.push(match c {
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' | '·' => Token::Star,
            '/' => Token::Slash,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '[' => Token::LBracket,
            ']' => Token::RBracket,
            '{' => Token::LBrace,
            '}' => Token::RBrace,
            ',' => Token::Comma,
            '=' => Token::Eq,
            other => return Err(Error::MalformedIdentity(format!("unexpected character {other:?}"))),
        });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [&'a str],
    maps: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a [&'a str], maps: &'a [&'a str]) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            vars,
            maps,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: &Token) -> Result<()> {
        match self.next() {
            Some(ref got) if got == t => Ok(()),
            got => Err(Error::MalformedIdentity(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::MalformedIdentity(format!("trailing input at {t:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        if self.peek() == Some(&Token::Minus) {
            self.next();
            sign = -sign;
        }
        loop {
            let (c, e) = self.term()?;
            terms.push((sign * c, e));
            match self.peek() {
                Some(Token::Plus) => sign = BigRational::one(),
                Some(Token::Minus) => sign = -BigRational::one(),
                _ => break,
            }
            self.next();
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<(BigRational, Expr)> {
        let mut coeff = BigRational::one();
        if let Some(Token::Int(n)) = self.peek().cloned() {
            self.next();
            let mut q = BigRational::from_integer(n);
            if self.peek() == Some(&Token::Slash) {
                self.next();
                match self.next() {
                    Some(Token::Int(d)) if !d.is_zero() => q /= BigRational::from_integer(d),
                    other => return Err(Error::MalformedIdentity(format!("bad denominator {other:?}"))),
                }
            }
            let starts_atom = matches!(
                self.peek(),
                Some(Token::Ident(_)) | Some(Token::LParen) | Some(Token::LBracket) | Some(Token::LBrace)
            );
            if !starts_atom {
                if q.is_zero() {
                    return Ok((coeff, Expr::Zero));
                }
                return Err(Error::MalformedIdentity(
                    "a bare nonzero scalar is not an algebra element".into(),
                ));
            }
            coeff = q;
        }
        Ok((coeff, self.product()?))
    }

    fn product(&mut self) -> Result<Expr> {
        let left = self.atom()?;
        if self.peek() != Some(&Token::Star) {
            return Ok(left);
        }
        self.next();
        let right = self.atom()?;
        if self.peek() == Some(&Token::Star) {
            return Err(Error::MalformedIdentity(
                "chained product is ambiguous in a non-associative algebra; add parentheses".into(),
            ));
        }
        Ok(Expr::mul(left, right))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Ident(name)) => {
                if let Some(m) = self.maps.iter().position(|&n| n == name) {
                    self.expect(&Token::LParen)?;
                    let inner = self.expr()?;
                    self.expect(&Token::RParen)?;
                    return Ok(Expr::apply(m, inner));
                }
                match self.vars.iter().position(|&v| v == name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None => Err(Error::MalformedIdentity(format!("undeclared variable {name:?}"))),
                }
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(&Token::RParen)?;
                Ok(e)
            }
            Some(Token::LBracket) => {
                let a = self.expr()?;
                self.expect(&Token::Comma)?;
                let b = self.expr()?;
                self.expect(&Token::RBracket)?;
                Ok(Expr::bracket(a, b))
            }
            Some(Token::LBrace) => {
                let a = self.expr()?;
                self.expect(&Token::Comma)?;
                let b = self.expr()?;
                self.expect(&Token::RBrace)?;
                Ok(Expr::circle(a, b))
            }
            Some(Token::Int(n)) if n.is_zero() => Ok(Expr::Zero),
            other => Err(Error::MalformedIdentity(format!("expected an element, found {other:?}"))),
        }
    }
}

/// Expression with coefficients already mapped into the algebra's field.
#[derive(Debug, Clone)]
enum CExpr {
    Zero,
    Var(usize),
    Product(Box<CExpr>, Box<CExpr>),
    Apply(usize, Box<CExpr>),
    Sum(Vec<(Scalar, CExpr)>),
}

fn compile(e: &Expr, field: FieldSpec) -> Result<CExpr> {
    Ok(match e {
        Expr::Zero => CExpr::Zero,
        Expr::Var(i) => CExpr::Var(*i),
        Expr::Product(a, b) => CExpr::Product(Box::new(compile(a, field)?), Box::new(compile(b, field)?)),
        Expr::Apply(m, a) => CExpr::Apply(*m, Box::new(compile(a, field)?)),
        Expr::Sum(ts) => CExpr::Sum(
            ts.iter()
                .map(|(c, e)| Ok((field.from_rational(c)?, compile(e, field)?)))
                .collect::<Result<_>>()?,
        ),
    })
}

/// A carrier in which expressions can be evaluated.
trait Domain {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    fn var(&self, i: usize) -> Self::Value;
    fn add_scaled(&self, acc: &mut Self::Value, s: &Scalar, v: &Self::Value);
    fn product(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn apply(&self, map: &LinearMap, v: &Self::Value) -> Self::Value;
}

fn eval<D: Domain>(dom: &D, maps: &[(String, LinearMap)], e: &CExpr) -> D::Value {
    match e {
        CExpr::Zero => dom.zero(),
        CExpr::Var(i) => dom.var(*i),
        CExpr::Product(a, b) => dom.product(&eval(dom, maps, a), &eval(dom, maps, b)),
        CExpr::Apply(m, a) => dom.apply(&maps[*m].1, &eval(dom, maps, a)),
        CExpr::Sum(ts) => {
            let mut acc = dom.zero();
            for (c, t) in ts {
                dom.add_scaled(&mut acc, c, &eval(dom, maps, t));
            }
            acc
        }
    }
}

/// Coordinates as polynomials in the indeterminates `vᵢ`.
struct PolyDomain<'a> {
    alg: &'a Algebra,
    vars: Vec<Vec<FormalPolynomial>>,
    nvars: usize,
}

impl<'a> PolyDomain<'a> {
    fn new(alg: &'a Algebra, nvars_abstract: usize) -> Self {
        let d = alg.dim();
        let n = nvars_abstract * d;
        let vars = (0..nvars_abstract)
            .map(|v| (0..d).map(|i| FormalPolynomial::var(alg.field(), n, v * d + i)).collect())
            .collect();
        PolyDomain { alg, vars, nvars: n }
    }
}

impl Domain for PolyDomain<'_> {
    type Value = Vec<FormalPolynomial>;

    fn zero(&self) -> Self::Value {
        vec![FormalPolynomial::zero(self.alg.field(), self.nvars); self.alg.dim()]
    }

    fn var(&self, i: usize) -> Self::Value {
        self.vars[i].clone()
    }

    fn add_scaled(&self, acc: &mut Self::Value, s: &Scalar, v: &Self::Value) {
        for (a, b) in acc.iter_mut().zip(v) {
            a.add_scaled(s, b);
        }
    }

    fn product(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let d = self.alg.dim();
        let tensor = self.alg.tensor();
        let mut out = self.zero();
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                let coeffs = tensor.product_of_basis(i, j);
                if coeffs.iter().all(Scalar::is_zero) {
                    continue;
                }
                let ab = a[i].mul(&b[j]);
                for (k, c) in coeffs.iter().enumerate() {
                    out[k].add_scaled(c, &ab);
                }
            }
        }
        out
    }

    fn apply(&self, map: &LinearMap, v: &Self::Value) -> Self::Value {
        let m = map.matrix();
        let mut out = self.zero();
        for (k, slot) in out.iter_mut().enumerate() {
            for (j, p) in v.iter().enumerate() {
                slot.add_scaled(m.get(k, j), p);
            }
        }
        out
    }
}

/// Concrete vectors; products go through [`Algebra::multiply`].
struct PointDomain<'a> {
    alg: &'a Algebra,
    assignment: &'a [Vector],
}

impl Domain for PointDomain<'_> {
    type Value = Vector;

    fn zero(&self) -> Vector {
        self.alg.zero_vector()
    }

    fn var(&self, i: usize) -> Vector {
        self.assignment[i].clone()
    }

    fn add_scaled(&self, acc: &mut Vector, s: &Scalar, v: &Vector) {
        acc.axpy(s, v);
    }

    fn product(&self, a: &Vector, b: &Vector) -> Vector {
        self.alg.multiply(a, b).expect("dimensions checked on entry")
    }

    fn apply(&self, map: &LinearMap, v: &Vector) -> Vector {
        map.apply(v).expect("dimensions checked on entry")
    }
}

/// Which notion of "identity holds" a check uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Polynomial,
    Pointwise,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::Polynomial => "polynomial",
            Semantics::Pointwise => "pointwise",
        })
    }
}

/// Concrete elements on which the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub assignment: Vec<(String, Vector)>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A nonzero coefficient of `lhs − rhs` in coordinate `component`, plus a
    /// concrete instantiation when the small-value search found one.
    Coefficient {
        component: usize,
        monomial: Monomial,
        rendered: String,
        coefficient: Scalar,
        instance: Option<Instance>,
    },
    Instance(Instance),
}

impl Witness {
    pub fn instance(&self) -> Option<&Instance> {
        match self {
            Witness::Coefficient { instance, .. } => instance.as_ref(),
            Witness::Instance(i) => Some(i),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    spec: IdentitySpec,
}

impl Verdict {
    pub fn spec(&self) -> &IdentitySpec {
        &self.spec
    }

    /// Re-checks a failure witness against `alg` through an independent
    /// evaluation; a passing verdict is trivially valid.
    pub fn revalidate(&self, alg: &Algebra) -> bool {
        if self.holds {
            return true;
        }
        let Some(w) = &self.witness else {
            return false;
        };
        let Ok((lhs, rhs)) = self.spec.compile(alg.field()) else {
            return false;
        };
        if let Some(inst) = w.instance() {
            let assignment: Vec<Vector> = inst.assignment.iter().map(|(_, v)| v.clone()).collect();
            let dom = PointDomain {
                alg,
                assignment: &assignment,
            };
            let l = eval(&dom, &self.spec.maps, &lhs);
            let r = eval(&dom, &self.spec.maps, &rhs);
            if l == r || l != inst.lhs || r != inst.rhs {
                return false;
            }
        }
        if let Witness::Coefficient {
            component,
            monomial,
            coefficient,
            ..
        } = w
        {
            let dom = PolyDomain::new(alg, self.spec.vars.len());
            let l = eval(&dom, &self.spec.maps, &lhs);
            let r = eval(&dom, &self.spec.maps, &rhs);
            let diff = l[*component].sub(&r[*component]);
            return !coefficient.is_zero() && diff.coefficient(monomial) == *coefficient;
        }
        true
    }

    fn describe(&self, alg: &Algebra) -> String {
        let Some(w) = &self.witness else {
            return String::new();
        };
        let inst_text = |i: &Instance| {
            let assign = i
                .assignment
                .iter()
                .map(|(n, v)| format!("{n} = {}", alg.render(v)))
                .join(", ");
            format!(
                "at {assign}: lhs = {}, rhs = {}",
                alg.render(&i.lhs),
                alg.render(&i.rhs)
            )
        };
        match w {
            Witness::Coefficient {
                component,
                rendered,
                coefficient,
                instance,
                ..
            } => {
                let mut s = format!(
                    "lhs - rhs has coefficient {coefficient} at {rendered} in coordinate {}",
                    alg.basis()[*component]
                );
                match instance {
                    Some(i) => {
                        s.push_str("; ");
                        s.push_str(&inst_text(i));
                    }
                    None => s.push_str("; no instance with entries in {0, ±1}"),
                }
                s
            }
            Witness::Instance(i) => inst_text(i),
        }
    }
}

/// Per-identity verdicts in checker order.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub semantics: Semantics,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new(semantics: Semantics) -> Self {
        AxiomReport {
            semantics,
            verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.verdicts.extend(other.verdicts);
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
    }

    /// Every failed verdict carries a witness that re-validates.
    pub fn witnesses_valid(&self, alg: &Algebra) -> bool {
        self.failures().all(|v| v.revalidate(alg))
    }

    /// One line per identity (`name: PASS` / `name: FAIL <witness>`), then
    /// notes.
    pub fn render(&self, alg: &Algebra) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            if v.holds {
                out.push_str(&format!("{}: PASS\n", v.name));
            } else {
                out.push_str(&format!("{}: FAIL  {}\n", v.name, v.describe(alg)));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

fn check_dims(alg: &Algebra, spec: &IdentitySpec) -> Result<()> {
    for (_, m) in &spec.maps {
        if m.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: m.dim(),
            });
        }
    }
    Ok(())
}

fn indeterminate_names(alg: &Algebra, spec: &IdentitySpec) -> Vec<String> {
    spec.vars
        .iter()
        .flat_map(|v| alg.basis().iter().map(move |b| format!("{v}[{b}]")))
        .collect()
}

/// Polynomial-identity check of a single identity.
pub fn verify_identity(alg: &Algebra, spec: &IdentitySpec) -> Result<AxiomReport> {
    verify_identity_with(alg, spec, Semantics::Polynomial)
}

pub fn verify_identity_with(alg: &Algebra, spec: &IdentitySpec, semantics: Semantics) -> Result<AxiomReport> {
    let verdict = match semantics {
        Semantics::Polynomial => verify_polynomial(alg, spec)?,
        Semantics::Pointwise => verify_pointwise(alg, spec)?,
    };
    let mut report = AxiomReport::new(semantics);
    report.verdicts.push(verdict);
    Ok(report)
}

/// Checks a list of identities, one verdict each, in list order.
pub fn verify_all(alg: &Algebra, specs: &[IdentitySpec], semantics: Semantics) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(semantics);
    for spec in specs {
        report.extend(verify_identity_with(alg, spec, semantics)?);
    }
    Ok(report)
}

/// Index of the first failing identity, without witness construction.
pub fn first_failure(alg: &Algebra, specs: &[IdentitySpec], semantics: Semantics) -> Result<Option<usize>> {
    for (n, spec) in specs.iter().enumerate() {
        check_dims(alg, spec)?;
        let holds = match semantics {
            Semantics::Polynomial => poly_difference(alg, spec)?.iter().all(FormalPolynomial::is_zero),
            Semantics::Pointwise => pointwise_counterexample(alg, spec)?.is_none(),
        };
        if !holds {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn poly_difference(alg: &Algebra, spec: &IdentitySpec) -> Result<Vec<FormalPolynomial>> {
    let (lhs, rhs) = spec.compile(alg.field())?;
    let dom = PolyDomain::new(alg, spec.vars.len());
    let l = eval(&dom, &spec.maps, &lhs);
    let r = eval(&dom, &spec.maps, &rhs);
    Ok(l.iter().zip(&r).map(|(a, b)| a.sub(b)).collect())
}

fn verify_polynomial(alg: &Algebra, spec: &IdentitySpec) -> Result<Verdict> {
    check_dims(alg, spec)?;
    let diff = poly_difference(alg, spec)?;
    let Some((component, poly)) = diff.iter().enumerate().find(|(_, p)| !p.is_zero()) else {
        return Ok(Verdict {
            name: spec.name.clone(),
            holds: true,
            witness: None,
            spec: spec.clone(),
        });
    };
    let (monomial, coefficient) = poly.first_term().expect("nonzero polynomial");
    let names = indeterminate_names(alg, spec);
    let instance = search_instance(alg, spec, &diff);
    Ok(Verdict {
        name: spec.name.clone(),
        holds: false,
        witness: Some(Witness::Coefficient {
            component,
            monomial: monomial.clone(),
            rendered: FormalPolynomial::render_monomial(monomial, &names),
            coefficient: coefficient.clone(),
            instance,
        }),
        spec: spec.clone(),
    })
}

/// Looks for indeterminate values in {0, ±1}, sparsest first, on which some
/// coordinate of `diff` is nonzero.
fn search_instance(alg: &Algebra, spec: &IdentitySpec, diff: &[FormalPolynomial]) -> Option<Instance> {
    let field = alg.field();
    let n = diff.first().map_or(0, FormalPolynomial::nvars);
    let mut values = vec![field.one()];
    let minus_one = -field.one();
    if minus_one != values[0] {
        values.push(minus_one);
    }
    let mut budget = INSTANCE_SEARCH_BUDGET;
    for weight in 1..=n {
        for support in (0..n).combinations(weight) {
            for choice in std::iter::repeat_n(values.iter(), weight).multi_cartesian_product() {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                let mut point = vec![field.zero(); n];
                for (&idx, v) in support.iter().zip(&choice) {
                    point[idx] = (*v).clone();
                }
                if diff.iter().any(|p| !p.eval(&point).is_zero()) {
                    return Some(instance_at(alg, spec, &point));
                }
            }
        }
    }
    None
}

fn instance_at(alg: &Algebra, spec: &IdentitySpec, point: &[Scalar]) -> Instance {
    let d = alg.dim();
    let vectors: Vec<Vector> = point.chunks(d).map(|c| Vector::new(alg.field(), c.to_vec())).collect();
    let (lhs, rhs) = spec.compile(alg.field()).expect("compiled before");
    let dom = PointDomain {
        alg,
        assignment: &vectors,
    };
    let l = eval(&dom, &spec.maps, &lhs);
    let r = eval(&dom, &spec.maps, &rhs);
    Instance {
        assignment: spec.vars.iter().cloned().zip(vectors).collect(),
        lhs: l,
        rhs: r,
    }
}

fn pointwise_counterexample(alg: &Algebra, spec: &IdentitySpec) -> Result<Option<Instance>> {
    let field = alg.field();
    let Some(elements) = field.elements() else {
        return Err(Error::Unsupported(
            "pointwise semantics needs a finite field; over Q use polynomial semantics".into(),
        ));
    };
    let n = spec.vars.len() * alg.dim();
    let p = elements.len() as u64;
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(p));
    match total {
        Some(t) if t <= POINTWISE_LIMIT => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "pointwise check over {field} would visit {p}^{n} points (limit {POINTWISE_LIMIT})"
            )))
        }
    }
    let (lhs, rhs) = spec.compile(field)?;
    let d = alg.dim();
    let mut digits = vec![0usize; n];
    loop {
        let vectors: Vec<Vector> = digits
            .chunks(d)
            .map(|c| Vector::new(field, c.iter().map(|&i| elements[i].clone()).collect()))
            .collect();
        let dom = PointDomain {
            alg,
            assignment: &vectors,
        };
        let l = eval(&dom, &spec.maps, &lhs);
        let r = eval(&dom, &spec.maps, &rhs);
        if l != r {
            return Ok(Some(Instance {
                assignment: spec.vars.iter().cloned().zip(vectors).collect(),
                lhs: l,
                rhs: r,
            }));
        }
        // odometer, last digit fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < elements.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn verify_pointwise(alg: &Algebra, spec: &IdentitySpec) -> Result<Verdict> {
    check_dims(alg, spec)?;
    let ce = pointwise_counterexample(alg, spec)?;
    Ok(Verdict {
        name: spec.name.clone(),
        holds: ce.is_none(),
        witness: ce.map(Witness::Instance),
        spec: spec.clone(),
    })
}
