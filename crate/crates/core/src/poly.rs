//! Multivariate polynomials over GF(q).
//!
//! Terms live in a `BTreeMap` keyed by [`Exponent`], whose `Ord` is the
//! graded-lexicographic order, so iterating a polynomial walks its monomials
//! from smallest to largest.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};

pub mod uni;

/// Exponent vector of a monomial `x_1^{a_1} ... x_m^{a_m}`.
///
/// Ordered graded-lexicographically: by total degree first, then the first
/// differing entry decides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    /// `d` in position `var`, zero elsewhere.
    pub fn unit(nvars: usize, var: usize, d: u32) -> Self {
        let mut v = vec![0; nvars];
        v[var] = d;
        Exponent(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `a ≺ b` in the graded-lexicographic order.
pub fn graded_lex_less(a: &[u32], b: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::ArityMismatch { expected: a.len(), got: b.len() });
    }
    let sa: u64 = a.iter().map(|&x| x as u64).sum();
    let sb: u64 = b.iter().map(|&x| x as u64).sum();
    if sa != sb {
        return Ok(sa < sb);
    }
    // leftmost nonzero entry of b - a positive
    Ok(a.iter().zip(b).find(|(x, y)| x != y).is_some_and(|(x, y)| y > x))
}

/// A polynomial in `nvars` variables over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Exponent, Gf>,
}

impl Polynomial {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        Polynomial { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: Gf) -> Self {
        Polynomial::monomial(field, Exponent::zero(nvars), c)
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Polynomial::constant(field, nvars, Gf::ONE)
    }

    pub fn monomial(field: &Field, exp: Exponent, c: Gf) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { field: field.clone(), nvars, terms }
    }

    /// The variable `x_{var+1}`.
    pub fn var(field: &Field, nvars: usize, var: usize) -> Self {
        Polynomial::monomial(field, Exponent::unit(nvars, var, 1), Gf::ONE)
    }

    /// Sums the given terms, dropping zeros. Exponents must have `nvars` entries.
    pub fn from_terms<I>(field: &Field, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Gf)>,
    {
        let mut out = Polynomial::zero(field, nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, got: exp.len() });
            }
            if c.value() >= field.q() {
                return Err(Error::ElementOutOfRange { value: c.value() as u64, q: field.q() as u64 });
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }

    /// Univariate polynomial in `x_{var+1}` from coefficients, low degree first.
    pub fn univariate(field: &Field, nvars: usize, var: usize, coeffs: &[Gf]) -> Self {
        let mut out = Polynomial::zero(field, nvars);
        for (d, &c) in coeffs.iter().enumerate() {
            out.add_term(Exponent::unit(nvars, var, d as u32), c);
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, Gf)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: &Exponent) -> Gf {
        self.terms.get(exp).copied().unwrap_or(Gf::ZERO)
    }

    /// Graded-lex largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, Gf)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// Degree in `x_{var+1}`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[var]).max()
    }

    /// `Some(var)` when every term involves only `x_{var+1}` (constants excluded).
    pub fn univariate_var(&self) -> Option<usize> {
        let mut found = None;
        for exp in self.terms.keys() {
            for (i, &a) in exp.0.iter().enumerate() {
                if a > 0 {
                    match found {
                        None => found = Some(i),
                        Some(j) if j != i => return None,
                        _ => {}
                    }
                }
            }
        }
        found
    }

    /// Dense coefficients in `x_{var+1}`, low degree first. The polynomial
    /// must be univariate in `var` (or constant).
    pub fn to_dense(&self, var: usize) -> Result<Vec<Gf>> {
        let mut out = Vec::new();
        for (exp, &c) in &self.terms {
            if exp.0.iter().enumerate().any(|(i, &a)| i != var && a > 0) {
                return Err(Error::NotUnivariate);
            }
            let d = exp.0[var] as usize;
            if out.len() <= d {
                out.resize(d + 1, Gf::ZERO);
            }
            out[d] = c;
        }
        Ok(out)
    }

    fn add_term(&mut self, exp: Exponent, c: Gf) {
        if c.is_zero() {
            return;
        }
        let field = &self.field;
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Gf) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.field, self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.field.mul(*v, c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let f = &self.field;
        let mut acc: std::collections::HashMap<Exponent, Gf> = std::collections::HashMap::new();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let slot = acc.entry(ea.add(eb)).or_insert(Gf::ZERO);
                *slot = f.add(*slot, f.mul(ca, cb));
            }
        }
        Ok(Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Value at `point`.
    pub fn evaluate(&self, point: &[Gf]) -> Result<Gf> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: point.len() });
        }
        let f = &self.field;
        Ok(f.sum(
            self.terms
                .iter()
                .map(|(exp, &c)| exp.0.iter().zip(point).fold(c, |acc, (&a, &x)| f.mul(acc, f.pow(x, a as u64)))),
        ))
    }

    /// Renders with terms in decreasing graded-lex order, e.g. `x1^3 + 3*x1 + 5`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (exp, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exp
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                .collect();
            parts.push(match (mono.is_empty(), c.value()) {
                (true, _) => c.to_string(),
                (false, 1) => mono.join("*"),
                (false, _) => format!("{}*{}", c, mono.join("*")),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[GF({}), {} vars]({})", self.field.q(), self.nvars, self.render())
    }
}

/// Expands `prod_i g_i(x_i)` where `factors[i]` holds the dense coefficients of
/// `g_i`. The support of the product is the Cartesian product of the supports.
pub fn product_of_univariates(field: &Field, factors: &[Vec<Gf>]) -> Polynomial {
    let nvars = factors.len();
    let mut terms: Vec<(Vec<u32>, Gf)> = vec![(Vec::with_capacity(nvars), Gf::ONE)];
    for g in factors {
        let mut next = Vec::with_capacity(terms.len() * g.len());
        for (exp, c) in &terms {
            for (d, &gd) in g.iter().enumerate() {
                if gd.is_zero() {
                    continue;
                }
                let mut e = exp.clone();
                e.push(d as u32);
                next.push((e, field.mul(*c, gd)));
            }
        }
        terms = next;
    }
    Polynomial { field: field.clone(), nvars, terms: terms.into_iter().map(|(e, c)| (Exponent(e), c)).collect() }
}

/// Splits a monic univariate `l` as `x^j * quotient + remainder` with
/// `deg remainder < j`.
pub fn divide_by_power(l: &Polynomial, j: usize) -> Result<(Polynomial, Polynomial)> {
    let var = l.univariate_var().ok_or(Error::NotUnivariate)?;
    let dense = l.to_dense(var)?;
    if dense.last() != Some(&Gf::ONE) {
        return Err(Error::NotMonic);
    }
    let degree = dense.len() - 1;
    if j == 0 || j > degree {
        return Err(Error::PowerTooLarge { power: j, degree });
    }
    let (quot, rem) = uni::divide_by_power(&dense, j);
    Ok((
        Polynomial::univariate(l.field(), l.nvars(), var, &quot),
        Polynomial::univariate(l.field(), l.nvars(), var, &rem),
    ))
}

/// Normal form of `f` modulo generators `L_1(x_1), ..., L_m(x_m)`, each monic
/// and univariate in its own variable.
///
/// Each variable is reduced in turn: the terms of highest `x_i`-degree `d >=
/// n_i` are rewritten with `x_i^{n_i} = x_i^{n_i} - L_i`, which strictly lowers
/// that degree. The generators involve disjoint variables, so the result does
/// not depend on the reduction order.
pub fn normal_form(f: &Polynomial, generators: &[Polynomial]) -> Result<Polynomial> {
    if generators.len() != f.nvars {
        return Err(Error::ArityMismatch { expected: f.nvars, got: generators.len() });
    }
    let mut tails = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if g.field != f.field || g.nvars != f.nvars {
            return Err(Error::BadGenerator { index: i });
        }
        let dense = g.to_dense(i).map_err(|_| Error::BadGenerator { index: i })?;
        if dense.len() < 2 || dense.last() != Some(&Gf::ONE) {
            return Err(Error::BadGenerator { index: i });
        }
        tails.push(dense);
    }

    let field = &f.field;
    let mut out = f.clone();
    for (var, l) in tails.iter().enumerate() {
        let n = (l.len() - 1) as u32;
        while let Some(d) = out.terms.keys().map(|e| e.0[var]).filter(|&d| d >= n).max() {
            let hits: Vec<(Exponent, Gf)> =
                out.terms.iter().filter(|(e, _)| e.0[var] == d).map(|(e, &c)| (e.clone(), c)).collect();
            for (exp, c) in hits {
                out.terms.remove(&exp);
                let neg_c = field.neg(c);
                for (k, &lk) in l[..n as usize].iter().enumerate() {
                    if lk.is_zero() {
                        continue;
                    }
                    let mut e = exp.clone();
                    e.0[var] = d - n + k as u32;
                    out.add_term(e, field.mul(neg_c, lk));
                }
            }
        }
    }
    Ok(out)
}
