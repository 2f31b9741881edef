//! Monomial-Cartesian codes `C(S, A) = ev_S(Span{x^a : a in A})`.
//!
//! The dual is built from the quotients of the vanishing generators: writing
//! `L_i = x_i^{j} q_{i,j-1} + r_{i,j-1}` and `Q_b = prod_i q_{i,b_i}(x_i)`, the
//! residue vectors `Res_S Q_b` for `b` in the box complement `B \ A` form a
//! basis of `C(S, A)^perp`. Equivalently those rows are `ev_S(F Q_b)`, and the
//! normal forms of `F Q_b` decide dual containment and the LCD property
//! directly on monomial supports.
//!
//! Row order of both the generator and the parity-check matrix follows the
//! graded-lex order of the exponents.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::cartesian::CartesianSet;
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::linalg::Matrix;
use crate::poly::{self, uni, Exponent, Polynomial};

/// Default codeword budget for [`Code::min_distance_exhaustive`].
pub const DEFAULT_DISTANCE_BUDGET: u128 = 10_000_000;

/// All exponents of `{0..n_1-1} x ... x {0..n_m-1}`, graded-lex ascending.
pub fn box_exponents(sizes: &[usize]) -> Vec<Exponent> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for &n in sizes {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..n as u32).map(move |d| {
                    let mut next = e.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    let mut exps: Vec<Exponent> = out.into_iter().map(Exponent).collect();
    exps.sort();
    exps
}

/// A nonempty, duplicate-free set of exponents inside the box given by the
/// component sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentSet {
    sizes: Vec<usize>,
    exponents: Vec<Exponent>,
    #[serde(skip)]
    lookup: HashSet<Exponent>,
}

impl ExponentSet {
    pub fn new(sizes: &[usize], exponents: Vec<Exponent>) -> Result<ExponentSet> {
        if exponents.is_empty() {
            return Err(Error::EmptyExponentSet);
        }
        let mut lookup = HashSet::with_capacity(exponents.len());
        for e in &exponents {
            if e.len() != sizes.len() || e.0.iter().zip(sizes).any(|(&a, &n)| a as usize >= n) {
                return Err(Error::ExponentOutsideBox(e.0.clone()));
            }
            if !lookup.insert(e.clone()) {
                return Err(Error::DuplicateExponent(e.0.clone()));
            }
        }
        let mut exponents = exponents;
        exponents.sort();
        Ok(ExponentSet { sizes: sizes.to_vec(), exponents, lookup })
    }

    pub fn full_box(sizes: &[usize]) -> ExponentSet {
        ExponentSet::new(sizes, box_exponents(sizes)).expect("box is nonempty")
    }

    /// `{0..=c_1} x ... x {0..=c_m}`.
    pub fn box_corner(sizes: &[usize], corner: &[u32]) -> Result<ExponentSet> {
        if corner.len() != sizes.len() || corner.iter().zip(sizes).any(|(&c, &n)| c as usize >= n) {
            return Err(Error::ExponentOutsideBox(corner.to_vec()));
        }
        let dims: Vec<usize> = corner.iter().map(|&c| c as usize + 1).collect();
        ExponentSet::new(sizes, box_exponents(&dims))
    }

    /// `{a in B : a_1 + ... + a_m <= r}`.
    pub fn simplex(sizes: &[usize], r: u64) -> Result<ExponentSet> {
        let exps = box_exponents(sizes).into_iter().filter(|e| e.degree() <= r).collect();
        ExponentSet::new(sizes, exps)
    }

    /// `A x A'` for the direct product of two codes.
    pub fn product(&self, other: &ExponentSet) -> ExponentSet {
        let mut sizes = self.sizes.clone();
        sizes.extend(&other.sizes);
        let exps = self
            .exponents
            .iter()
            .flat_map(|a| {
                other.exponents.iter().map(move |b| {
                    let mut e = a.0.clone();
                    e.extend(&b.0);
                    Exponent(e)
                })
            })
            .collect();
        ExponentSet::new(&sizes, exps).expect("product of valid sets is valid")
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exponents
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.lookup.contains(e)
    }

    /// `B \ A` in graded-lex order.
    pub fn complement(&self) -> Vec<Exponent> {
        box_exponents(&self.sizes).into_iter().filter(|e| !self.contains(e)).collect()
    }

    pub fn is_full_box(&self) -> bool {
        self.exponents.len() == self.sizes.iter().product::<usize>()
    }
}

/// Basis of the dual code: one row `Res_S Q_b` per `b` in `B \ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    pub exponents: Vec<Exponent>,
    pub q_polynomials: Vec<Polynomial>,
    pub matrix: Matrix,
}

/// Outcome of the dual-containment criterion for one `b` in `B \ A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentEntry {
    pub b: Exponent,
    /// Graded-lex largest monomial of the normal form of `F Q_b` outside `A`.
    pub offending: Option<Exponent>,
}

/// Certificate for `C^perp ⊂ C`: per complement exponent, whether the normal
/// form of `F Q_b` is supported on `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualContainment {
    pub holds: bool,
    pub entries: Vec<ContainmentEntry>,
}

impl DualContainment {
    pub fn first_failure(&self) -> Option<&ContainmentEntry> {
        self.entries.iter().find(|e| e.offending.is_some())
    }
}

impl fmt::Display for DualContainment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "criterion: normal form of F*Q_b supported on A for every b in B\\A")?;
        writeln!(f, "checked: {}", self.entries.len())?;
        writeln!(f, "failures: {}", self.entries.iter().filter(|e| e.offending.is_some()).count())?;
        for e in &self.entries {
            match &e.offending {
                None => writeln!(f, "b={} contained", e.b)?,
                Some(m) => writeln!(f, "b={} offending={}", e.b, m)?,
            }
        }
        Ok(())
    }
}

/// Certificate for the LCD criterion: the normal forms of `F Q_b`,
/// restricted to the monomials of `B \ A`, must have full rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcdCertificate {
    pub lcd: bool,
    pub complement_size: usize,
    pub restricted_rank: usize,
}

impl fmt::Display for LcdCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "criterion: Span{{NF(F*Q_b)}} meets Span{{x^a : a in A}} only in 0")?;
        writeln!(f, "complement_size: {}", self.complement_size)?;
        writeln!(f, "restricted_rank: {}", self.restricted_rank)
    }
}

/// A monomial-Cartesian code with its generator matrix.
#[derive(Clone, Debug)]
pub struct Code {
    set: CartesianSet,
    exponents: ExponentSet,
    generator: Matrix,
    dual: OnceLock<DualBasis>,
}

impl Code {
    /// Builds `C(S, A)`. The generator has one row per `a in A` (graded-lex)
    /// with entries `s^a` over the points of `S`.
    pub fn build(set: CartesianSet, exponents: ExponentSet) -> Result<Code> {
        let sizes = set.sizes();
        if exponents.sizes() != sizes.as_slice() {
            return Err(Error::ArityMismatch { expected: sizes.len(), got: exponents.sizes().len() });
        }
        let f = set.field().clone();
        // powers[i][idx][d] = (S_i[idx])^d
        let powers: Vec<Vec<Vec<Gf>>> = set
            .components()
            .iter()
            .map(|comp| comp.iter().map(|&s| (0..comp.len()).map(|d| f.pow(s, d as u64)).collect()).collect())
            .collect();
        let rows = exponents
            .exponents()
            .iter()
            .map(|a| {
                let factors: Vec<Vec<Gf>> = powers
                    .iter()
                    .zip(&a.0)
                    .map(|(table, &d)| table.iter().map(|row| row[d as usize]).collect())
                    .collect();
                outer_product(&f, &factors)
            })
            .collect();
        let generator = Matrix::from_rows(&f, set.len(), rows);
        Ok(Code { set, exponents, generator, dual: OnceLock::new() })
    }

    pub fn set(&self) -> &CartesianSet {
        &self.set
    }

    pub fn field(&self) -> &Field {
        self.set.field()
    }

    pub fn exponents(&self) -> &ExponentSet {
        &self.exponents
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Length `n = |S|`.
    pub fn n(&self) -> usize {
        self.set.len()
    }

    /// Dimension `k = |A|`.
    pub fn k(&self) -> usize {
        self.exponents.len()
    }

    /// `sum_i msg_i * G_i`.
    pub fn encode(&self, msg: &[Gf]) -> Vec<Gf> {
        assert_eq!(msg.len(), self.k(), "message length");
        let f = self.field();
        let mut out = vec![Gf::ZERO; self.n()];
        for (r, &c) in msg.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.generator.row(r)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    fn quotient_factors(&self, b: &Exponent) -> Vec<Vec<Gf>> {
        b.0.iter()
            .enumerate()
            .map(|(i, &bi)| uni::divide_by_power(self.set.vanishing_dense(i), bi as usize + 1).0)
            .collect()
    }

    /// Rows `Res_S Q_b`, `b in B \ A`. Computed once and cached.
    pub fn dual_basis(&self) -> &DualBasis {
        self.dual.get_or_init(|| {
            let f = self.field();
            let exps = self.exponents.complement();
            let mut q_polys = Vec::with_capacity(exps.len());
            let mut rows = Vec::with_capacity(exps.len());
            for b in &exps {
                let factors = self.quotient_factors(b);
                rows.push(self.set.residue_vector_of_product(&factors));
                q_polys.push(poly::product_of_univariates(f, &factors));
            }
            DualBasis { exponents: exps, q_polynomials: q_polys, matrix: Matrix::from_rows(f, self.n(), rows) }
        })
    }

    /// Rows `ev_S(F Q_b)` using the multivariate `F`; equal to [`Code::dual_basis`].
    pub fn dual_basis_by_evaluation(&self) -> DualBasis {
        let f = self.field();
        let big_f = self.set.interpolate_f();
        let exps = self.exponents.complement();
        let mut q_polys = Vec::with_capacity(exps.len());
        let mut rows = Vec::with_capacity(exps.len());
        for b in &exps {
            let q_b = q_polynomial(&self.set, b).expect("complement lies in the box");
            let fq = big_f.mul(&q_b).expect("same ring");
            rows.push(self.set.points().iter().map(|p| fq.evaluate(p).expect("arity")).collect());
            q_polys.push(q_b);
        }
        DualBasis { exponents: exps, q_polynomials: q_polys, matrix: Matrix::from_rows(f, self.n(), rows) }
    }

    /// Univariate factors of the normal form of `F Q_b`: `F_i q_{i,b_i} mod L_i`.
    fn fq_factors(&self, b: &Exponent) -> Vec<Vec<Gf>> {
        let f = self.field();
        self.quotient_factors(b)
            .iter()
            .enumerate()
            .map(|(i, q)| uni::rem_monic(f, &uni::mul(f, &self.set.f_factors()[i], q), self.set.vanishing_dense(i)))
            .collect()
    }

    /// Normal form of `F Q_b` modulo the vanishing generators.
    pub fn fq_normal_form(&self, b: &Exponent) -> Polynomial {
        poly::product_of_univariates(self.field(), &self.fq_factors(b))
    }

    /// Decides `C^perp ⊂ C` by checking that every normal form of `F Q_b`,
    /// `b in B \ A`, is supported on monomials of `A`.
    pub fn is_dual_containing(&self) -> DualContainment {
        let entries: Vec<ContainmentEntry> = self
            .exponents
            .complement()
            .into_par_iter()
            .map(|b| {
                let supports: Vec<Vec<u32>> = self
                    .fq_factors(&b)
                    .iter()
                    .map(|g| g.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, _)| d as u32).collect())
                    .collect();
                let offending = support_monomials(&supports).filter(|e| !self.exponents.contains(e)).max();
                ContainmentEntry { b, offending }
            })
            .collect();
        DualContainment { holds: entries.iter().all(|e| e.offending.is_none()), entries }
    }

    /// Decides whether `C ∩ C^perp = 0` from the normal forms of `F Q_b`.
    pub fn is_lcd(&self) -> LcdCertificate {
        let f = self.field();
        let comp = self.exponents.complement();
        let rows: Vec<Vec<Gf>> = comp
            .par_iter()
            .map(|b| {
                let factors = self.fq_factors(b);
                comp.iter()
                    .map(|c| f.product(factors.iter().zip(&c.0).map(|(g, &d)| *g.get(d as usize).unwrap_or(&Gf::ZERO))))
                    .collect()
            })
            .collect();
        let restricted_rank = Matrix::from_rows(f, comp.len(), rows).rank();
        LcdCertificate { lcd: restricted_rank == comp.len(), complement_size: comp.len(), restricted_rank }
    }

    /// Exact minimum Hamming weight by enumerating codewords. Refuses when
    /// `q^k` exceeds `budget`.
    pub fn min_distance_exhaustive(&self, budget: u128) -> Result<usize> {
        let f = self.field();
        let q = f.q();
        let k = self.k();
        let needed = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        // Up to scaling, messages have their first nonzero coefficient equal to
        // one. Work is split by that position and the value of the next digit.
        let mut tasks = Vec::new();
        for lead in 0..k {
            if lead + 1 < k {
                tasks.extend((0..q).map(|v| (lead, Some(v))));
            } else {
                tasks.push((lead, None));
            }
        }
        let g = &self.generator;
        let best = tasks
            .into_par_iter()
            .map(|(lead, next)| {
                let mut cw = g.row(lead).to_vec();
                let mut free_from = lead + 1;
                if let Some(v) = next {
                    axpy(f, &mut cw, Gf(v), g.row(lead + 1));
                    free_from = lead + 2;
                }
                min_weight_odometer(f, g, &mut cw, free_from)
            })
            .min();
        Ok(best.unwrap_or(self.n()))
    }
}

/// `Q_b = prod_i q_{i,b_i}(x_i)` where `L_i = x_i^{b_i+1} q_{i,b_i} + r_{i,b_i}`.
pub fn q_polynomial(set: &CartesianSet, b: &Exponent) -> Result<Polynomial> {
    let sizes = set.sizes();
    if b.len() != sizes.len() || b.0.iter().zip(&sizes).any(|(&x, &n)| x as usize >= n) {
        return Err(Error::ExponentOutsideBox(b.0.clone()));
    }
    let factors: Vec<Vec<Gf>> =
        b.0.iter()
            .enumerate()
            .map(|(i, &bi)| uni::divide_by_power(set.vanishing_dense(i), bi as usize + 1).0)
            .collect();
    Ok(poly::product_of_univariates(set.field(), &factors))
}

/// Minimum distance of a direct product from the component distances.
///
/// # Panics
/// If either distance is zero.
pub fn min_distance_product(d1: usize, d2: usize) -> usize {
    assert!(d1 >= 1 && d2 >= 1, "distances are at least 1");
    d1 * d2
}

fn outer_product(f: &Field, factors: &[Vec<Gf>]) -> Vec<Gf> {
    let mut vals = vec![Gf::ONE];
    for g in factors {
        vals = vals.iter().flat_map(|&v| g.iter().map(move |&x| (v, x))).map(|(v, x)| f.mul(v, x)).collect();
    }
    vals
}

fn support_monomials(supports: &[Vec<u32>]) -> impl Iterator<Item = Exponent> + '_ {
    let total: usize = supports.iter().map(Vec::len).product();
    (0..total).map(move |mut idx| {
        let mut e = vec![0u32; supports.len()];
        for (i, s) in supports.iter().enumerate().rev() {
            e[i] = s[idx % s.len()];
            idx /= s.len();
        }
        Exponent(e)
    })
}

fn axpy(f: &Field, acc: &mut [Gf], c: Gf, row: &[Gf]) {
    if c.is_zero() {
        return;
    }
    for (a, &r) in acc.iter_mut().zip(row) {
        *a = f.add(*a, f.mul(c, r));
    }
}

fn weight(cw: &[Gf]) -> usize {
    cw.iter().filter(|x| !x.is_zero()).count()
}

/// Walks every assignment of the generator rows `free_from..` on top of
/// `cw`, updating one row per step, and returns the minimum weight seen.
fn min_weight_odometer(f: &Field, g: &Matrix, cw: &mut [Gf], free_from: usize) -> usize {
    let q = f.q();
    let k = g.rows();
    let mut digits = vec![0u32; k.saturating_sub(free_from)];
    let step_up: Vec<Gf> = (0..q.saturating_sub(1)).map(|v| f.sub(Gf(v + 1), Gf(v))).collect();
    let wrap = f.neg(Gf(q - 1));
    let mut best = weight(cw);
    'outer: loop {
        let mut j = digits.len();
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            let row = g.row(free_from + j);
            if digits[j] + 1 < q {
                axpy(f, cw, step_up[digits[j] as usize], row);
                digits[j] += 1;
                break;
            }
            axpy(f, cw, wrap, row);
            digits[j] = 0;
        }
        best = best.min(weight(cw));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::prime(7).unwrap()
    }

    fn set(field: &Field, comps: &[&[u64]]) -> CartesianSet {
        CartesianSet::from_values(field, &comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn exps(list: &[&[u32]]) -> Vec<Exponent> {
        list.iter().map(|e| Exponent(e.to_vec())).collect()
    }

    fn uni7(coeffs: &[i64], nvars: usize, var: usize) -> Polynomial {
        let f = gf7();
        let c: Vec<Gf> = coeffs.iter().map(|&v| f.from_int(v)).collect();
        Polynomial::univariate(&f, nvars, var, &c)
    }

    #[test]
    fn exponent_set_validation() {
        assert_eq!(ExponentSet::new(&[4], vec![]).unwrap_err(), Error::EmptyExponentSet);
        assert_eq!(ExponentSet::new(&[4], exps(&[&[4]])).unwrap_err(), Error::ExponentOutsideBox(vec![4]));
        assert_eq!(ExponentSet::new(&[4], exps(&[&[1], &[1]])).unwrap_err(), Error::DuplicateExponent(vec![1]));
        let a = ExponentSet::new(&[3, 3], exps(&[&[1, 0], &[0, 1], &[0, 0]])).unwrap();
        assert_eq!(a.exponents(), exps(&[&[0, 0], &[0, 1], &[1, 0]]).as_slice());
        assert_eq!(a.complement().len(), 6);
        assert_eq!(ExponentSet::simplex(&[4, 4], 1).unwrap().len(), 3);
        assert_eq!(ExponentSet::box_corner(&[4, 5], &[1, 2]).unwrap().len(), 6);
        assert!(ExponentSet::box_corner(&[4, 5], &[4, 2]).is_err());
    }

    #[test]
    fn build_examples() {
        let f = gf7();
        let s = set(&f, &[&[1, 3, 4, 5]]);
        let full = Code::build(s.clone(), ExponentSet::full_box(&[4])).unwrap();
        assert_eq!((full.n(), full.k()), (4, 4));
        assert_eq!(full.generator().rank(), 4);

        let rep = Code::build(s.clone(), ExponentSet::new(&[4], exps(&[&[0]])).unwrap()).unwrap();
        assert_eq!(rep.generator().row(0), &[Gf::ONE; 4]);

        let f5 = Field::prime(5).unwrap();
        let s = set(&f5, &[&[1, 2, 3, 4], &[1, 2, 3, 4]]);
        let c = Code::build(s, ExponentSet::simplex(&[4, 4], 1).unwrap()).unwrap();
        assert_eq!((c.n(), c.k()), (16, 3));
        assert_eq!(c.generator().rank(), 3);
    }

    #[test]
    fn generator_rows_are_monomial_evaluations() {
        let f = gf7();
        let s = set(&f, &[&[0, 2, 3], &[0, 1, 3, 5, 6]]);
        let a = ExponentSet::new(&[3, 5], exps(&[&[1, 2], &[2, 0], &[0, 4]])).unwrap();
        let code = Code::build(s.clone(), a).unwrap();
        for (r, e) in code.exponents().exponents().iter().enumerate() {
            let mono = Polynomial::monomial(&f, e.clone(), Gf::ONE);
            for (c, p) in s.points().iter().enumerate() {
                assert_eq!(code.generator().get(r, c), mono.evaluate(p).unwrap());
            }
        }
    }

    #[test]
    fn q_polynomial_examples() {
        let f = gf7();
        let s = set(&f, &[&[1, 3, 4, 5]]);
        assert_eq!(q_polynomial(&s, &Exponent(vec![0])).unwrap(), uni7(&[5, 3, 1, 1], 1, 0));
        assert_eq!(q_polynomial(&s, &Exponent(vec![3])).unwrap(), Polynomial::one(&f, 1));
        assert!(q_polynomial(&s, &Exponent(vec![4])).is_err());

        let s2 = set(&f, &[&[0, 2, 3], &[0, 1, 3, 5, 6]]);
        let expect = uni7(&[2, 1], 2, 0).mul(&uni7(&[0, 6, 1], 2, 1)).unwrap();
        assert_eq!(q_polynomial(&s2, &Exponent(vec![1, 2])).unwrap(), expect);
        assert_eq!(q_polynomial(&s2, &Exponent(vec![2, 4])).unwrap(), Polynomial::one(&f, 2));
        for b in s2.box_exponents() {
            let qb = q_polynomial(&s2, &b).unwrap();
            assert_eq!(qb.degree_in(0), Some(3 - b.0[0] - 1));
            assert_eq!(qb.degree_in(1), Some(5 - b.0[1] - 1));
        }
    }

    #[test]
    fn dual_examples_one_variable() {
        let f = gf7();
        let s = set(&f, &[&[1, 3, 4, 5]]);
        let code = Code::build(s.clone(), ExponentSet::new(&[4], exps(&[&[2], &[3]])).unwrap()).unwrap();
        let dual = code.dual_basis();
        assert_eq!(dual.exponents, exps(&[&[0], &[1]]));
        assert_eq!(dual.matrix.row(0), s.residue_vector(&uni7(&[5, 3, 1, 1], 1, 0)).unwrap().as_slice());
        assert_eq!(dual.matrix.row(1), s.residue_vector(&uni7(&[3, 1, 1], 1, 0)).unwrap().as_slice());
        assert!(code.generator().mul_transpose(&dual.matrix).is_zero());
        assert_eq!(&code.dual_basis_by_evaluation(), dual);

        let code = Code::build(s.clone(), ExponentSet::new(&[4], exps(&[&[1], &[2], &[3]])).unwrap()).unwrap();
        assert_eq!(code.dual_basis().exponents, exps(&[&[0]]));

        let code = Code::build(s, ExponentSet::full_box(&[4])).unwrap();
        assert_eq!(code.dual_basis().matrix.rows(), 0);
        assert_eq!(code.dual_basis_by_evaluation().matrix.rows(), 0);
    }

    #[test]
    fn fq_normal_form_matches_generic_reduction() {
        let f = gf7();
        let s = set(&f, &[&[0, 2, 3], &[0, 1, 3, 5, 6]]);
        let code = Code::build(s.clone(), ExponentSet::new(&[3, 5], exps(&[&[0, 0]])).unwrap()).unwrap();
        for b in s.box_exponents() {
            let fq = s.interpolate_f().mul(&q_polynomial(&s, &b).unwrap()).unwrap();
            let generic = poly::normal_form(&fq, s.vanishing_generators()).unwrap();
            assert_eq!(code.fq_normal_form(&b), generic);
        }
    }

    #[test]
    fn dual_containment_examples() {
        let f = gf7();
        let full = Code::build(set(&f, &[&[1, 3, 4, 5]]), ExponentSet::full_box(&[4])).unwrap();
        assert!(full.is_dual_containing().holds);
        assert!(full.is_lcd().lcd);

        let kstar = set(&f, &[&[1, 2, 3, 4, 5, 6]]);
        let c = Code::build(kstar, ExponentSet::box_corner(&[6], &[4]).unwrap()).unwrap();
        let cert = c.is_dual_containing();
        assert!(cert.holds);
        assert_eq!(cert.entries.len(), 1);

        let rep = Code::build(set(&f, &[&[1, 3, 4, 5]]), ExponentSet::new(&[4], exps(&[&[0]])).unwrap()).unwrap();
        let cert = rep.is_dual_containing();
        assert!(!cert.holds);
        assert!(cert.first_failure().is_some());
        assert!(cert.to_string().contains("offending="));
    }

    #[test]
    fn distance_examples() {
        let f = gf7();
        let s = set(&f, &[&[1, 3, 4, 5]]);
        let c = Code::build(s.clone(), ExponentSet::box_corner(&[4], &[1]).unwrap()).unwrap();
        assert_eq!(c.min_distance_exhaustive(DEFAULT_DISTANCE_BUDGET).unwrap(), 3);
        let c = Code::build(s.clone(), ExponentSet::full_box(&[4])).unwrap();
        assert_eq!(c.min_distance_exhaustive(DEFAULT_DISTANCE_BUDGET).unwrap(), 1);
        let c = Code::build(s, ExponentSet::new(&[4], exps(&[&[0]])).unwrap()).unwrap();
        assert_eq!(c.min_distance_exhaustive(DEFAULT_DISTANCE_BUDGET).unwrap(), 4);
        assert_eq!(c.min_distance_exhaustive(6).unwrap_err(), Error::BudgetExceeded { needed: 7, budget: 6 });
        assert_eq!(min_distance_product(3, 1), 3);
        assert_eq!(min_distance_product(6, 9), 54);
    }

    #[test]
    fn distance_matches_naive_enumeration() {
        let f = Field::with_order(4).unwrap();
        let s = set(&f, &[&[0, 1, 2, 3], &[1, 2, 3]]);
        let a = ExponentSet::new(&[4, 3], exps(&[&[0, 0], &[1, 0], &[0, 1], &[2, 1]])).unwrap();
        let code = Code::build(s, a).unwrap();
        let q = f.q();
        let mut naive = usize::MAX;
        for m in 1..q.pow(4) {
            let msg: Vec<Gf> = (0..4).map(|i| Gf((m / q.pow(i)) % q)).collect();
            naive = naive.min(weight(&code.encode(&msg)));
        }
        assert_eq!(code.min_distance_exhaustive(1 << 20).unwrap(), naive);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn fixed_set() -> CartesianSet {
            let f = Field::prime(5).unwrap();
            CartesianSet::from_values(&f, &[vec![0, 1, 3, 4], vec![1, 2, 4]]).unwrap()
        }

        proptest! {
            #[test]
            fn dual_is_orthogonal_complement(mask in 1u32..(1 << 12)) {
                let s = fixed_set();
                let exps: Vec<Exponent> =
                    box_exponents(&s.sizes()).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
                let code = Code::build(s, ExponentSet::new(&[4, 3], exps).unwrap()).unwrap();
                let h = &code.dual_basis().matrix;
                prop_assert!(code.generator().mul_transpose(h).is_zero());
                prop_assert_eq!(code.generator().rank() + h.rank(), code.n());
                prop_assert_eq!(code.is_dual_containing().holds, code.generator().row_space_contains(h));
                let lcd = code.generator().stack(h).rank() == code.n();
                prop_assert_eq!(code.is_lcd().lcd, lcd);
            }

            #[test]
            fn complement_partitions_box(mask in 1u32..(1 << 12)) {
                let all = box_exponents(&[4, 3]);
                let exps: Vec<Exponent> =
                    all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()).collect();
                let a = ExponentSet::new(&[4, 3], exps).unwrap();
                let comp = a.complement();
                prop_assert_eq!(a.len() + comp.len(), 12);
                prop_assert!(comp.iter().all(|e| !a.contains(e)));
                prop_assert!(comp.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
