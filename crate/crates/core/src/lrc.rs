//! Direct products of one-variable box codes as locally recoverable codes.
//!
//! A component `C(S_j, {0..k_j-1})` has locality `k_j`: any `k_j` other
//! coordinates determine an erased one by Lagrange interpolation. In the
//! direct product, the `j`-th recovery set of a position varies block `j`
//! over the component recovery set and keeps the other blocks fixed, so the
//! `t` sets are pairwise disjoint.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cartesian::CartesianSet;
use crate::code::{Code, ExponentSet};
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::poly::uni;

/// Codeword count up to which checks enumerate the whole code.
pub const EXHAUSTIVE_LIMIT: u128 = 100_000;
/// Random codewords drawn when the code is larger than [`EXHAUSTIVE_LIMIT`].
pub const DEFAULT_TRIALS: usize = 500;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Name of the recovery rule, printed in reports.
pub const RECOVERY_RULE: &str = "lagrange-interpolation";

/// A one-variable code `C(S, {0..k-1})` with locality `k`.
#[derive(Clone, Debug)]
pub struct ComponentLrc {
    code: Code,
    locality: usize,
}

impl ComponentLrc {
    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    pub fn locality(&self) -> usize {
        self.locality
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn points(&self) -> &[Gf] {
        &self.code.set().components()[0]
    }

    /// The first `k` positions other than `i`, in point order.
    pub fn recovery_set(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&p| p != i).take(self.locality).collect()
    }

    /// Value at position `target` of the polynomial through `(positions, values)`.
    /// Points beyond the first `k` must agree with that polynomial.
    fn recover(&self, target: usize, positions: &[usize], values: &[Gf], set: usize) -> Result<Gf> {
        let f = self.field();
        let pts = self.points();
        let k = self.locality;
        let xs: Vec<Gf> = positions[..k].iter().map(|&p| pts[p]).collect();
        for (&p, &v) in positions[k..].iter().zip(&values[k..]) {
            if uni::lagrange_at(f, &xs, &values[..k], pts[p]) != v {
                return Err(Error::InconsistentWord { set });
            }
        }
        Ok(uni::lagrange_at(f, &xs, &values[..k], pts[target]))
    }
}

/// Builds the component for `S` with `m = 1` and dimension `k` and checks
/// the recovery rule on every coordinate.
pub fn make_rs_component(set: CartesianSet, k: usize) -> Result<ComponentLrc> {
    if set.nvars() != 1 {
        return Err(Error::ArityMismatch { expected: 1, got: set.nvars() });
    }
    let n = set.len();
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!("locality k = {k} must satisfy 1 <= k < n = {n}")));
    }
    let a = ExponentSet::box_corner(&[n], &[k as u32 - 1])?;
    let comp = ComponentLrc { code: Code::build(set, a)?, locality: k };
    for word in sample_codewords(&comp.code, DEFAULT_TRIALS, DEFAULT_SEED) {
        for i in 0..n {
            let rs = comp.recovery_set(i);
            let vals: Vec<Gf> = rs.iter().map(|&p| word[p]).collect();
            if comp.recover(i, &rs, &vals, 0)? != word[i] {
                return Err(Error::Precondition(format!("recovery rule fails at position {i}")));
            }
        }
    }
    Ok(comp)
}

/// Every codeword when there are at most [`EXHAUSTIVE_LIMIT`], otherwise
/// `trials` uniformly random ones from a seeded generator.
pub fn sample_codewords(code: &Code, trials: usize, seed: u64) -> Vec<Vec<Gf>> {
    let q = code.field().q();
    let k = code.k();
    let total = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total <= EXHAUSTIVE_LIMIT {
        (0..total as u64)
            .map(|mut m| {
                let msg: Vec<Gf> = (0..k)
                    .map(|_| {
                        let d = Gf((m % q as u64) as u32);
                        m /= q as u64;
                        d
                    })
                    .collect();
                code.encode(&msg)
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..trials)
            .map(|_| {
                let msg: Vec<Gf> = (0..k).map(|_| Gf(rng.gen_range(0..q))).collect();
                code.encode(&msg)
            })
            .collect()
    }
}

/// `t` recovery sets for one position of the product code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveryPlan {
    pub position: usize,
    pub sets: Vec<Vec<usize>>,
    pub localities: Vec<usize>,
}

impl RecoveryPlan {
    pub fn is_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.sets.iter().flatten().all(|&p| p != self.position && seen.insert(p))
    }
}

/// The direct product `C(S_1 x ... x S_t, A_1 x ... x A_t)`.
#[derive(Clone, Debug)]
pub struct ProductLrc {
    components: Vec<ComponentLrc>,
    code: Code,
}

impl ProductLrc {
    pub fn new(components: Vec<ComponentLrc>) -> Result<ProductLrc> {
        let first = components.first().ok_or(Error::NoComponents)?;
        let field = first.field().clone();
        if components.iter().any(|c| c.field() != &field) {
            return Err(Error::FieldMismatch);
        }
        let set = CartesianSet::new(&field, components.iter().map(|c| c.points().to_vec()).collect())?;
        let mut a = components[0].code.exponents().clone();
        for c in &components[1..] {
            a = a.product(c.code.exponents());
        }
        let code = Code::build(set, a)?;
        Ok(ProductLrc { components, code })
    }

    pub fn components(&self) -> &[ComponentLrc] {
        &self.components
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn localities(&self) -> Vec<usize> {
        self.components.iter().map(ComponentLrc::locality).collect()
    }

    /// The `j`-th set varies block `j` over the component recovery set of
    /// the position's `j`-th coordinate.
    pub fn recovery_plan(&self, position: usize) -> Result<RecoveryPlan> {
        let set = self.code.set();
        if position >= set.len() {
            return Err(Error::PositionOutOfRange(position));
        }
        let coords = set.coordinates_of(position);
        let sets = self
            .components
            .iter()
            .enumerate()
            .map(|(j, comp)| {
                comp.recovery_set(coords[j])
                    .into_iter()
                    .map(|r| {
                        let mut c = coords.clone();
                        c[j] = r;
                        set.index_from_coordinates(&c)
                    })
                    .collect()
            })
            .collect();
        Ok(RecoveryPlan { position, sets, localities: self.localities() })
    }

    /// Recovers the erased symbol at `plan.position` from set `which`.
    pub fn recover_erasure(&self, word: &[Option<Gf>], plan: &RecoveryPlan, which: usize) -> Result<Gf> {
        let set = self.code.set();
        if word.len() != set.len() {
            return Err(Error::InvalidPlan(format!("word has length {}, code has {}", word.len(), set.len())));
        }
        if plan.position >= set.len() {
            return Err(Error::PositionOutOfRange(plan.position));
        }
        let rset = plan.sets.get(which).ok_or_else(|| Error::InvalidPlan(format!("no recovery set {which}")))?;
        let target = set.coordinates_of(plan.position);
        // Find the block this set varies and check it is a line through the target.
        let mut block = None;
        let mut positions = Vec::with_capacity(rset.len());
        for &p in rset {
            if p >= set.len() || p == plan.position {
                return Err(Error::InvalidPlan(format!("set {which} contains position {p}")));
            }
            let c = set.coordinates_of(p);
            let diff: Vec<usize> = (0..c.len()).filter(|&i| c[i] != target[i]).collect();
            match (diff.as_slice(), block) {
                ([j], None) => block = Some(*j),
                ([j], Some(b)) if *j == b => {}
                _ => return Err(Error::InvalidPlan(format!("set {which} is not a line through the position"))),
            }
            positions.push(c[block.expect("set above")]);
        }
        let j = block.ok_or_else(|| Error::InvalidPlan(format!("set {which} is empty")))?;
        let comp = &self.components[j];
        if rset.len() < comp.locality {
            return Err(Error::InvalidPlan(format!(
                "set {which} has {} positions, locality is {}",
                rset.len(),
                comp.locality
            )));
        }
        let values = rset
            .iter()
            .map(|&p| word[p].ok_or(Error::RecoverySetErased { set: which }))
            .collect::<Result<Vec<Gf>>>()?;
        comp.recover(target[j], &positions, &values, which)
    }
}

/// [`ProductLrc::recovery_plan`] for the product of `components`.
pub fn product_recovery_plan(components: &[ComponentLrc], position: usize) -> Result<RecoveryPlan> {
    ProductLrc::new(components.to_vec())?.recovery_plan(position)
}

/// Outcome for one position of the product code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositionReport {
    pub position: usize,
    pub point: Vec<u32>,
    pub set_sizes: Vec<usize>,
    pub disjoint: bool,
    pub recovered: usize,
    pub attempted: usize,
}

impl PositionReport {
    pub fn failures(&self) -> usize {
        self.attempted - self.recovered + usize::from(!self.disjoint)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AvailabilityReport {
    pub positions: usize,
    pub availability: usize,
    pub localities: Vec<usize>,
    pub codewords: usize,
    pub exhaustive: bool,
    pub recovery_rule: &'static str,
    pub failures: usize,
    pub entries: Vec<PositionReport>,
}

impl fmt::Display for AvailabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} positions, {}-availability, {} failures", self.positions, self.availability, self.failures)?;
        writeln!(
            f,
            "localities={:?} codewords={} ({}) rule={}",
            self.localities,
            self.codewords,
            if self.exhaustive { "exhaustive" } else { "sampled" },
            self.recovery_rule
        )?;
        for e in &self.entries {
            let point: Vec<String> = e.point.iter().map(u32::to_string).collect();
            writeln!(
                f,
                "position={} point=({}) sizes={:?} disjoint={} recovered={}/{}",
                e.position,
                point.join(","),
                e.set_sizes,
                if e.disjoint { "yes" } else { "no" },
                e.recovered,
                e.attempted
            )?;
        }
        Ok(())
    }
}

/// Builds the plan for every position of the product and checks all `t`
/// recoveries on every sampled codeword.
pub fn availability_report(components: &[ComponentLrc], trials: usize, seed: u64) -> Result<AvailabilityReport> {
    let product = ProductLrc::new(components.to_vec())?;
    let code = product.code();
    let total = (code.field().q() as u128).checked_pow(code.k() as u32).unwrap_or(u128::MAX);
    let words = sample_codewords(code, trials, seed);
    let entries = (0..code.n())
        .into_par_iter()
        .map(|pos| {
            let plan = product.recovery_plan(pos)?;
            let mut recovered = 0;
            let mut attempted = 0;
            for w in &words {
                let mut erased: Vec<Option<Gf>> = w.iter().copied().map(Some).collect();
                erased[pos] = None;
                for which in 0..plan.sets.len() {
                    attempted += 1;
                    if product.recover_erasure(&erased, &plan, which).ok() == Some(w[pos]) {
                        recovered += 1;
                    }
                }
            }
            Ok(PositionReport {
                position: pos,
                point: code.set().points()[pos].iter().map(|x| x.value()).collect(),
                set_sizes: plan.sets.iter().map(Vec::len).collect(),
                disjoint: plan.is_disjoint(),
                recovered,
                attempted,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AvailabilityReport {
        positions: code.n(),
        availability: components.len(),
        localities: product.localities(),
        codewords: words.len(),
        exhaustive: total <= EXHAUSTIVE_LIMIT,
        recovery_rule: RECOVERY_RULE,
        failures: entries.iter().map(PositionReport::failures).sum(),
        entries,
    })
}
