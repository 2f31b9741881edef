//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls into the dual, LCD or containment code paths
//! of the library; only field arithmetic and code construction are reused.
#![allow(dead_code)]

use moncart::code::Code;
use moncart::{CartesianSet, Exponent, ExponentSet, Field, Gf};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Rank by plain Gaussian elimination on a copy of the rows.
pub fn rank(f: &Field, rows: &[Vec<Gf>]) -> usize {
    echelon(f, rows.to_vec()).len()
}

/// Nonzero rows of an echelon form of `rows`.
fn echelon(f: &Field, mut rows: Vec<Vec<Gf>>) -> Vec<Vec<Gf>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).unwrap();
        let pivot: Vec<Gf> = rows[r].iter().map(|&x| f.mul(x, inv)).collect();
        for row in rows.iter_mut().skip(r + 1) {
            let factor = row[c];
            if !factor.is_zero() {
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Basis of `{x : rows . x = 0}`.
pub fn nullspace(f: &Field, rows: &[Vec<Gf>], cols: usize) -> Vec<Vec<Gf>> {
    // Reduced echelon form, then one basis vector per free column.
    let mut m = echelon(f, rows.to_vec());
    let mut pivots = Vec::new();
    for i in 0..m.len() {
        let c = m[i].iter().position(|x| !x.is_zero()).unwrap();
        pivots.push(c);
        for k in 0..i {
            let factor = m[k][c];
            if !factor.is_zero() {
                let pivot = m[i].clone();
                for (x, &y) in m[k].iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Gf::ZERO; cols];
            v[free] = Gf::ONE;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

pub fn dot(f: &Field, a: &[Gf], b: &[Gf]) -> Gf {
    a.iter().zip(b).fold(Gf::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Every row of `small` lies in the row space of `big`.
pub fn row_space_contains(f: &Field, big: &[Vec<Gf>], small: &[Vec<Gf>]) -> bool {
    let mut all = big.to_vec();
    all.extend_from_slice(small);
    rank(f, big) == rank(f, &all)
}

/// `C ∩ C^perp = 0` iff `G G^T` is nonsingular, for a full-rank generator `G`.
pub fn gram_nonsingular(f: &Field, g: &[Vec<Gf>]) -> bool {
    let gram: Vec<Vec<Gf>> = g.iter().map(|a| g.iter().map(|b| dot(f, a, b)).collect()).collect();
    rank(f, &gram) == g.len()
}

/// Dual containment decided by linear algebra: the nullspace of `G` lies in
/// the row space of `G`.
pub fn dual_containing_oracle(code: &Code) -> bool {
    let f = code.field();
    let g = code.generator().row_vecs();
    let h = nullspace(f, &g, code.n());
    row_space_contains(f, &g, &h)
}

/// Minimum weight over all `q^k - 1` nonzero messages, no shortcuts.
pub fn brute_min_distance(code: &Code) -> usize {
    let q = code.field().q() as u64;
    let k = code.k() as u32;
    (1..q.pow(k))
        .map(|mut m| {
            let msg: Vec<Gf> = (0..k)
                .map(|_| {
                    let d = (m % q) as u32;
                    m /= q;
                    code.field().elem(d as u64).unwrap()
                })
                .collect();
            code.encode(&msg).iter().filter(|x| !x.is_zero()).count()
        })
        .min()
        .unwrap_or(code.n())
}

/// `1 / prod_{s' != s} (s - s')` directly from the definition.
pub fn brute_weight(f: &Field, comp: &[Gf], s: Gf) -> Gf {
    let prod = f.product(comp.iter().filter(|&&x| x != s).map(|&x| f.sub(s, x)));
    f.inv(prod).unwrap()
}

pub fn set_from(f: &Field, comps: &[&[u64]]) -> CartesianSet {
    CartesianSet::from_values(f, &comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn uni(f: &Field, coeffs: &[u64]) -> Vec<Gf> {
    coeffs.iter().map(|&c| f.elem(c).unwrap()).collect()
}

/// A random Cartesian set over GF(q) with `m` components and at most
/// `max_points` points.
pub fn random_set(rng: &mut ChaCha8Rng, f: &Field, m: usize, max_points: usize) -> CartesianSet {
    let elems = f.elements();
    let mut comps = Vec::with_capacity(m);
    let mut budget = max_points;
    for i in 0..m {
        let remaining = m - i - 1;
        let cap = (budget / 2usize.pow(remaining as u32)).clamp(1, elems.len());
        let n = rng.gen_range(1..=cap);
        budget /= n;
        let mut pts = elems.clone();
        pts.shuffle(rng);
        pts.truncate(n);
        comps.push(pts);
    }
    CartesianSet::new(f, comps).unwrap()
}

/// A random nonempty subset of the box.
pub fn random_exponents(rng: &mut ChaCha8Rng, sizes: &[usize]) -> ExponentSet {
    let all = moncart::code::box_exponents(sizes);
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut chosen: Vec<Exponent> = all.iter().filter(|_| rng.gen_bool(p)).cloned().collect();
    if chosen.is_empty() {
        chosen.push(all.choose(rng).unwrap().clone());
    }
    ExponentSet::new(sizes, chosen).unwrap()
}

/// A random code as in the dual suite: q in {4,5,7,8,9}, m <= 3, n <= 60.
pub fn random_code(rng: &mut ChaCha8Rng) -> Code {
    let q = *[4u64, 5, 7, 8, 9].choose(rng).unwrap();
    let f = Field::with_order(q).unwrap();
    let m = rng.gen_range(1..=3);
    let s = random_set(rng, &f, m, 60);
    let a = random_exponents(rng, &s.sizes());
    Code::build(s, a).unwrap()
}
