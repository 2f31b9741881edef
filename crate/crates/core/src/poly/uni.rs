//! Dense univariate polynomials as coefficient slices, low degree first.
//! Results are trimmed: no trailing zeros, the zero polynomial is empty.

use crate::gf::{Field, Gf};

pub fn trim(mut a: Vec<Gf>) -> Vec<Gf> {
    while a.last() == Some(&Gf::ZERO) {
        a.pop();
    }
    a
}

/// `prod (x - r)` over the given roots.
pub fn from_roots(field: &Field, roots: &[Gf]) -> Vec<Gf> {
    let mut out = vec![Gf::ONE];
    for &r in roots {
        let neg_r = field.neg(r);
        let mut next = vec![Gf::ZERO; out.len() + 1];
        for (i, &c) in out.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg_r));
        }
        out = next;
    }
    out
}

pub fn mul(field: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Gf::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    trim(out)
}

pub fn add(field: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| field.add(*a.get(i).unwrap_or(&Gf::ZERO), *b.get(i).unwrap_or(&Gf::ZERO))).collect())
}

pub fn scale(field: &Field, a: &[Gf], c: Gf) -> Vec<Gf> {
    trim(a.iter().map(|&x| field.mul(x, c)).collect())
}

/// Horner evaluation.
pub fn eval(field: &Field, a: &[Gf], x: Gf) -> Gf {
    a.iter().rev().fold(Gf::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

/// `l = x^j * quotient + remainder`, `deg remainder < j`. `l` is not
/// required to be monic here; the split is purely positional.
pub fn divide_by_power(l: &[Gf], j: usize) -> (Vec<Gf>, Vec<Gf>) {
    let j = j.min(l.len());
    (trim(l[j..].to_vec()), trim(l[..j].to_vec()))
}

/// Remainder of `a` modulo the monic `m`.
pub fn rem_monic(field: &Field, a: &[Gf], m: &[Gf]) -> Vec<Gf> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    for i in (dm..r.len()).rev() {
        let c = r[i];
        if c.is_zero() {
            continue;
        }
        let neg_c = field.neg(c);
        for (k, &mk) in m.iter().enumerate() {
            let idx = i - dm + k;
            r[idx] = field.add(r[idx], field.mul(neg_c, mk));
        }
    }
    r.truncate(dm);
    trim(r)
}

/// Lagrange interpolation through `(xs[i], ys[i])`; the `xs` must be distinct.
pub fn interpolate(field: &Field, xs: &[Gf], ys: &[Gf]) -> Vec<Gf> {
    let mut out = Vec::new();
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let others: Vec<Gf> = xs.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
        let denom = field.product(others.iter().map(|&x| field.sub(xi, x)));
        let c = field.div(yi, denom).expect("interpolation nodes are distinct");
        out = add(field, &out, &scale(field, &from_roots(field, &others), c));
    }
    out
}

/// Value at `target` of the unique polynomial of degree `< xs.len()` through
/// the given points, without forming its coefficients.
pub fn lagrange_at(field: &Field, xs: &[Gf], ys: &[Gf], target: Gf) -> Gf {
    let mut acc = Gf::ZERO;
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = Gf::ONE;
        let mut den = Gf::ONE;
        for (k, &xk) in xs.iter().enumerate() {
            if k != i {
                num = field.mul(num, field.sub(target, xk));
                den = field.mul(den, field.sub(xi, xk));
            }
        }
        let term = field.div(field.mul(yi, num), den).expect("interpolation nodes are distinct");
        acc = field.add(acc, term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_round_trip() {
        let f = Field::with_order(9).unwrap();
        let p: Vec<Gf> = [3u64, 0, 7, 1].iter().map(|&v| f.elem(v).unwrap()).collect();
        let xs: Vec<Gf> = f.elements()[2..6].to_vec();
        let ys: Vec<Gf> = xs.iter().map(|&x| eval(&f, &p, x)).collect();
        assert_eq!(interpolate(&f, &xs, &ys), p);
        for t in f.elements() {
            assert_eq!(lagrange_at(&f, &xs, &ys, t), eval(&f, &p, t));
        }
    }

    #[test]
    fn remainder_agrees_on_roots() {
        let f = Field::prime(7).unwrap();
        let roots: Vec<Gf> = [1, 3, 4, 5].iter().map(|&v| f.from_int(v)).collect();
        let m = from_roots(&f, &roots);
        let a: Vec<Gf> = (0..9).map(|v| f.from_int(v * 3 + 1)).collect();
        let r = rem_monic(&f, &a, &m);
        assert!(r.len() < m.len());
        for &s in &roots {
            assert_eq!(eval(&f, &r, s), eval(&f, &a, s));
        }
    }
}
