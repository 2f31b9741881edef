//! Finite fields GF(p^e).
//!
//! Elements are stored by their canonical encoding `sum c_i p^i`, where
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is the polynomial-basis
//! representative modulo the field's defining polynomial. The canonical
//! encoding is also the total order used everywhere elements are listed.
//!
//! Multiplication goes through discrete log tables built once at
//! construction; addition is digit-wise (XOR in characteristic 2).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted unless a different cap is requested.
pub const DEFAULT_ORDER_CAP: u64 = 1 << 20;

const ADD_TABLE_MAX: u32 = 1024;

/// Defining data of a finite field: characteristic, degree and modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic modulus, low degree first, length `e + 1`.
    pub modulus: Vec<u32>,
}

/// A field element, held as its canonical integer encoding in `[0, q)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Gf(pub(crate) u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    /// Canonical integer encoding.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    // exp has length 2(q-1) so that log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    powers_of_p: Vec<u32>,
}

/// Arithmetic context for GF(p^e). Cheap to clone.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) modulus {:?}", self.inner.q, self.inner.spec.modulus)
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.inner.spec.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let spec = FieldSpec::deserialize(deserializer)?;
        Field::from_spec(&spec).map_err(serde::de::Error::custom)
    }
}

impl Field {
    /// Builds GF(p^e). Without an explicit modulus the smallest monic
    /// irreducible polynomial of degree `e` (ordered by the encoding of its
    /// non-leading coefficients) is used.
    pub fn new(p: u64, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
        Field::with_cap(p, e, modulus, DEFAULT_ORDER_CAP)
    }

    /// Prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// The field with `q` elements, `q` a prime power, default modulus.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Field::new(p, e, None)
    }

    pub fn with_cap(p: u64, e: u32, modulus: Option<&[u32]>, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > cap as u128 || q > u32::MAX as u128 {
            return Err(Error::FieldTooLarge { p, e, cap });
        }
        let p = p as u32;
        let modulus = match modulus {
            Some(m) => {
                check_modulus(p, e, m)?;
                m.to_vec()
            }
            None => smallest_irreducible(p, e),
        };
        Ok(Field { inner: Arc::new(Inner::build(FieldSpec { p, e, modulus }, q as u32)) })
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        Field::new(spec.p as u64, spec.e, Some(&spec.modulus))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub fn p(&self) -> u32 {
        self.inner.spec.p
    }

    pub fn e(&self) -> u32 {
        self.inner.spec.e
    }

    /// Number of elements.
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn zero(&self) -> Gf {
        Gf::ZERO
    }

    pub fn one(&self) -> Gf {
        Gf::ONE
    }

    /// Element with canonical encoding `v`.
    pub fn elem(&self, v: u64) -> Result<Gf> {
        if v < self.inner.q as u64 {
            Ok(Gf(v as u32))
        } else {
            Err(Error::ElementOutOfRange { value: v, q: self.inner.q as u64 })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Gf {
        Gf(v.rem_euclid(self.p() as i64) as u32)
    }

    /// All elements, sorted by canonical encoding (zero first).
    pub fn elements(&self) -> Vec<Gf> {
        (0..self.inner.q).map(Gf).collect()
    }

    /// Polynomial-basis coordinates of `a`, low degree first.
    pub fn digits(&self, a: Gf) -> Vec<u32> {
        to_digits(a.0, self.p(), self.e())
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        let inner = &*self.inner;
        let p = inner.spec.p;
        if inner.spec.e == 1 {
            let s = a.0 + b.0;
            Gf(if s >= p { s - p } else { s })
        } else if p == 2 {
            Gf(a.0 ^ b.0)
        } else if let Some(table) = &inner.add {
            Gf(table[(a.0 * inner.q + b.0) as usize])
        } else {
            let mut x = a.0;
            let mut y = b.0;
            let mut out = 0;
            for &w in &inner.powers_of_p {
                let s = (x % p + y % p) % p;
                out += s * w;
                x /= p;
                y /= p;
            }
            Gf(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        Gf(self.inner.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let inner = &*self.inner;
        Gf(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.0 == 0 {
            return Err(Error::InverseOfZero);
        }
        let inner = &*self.inner;
        let order = inner.q - 1;
        Ok(Gf(inner.exp[((order - inner.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`, with `0^0 = 1`.
    pub fn pow(&self, a: Gf, k: u64) -> Gf {
        if k == 0 {
            return Gf::ONE;
        }
        if a.0 == 0 {
            return Gf::ZERO;
        }
        let inner = &*self.inner;
        let order = (inner.q - 1) as u64;
        let l = (inner.log[a.0 as usize] as u64 * (k % order)) % order;
        Gf(inner.exp[l as usize])
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = Gf>>(&self, items: I) -> Gf {
        items.into_iter().fold(Gf::ZERO, |acc, x| self.add(acc, x))
    }

    /// Product of a sequence of elements.
    pub fn product<I: IntoIterator<Item = Gf>>(&self, items: I) -> Gf {
        items.into_iter().fold(Gf::ONE, |acc, x| self.mul(acc, x))
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> Gf {
        Gf(self.inner.exp[1 % self.inner.exp.len().max(1)])
    }
}

impl Inner {
    fn build(spec: FieldSpec, q: u32) -> Inner {
        let p = spec.p;
        let e = spec.e;
        let powers_of_p: Vec<u32> = (0..e).map(|i| p.pow(i)).collect();
        let order = q - 1;

        let mul = |a: u32, b: u32| slow_mul(a, b, p, e, &spec.modulus);
        let g = find_primitive(q, &mul);
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = mul(x, g);
        }

        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let d = to_digits(a, p, e);
                from_digits(d.iter().map(|&c| (p - c) % p), p)
            })
            .collect();

        let add = if e > 1 && p != 2 && q <= ADD_TABLE_MAX {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = to_digits(a, p, e);
                for b in 0..q {
                    let db = to_digits(b, p, e);
                    table[(a * q + b) as usize] = from_digits(da.iter().zip(&db).map(|(x, y)| (x + y) % p), p);
                }
            }
            Some(table)
        } else {
            None
        };

        Inner { spec, q, exp, log, neg, add, powers_of_p }
    }
}

fn to_digits(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

fn from_digits<I: IntoIterator<Item = u32>>(digits: I, p: u32) -> u32 {
    let mut out = 0;
    let mut w = 1;
    for d in digits {
        out += d * w;
        w *= p;
    }
    out
}

/// Product in GF(p)[x]/(modulus) computed on coordinate vectors.
fn slow_mul(a: u32, b: u32, p: u32, e: u32, modulus: &[u32]) -> u32 {
    let da = to_digits(a, p, e);
    let db = to_digits(b, p, e);
    let e = e as usize;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    // x^e = -(modulus tail)
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (k, &m) in modulus[..e].iter().enumerate() {
            let idx = deg - e + k;
            prod[idx] = (prod[idx] + (p64 - c) * m as u64) % p64;
        }
    }
    from_digits(prod[..e].iter().map(|&c| c as u32), p)
}

fn find_primitive(q: u32, mul: &impl Fn(u32, u32) -> u32) -> u32 {
    let order = q - 1;
    let factors = prime_factors(order as u64);
    let pow = |mut base: u32, mut k: u64| {
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            k >>= 1;
        }
        acc
    };
    (1..q)
        .find(|&g| factors.iter().all(|&r| pow(g, order as u64 / r) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^e` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn check_modulus(p: u32, e: u32, m: &[u32]) -> Result<()> {
    if m.len() != e as usize + 1 {
        return Err(Error::InvalidModulus(format!("expected {} coefficients for degree {e}, got {}", e + 1, m.len())));
    }
    if let Some(c) = m.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!("coefficient {c} is not reduced mod {p}")));
    }
    if m[e as usize] != 1 {
        return Err(Error::InvalidModulus("modulus is not monic".into()));
    }
    if !is_irreducible(p, m) {
        return Err(Error::InvalidModulus(format!("{m:?} is reducible over GF({p})")));
    }
    Ok(())
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = p.pow(e);
    (0..count)
        .map(|enc| {
            let mut m = to_digits(enc, p, e);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(p, m))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let deg = m.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for enc in 0..p.pow(d as u32) {
            let mut divisor = to_digits(enc, p, d as u32);
            divisor.push(1);
            if rem_mod_p(m, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` by a monic `b` over GF(p); coefficient lists low first.
fn rem_mod_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let p = p as u64;
    for i in (db..r.len()).rev() {
        let c = r[i] % p;
        if c == 0 {
            continue;
        }
        for (k, &bk) in b.iter().enumerate() {
            let idx = i - db + k;
            r[idx] = (r[idx] + (p - c) * bk as u64) % p;
        }
    }
    r.truncate(db);
    r.into_iter().map(|c| c as u32).collect()
}
