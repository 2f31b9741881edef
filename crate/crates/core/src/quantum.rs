//! Stabilizer code parameters from dual-containing codes `C(S, A_t)`.
//!
//! For `q > n_i >= q/2` and `0 <= t_i <= n_i - ceil(q/2)` the box
//! `A_t = {0..n_1-1-t_1} x ... x {0..n_m-1-t_m}` is the candidate exponent
//! set. A classical `[n, k, d]_q` code with `C^perp ⊂ C` yields an
//! `[[n, 2k - n, d]]_q` stabilizer code, so the parameters below are only
//! reported once containment has been certified for the actual code.

use std::fmt;

use serde::Serialize;

use crate::cartesian::CartesianSet;
use crate::code::{min_distance_product, Code, DualContainment, ExponentSet};
use crate::error::{Error, Result};
use crate::gf::Field;

/// Parameters `[[n, kq, d]]_q` of a stabilizer code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub q: u64,
    pub n: usize,
    #[serde(rename = "k")]
    pub kq: i64,
    pub d: usize,
    pub mds: bool,
    /// `t_1 * ... * t_m`; carried as metadata and not verified.
    pub pure_to: u64,
    pub t: Vec<usize>,
    #[serde(rename = "certificate-ref")]
    pub certificate_ref: String,
    #[serde(skip)]
    pub certificate: Option<DualContainment>,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]_{}", self.n, self.kq, self.d, self.q)?;
        if self.mds {
            f.write_str(" MDS")?;
        }
        Ok(())
    }
}

/// Quantum Singleton equality `kq = n - 2d + 2`.
pub fn is_quantum_mds(params: &QuantumParams) -> bool {
    params.kq == params.n as i64 - 2 * params.d as i64 + 2
}

fn half_up(q: u64) -> u64 {
    q.div_ceil(2)
}

/// Checks `q > n_i >= q/2` for every component size.
pub fn check_sizes(q: u64, sizes: &[usize]) -> Result<()> {
    for (index, &size) in sizes.iter().enumerate() {
        if size as u64 >= q || (2 * size as u64) < q {
            return Err(Error::SizeOutOfRange { index, size, q });
        }
    }
    Ok(())
}

/// `A_t` for component sizes `sizes` over GF(q).
pub fn box_a_t(q: u64, sizes: &[usize], t: &[usize]) -> Result<ExponentSet> {
    if t.len() != sizes.len() {
        return Err(Error::ArityMismatch { expected: sizes.len(), got: t.len() });
    }
    for (index, (&n, &ti)) in sizes.iter().zip(t).enumerate() {
        let max = n as i64 - half_up(q) as i64;
        if ti as i64 > max {
            return Err(Error::OffsetOutOfRange { index, value: ti, max });
        }
    }
    let corner: Vec<u32> = sizes.iter().zip(t).map(|(&n, &ti)| (n - 1 - ti) as u32).collect();
    ExponentSet::box_corner(sizes, &corner)
}

/// Builds `C(S, A_t)` and runs the monomial dual-containment criterion.
/// A certificate with `holds == false` is a result, not an error; only
/// precondition violations are errors.
pub fn verify_dual_containment(set: &CartesianSet, t: &[usize]) -> Result<(Code, DualContainment)> {
    let q = set.field().q() as u64;
    let sizes = set.sizes();
    check_sizes(q, &sizes)?;
    let a = box_a_t(q, &sizes, t)?;
    let code = Code::build(set.clone(), a)?;
    let cert = code.is_dual_containing();
    Ok((code, cert))
}

/// `[[prod n_i, 2 prod(n_i - t_i) - prod n_i, prod(t_i + 1)]]_q` evaluated
/// without any containment check.
pub fn css_formula(q: u64, sizes: &[usize], t: &[usize]) -> QuantumParams {
    let n: usize = sizes.iter().product();
    let k: usize = sizes.iter().zip(t).map(|(&ni, &ti)| ni - ti).product();
    let d = t.iter().map(|&ti| ti + 1).fold(1, min_distance_product);
    let mut params = QuantumParams {
        q,
        n,
        kq: 2 * k as i64 - n as i64,
        d,
        mds: false,
        pure_to: t.iter().map(|&ti| ti as u64).product(),
        t: t.to_vec(),
        certificate_ref: "none".into(),
        certificate: None,
    };
    params.mds = is_quantum_mds(&params);
    params
}

/// Stabilizer parameters for `C(S, A_t)`, returned only when the code is
/// certified dual-containing.
pub fn derive_stabilizer_params(set: &CartesianSet, t: &[usize]) -> Result<QuantumParams> {
    let (code, cert) = verify_dual_containment(set, t)?;
    if let Some(bad) = cert.first_failure() {
        let failures = cert.entries.iter().filter(|e| e.offending.is_some()).count();
        return Err(Error::ContainmentFailed(format!(
            "{failures} of {} complement exponents fail; first b = {} has offending monomial {}",
            cert.entries.len(),
            bad.b,
            bad.offending.as_ref().expect("failure has a monomial")
        )));
    }
    let mut params = css_formula(set.field().q() as u64, &set.sizes(), t);
    debug_assert_eq!(params.kq, 2 * code.k() as i64 - code.n() as i64);
    params.certificate_ref = format!("monomial-criterion:{}/{}", cert.entries.len(), cert.entries.len());
    params.certificate = Some(cert);
    Ok(params)
}

/// The first `n_i` field elements in canonical order, per component.
pub fn standard_set(field: &Field, sizes: &[usize]) -> Result<CartesianSet> {
    let elems = field.elements();
    let comps = sizes
        .iter()
        .enumerate()
        .map(|(index, &n)| {
            if n == 0 || n > elems.len() {
                Err(Error::SizeOutOfRange { index, size: n, q: field.q() as u64 })
            } else {
                Ok(elems[..n].to_vec())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CartesianSet::new(field, comps)
}

/// The one-variable family `[[n, n - 2t, t + 1]]_q`.
pub fn mds_family(q: u64, n: usize, t: usize) -> Result<QuantumParams> {
    let field = Field::with_order(q)?;
    check_sizes(q, &[n])?;
    let set = standard_set(&field, &[n])?;
    derive_stabilizer_params(&set, &[t])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, kq: i64, d: usize) -> QuantumParams {
        let mut p = css_formula(2, &[n], &[0]);
        p.kq = kq;
        p.d = d;
        p
    }

    #[test]
    fn singleton_examples() {
        assert!(is_quantum_mds(&params(35, 25, 6)));
        assert!(is_quantum_mds(&params(40, 24, 9)));
        assert!(!is_quantum_mds(&params(1400, 320, 54)));
    }

    #[test]
    fn a_t_ranges() {
        assert_eq!(box_a_t(7, &[6], &[0]).unwrap(), ExponentSet::full_box(&[6]));
        assert_eq!(box_a_t(7, &[4], &[1]).unwrap_err(), Error::OffsetOutOfRange { index: 0, value: 1, max: 0 });
        let a = box_a_t(49, &[35, 40], &[5, 8]).unwrap();
        assert_eq!(a, ExponentSet::box_corner(&[35, 40], &[29, 31]).unwrap());
        assert_eq!(a.len(), 960);
    }

    #[test]
    fn size_preconditions() {
        assert!(check_sizes(7, &[4, 6]).is_ok());
        assert_eq!(check_sizes(7, &[3]).unwrap_err(), Error::SizeOutOfRange { index: 0, size: 3, q: 7 });
        assert!(check_sizes(7, &[7]).is_err());
        assert!(check_sizes(8, &[4]).is_ok());
    }

    #[test]
    fn one_variable_family() {
        let p = mds_family(7, 5, 1).unwrap();
        assert_eq!((p.n, p.kq, p.d, p.mds), (5, 3, 2, true));
        assert_eq!(p.to_string(), "[[5,3,2]]_7 MDS");
        let p = mds_family(7, 4, 0).unwrap();
        assert_eq!((p.n, p.kq, p.d, p.mds), (4, 4, 1, true));
        assert!(mds_family(7, 3, 0).is_err());
        let p = mds_family(49, 35, 5).unwrap();
        assert_eq!(p.to_string(), "[[35,25,6]]_49 MDS");
        assert_eq!(p.pure_to, 5);
    }

    #[test]
    fn two_offsets_break_containment() {
        let f = Field::prime(7).unwrap();
        let s = standard_set(&f, &[6, 6]).unwrap();
        let (_, cert) = verify_dual_containment(&s, &[1, 1]).unwrap();
        assert!(!cert.holds);
        assert!(matches!(derive_stabilizer_params(&s, &[1, 1]), Err(Error::ContainmentFailed(_))));
        let (_, cert) = verify_dual_containment(&s, &[0, 2]).unwrap();
        assert!(cert.holds);
        assert_eq!(derive_stabilizer_params(&s, &[0, 2]).unwrap().to_string(), "[[36,12,3]]_7");
    }
}
