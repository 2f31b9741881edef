//! Monomial-Cartesian evaluation codes over finite fields.
//!
//! A code `C(S, A)` evaluates the monomials `x^a`, `a in A`, at every point
//! of a Cartesian product `S = S_1 x ... x S_m` of subsets of GF(q). This
//! crate builds such codes, writes down explicit bases of their duals from
//! the vanishing ideal of `S`, decides the LCD and dual-containing
//! properties, derives the parameters of the CSS stabilizer codes that
//! dual-containing codes give, and checks availability for direct products
//! used as locally recoverable codes.

pub mod cartesian;
pub mod code;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod lrc;
pub mod poly;
pub mod quantum;

pub use cartesian::CartesianSet;
pub use code::{Code, DualBasis, ExponentSet};
pub use error::{Error, Result};
pub use gf::{Field, FieldSpec, Gf};
pub use linalg::Matrix;
pub use poly::{Exponent, Polynomial};
