//! Cartesian evaluation sets `S = S_1 x ... x S_m`.
//!
//! Each component is kept sorted by canonical element encoding and points are
//! enumerated with the last coordinate varying fastest. Everything derived
//! from the set (vanishing generators `L_i`, residue weights, the
//! weight-interpolating polynomial `F`) is computed once at construction.
//!
//! The residue weight of a point factors over the components,
//! `w(s) = prod_i w_i(s_i)` with `w_i(s_i) = (prod_{s' in S_i, s' != s_i} (s_i - s'))^{-1}`,
//! and so does `F = prod_i F_i(x_i)`. Both facts are used to keep the
//! constructions linear in the number of points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldSpec, Gf};
use crate::poly::{self, uni, Exponent, Polynomial};

/// Upper bound on `|S|`.
pub const MAX_POINTS: usize = 1 << 21;

/// Per-point residue weights, in point order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueWeights {
    pub weights: Vec<Gf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianSet {
    field: Field,
    components: Vec<Vec<Gf>>,
    points: Vec<Vec<Gf>>,
    vanishing: Vec<Vec<Gf>>,
    generators: Vec<Polynomial>,
    component_weights: Vec<Vec<Gf>>,
    weights: ResidueWeights,
    f_factors: Vec<Vec<Gf>>,
    f_poly: Polynomial,
}

/// Serialized form: the field and the components as canonical encodings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartesianSetDoc {
    pub field: FieldSpec,
    pub components: Vec<Vec<u32>>,
}

impl CartesianSet {
    /// Builds the set; components are sorted, duplicates are rejected.
    pub fn new(field: &Field, components: Vec<Vec<Gf>>) -> Result<CartesianSet> {
        if components.is_empty() {
            return Err(Error::NoComponents);
        }
        let mut sorted = Vec::with_capacity(components.len());
        let mut n: u128 = 1;
        for (i, mut comp) in components.into_iter().enumerate() {
            if comp.is_empty() {
                return Err(Error::EmptyComponent(i));
            }
            if let Some(bad) = comp.iter().find(|x| x.value() >= field.q()) {
                return Err(Error::ElementOutOfRange { value: bad.value() as u64, q: field.q() as u64 });
            }
            comp.sort();
            if let Some(w) = comp.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateElement { component: i, value: w[0].value() });
            }
            n *= comp.len() as u128;
            sorted.push(comp);
        }
        if n > MAX_POINTS as u128 {
            return Err(Error::TooManyPoints { points: n, limit: MAX_POINTS });
        }
        Ok(CartesianSet::derive(field.clone(), sorted))
    }

    /// Builds the set from canonical integer encodings.
    pub fn from_values(field: &Field, components: &[Vec<u64>]) -> Result<CartesianSet> {
        let comps = components
            .iter()
            .map(|c| c.iter().map(|&v| field.elem(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        CartesianSet::new(field, comps)
    }

    fn derive(field: Field, components: Vec<Vec<Gf>>) -> CartesianSet {
        let m = components.len();
        let f = &field;

        let mut points: Vec<Vec<Gf>> = vec![Vec::with_capacity(m)];
        for comp in &components {
            points = points
                .into_iter()
                .flat_map(|p| {
                    comp.iter().map(move |&s| {
                        let mut next = p.clone();
                        next.push(s);
                        next
                    })
                })
                .collect();
        }

        let vanishing: Vec<Vec<Gf>> = components.iter().map(|c| uni::from_roots(f, c)).collect();
        let generators = vanishing.iter().enumerate().map(|(i, l)| Polynomial::univariate(f, m, i, l)).collect();

        let component_weights: Vec<Vec<Gf>> = components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|&s| {
                        let d = f.product(comp.iter().filter(|&&t| t != s).map(|&t| f.sub(s, t)));
                        f.inv(d).expect("components have distinct elements")
                    })
                    .collect()
            })
            .collect();

        let mut weights = vec![Gf::ONE];
        for cw in &component_weights {
            weights = weights.iter().flat_map(|&w| cw.iter().map(move |&c| (w, c))).map(|(w, c)| f.mul(w, c)).collect();
        }

        // F_i = sum_{s in S_i} w_i(s)^2 prod_{s' != s} (x - s'), the one-component
        // instance of the interpolation sum; the full sum is the product of these.
        let f_factors: Vec<Vec<Gf>> = components
            .iter()
            .zip(&component_weights)
            .map(|(comp, cw)| {
                let mut acc = Vec::new();
                for (idx, &s) in comp.iter().enumerate() {
                    let others: Vec<Gf> = comp.iter().copied().filter(|&t| t != s).collect();
                    let w2 = f.mul(cw[idx], cw[idx]);
                    acc = uni::add(f, &acc, &uni::scale(f, &uni::from_roots(f, &others), w2));
                }
                acc
            })
            .collect();
        let f_poly = poly::product_of_univariates(f, &f_factors);

        CartesianSet {
            field,
            components,
            points,
            vanishing,
            generators,
            component_weights,
            weights: ResidueWeights { weights },
            f_factors,
            f_poly,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of components `m`.
    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Gf>] {
        &self.components
    }

    /// Component sizes `n_i`.
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// Number of points `n`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Gf>] {
        &self.points
    }

    /// Position of a point in the canonical order.
    pub fn index_of(&self, point: &[Gf]) -> Option<usize> {
        if point.len() != self.nvars() {
            return None;
        }
        let mut idx = 0;
        for (comp, x) in self.components.iter().zip(point) {
            idx = idx * comp.len() + comp.binary_search(x).ok()?;
        }
        Some(idx)
    }

    /// Component indices of the point at `index` (mixed radix, last fastest).
    pub fn coordinates_of(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.nvars()];
        for (i, comp) in self.components.iter().enumerate().rev() {
            out[i] = index % comp.len();
            index /= comp.len();
        }
        out
    }

    /// Point index from component indices.
    pub fn index_from_coordinates(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.components).fold(0, |acc, (&c, comp)| acc * comp.len() + c)
    }

    /// `L_i(x_i) = prod_{s in S_i} (x_i - s)` for every component.
    pub fn vanishing_generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Dense coefficients of `L_i`.
    pub fn vanishing_dense(&self, i: usize) -> &[Gf] {
        &self.vanishing[i]
    }

    pub fn residue_weights(&self) -> &ResidueWeights {
        &self.weights
    }

    /// The one-component weight `w_i(s)` for the element at `idx` of `S_i`.
    pub fn component_weights(&self, i: usize) -> &[Gf] {
        &self.component_weights[i]
    }

    /// `Res_S f`: the values of `f` at every point scaled by the point's weight.
    pub fn residue_vector(&self, f: &Polynomial) -> Result<Vec<Gf>> {
        if f.nvars() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: f.nvars() });
        }
        if f.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        self.points.iter().zip(&self.weights.weights).map(|(pt, &w)| Ok(self.field.mul(f.evaluate(pt)?, w))).collect()
    }

    /// Residue vector of `prod_i g_i(x_i)`, from the dense factors.
    pub fn residue_vector_of_product(&self, factors: &[Vec<Gf>]) -> Vec<Gf> {
        let mut vals = self.evaluate_product(factors);
        for (v, &w) in vals.iter_mut().zip(&self.weights.weights) {
            *v = self.field.mul(*v, w);
        }
        vals
    }

    /// Values of `prod_i g_i(x_i)` at every point.
    pub fn evaluate_product(&self, factors: &[Vec<Gf>]) -> Vec<Gf> {
        let f = &self.field;
        let mut vals = vec![Gf::ONE];
        for (comp, g) in self.components.iter().zip(factors) {
            let gv: Vec<Gf> = comp.iter().map(|&s| uni::eval(f, g, s)).collect();
            vals = vals.iter().flat_map(|&v| gv.iter().map(move |&x| (v, x))).map(|(v, x)| f.mul(v, x)).collect();
        }
        vals
    }

    /// The polynomial `F` with `deg_{x_i} F < n_i` and `F(s) = w(s)` on `S`.
    pub fn interpolate_f(&self) -> &Polynomial {
        &self.f_poly
    }

    /// Dense univariate factors `F_i` with `F = prod_i F_i(x_i)`.
    pub fn f_factors(&self) -> &[Vec<Gf>] {
        &self.f_factors
    }

    /// `F` from `(-1)^m prod_i prod_{s' in K \ S_i} (x_i - s')`, reduced
    /// modulo the `L_i`. Requires `q > n_i >= q/2` for every component.
    pub fn closed_form_f(&self) -> Result<Polynomial> {
        let f = &self.field;
        let q = f.q() as usize;
        for (i, comp) in self.components.iter().enumerate() {
            let n = comp.len();
            if n >= q || 2 * n < q {
                return Err(Error::SizeOutOfRange { index: i, size: n, q: q as u64 });
            }
        }
        let m = self.nvars();
        let mut factors: Vec<Vec<Gf>> = self
            .components
            .iter()
            .map(|comp| {
                let outside: Vec<Gf> = f.elements().into_iter().filter(|x| comp.binary_search(x).is_err()).collect();
                uni::from_roots(f, &outside)
            })
            .collect();
        if m % 2 == 1 {
            factors[0] = uni::scale(f, &factors[0], f.neg(Gf::ONE));
        }
        poly::normal_form(&poly::product_of_univariates(f, &factors), &self.generators)
    }

    /// Whether the residues of `f` sum to zero. Requires
    /// `deg f < sum (n_i - 1)` and `deg_{x_i} f < n_i`; the sum then always vanishes.
    pub fn residue_sum_check(&self, f: &Polynomial) -> Result<bool> {
        let bound: u64 = self.components.iter().map(|c| c.len() as u64 - 1).sum();
        if let Some(d) = f.total_degree() {
            if d >= bound {
                return Err(Error::Precondition(format!("deg f = {d} is not below sum(n_i - 1) = {bound}")));
            }
        }
        for (i, comp) in self.components.iter().enumerate() {
            if let Some(d) = f.degree_in(i) {
                if d as usize >= comp.len() {
                    return Err(Error::Precondition(format!(
                        "deg in x{} is {d}, must be below n_{} = {}",
                        i + 1,
                        i + 1,
                        comp.len()
                    )));
                }
            }
        }
        Ok(self.field.sum(self.residue_vector(f)?).is_zero())
    }

    /// All exponents of the box `{0..n_1-1} x ... x {0..n_m-1}` in graded-lex order.
    pub fn box_exponents(&self) -> Vec<Exponent> {
        crate::code::box_exponents(&self.sizes())
    }

    pub fn to_doc(&self) -> CartesianSetDoc {
        CartesianSetDoc {
            field: self.field.spec().clone(),
            components: self.components.iter().map(|c| c.iter().map(|x| x.value()).collect()).collect(),
        }
    }

    pub fn from_doc(doc: &CartesianSetDoc) -> Result<CartesianSet> {
        let field = Field::from_spec(&doc.field)?;
        let comps: Vec<Vec<u64>> = doc.components.iter().map(|c| c.iter().map(|&v| v as u64).collect()).collect();
        CartesianSet::from_values(&field, &comps)
    }
}

impl Serialize for CartesianSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CartesianSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = CartesianSetDoc::deserialize(deserializer)?;
        CartesianSet::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}
