mod common;

use common::{brute_weight, rank, set_from};
use moncart::{CartesianSet, Exponent, Field, Gf, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sets() -> Vec<CartesianSet> {
    let f7 = Field::prime(7).unwrap();
    let f8 = Field::with_order(8).unwrap();
    let f9 = Field::with_order(9).unwrap();
    vec![
        set_from(&f7, &[&[1, 3, 4, 5]]),
        set_from(&f7, &[&[0, 2, 3], &[0, 1, 3, 5, 6]]),
        set_from(&f8, &[&[1, 2, 5, 7], &[0, 3, 4], &[2, 6]]),
        set_from(&f9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8], &[1, 4, 8]]),
    ]
}

fn random_bounded(rng: &mut ChaCha8Rng, s: &CartesianSet, bound: u64) -> Polynomial {
    let f = s.field();
    let terms = s
        .box_exponents()
        .into_iter()
        .filter(|e: &Exponent| e.degree() < bound)
        .map(|e| (e, f.elem(rng.gen_range(0..f.q() as u64)).unwrap()))
        .collect::<Vec<_>>();
    Polynomial::from_terms(f, s.nvars(), terms).unwrap()
}

#[test]
fn residues_of_low_degree_polynomials_sum_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in sets() {
        let bound: u64 = s.sizes().iter().map(|&n| n as u64 - 1).sum();
        for _ in 0..200 {
            let f = random_bounded(&mut rng, &s, bound);
            assert!(s.residue_sum_check(&f).unwrap());
        }
        // At the boundary degree the check refuses.
        let top = Exponent(s.sizes().iter().map(|&n| n as u32 - 1).collect());
        let g = Polynomial::monomial(s.field(), top, Gf::ONE);
        assert!(s.residue_sum_check(&g).is_err());
    }
}

#[test]
fn weights_match_definition() {
    for s in sets() {
        let f = s.field();
        for (pt, &w) in s.points().iter().zip(&s.residue_weights().weights) {
            let expect = f.product(pt.iter().zip(s.components()).map(|(&x, comp)| brute_weight(f, comp, x)));
            assert_eq!(w, expect);
        }
    }
}

#[test]
fn residue_map_is_injective_on_the_box() {
    for s in sets() {
        let rows: Vec<Vec<Gf>> = s
            .box_exponents()
            .into_iter()
            .map(|e| s.residue_vector(&Polynomial::monomial(s.field(), e, Gf::ONE)).unwrap())
            .collect();
        assert_eq!(rank(s.field(), &rows), s.len());
    }
}

#[test]
fn weight_polynomial_closed_form() {
    let f7 = Field::prime(7).unwrap();
    let f8 = Field::with_order(8).unwrap();
    for s in [
        set_from(&f7, &[&[1, 2, 3, 4, 5, 6]]),
        set_from(&f7, &[&[0, 2, 3, 6], &[1, 2, 4, 5, 6]]),
        set_from(&f8, &[&[0, 1, 2, 3], &[1, 3, 5, 6, 7]]),
    ] {
        let closed = s.closed_form_f().unwrap();
        assert_eq!(&closed, s.interpolate_f());
        for (pt, &w) in s.points().iter().zip(&s.residue_weights().weights) {
            assert_eq!(closed.evaluate(pt).unwrap(), w);
        }
    }
    assert!(set_from(&f7, &[&[1, 3, 4]]).closed_form_f().is_err());
}
