use calorics::caloric::{basis, basic_hcp, is_caloric};
use calorics::constructions::rational_rotation;
use calorics::nodal::{cube_section_sample, nodal_count, CrossSectionGrid};
use calorics::{parse_poly, ExponentVector, RatPoly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// Sparse polynomial in `n` space variables with small exponents.
fn polynomial(n: usize) -> impl Strategy<Value = RatPoly> {
    let term = (0u32..3, prop::collection::vec(0u32..4, n), rational());
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        RatPoly::from_terms(n, terms.into_iter().map(|(k, a, c)| (ExponentVector::new(k, a), c))).unwrap()
    })
}

/// Homogeneous caloric polynomial: a rational combination of basis elements.
fn caloric(n: usize) -> impl Strategy<Value = (RatPoly, u32)> {
    (1u32..=5).prop_flat_map(move |d| {
        let len = basis(n, d).len();
        prop::collection::vec(rational(), len).prop_map(move |coeffs| {
            let p = basis(n, d)
                .iter()
                .zip(&coeffs)
                .fold(RatPoly::zero(n), |acc, (b, c)| &acc + &b.scale(c));
            (p, d)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parabolic_scaling((p, d) in caloric(2), pt in prop::collection::vec(rational(), 3), lambda in nonzero_rational()) {
        let scaled = [pt[0].clone() * &lambda, pt[1].clone() * &lambda, pt[2].clone() * &lambda * &lambda];
        let lhs = p.evaluate_slice(&scaled).unwrap();
        let rhs = p.evaluate_slice(&pt).unwrap() * num_traits::pow(lambda, d as usize);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expression_round_trip(p in polynomial(3)) {
        prop_assert_eq!(parse_poly(&p.to_string(), 3).unwrap(), p);
    }

    #[test]
    fn json_round_trip(p in polynomial(2)) {
        prop_assert_eq!(RatPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn heat_operator_is_linear(p in polynomial(2), q in polynomial(2), a in rational(), b in rational()) {
        let combined = (&p.scale(&a) + &q.scale(&b)).heat_apply();
        let separate = &p.heat_apply().scale(&a) + &q.heat_apply().scale(&b);
        prop_assert_eq!(combined, separate);
    }

    #[test]
    fn rotation_preserves_caloricity((p, d) in caloric(2), alpha in -3.0f64..3.0) {
        let (c, s) = rational_rotation(alpha);
        let r = p.rotate_xy(0, 1, &c, &s).unwrap();
        if !p.is_zero() {
            prop_assert_eq!(is_caloric(&r).unwrap(), d);
        }
    }

    #[test]
    fn time_coefficients_round_trip(p in polynomial(2)) {
        let coeffs = p.t_coefficients();
        prop_assert_eq!(RatPoly::from_t_coefficients(2, &coeffs), p);
    }

    #[test]
    fn odd_fields_are_antisymmetric(k in 0u32..3, c in nonzero_rational()) {
        // odd in x: p(-x, t) = -p(x, t) as polynomials
        let p = basic_hcp(2 * k + 1).scale(&c).embed(2, &[0]).unwrap();
        prop_assert_eq!(p.reflect_space(), -&p);
        let f = cube_section_sample(&p, 12).unwrap();
        let g: CrossSectionGrid = f.grid;
        for cell in 0..g.num_cells() {
            let mut mirror = g.center_numerators(cell);
            mirror[0] = -mirror[0];
            mirror[1] = -mirror[1];
            let m = (0..g.num_cells()).find(|&o| g.center_numerators(o) == mirror).unwrap();
            prop_assert_eq!(f.signs[m], -f.signs[cell]);
        }
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let p = parse_poly("150*t*(3*x + y) + 27*x^3 + 267*x^2*y + 144*x*y^2 - 64*y^3", 2).unwrap();
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| nodal_count(&p, &[16, 32, 64]).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(1));
    assert_eq!(one.to_json(), run(2).to_json());
}

#[test]
fn basis_elements_are_caloric_of_their_degree() {
    for n in 1..=3 {
        for d in 0..=5 {
            for p in basis(n, d) {
                assert_eq!(is_caloric(&p).unwrap(), d);
            }
        }
    }
    assert!(RatPoly::one(2).heat_apply().is_zero());
}
