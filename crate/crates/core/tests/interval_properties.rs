mod common;

use common::{bounds, in_interval, random_member, rng, stable_box};
use kharibound::interval::{
    check_w1_vertices, check_w2_vertices, check_w6_vertices, family_kharitonov_stable, real_box_first_order_stable,
    rotated_combination, value_set_rect, zero_exclusion, ComplexBox,
};
use kharibound::poly::{first_order_complex_hurwitz, hurwitz_complex, max_root_real_part};
use kharibound::{Bound, Complex, Error, IntervalPolynomial, RealInterval, Tolerances};
use proptest::prelude::*;

fn iv(lo: f64, hi: f64) -> RealInterval {
    RealInterval::new(lo, hi).unwrap()
}

fn complex_box(re: (f64, f64), im: (f64, f64)) -> ComplexBox {
    ComplexBox::new(iv(re.0, re.0 + re.1), iv(im.0, im.0 + im.1))
}

fn sample_box(b: &ComplexBox, r: &mut rand_chacha::ChaCha8Rng) -> Complex {
    Complex::new(in_interval(r, &b.c), in_interval(r, &b.d))
}

fn leading_box() -> impl Strategy<Value = ComplexBox> {
    ((0.3..3.0f64, 0.0..1.0f64), (-1.0..1.0f64, 0.0..1.0f64)).prop_map(|(re, im)| complex_box(re, im))
}

fn constant_box() -> impl Strategy<Value = ComplexBox> {
    ((-1.0..6.0f64, 0.0..2.0f64), (-3.0..3.0f64, 0.0..2.0f64)).prop_map(|(re, im)| complex_box(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn value_set_contains_every_member(b in bounds(6), w in -4.0..4.0f64, seed in any::<u64>()) {
        let ip = IntervalPolynomial::from_bounds(&b).unwrap();
        let rect = value_set_rect(&ip, w);
        let mut r = rng(seed);
        let slack = 1e-12 * (1.0 + rect.re.lo().abs().max(rect.re.hi().abs()) + rect.im.lo().abs().max(rect.im.hi().abs()));
        for _ in 0..1000 {
            let z = random_member(&ip, &mut r).eval_at_jomega(w);
            prop_assert!(z.re >= rect.re.lo() - slack && z.re <= rect.re.hi() + slack);
            prop_assert!(z.im >= rect.im.lo() - slack && z.im <= rect.im.hi() + slack);
        }
    }

    #[test]
    fn vertices_sit_on_the_matching_corners(b in bounds(7), w in -4.0..4.0f64) {
        let ip = IntervalPolynomial::from_bounds(&b).unwrap();
        let rect = value_set_rect(&ip, w).as_box();
        for i in Bound::ALL {
            for j in Bound::ALL {
                let z = ip.vertex(i, j).eval_at_jomega(w);
                let corner = rect.corner(i, if w >= 0.0 { j } else { j.flip() });
                prop_assert!((z - corner).norm() <= 1e-12 * (1.0 + corner.norm()), "{:?}{:?}: {} vs {}", i, j, z, corner);
            }
        }
    }

    #[test]
    fn zero_exclusion_agrees_with_the_rectangle(b in bounds(5), w in -3.0..3.0f64) {
        let tol = Tolerances::default();
        let ip = IntervalPolynomial::from_bounds(&b).unwrap();
        let rect = value_set_rect(&ip, w);
        if zero_exclusion(&ip, w, &tol) {
            prop_assert!(!(rect.re.contains_zero() && rect.im.contains_zero()));
        }
    }

    #[test]
    fn kharitonov_vertices_certify_sampled_members(ip in stable_box(6, 0.3), seed in any::<u64>()) {
        let tol = Tolerances::default();
        if let Ok(true) = family_kharitonov_stable(&ip, &tol) {
            let mut r = rng(seed);
            for _ in 0..1000 {
                let p = random_member(&ip, &mut r);
                prop_assert!(max_root_real_part(&p.to_complex()).unwrap() < 0.0, "{:?}", p);
            }
        }
    }

    #[test]
    fn w1_vertices_certify_sampled_members(c0 in constant_box(), c1 in leading_box(), beta in 0.05..1.5f64, seed in any::<u64>()) {
        let tol = Tolerances::default();
        if check_w1_vertices(&c0, &c1, beta, &tol).unwrap() {
            let mut r = rng(seed);
            for _ in 0..1000 {
                let (a0, a1) = (sample_box(&c0, &mut r), sample_box(&c1, &mut r));
                // (c1 + jd1)(s - β) + (c0 + jd0)
                prop_assert!(first_order_complex_hurwitz(a1, a0 - a1 * beta, &tol).unwrap());
            }
        }
    }

    #[test]
    fn w2_vertices_match_all_sixteen_corners(c0 in constant_box(), c1 in leading_box(), seed in any::<u64>()) {
        let tol = Tolerances::default();
        let verdict = check_w2_vertices(&c0, &c1, &tol).unwrap();
        let mut corners = true;
        for a in Bound::ALL { for b in Bound::ALL { for c in Bound::ALL { for d in Bound::ALL {
            corners &= first_order_complex_hurwitz(c1.corner(c, d), c0.corner(a, b), &tol).unwrap();
        }}}}
        prop_assert_eq!(verdict, corners);
        if verdict {
            let mut r = rng(seed);
            for _ in 0..1000 {
                prop_assert!(first_order_complex_hurwitz(sample_box(&c1, &mut r), sample_box(&c0, &mut r), &tol).unwrap());
            }
        }
    }

    #[test]
    fn w6_vertices_certify_sampled_members(
        g in stable_box(3, 0.3), f in stable_box(3, 0.3),
        beta in 0.1..2.0f64, gamma in prop_oneof![-2.0..-0.1f64, 0.1..2.0f64], seed in any::<u64>(),
    ) {
        let tol = Tolerances::default();
        match check_w6_vertices(&g, &f, beta, gamma, &tol) {
            Ok(true) => {
                let mut r = rng(seed);
                for _ in 0..500 {
                    let p = rotated_combination(&random_member(&g, &mut r), &random_member(&f, &mut r), beta, gamma);
                    prop_assert!(hurwitz_complex(&p, &tol).unwrap_or(false) || max_root_real_part(&p).unwrap() < 0.0);
                }
            }
            Ok(false) | Err(Error::NumericallyMarginal { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {:?}", e),
        }
    }

    #[test]
    fn real_box_corners_certify_sampled_members(
        c0 in (-3.0..3.0f64, 0.0..2.0f64), c1 in (0.2..3.0f64, 0.0..2.0f64), beta in 0.05..2.0f64, seed in any::<u64>(),
    ) {
        let tol = Tolerances::default();
        let (c0, c1) = (iv(c0.0, c0.0 + c0.1), iv(c1.0, c1.0 + c1.1));
        if real_box_first_order_stable(&c0, &c1, beta, &tol).unwrap() {
            let mut r = rng(seed);
            for _ in 0..1000 {
                let (a0, a1) = (in_interval(&mut r, &c0), in_interval(&mut r, &c1));
                // c1(s + β) + c0 has root -(β + c0/c1)
                prop_assert!(beta + a0 / a1 > 0.0);
            }
        }
    }
}

#[test]
fn leading_interval_through_zero_is_rejected() {
    let tol = Tolerances::default();
    let ip = IntervalPolynomial::from_bounds(&[(1.0, 2.0), (-1.0, 1.0)]).unwrap();
    assert_eq!(family_kharitonov_stable(&ip, &tol), Err(Error::DegreeDropPossible));
    let c = complex_box((1.0, 1.0), (0.0, 0.0));
    let z = complex_box((-1.0, 2.0), (-1.0, 2.0));
    assert_eq!(check_w2_vertices(&c, &z, &tol), Err(Error::DegenerateLeadingCoefficient));
    assert_eq!(check_w1_vertices(&c, &c, 0.0, &tol), Err(Error::InvalidShift(0.0)));
}
