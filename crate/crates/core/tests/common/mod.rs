#![allow(dead_code)]

use kharibound::{IntervalPolynomial, IntervalTransferFunction, RealInterval, RealPolynomial};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn poly(c: &[f64]) -> RealPolynomial {
    RealPolynomial::new(c.to_vec()).unwrap()
}

/// Monic real polynomial with the given real roots and complex pairs `a ± jb`.
pub fn from_roots(real: &[f64], pairs: &[(f64, f64)]) -> RealPolynomial {
    let mut p = RealPolynomial::constant(1.0);
    for &r in real {
        p = &p * &poly(&[-r, 1.0]);
    }
    for &(a, b) in pairs {
        p = &p * &poly(&[a * a + b * b, -2.0 * a, 1.0]);
    }
    p
}

pub fn interval() -> impl Strategy<Value = (f64, f64)> {
    (-5.0..5.0f64, 0.0..3.0f64).prop_map(|(c, w)| (c - 0.5 * w, c + 0.5 * w))
}

pub fn bounds(max_degree: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec(interval(), 1..=max_degree + 1)
}

pub fn family(max_num: usize, max_den: usize) -> impl Strategy<Value = IntervalTransferFunction> {
    (bounds(max_num), bounds(max_den)).prop_map(|(n, d)| IntervalTransferFunction::from_bounds(&n, &d).unwrap())
}

/// Relative boxes of width up to `rel` around the coefficients of a stable polynomial.
pub fn stable_box(max_degree: usize, rel: f64) -> impl Strategy<Value = IntervalPolynomial> {
    (1..=max_degree)
        .prop_flat_map(move |n| {
            (
                prop::collection::vec(0.3..3.0f64, n),
                prop::collection::vec((0.2..2.0f64, 0.2..2.0f64), 0..=n / 2),
                prop::collection::vec(0.0..rel, n + 1),
                0.2..3.0f64,
            )
        })
        .prop_map(|(real, pairs, widths, gain)| {
            let npairs = pairs.len();
            let real = &real[..real.len() - 2 * npairs];
            let p = from_roots(
                &real.iter().map(|r| -r).collect::<Vec<_>>(),
                &pairs.iter().map(|&(a, b)| (-a, b)).collect::<Vec<_>>(),
            )
            .scale(gain);
            let coeffs = p
                .coeffs()
                .iter()
                .zip(widths)
                .map(|(&c, w)| RealInterval::new(c * (1.0 - w), c * (1.0 + w)).unwrap())
                .collect();
            IntervalPolynomial::new(coeffs).unwrap()
        })
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_member(ip: &IntervalPolynomial, rng: &mut ChaCha8Rng) -> RealPolynomial {
    RealPolynomial::new(
        ip.coeffs()
            .iter()
            .map(|iv| if iv.is_degenerate() { iv.lo() } else { rng.random_range(iv.lo()..=iv.hi()) })
            .collect(),
    )
    .unwrap()
}

pub fn in_interval(rng: &mut ChaCha8Rng, iv: &RealInterval) -> f64 {
    if iv.is_degenerate() {
        iv.lo()
    } else {
        rng.random_range(iv.lo()..=iv.hi())
    }
}
