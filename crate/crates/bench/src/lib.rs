//! Families shared by the benchmarks.

use kharibound::{IntervalTransferFunction, RealInterval};

fn iv(lo: f64, hi: f64) -> RealInterval {
    RealInterval::new(lo, hi).expect("valid interval")
}

/// Degree-3 numerator over a degree-4 denominator with every coefficient uncertain.
pub fn reference_family() -> IntervalTransferFunction {
    IntervalTransferFunction::from_bounds(
        &[(1.0, 2.0), (-1.0, 1.0), (-2.0, 1.0), (1.0, 2.0)],
        &[(1.0, 2.0), (1.0, 4.0), (3.0, 5.0), (1.0, 2.0), (1.0, 1.0)],
    )
    .expect("valid family")
}

/// A strictly proper family of the given denominator degree with 10% boxes
/// around the binomial coefficients of `(s + 1)^n`.
pub fn binomial_family(n: usize) -> IntervalTransferFunction {
    let mut c = vec![1.0f64];
    for _ in 0..n {
        let mut next = vec![0.0; c.len() + 1];
        for (k, &x) in c.iter().enumerate() {
            next[k] += x;
            next[k + 1] += x;
        }
        c = next;
    }
    let den: Vec<RealInterval> = c.iter().map(|&x| iv(0.95 * x, 1.05 * x)).collect();
    let num: Vec<RealInterval> = c[..n].iter().map(|&x| iv(0.5 * x, 1.5 * x)).collect();
    IntervalTransferFunction::new(
        kharibound::IntervalPolynomial::new(num).expect("numerator"),
        kharibound::IntervalPolynomial::new(den).expect("denominator"),
    )
}
