mod common;

use common::{family, poly, random_member, rng, stable_box};
use kharibound::oracle::{default_omega_grid, oracle_extremum_over, oracle_global_inf, sample_family, SamplingPlan};
use kharibound::spr::{
    band_infimum, closed_loop_spr, family_spr, pointwise_extremum, pointwise_positivity, spr_check_single, spr_index,
};
use kharibound::{
    BandSpec, CertificationStatus, Error, Gamma1Class, IntervalPolynomial, IntervalTransferFunction, Quantity,
    Tolerances,
};
use proptest::prelude::*;

/// Stable denominator with a numerator of equal or lower degree; SPR is then plausible.
fn stable_family() -> impl Strategy<Value = IntervalTransferFunction> {
    (stable_box(4, 0.2), stable_box(4, 0.4), any::<bool>()).prop_map(|(den, num, drop)| {
        let keep = num.coeffs().len().min(den.coeffs().len() - usize::from(drop && den.coeffs().len() > 1));
        let num = IntervalPolynomial::new(num.coeffs()[..keep.max(1)].to_vec()).unwrap();
        IntervalTransferFunction::new(num, den)
    })
}

fn quantity() -> impl Strategy<Value = Quantity> {
    prop_oneof![Just(Quantity::MinRe), Just(Quantity::MaxRe), Just(Quantity::MinIm), Just(Quantity::MaxIm)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn max_re_is_min_re_of_the_negated_family(itf in family(4, 5), w in -3.0..3.0f64) {
        let tol = Tolerances::default();
        let max = pointwise_extremum(&itf, w, Quantity::MaxRe, &tol).unwrap();
        let min = pointwise_extremum(&itf.with_negated_numerator(), w, Quantity::MinRe, &tol).unwrap();
        prop_assume!(max.status != CertificationStatus::ZeroInclusionFail);
        prop_assert!((max.value + min.value).abs() <= 1e-12 * (1.0 + max.value.abs()));
    }

    #[test]
    fn pointwise_values_match_a_grid_oracle(itf in family(3, 3), w in -3.0..3.0f64, q in quantity()) {
        let tol = Tolerances::default();
        let r = pointwise_extremum(&itf, w, q, &tol).unwrap();
        prop_assume!(r.status != CertificationStatus::ZeroInclusionFail);
        let sample = sample_family(&itf, &SamplingPlan::grid(3)).unwrap();
        let oracle = oracle_extremum_over(&sample, &[w], q).unwrap();
        let scale = 1e-12 * (1.0 + r.value.abs());
        // the reported value is realized by vertex members, hence never beats the oracle
        if q.is_max() { prop_assert!(r.value <= oracle.value + scale) } else { prop_assert!(r.value >= oracle.value - scale) }
        if r.status == CertificationStatus::CertifiedExact {
            prop_assert!((r.value - oracle.value).abs() <= scale, "{:?}: vertex {} oracle {}", q, r.value, oracle.value);
        }
    }

    #[test]
    fn positivity_verdict_matches_the_oracle(itf in family(3, 3), w in -3.0..3.0f64) {
        let tol = Tolerances::default();
        match pointwise_positivity(&itf, w, &tol) {
            Ok(verdict) => {
                let sample = sample_family(&itf, &SamplingPlan::grid(3)).unwrap();
                let oracle = oracle_extremum_over(&sample, &[w], Quantity::MinRe).unwrap();
                if verdict { prop_assert!(oracle.value > 0.0) }
                else { prop_assert!(oracle.value <= tol.positivity_tol * 1e3) }
            }
            Err(Error::ZeroInclusion { .. }) => {}
            Err(e) => prop_assert!(false, "{:?}", e),
        }
    }

    #[test]
    fn band_infimum_is_a_lower_bound_when_certified(itf in stable_family(), w1 in 0.0..2.0f64, width in 0.1..5.0f64) {
        let tol = Tolerances::default();
        let band = BandSpec::new(w1, w1 + width).unwrap();
        let r = match band_infimum(&itf, &band, &tol) {
            Ok(r) => r,
            Err(Error::ZeroInclusion { .. }) | Err(Error::PoleOnAxis { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e:?}"))),
        };
        let (g, f) = itf.vertex_pair(&r.arg_tuple.unwrap());
        let w = r.arg_omega.unwrap();
        prop_assert!(band.contains(w));
        prop_assert!(((g.eval_at_jomega(w) / f.eval_at_jomega(w)).re - r.value).abs() <= 1e-9 * (1.0 + r.value.abs()));
        if r.is_certified() {
            let omegas: Vec<f64> = (0..=400).map(|k| band.w1() + (band.w2() - band.w1()) * k as f64 / 400.0).collect();
            let sample = sample_family(&itf, &SamplingPlan::random(200, 7).with_vertices(true)).unwrap();
            let oracle = oracle_extremum_over(&sample, &omegas, Quantity::MinRe).unwrap();
            prop_assert!(oracle.value >= r.value - 1e-9, "vertex {} oracle {}", r.value, oracle.value);
        }
    }

    #[test]
    fn spr_index_bounds_the_family(itf in stable_family()) {
        let tol = Tolerances::default();
        let r = match spr_index(&itf, &tol) {
            Ok(r) => r,
            Err(Error::DenominatorNotHurwitz { .. }) | Err(Error::PoleOnAxis { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e:?}"))),
        };
        let grid = default_omega_grid(&itf, &tol);
        let oracle = oracle_global_inf(&itf, &grid, &SamplingPlan::grid(2), &tol).unwrap();
        match r.classification {
            Gamma1Class::FamilyInfEqualsGamma0 => {
                prop_assert!(oracle.value >= r.gamma0 - 1e-9, "γ₀ {} oracle {}", r.gamma0, oracle.value);
                prop_assert!(oracle.value <= r.gamma0 + 1e-6 * (1.0 + r.gamma0.abs()), "γ₀ {} oracle {}", r.gamma0, oracle.value);
            }
            _ => prop_assert!(oracle.value >= -1e-9),
        }
    }

    #[test]
    fn family_spr_certifies_random_members(itf in stable_family(), seed in any::<u64>()) {
        let tol = Tolerances::default();
        if let Ok(true) = family_spr(&itf, &tol) {
            let mut r = rng(seed);
            for _ in 0..200 {
                let (g, f) = (random_member(&itf.num, &mut r), random_member(&itf.den, &mut r));
                prop_assert!(spr_check_single(&g, &f, &tol).unwrap(), "{:?}/{:?}", g, f);
            }
        }
    }

    #[test]
    fn closed_loop_vertices_certify_random_loops(itf in stable_family(), gamma in 0.2..3.0f64, seed in any::<u64>()) {
        let tol = Tolerances::default();
        if let Ok(v) = closed_loop_spr(&itf, gamma, &tol) {
            if v.spr {
                let mut r = rng(seed);
                for _ in 0..200 {
                    let (g, f) = (random_member(&itf.num, &mut r), random_member(&itf.den, &mut r));
                    let closed = &f + &g.scale(gamma);
                    prop_assert!(spr_check_single(&g, &closed, &tol).unwrap());
                }
            }
        }
    }
}

#[test]
fn single_transfer_function_examples() {
    let tol = Tolerances::default();
    assert!(spr_check_single(&poly(&[1.0]), &poly(&[1.0, 1.0]), &tol).unwrap());
    assert!(!spr_check_single(&poly(&[-6.0, 4.0]), &poly(&[2.0, 7.0]), &tol).unwrap());
    assert!(!spr_check_single(&poly(&[1.0]), &poly(&[-1.0, 1.0]), &tol).unwrap());
}
