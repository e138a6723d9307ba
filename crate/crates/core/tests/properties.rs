use gft_core::series::max_rel_error;
use gft_core::transforms::{bernardi, bernardi_differential_sides};
use gft_core::{BernardiParams, Complex64, TruncatedSeries};
use proptest::prelude::*;

fn unit_series(p: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 24).prop_map(move |raw| {
        let coeffs = std::iter::once(Complex64::new(1.0, 0.0))
            .chain(raw.into_iter().enumerate().map(|(k, (re, im))| Complex64::new(re, im) * 0.4f64.powi(k as i32 + 1)))
            .collect();
        TruncatedSeries::new(p, coeffs).unwrap()
    })
}

proptest! {
    #[test]
    fn exp_inverts_log(f in unit_series(0)) {
        let back = f.log_unit().unwrap().exp_unit();
        prop_assert!(max_rel_error(&back, &f) < 1e-12);
    }

    #[test]
    fn quotient_times_divisor(f in unit_series(0), g in unit_series(0)) {
        let q = f.divide(&g).unwrap();
        prop_assert!(max_rel_error(&q.cauchy_mul(&g), &f) < 1e-11);
    }

    #[test]
    fn transform_solves_its_differential_equation(
        f in unit_series(2),
        re in 0.2f64..4.0,
        im in -2.0f64..2.0,
    ) {
        let params = BernardiParams::new(Complex64::new(re, im), 2);
        let (lhs, rhs) = bernardi_differential_sides(&f, &params).unwrap();
        prop_assert!(max_rel_error(&lhs, &rhs) < 1e-13);
        prop_assert_eq!(bernardi(&f, &params).unwrap().leading(), Complex64::new(1.0, 0.0));
    }
}
