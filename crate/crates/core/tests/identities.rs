use gft_core::series::max_rel_error;
use gft_core::verify::{random_function, run_identity_suite, IdentitySuite};
use gft_core::{Complex64, MultiplierOperator, QVariant, TruncatedSeries};

#[test]
fn default_suite_behaves_as_expected() {
    let reports = run_identity_suite(&IdentitySuite::default()).unwrap();
    let unexpected: Vec<_> = reports.iter().filter(|r| !r.as_expected()).map(|r| &r.id).collect();
    assert!(unexpected.is_empty(), "{unexpected:?}");
    for r in reports.iter().filter(|r| !r.expected_failure) {
        assert!(r.max_error.unwrap() <= 1e-9, "{} {:?}", r.id, r.max_error);
    }
    // The Psi reduction is only an identity when alpha ignores the index.
    for tag in ["H", "J", "Q"] {
        let r = reports.iter().find(|r| r.id == format!("theorem2-psi:{tag}")).unwrap();
        assert!(r.expected_failure && !r.pass);
    }
}

#[test]
fn printed_q_breaks_the_recurrence_at_p2() {
    let f = random_function(2, 64, 0.3, 5).unwrap();
    let printed = MultiplierOperator::q_liu(3.0, 0.5, 2, QVariant::Printed).unwrap();
    let consistent = MultiplierOperator::q_liu(3.0, 0.5, 2, QVariant::IdentityConsistent).unwrap();
    let bad = printed.recurrence_check(&f);
    assert!(!bad.pass && bad.max_error.unwrap() >= 0.1);
    let good = consistent.recurrence_check(&f);
    assert!(good.pass && good.max_error.unwrap() <= 1e-10);
}

#[test]
fn recurrence_error_stays_at_rounding_level_as_order_grows() {
    let op = MultiplierOperator::t_kappa(2, Complex64::new(0.5, 0.25), 1.5, 1).unwrap();
    for order in [16, 32, 64, 128] {
        let f = random_function(1, order, 0.3, 9).unwrap();
        let err = op.recurrence_check(&f).max_error.unwrap();
        assert!(err <= order as f64 * f64::EPSILON * 8.0, "N = {order}: {err:e}");
    }
}

#[test]
fn operators_compose_multiplicatively() {
    let f = random_function(2, 40, 0.3, 1).unwrap();
    let op = MultiplierOperator::multiplier_transform(1, Complex64::new(1.0, 0.0), 2).unwrap();
    let twice = op.apply(&op.apply(&f).unwrap()).unwrap();
    let squared = MultiplierOperator::multiplier_transform(2, Complex64::new(1.0, 0.0), 2).unwrap().apply(&f).unwrap();
    assert!(max_rel_error(&twice, &squared) < 1e-13);
    let inverse = MultiplierOperator::multiplier_transform(-1, Complex64::new(1.0, 0.0), 2).unwrap();
    assert!(max_rel_error(&inverse.apply(&op.apply(&f).unwrap()).unwrap(), &f) < 1e-13);
    assert_eq!(op.apply(&TruncatedSeries::monomial(2, 40)).unwrap(), TruncatedSeries::monomial(2, 40));
}
