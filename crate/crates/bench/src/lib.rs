//! Shared inputs for the benchmarks.

use gft_core::verify::random_function;
use gft_core::{Complex64, HypergeometricParams, MultiplierOperator, TruncatedSeries};

/// Random p-valent function with the decay used by the identity suite.
pub fn sample(p: usize, order: usize) -> TruncatedSeries {
    random_function(p, order, 0.3, 7).expect("valid decay")
}

/// A two-numerator, one-denominator hypergeometric operator.
pub fn hypergeometric(p: usize) -> MultiplierOperator {
    let params = HypergeometricParams::new(
        vec![Complex64::new(1.5, 0.4), Complex64::new(2.0, 0.0)],
        vec![Complex64::new(2.5, -0.3)],
    )
    .expect("valid parameters");
    MultiplierOperator::dziok_srivastava(params, p).expect("valid operator")
}
