//! Exact-order truncated power series over complex coefficients.
//!
//! A [`TruncatedSeries`] stores `c_p, c_{p+1}, ..., c_N` densely, where `p` is
//! the base power and `N` the truncation order. Every operation tracks how far
//! its result is actually known and truncates accordingly, so no result ever
//! claims a coefficient that its inputs did not determine.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct TruncatedSeries {
    base: usize,
    coeffs: Vec<Complex64>,
}

/// Wire form: `{"p": int, "N": int, "coeffs": [[re, im], ...]}` with
/// `coeffs[k] = c_{p+k}`. On input `N` may be omitted and real coefficients
/// may be given as plain numbers.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    p: usize,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    coeffs: Vec<WireCoeff>,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoeff {
    Complex([f64; 2]),
    Real(f64),
}

impl From<WireCoeff> for Complex64 {
    fn from(w: WireCoeff) -> Self {
        match w {
            WireCoeff::Complex([re, im]) => Complex64::new(re, im),
            WireCoeff::Real(re) => Complex64::new(re, 0.0),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = Error;

    fn try_from(raw: SeriesJson) -> Result<Self> {
        let order = raw.order.unwrap_or(raw.p + raw.coeffs.len().saturating_sub(1));
        if order < raw.p {
            return Err(Error::MalformedSeries(format!(
                "order {order} below base power {}",
                raw.p
            )));
        }
        let len = order - raw.p + 1;
        if raw.coeffs.len() > len {
            return Err(Error::MalformedSeries(format!(
                "{} coefficients exceed order {order}",
                raw.coeffs.len()
            )));
        }
        // Missing trailing coefficients are zero up to the declared order.
        let mut coeffs: Vec<Complex64> =
            raw.coeffs.iter().map(|&w| w.into()).collect();
        coeffs.resize(len, Complex64::new(0.0, 0.0));
        TruncatedSeries::new(raw.p, coeffs)
    }
}

impl From<TruncatedSeries> for SeriesJson {
    fn from(s: TruncatedSeries) -> Self {
        SeriesJson {
            p: s.base,
            order: Some(s.order()),
            coeffs: s.coeffs.iter().map(|c| WireCoeff::Complex([c.re, c.im])).collect(),
        }
    }
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl TruncatedSeries {
    /// Builds a series from `c_p ..= c_N`. Rejects empty and non-finite input.
    pub fn new(base: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::MalformedSeries("no coefficients".into()));
        }
        if let Some(k) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite(base + k));
        }
        Ok(Self { base, coeffs })
    }

    /// Real coefficients, for tests and literals.
    pub fn from_real(base: usize, coeffs: &[f64]) -> Result<Self> {
        Self::new(base, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn from_fn(base: usize, order: usize, f: impl Fn(usize) -> Complex64) -> Self {
        assert!(order >= base, "order {order} below base power {base}");
        Self { base, coeffs: (base..=order).map(f).collect() }
    }

    pub fn zero(base: usize, order: usize) -> Self {
        Self::from_fn(base, order, |_| ZERO)
    }

    /// `z^p`, known to order `order`.
    pub fn monomial(p: usize, order: usize) -> Self {
        Self::from_fn(p, order, |n| if n == p { ONE } else { ZERO })
    }

    /// The constant `c`, known to order `order`.
    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::from_fn(0, order, |n| if n == 0 { c } else { ZERO })
    }

    pub fn base_power(&self) -> usize {
        self.base
    }

    pub fn order(&self) -> usize {
        self.base + self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; zero below the base power. Panics past the order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        assert!(n <= self.order(), "power {n} beyond truncation order {}", self.order());
        if n < self.base {
            ZERO
        } else {
            self.coeffs[n - self.base]
        }
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Member of the normalized class: leading coefficient exactly one.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0] == ONE
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        assert!(order >= self.base);
        Self { base: self.base, coeffs: self.coeffs[..=order - self.base].to_vec() }
    }

    pub fn map(&self, f: impl Fn(usize, Complex64) -> Complex64) -> Self {
        Self {
            base: self.base,
            coeffs: self.coeffs.iter().enumerate().map(|(k, &c)| f(self.base + k, c)).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|_, c| c * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        let base = self.base.min(other.base);
        let order = self.order().min(other.order()).max(base);
        Self::from_fn(base, order, |n| self.coeff_or_zero(n) + other.coeff_or_zero(n))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-ONE))
    }

    fn coeff_or_zero(&self, n: usize) -> Complex64 {
        if n < self.base || n > self.order() {
            ZERO
        } else {
            self.coeffs[n - self.base]
        }
    }

    /// Relative length (number of coefficients) shared by two operands.
    fn common_len(&self, other: &Self) -> usize {
        self.coeffs.len().min(other.coeffs.len())
    }

    /// Ordinary (Cauchy) product.
    pub fn cauchy_mul(&self, other: &Self) -> Self {
        let len = self.common_len(other);
        let a = &self.coeffs;
        let b = &other.coeffs;
        let coeffs = (0..len)
            .map(|k| (0..=k).map(|j| a[j] * b[k - j]).sum())
            .collect();
        Self { base: self.base + other.base, coeffs }
    }

    /// Hadamard (coefficient-wise) product of two series with equal base power.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::BasePowerMismatch(self.base, other.base));
        }
        let len = self.common_len(other);
        let coeffs = (0..len).map(|k| self.coeffs[k] * other.coeffs[k]).collect();
        Ok(Self { base: self.base, coeffs })
    }

    /// `z f'(z)`: the coefficient of `z^n` is multiplied by `n`.
    pub fn z_derivative(&self) -> Self {
        self.map(|n, c| c * n as f64)
    }

    /// Series quotient `self / divisor`.
    pub fn divide(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor.coeffs[0];
        if lead == ZERO {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if self.base < divisor.base {
            return Err(Error::NegativePower { numerator: self.base, denominator: divisor.base });
        }
        let len = self.common_len(divisor);
        let g = &divisor.coeffs;
        let mut h: Vec<Complex64> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= g[j] * h[k - j];
            }
            h.push(acc / lead);
        }
        Ok(Self { base: self.base - divisor.base, coeffs: h })
    }

    /// Divides by `z^k`, failing if that would leave negative powers.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.base {
            return Err(Error::NegativePower { numerator: self.base, denominator: k });
        }
        Ok(Self { base: self.base - k, coeffs: self.coeffs.clone() })
    }

    /// Multiplies by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        Self { base: self.base + k, coeffs: self.coeffs.clone() }
    }

    fn check_unit(&self) -> Result<()> {
        if self.base != 0 || (self.coeffs[0] - ONE).norm() > tolerance::CONSTANT_TERM {
            return Err(Error::NotUnitNormalized {
                base: self.base,
                constant: format!("{}", self.coeffs[0]),
            });
        }
        Ok(())
    }

    /// Formal logarithm of a series `1 + O(z)`.
    pub fn log_unit(&self) -> Result<Self> {
        self.check_unit()?;
        let u = &self.coeffs;
        let u0 = u[0];
        let mut l = vec![ZERO; u.len()];
        l[0] = u0.ln();
        for n in 1..u.len() {
            let mut acc = u[n] * n as f64;
            for k in 1..n {
                acc -= l[k] * u[n - k] * k as f64;
            }
            l[n] = acc / (u0 * n as f64);
        }
        Ok(Self { base: 0, coeffs: l })
    }

    /// Formal exponential of a series with base power zero.
    pub fn exp_unit(&self) -> Self {
        assert_eq!(self.base, 0, "exp_unit needs base power 0");
        let s = &self.coeffs;
        let mut e = vec![ZERO; s.len()];
        e[0] = s[0].exp();
        for n in 1..s.len() {
            let mut acc = ZERO;
            for k in 1..=n {
                acc += s[k] * e[n - k] * k as f64;
            }
            e[n] = acc / n as f64;
        }
        Self { base: 0, coeffs: e }
    }

    /// Principal real power of a series `1 + O(z)`.
    pub fn pow_real(&self, t: f64) -> Result<Self> {
        Ok(self.log_unit()?.scale(Complex64::new(t, 0.0)).exp_unit())
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        if z.norm() >= 1.0 {
            log::warn!("evaluating truncated series outside the unit disk at {z}");
        }
        let poly = self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c);
        poly * z.powu(self.base as u32)
    }
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, `(a)_0 = 1`.
pub fn pochhammer(a: Complex64, n: usize) -> Complex64 {
    (0..n).fold(ONE, |acc, k| acc * (a + k as f64))
}

/// Relative error of two scalars. Below [`tolerance::COEFF_SCALE_FLOOR`] the
/// difference is measured on that fixed scale instead, since the tail of a
/// rapidly decaying series carries rounding from its head.
pub fn rel_error(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm()).max(tolerance::COEFF_SCALE_FLOOR);
    (a - b).norm() / scale
}

/// Largest coefficient-wise relative error over the powers both series know.
pub fn max_rel_error(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
    let lo = a.base.min(b.base);
    let hi = a.order().min(b.order());
    (lo..=hi)
        .map(|n| rel_error(a.coeff_or_zero(n), b.coeff_or_zero(n)))
        .fold(0.0, f64::max)
}

/// Same as [`max_rel_error`], also returning the power where it occurs.
pub fn worst_coefficient(a: &TruncatedSeries, b: &TruncatedSeries) -> (usize, f64) {
    let lo = a.base.min(b.base);
    let hi = a.order().min(b.order());
    (lo..=hi)
        .map(|n| (n, rel_error(a.coeff_or_zero(n), b.coeff_or_zero(n))))
        .fold((lo, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn real(base: usize, coeffs: &[f64]) -> TruncatedSeries {
        TruncatedSeries::from_real(base, coeffs).unwrap()
    }

    fn close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) {
        let err = max_rel_error(a, b);
        assert!(err <= tol, "error {err:e} > {tol:e}\n{a:?}\n{b:?}");
    }

    #[test]
    fn add_identity_and_cancellation() {
        let f = real(1, &[1.0, 0.5, -2.0]);
        assert_eq!(f.add(&TruncatedSeries::zero(1, 3)), f);
        let sum = real(1, &[1.0, 1.0]).add(&real(1, &[1.0, -1.0]));
        assert_eq!(sum, real(1, &[2.0, 0.0]));
    }

    #[test]
    fn add_mixed_base_powers() {
        let s = real(2, &[1.0, 0.0, 0.0]).add(&real(3, &[1.0, 0.0]));
        assert_eq!(s.base_power(), 2);
        assert_eq!(s.coeffs(), &[c(1.0), c(1.0), c(0.0)]);
    }

    #[test]
    fn cauchy_products() {
        let one_plus = real(0, &[1.0, 1.0, 0.0]);
        let one_minus = real(0, &[1.0, -1.0, 0.0]);
        assert_eq!(one_plus.cauchy_mul(&one_minus), real(0, &[1.0, 0.0, -1.0]));
        let z = real(1, &[1.0, 0.0]);
        let zz = z.cauchy_mul(&z);
        assert_eq!((zz.base_power(), zz.leading()), (2, c(1.0)));
        // (1+z)^2 against the binomial expansion.
        assert_eq!(one_plus.cauchy_mul(&one_plus), real(0, &[1.0, 2.0, 1.0]));
    }

    #[test]
    fn hadamard_rules() {
        let f = real(1, &[1.0, 2.0]);
        let g = real(1, &[1.0, 3.0]);
        assert_eq!(f.hadamard(&g).unwrap(), real(1, &[1.0, 6.0]));
        let ones = TruncatedSeries::from_fn(1, 2, |_| c(1.0));
        assert_eq!(f.hadamard(&ones).unwrap(), f);
        assert_eq!(f.hadamard(&real(2, &[1.0])), Err(Error::BasePowerMismatch(1, 2)));
    }

    #[test]
    fn z_derivative_examples() {
        assert_eq!(TruncatedSeries::monomial(3, 5).z_derivative().coeff(3), c(3.0));
        assert_eq!(real(1, &[1.0, 0.0, 1.0]).z_derivative(), real(1, &[1.0, 0.0, 3.0]));
        let k = TruncatedSeries::constant(c(4.0), 3).z_derivative();
        assert!(k.coeffs().iter().all(|x| *x == c(0.0)));
    }

    #[test]
    fn division_examples() {
        let f = real(1, &[1.0, 0.3, -0.2, 0.1]);
        close(&f.divide(&f).unwrap(), &TruncatedSeries::constant(c(1.0), 3), 1e-15);
        let geo = TruncatedSeries::constant(c(1.0), 6).divide(&real(0, &[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(geo.coeffs().iter().all(|x| *x == c(1.0)));
        let q = real(2, &[1.0, 0.0]).divide(&real(1, &[1.0, 0.0])).unwrap();
        assert_eq!((q.base_power(), q.leading()), (1, c(1.0)));
        assert_eq!(f.divide(&real(1, &[0.0, 1.0])), Err(Error::ZeroLeadingCoefficient));
    }

    #[test]
    fn log_exp_examples() {
        let one = TruncatedSeries::constant(c(1.0), 6);
        assert!(one.log_unit().unwrap().coeffs().iter().all(|x| x.norm() == 0.0));
        let mut mercator = vec![0.0];
        for n in 1..=8 {
            mercator.push(if n % 2 == 1 { 1.0 / n as f64 } else { -1.0 / n as f64 });
        }
        let one_plus = TruncatedSeries::from_fn(0, 8, |n| c(if n < 2 { 1.0 } else { 0.0 }));
        close(&one_plus.log_unit().unwrap(), &real(0, &mercator), 1e-15);
        let u = real(0, &[1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        close(&u.log_unit().unwrap().exp_unit(), &u, 1e-14);
        assert!(matches!(real(0, &[2.0, 1.0]).log_unit(), Err(Error::NotUnitNormalized { .. })));
        assert!(matches!(real(1, &[1.0, 1.0]).log_unit(), Err(Error::NotUnitNormalized { .. })));
    }

    #[test]
    fn pow_examples() {
        let u = real(0, &[1.0, 0.4, -0.3, 0.2]);
        close(&u.pow_real(0.0).unwrap(), &TruncatedSeries::constant(c(1.0), 3), 0.0);
        let sqrt = real(0, &[1.0, 1.0, 0.0, 0.0]).pow_real(0.5).unwrap();
        close(&sqrt, &real(0, &[1.0, 0.5, -0.125, 0.0625]), 1e-15);
        close(&u.pow_real(2.0).unwrap().pow_real(0.5).unwrap(), &u, 1e-13);
    }

    #[test]
    fn eval_examples() {
        let z0 = Complex64::new(0.3, -0.4);
        assert!((TruncatedSeries::monomial(3, 5).eval(z0) - z0.powu(3)).norm() < 1e-16);
        assert_eq!(real(1, &[1.0, 2.0, 3.0]).eval(c(0.0)), c(0.0));
        let geo = TruncatedSeries::from_fn(0, 64, |_| c(1.0));
        // Oracle: the partial geometric sum (1 - x^65) / (1 - x).
        let exact = (1.0 - 0.5f64.powi(65)) / 0.5;
        assert!((geo.eval(c(0.5)).re - exact).abs() < 1e-15);
        assert!((geo.eval(c(0.5)).re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(Complex64::new(2.5, 1.0), 0), c(1.0));
        assert_eq!(pochhammer(c(1.0), 4), c(24.0));
        assert_eq!(pochhammer(c(-2.0), 3), c(0.0));
    }

    #[test]
    fn json_shape() {
        let s = TruncatedSeries::new(1, vec![c(1.0), Complex64::new(0.5, -0.25)]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"p":1,"N":2,"coeffs":[[1.0,0.0],[0.5,-0.25]]}"#);
        let back: TruncatedSeries = serde_json::from_str(r#"{"p":1,"coeffs":[[1,0],[1,0]]}"#).unwrap();
        assert_eq!(back, real(1, &[1.0, 1.0]));
        let plain: TruncatedSeries = serde_json::from_str(r#"{"p":1,"coeffs":[1,[0.5,2]]}"#).unwrap();
        assert_eq!(plain.coeff(2), Complex64::new(0.5, 2.0));
        let padded: TruncatedSeries = serde_json::from_str(r#"{"p":1,"N":3,"coeffs":[[1,0]]}"#).unwrap();
        assert_eq!(padded, real(1, &[1.0, 0.0, 0.0]));
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"p":2,"N":1,"coeffs":[[1,0]]}"#).is_err());
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(TruncatedSeries::new(2, vec![c(1.0), c(f64::NAN)]), Err(Error::NonFinite(3)));
    }

    fn arb_series(base: usize, len: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len).prop_map(move |v| {
            TruncatedSeries::new(base, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
                .unwrap()
        })
    }

    fn arb_unit(len: usize) -> impl Strategy<Value = TruncatedSeries> {
        arb_series(0, len).prop_map(|s| {
            s.map(|n, c| if n == 0 { Complex64::new(1.0, 0.0) } else { c * 0.3f64.powi(n as i32) })
        })
    }

    proptest! {
        #[test]
        fn products_commute_and_associate(f in arb_series(1, 12), g in arb_series(1, 12), h in arb_series(1, 12)) {
            prop_assert!(max_rel_error(&f.add(&g), &g.add(&f)) <= 1e-12);
            prop_assert!(max_rel_error(&f.cauchy_mul(&g), &g.cauchy_mul(&f)) <= 1e-12);
            prop_assert!(max_rel_error(&f.hadamard(&g).unwrap(), &g.hadamard(&f).unwrap()) <= 1e-12);
            let left = f.cauchy_mul(&g).cauchy_mul(&h);
            let right = f.cauchy_mul(&g.cauchy_mul(&h));
            // Products of O(1) coefficients can cancel; compare on the scale of the terms.
            let scale = left.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
            for (a, b) in left.coeffs().iter().zip(right.coeffs()) {
                prop_assert!((a - b).norm() <= 1e-12 * scale * 12.0);
            }
            let hh = f.hadamard(&g).unwrap().hadamard(&h).unwrap();
            prop_assert!(max_rel_error(&hh, &f.hadamard(&g.hadamard(&h).unwrap()).unwrap()) <= 1e-12);
        }

        #[test]
        fn divide_round_trips(f in arb_series(2, 16), g in arb_series(0, 16)) {
            let g = g.map(|n, c| if n == 0 { Complex64::new(1.0, 0.5) } else { c * 0.5f64.powi(n as i32) });
            let back = f.divide(&g).unwrap().cauchy_mul(&g);
            let scale = f.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
            for n in 2..=back.order() {
                prop_assert!((back.coeff(n) - f.coeff(n)).norm() <= 1e-10 * scale);
            }
        }

        #[test]
        fn leibniz_rules(f in arb_series(1, 10), g in arb_series(1, 10)) {
            let lhs = f.cauchy_mul(&g).z_derivative();
            let rhs = f.z_derivative().cauchy_mul(&g).add(&f.cauchy_mul(&g.z_derivative()));
            let scale = lhs.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
            for n in lhs.base_power()..=lhs.order() {
                prop_assert!((lhs.coeff(n) - rhs.coeff(n)).norm() <= 1e-13 * scale * n as f64);
            }
            let conv = f.hadamard(&g).unwrap().z_derivative();
            prop_assert!(max_rel_error(&conv, &f.hadamard(&g.z_derivative()).unwrap()) <= 1e-15);
        }

        #[test]
        fn powers_add(u in arb_unit(20), s in -2.0f64..2.0, t in -2.0f64..2.0) {
            let lhs = u.pow_real(s + t).unwrap();
            let rhs = u.pow_real(s).unwrap().cauchy_mul(&u.pow_real(t).unwrap());
            prop_assert!(max_rel_error(&lhs, &rhs) <= 1e-9);
        }

        #[test]
        fn square_root_of_square(u in arb_unit(20)) {
            let back = u.pow_real(2.0).unwrap().pow_real(0.5).unwrap();
            prop_assert!(max_rel_error(&back, &u) <= 1e-9);
        }

        #[test]
        fn json_round_trip(f in arb_series(3, 9)) {
            let text = serde_json::to_string(&f).unwrap();
            let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
