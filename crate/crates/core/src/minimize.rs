//! One-dimensional golden-section search.

/// `(sqrt(5) - 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Minimizes a unimodal `f` on `[a, b]` until the bracket is narrower than
/// `tol`. Returns the minimizer and the value there.
pub fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    assert!(a <= b && tol > 0.0);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Maximizes `f` on `[a, b]`; see [`golden_section`].
pub fn golden_section_max(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, v) = golden_section(|t| -f(t), a, b, tol);
    (x, -v)
}

/// Smallest value of `f` over `n` evenly spaced points of `[a, b]`.
pub fn scan_min(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> (f64, f64) {
    assert!(n >= 2);
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let x = a + step * i as f64;
            (x, f(x))
        })
        .fold((a, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola_minimum() {
        let (x, v) = golden_section(|x| (x - 0.3).powi(2) + 2.0, -1.0, 4.0, 1e-12);
        // The argmin of a smooth minimum is only resolved to about sqrt(eps).
        assert!((x - 0.3).abs() < 1e-7);
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn endpoint_minimum() {
        let (x, v) = golden_section(|x| x, 1.0, 2.0, 1e-10);
        assert!((x - 1.0).abs() < 1e-9);
        assert!((v - 1.0).abs() < 1e-9);
    }

    #[test]
    fn maximum_of_cosine() {
        let (x, v) = golden_section_max(f64::cos, -1.0, 2.0, 1e-10);
        assert!(x.abs() < 1e-7);
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scan_agrees_with_search() {
        let f = |x: f64| (x - 1.0).cosh();
        let (_, v) = golden_section(f, 0.0, 3.0, 1e-10);
        let (_, s) = scan_min(f, 0.0, 3.0, 30_001);
        assert!((v - s).abs() < 1e-8);
    }
}
