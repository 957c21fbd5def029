//! Small numeric utilities: ulp-scale tolerances, bisection, Chebyshev
//! sampling grids and Richardson extrapolation.

use alloc::vec::Vec;

/// Spacing between `|x|` and the next representable value above it.
///
/// Used as the unit for "strict up to rounding" comparisons: a margin is
/// treated as strictly positive when it exceeds `-k * ulp(scale)` for a
/// small `k`.
pub fn ulp(x: f64) -> f64 {
    if x == 0.0 {
        return f64::MIN_POSITIVE;
    }
    let a = libm::fabs(x);
    if !a.is_finite() {
        return f64::NAN;
    }
    f64::from_bits(a.to_bits() + 1) - a
}

/// Number of representable values between `a` and `b`.
///
/// Returns `u64::MAX` for NaN inputs or sign disagreement (other than
/// `0.0` vs `-0.0`).
pub fn ulp_distance(a: f64, b: f64) -> u64 {
    if a.is_nan() || b.is_nan() {
        return u64::MAX;
    }
    if a == b {
        return 0;
    }
    let ab = a.to_bits() as i64;
    let bb = b.to_bits() as i64;
    if (ab < 0) != (bb < 0) {
        return u64::MAX;
    }
    ab.abs_diff(bb)
}

/// Bisection root of `f` on `[lo, hi]`, run until the bracket width drops
/// below two ulp of its midpoint.
///
/// Returns `None` when `f` has the same sign at both ends. Guaranteed to
/// terminate: the bracket halves every step and is capped at 200 steps.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> Option<f64> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if (flo > 0.0) == (fhi > 0.0) {
        return None;
    }
    let neg_low = flo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 2.0 * ulp(mid) || mid <= lo || mid >= hi {
            return Some(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if (fm < 0.0) == neg_low {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// `n` Chebyshev–Gauss nodes of `(lo, hi)`, ascending. All nodes are
/// interior and cluster towards both endpoints.
pub fn chebyshev_nodes(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mid = 0.5 * (lo + hi);
    let rad = 0.5 * (hi - lo);
    let n_f = n as f64;
    (0..n)
        .map(|j| {
            // j = 0 gives the node nearest lo
            let angle = core::f64::consts::PI * (2.0 * (n - j) as f64 - 1.0) / (2.0 * n_f);
            mid + rad * libm::cos(angle)
        })
        .collect()
}

/// Two-stage Richardson extrapolation from three samples.
///
/// `values[i]` is the quantity evaluated at step `h * ratio^i` with
/// `0 < ratio < 1`, and the error expansion is assumed to start with the
/// two exponents in `orders` (e.g. `[2.0, 4.0]` for an even expansion).
pub fn richardson3(values: [f64; 3], ratio: f64, orders: [f64; 2]) -> f64 {
    let r1 = libm::pow(ratio, orders[0]);
    let z0 = (values[1] - r1 * values[0]) / (1.0 - r1);
    let z1 = (values[2] - r1 * values[1]) / (1.0 - r1);
    let r2 = libm::pow(ratio, orders[1]);
    (z1 - r2 * z0) / (1.0 - r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ulp_is_local_spacing() {
        assert_eq!(ulp(1.0), f64::EPSILON);
        assert_eq!(ulp(-1.0), f64::EPSILON);
        assert!(ulp(0.0) > 0.0);
        assert_eq!(ulp(2.0), 2.0 * f64::EPSILON);
    }

    #[test]
    fn ulp_distance_counts_steps() {
        let a = 1.5f64;
        let b = f64::from_bits(a.to_bits() + 3);
        assert_eq!(ulp_distance(a, b), 3);
        assert_eq!(ulp_distance(a, a), 0);
        assert_eq!(ulp_distance(0.0, -0.0), 0);
        assert_eq!(ulp_distance(1.0, -1.0), u64::MAX);
        assert_eq!(ulp_distance(f64::NAN, 1.0), u64::MAX);
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let root = bisect(|x| x * x - 2.0, 1.0, 2.0).unwrap();
        assert!((root - core::f64::consts::SQRT_2).abs() <= 2.0 * ulp(root));
    }

    #[test]
    fn bisect_rejects_same_sign() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0).is_none());
    }

    #[test]
    fn chebyshev_nodes_interior_and_sorted() {
        let nodes = chebyshev_nodes(1.0, 2.0, 100);
        assert_eq!(nodes.len(), 100);
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(nodes[0] > 1.0 && nodes[99] < 2.0);
    }

    #[test]
    fn richardson_recovers_quadratic_limit() {
        // y(h) = 3 + h^2 - 0.25 h^4 sampled at h = 0.1, 0.05, 0.025
        let y = |h: f64| 3.0 + h * h - 0.25 * h * h * h * h;
        let est = richardson3([y(0.1), y(0.05), y(0.025)], 0.5, [2.0, 4.0]);
        assert!((est - 3.0).abs() < 1e-12);
    }

    #[test]
    fn richardson_recovers_linear_limit() {
        // residual after eliminating h and h^2 is the h^3 term, ~5e-11
        let y = |h: f64| 7.0 - 0.3 * h + 0.1 * h * h + 0.05 * h * h * h;
        let est = richardson3([y(0.001), y(0.0005), y(0.00025)], 0.5, [1.0, 2.0]);
        assert!((est - 7.0).abs() < 1e-9);
    }
}
