//! Exact blend parameters and endpoint-limit sharpness scans.
//!
//! For each family and each normalized difference `x` there is exactly one
//! blend parameter reproducing the Neuman-Sandor mean:
//! `ratio(x) = (M/A - geometric part) / (convex part - geometric part)`.
//! Its range over `(0, 1)` is the open interval between the optimal
//! constants — the infimum is attained as `x -> 1` and the supremum as
//! `x -> 0` — which is the whole content of the sharpness claims. The scan
//! here samples the ratio on endpoint-refined grids and Richardson-
//! extrapolates both limits.

use alloc::vec::Vec;

use libm::{log2, pow};

use crate::arcsinh::arcsinh;
use crate::bounds::{self, BoundFamily};
use crate::error::Error;
use crate::numeric::richardson3;
use crate::series::{self, MEAN_GAP_SERIES};

/// Below this the ratio numerator `x - (1+x^2)^(1/6) arcsinh(x)` switches
/// to its series. The subtraction cancels five orders: in binary64 its
/// direct form carries a relative error of roughly `45 eps / x^4`, which
/// crosses 1e-10 near x = 0.1.
const SERIES_X_MAX: f64 = 0.15;

/// The exact blend parameter at `x in (0, 1]`.
///
/// Decreasing in `x`; approaches the upper constant (4/5 or 8/25) as
/// `x -> 0` and equals the lower constant (alpha0 or lambda0) at `x = 1`.
/// Accurate to better than 1e-10 over the whole domain, including far
/// below the series switch.
pub fn blend_ratio(family: BoundFamily, x: f64) -> Result<f64, Error> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::ParamOutOfRange { name: "x", value: x });
    }
    Ok(blend_ratio_unchecked(family, x))
}

pub(crate) fn blend_ratio_unchecked(family: BoundFamily, x: f64) -> f64 {
    let a = arcsinh(x);
    // (M/A - geometric part) = (x - t*arcsinh x)/arcsinh x, t = (1+x^2)^(1/6)
    let numerator = if x < SERIES_X_MAX {
        let x2 = x * x;
        x2 * x2 * x * series::horner(&MEAN_GAP_SERIES, x2)
    } else {
        let t = 1.0 + bounds::sixth_root_excess(x);
        x - t * a
    };
    numerator / (bounds::blend_gap(family, x) * a)
}

/// Sampled profile of one ratio function with its extrapolated limits.
#[derive(Debug, Clone)]
pub struct RatioProfile {
    pub family: BoundFamily,
    /// `(x, ratio(x))` pairs, ascending in `x`, geometrically refined
    /// towards both endpoints.
    pub samples: Vec<(f64, f64)>,
    /// Richardson-extrapolated `x -> 0` limit (the upper constant).
    pub limit_at_0: f64,
    /// Richardson-extrapolated `x -> 1` limit (the lower constant).
    pub limit_at_1: f64,
    /// Smallest sampled value; decreases towards `limit_at_1` as the grid
    /// deepens.
    pub inf_observed: f64,
    /// Largest sampled value; increases towards `limit_at_0`.
    pub sup_observed: f64,
}

/// Scan the ratio on `n >= 1000` points of a dyadic grid refined towards
/// both endpoints and extrapolate the endpoint limits.
///
/// The limits are approached with an `O(x^2)` leading correction at 0 and
/// an `O(1-x)` one at 1 (verified against the high-precision oracle), so
/// the extrapolations eliminate orders `[2, 4]` and `[1, 2]` respectively
/// on a step-halving subsequence at the grid's deepest exponents.
pub fn sharpness_scan(family: BoundFamily, n: usize) -> Result<RatioProfile, Error> {
    if n < 1000 {
        return Err(Error::ParamOutOfRange { name: "samples", value: n as f64 });
    }
    let m = n / 2;
    // deepest dyadic exponent grows with n (strictly finer brackets on
    // refinement) but stays shallow enough that samples remain strictly
    // inside the limits in binary64
    let k_max = log2(n as f64).min(22.0);

    let mut samples = Vec::with_capacity(2 * m);
    for j in (1..=m).rev() {
        let k = 1.0 + (j - 1) as f64 * (k_max - 1.0) / (m - 1) as f64;
        let x = pow(2.0, -k);
        samples.push((x, blend_ratio_unchecked(family, x)));
    }
    for j in 1..=m {
        let k = 1.0 + (j - 1) as f64 * (k_max - 1.0) / (m - 1) as f64;
        let x = 1.0 - pow(2.0, -k);
        samples.push((x, blend_ratio_unchecked(family, x)));
    }

    let mut inf_observed = f64::INFINITY;
    let mut sup_observed = f64::NEG_INFINITY;
    for &(_, r) in &samples {
        inf_observed = inf_observed.min(r);
        sup_observed = sup_observed.max(r);
    }

    let at = |k: f64| blend_ratio_unchecked(family, pow(2.0, -k));
    let limit_at_0 = richardson3([at(k_max - 2.0), at(k_max - 1.0), at(k_max)], 0.5, [2.0, 4.0]);
    let near1 = |k: f64| blend_ratio_unchecked(family, 1.0 - pow(2.0, -k));
    let limit_at_1 = richardson3(
        [near1(k_max - 2.0), near1(k_max - 1.0), near1(k_max)],
        0.5,
        [1.0, 2.0],
    );

    Ok(RatioProfile { family, samples, limit_at_0, limit_at_1, inf_observed, sup_observed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::constants;
    use crate::means::{self, MeanKind};
    use crate::pair::PositivePair;

    // tools/gen_reference.py ratio
    const R1_REF: [(f64, f64); 4] = [
        (0.25, 0.7980685098581751),
        (0.5, 0.7928239873605365),
        (0.75, 0.7854716852745101),
        (1.0, 0.7771478415220252),
    ];
    const R2_REF: [(f64, f64); 4] = [
        (0.25, 0.31599657206095305),
        (0.5, 0.3052676145278343),
        (0.75, 0.29057254599536264),
        (1.0, 0.2744194893639767),
    ];

    #[test]
    fn matches_reference_values() {
        // the 1e-11 budget is the direct numerator's conditioning at the
        // low end of the direct zone (~2 eps * x / (x^5 w) at x = 0.25);
        // it shrinks like x^-4 towards 1
        for &(x, want) in &R1_REF {
            let got = blend_ratio(BoundFamily::Qa, x).unwrap();
            assert!((got - want).abs() <= 1e-11, "r1({x}): {got:.17} vs {want:.17}");
        }
        for &(x, want) in &R2_REF {
            let got = blend_ratio(BoundFamily::Ca, x).unwrap();
            assert!((got - want).abs() <= 1e-11, "r2({x}): {got:.17} vs {want:.17}");
        }
    }

    #[test]
    fn small_x_series_matches_reference() {
        // 50-digit values at exact f64 inputs (tools/gen_reference.py ratio)
        let cases = [
            (BoundFamily::Qa, 1e-3, 0.7999999682539822),
            (BoundFamily::Qa, 1e-4, 0.7999999996825397),
            (BoundFamily::Ca, 1e-3, 0.3199999339682869),
            (BoundFamily::Ca, 1e-4, 0.3199999993396825),
        ];
        for (family, x, want) in cases {
            let got = blend_ratio(family, x).unwrap();
            assert!((got - want).abs() <= 1e-12, "{family} at {x}: {got:.17}");
        }
    }

    #[test]
    fn endpoints_reproduce_constants() {
        let c = constants();
        let r1 = blend_ratio(BoundFamily::Qa, 1.0).unwrap();
        assert!((r1 - c.alpha0).abs() <= 1e-14);
        let r2 = blend_ratio(BoundFamily::Ca, 1.0).unwrap();
        assert!((r2 - c.lambda0).abs() <= 1e-14);
    }

    #[test]
    fn domain_checks() {
        for bad in [0.0, -0.5, 1.0 + 1e-9] {
            assert!(blend_ratio(BoundFamily::Qa, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn series_direct_guard_band() {
        // both evaluation paths are trustworthy on [0.1, 0.2]; the switch
        // sits at 0.15
        for family in [BoundFamily::Qa, BoundFamily::Ca] {
            for i in 0..=20 {
                let x = 0.1 + 0.005 * i as f64;
                let a = arcsinh(x);
                let x2 = x * x;
                let from_series =
                    x2 * x2 * x * series::horner(&MEAN_GAP_SERIES, x2)
                        / (bounds::blend_gap(family, x) * a);
                let t = 1.0 + bounds::sixth_root_excess(x);
                let direct = (x - t * a) / (bounds::blend_gap(family, x) * a);
                assert!(
                    (from_series - direct).abs() <= 1e-9 * direct.abs(),
                    "{family} at {x}: {from_series:.17} vs {direct:.17}"
                );
            }
        }
    }

    use crate::arcsinh::arcsinh;

    #[test]
    fn ratio_is_the_exact_blend_parameter() {
        // blend(ratio(x)) must reproduce the mean itself
        for i in 1..40 {
            let x = i as f64 / 40.0;
            let pair = PositivePair::new(1.0 + x, 1.0 - x).unwrap();
            let m = means::mean(MeanKind::NeumanSandor, &pair);
            for family in [BoundFamily::Qa, BoundFamily::Ca] {
                let p = blend_ratio(family, x).unwrap();
                let b = bounds::blend(p, family, &pair).unwrap();
                assert!(
                    (b - m).abs() <= 1e-10 * m,
                    "{family} at x={x}: blend {b:.17} vs mean {m:.17}"
                );
            }
        }
    }

    #[test]
    fn ratio_ties_to_defect_functions() {
        // defect(p, t(x)) = (p - ratio(x)) * gap * s * arcsinh(x) / denom
        // with s = 3 (QA) or 6 (CA); the two modules must agree through
        // this identity
        let p = 0.5;
        for &x in &[0.3, 0.6, 0.9] {
            let t = libm::pow(1.0 + x * x, 1.0 / 6.0);
            for family in [BoundFamily::Qa, BoundFamily::Ca] {
                let (scale, denom) = match family {
                    BoundFamily::Qa => {
                        (3.0, p * t * t * t + 3.0 * (1.0 - p) * t + 2.0 * p)
                    }
                    BoundFamily::Ca => {
                        (6.0, p * (1.0 + x * x) + 6.0 * (1.0 - p) * t + 5.0 * p)
                    }
                };
                let r = blend_ratio(family, x).unwrap();
                let predicted =
                    (p - r) * bounds::blend_gap(family, x) * scale * arcsinh(x) / denom;
                let direct = crate::defect::defect(family, p, t).unwrap();
                assert!(
                    (direct - predicted).abs() <= 1e-10 * direct.abs().max(1e-8),
                    "{family} x={x}: {direct:e} vs {predicted:e}"
                );
            }
        }
    }

    #[test]
    fn scan_limits_and_brackets() {
        let c = constants();
        let p1 = sharpness_scan(BoundFamily::Qa, 2000).unwrap();
        assert!((p1.limit_at_0 - 0.8).abs() <= 1e-6, "{:.12}", p1.limit_at_0);
        assert!((p1.limit_at_1 - c.alpha0).abs() <= 1e-6, "{:.12}", p1.limit_at_1);
        assert!(p1.inf_observed > p1.limit_at_1);
        assert!(p1.sup_observed < p1.limit_at_0);
        for w in p1.samples.windows(2) {
            assert!(w[0].0 <= w[1].0, "samples not sorted");
        }
        for &(_, r) in &p1.samples {
            assert!(r > p1.limit_at_1 && r < p1.limit_at_0);
        }

        let p2 = sharpness_scan(BoundFamily::Ca, 2000).unwrap();
        assert!((p2.limit_at_0 - 0.32).abs() <= 1e-6);
        assert!((p2.limit_at_1 - c.lambda0).abs() <= 1e-6);
    }

    #[test]
    fn refinement_tightens_brackets() {
        let coarse = sharpness_scan(BoundFamily::Qa, 1000).unwrap();
        let fine = sharpness_scan(BoundFamily::Qa, 10_000).unwrap();
        assert!(fine.inf_observed < coarse.inf_observed);
        assert!(fine.sup_observed > coarse.sup_observed);
    }

    #[test]
    fn scan_rejects_small_n() {
        assert!(sharpness_scan(BoundFamily::Qa, 999).is_err());
    }
}
