//! Bound-defect functions on the substitution interval.
//!
//! In the variable `t = (1+x^2)^(1/6)`, the signed gap between a blend at
//! parameter `p` and the Neuman-Sandor mean is a positive factor times the
//! *defect* evaluated here: `arcsinh(sqrt(t^6-1))` minus a rational
//! minorant whose coefficients carry `p`. The enclosure theorems amount to
//! the defect keeping one strict sign over `(1, 2^(1/6))` at the optimal
//! constants, which this module verifies by dense sampling, and to the
//! piecewise monotonicity witnessed by the sign pattern of the derivative
//! polynomial.

use libm::{expm1, log, sqrt};

use crate::arcsinh::arcsinh;
use crate::bounds::{BoundFamily, TWO_POW_SIXTH};
use crate::error::Error;
use crate::numeric::{bisect, chebyshev_nodes};
use crate::series;

/// Below this `s = sqrt(t^6-1)` the defect switches to its series: the
/// direct form is a cancellation of two `O(s)` terms down to `O(s^5)` (or
/// `O(s^7)` at the sharp upper constants), hopeless in binary64 near 1.
const SERIES_S_MAX: f64 = 0.25;

/// Defect of a family at parameter `p in (0,1)` and `t in [1, 2^(1/6)]`.
///
/// QA: `arcsinh(sqrt(t^6-1)) - 3 sqrt(t^6-1) / (p t^3 + 3(1-p) t + 2p)`;
/// CA: `arcsinh(sqrt(t^6-1)) - 6 sqrt(t^6-1) / (p t^6 + 6(1-p) t + 5p)`.
/// Exactly zero at `t = 1`.
pub fn defect(family: BoundFamily, p: f64, t: f64) -> Result<f64, Error> {
    check_params(p, t)?;
    // t^6 - 1 by expm1 keeps s accurate arbitrarily close to t = 1
    let s = sqrt(expm1(6.0 * log(t)));
    Ok(if s < SERIES_S_MAX {
        match family {
            BoundFamily::Qa => series::defect_series(&series::DEFECT_QA_SERIES, p, s),
            BoundFamily::Ca => series::defect_series(&series::DEFECT_CA_SERIES, p, s),
        }
    } else {
        match family {
            BoundFamily::Qa => {
                arcsinh(s) - 3.0 * s / (p * t * t * t + 3.0 * (1.0 - p) * t + 2.0 * p)
            }
            BoundFamily::Ca => {
                let t6 = 1.0 + s * s;
                arcsinh(s) - 6.0 * s / (p * t6 + 6.0 * (1.0 - p) * t + 5.0 * p)
            }
        }
    })
}

/// Numerator polynomial of the defect's derivative:
/// `d(defect)/dt = 3 (t-1)^2 poly(t) / (denominator^2 sqrt(t^6-1))`.
///
/// Degree 6 for QA, degree 12 for CA; evaluated by Horner with the
/// `p`-dependent coefficients expanded.
pub fn defect_poly(family: BoundFamily, p: f64, t: f64) -> Result<f64, Error> {
    check_params(p, t)?;
    let p2 = p * p;
    let coeffs_qa;
    let coeffs_ca;
    let coeffs: &[f64] = match family {
        BoundFamily::Qa => {
            coeffs_qa = [
                -3.0 * (1.0 - p),
                -6.0 * (1.0 - p),
                4.0 * p2 + 6.0 * p - 9.0,
                2.0 * (-2.0 * p2 + 9.0 * p - 6.0),
                3.0 * (-p2 + 4.0 * p - 2.0),
                2.0 * p2,
                p2,
            ];
            &coeffs_qa
        }
        BoundFamily::Ca => {
            coeffs_ca = [
                -12.0 * (1.0 - p),
                -24.0 * (1.0 - p),
                25.0 * p2 + 36.0 * p - 36.0,
                2.0 * (-5.0 * p2 + 54.0 * p - 24.0),
                3.0 * (-3.0 * p2 + 36.0 * p - 8.0),
                2.0 * p * (33.0 - 4.0 * p),
                p * (48.0 - 7.0 * p),
                6.0 * p * (5.0 - p),
                p * (12.0 + 5.0 * p),
                2.0 * p * (3.0 + 2.0 * p),
                3.0 * p2,
                2.0 * p2,
                p2,
            ];
            &coeffs_ca
        }
    };
    Ok(series::horner(coeffs, t))
}

fn check_params(p: f64, t: f64) -> Result<(), Error> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::ParamOutOfRange { name: "p", value: p });
    }
    if !(1.0..=TWO_POW_SIXTH).contains(&t) {
        return Err(Error::ParamOutOfRange { name: "t", value: t });
    }
    Ok(())
}

/// Outcome of a dense sign verification of one defect.
#[derive(Debug, Clone, Copy)]
pub struct DefectReport {
    pub family: BoundFamily,
    pub p: f64,
    pub sample_count: usize,
    pub min_value: f64,
    pub max_value: f64,
    /// The claimed strict sign held at every interior sample.
    pub sign_verified: bool,
    /// Negative defect means the sign claim is `< 0`.
    pub negative: bool,
    /// Interior root of the derivative polynomial, present when the
    /// derivative changes sign (the defect then falls and rises again).
    pub switch_point: Option<f64>,
    /// Defect at `t = 1` and `t = 2^(1/6)`.
    pub endpoint_values: [f64; 2],
}

/// Sample the defect on `n >= 100` interior Chebyshev nodes and verify it
/// keeps one strict sign, as the enclosure theorems require at the optimal
/// parameters.
///
/// The claimed sign is read off the endpoint: a defect ending at
/// `2^(1/6)` above `1e-12` must be positive throughout, one ending at
/// (numerically) zero or below must be negative. When the derivative
/// polynomial changes sign over the interval, its root is located by
/// bisection and the polynomial's sign pattern around it is checked,
/// confirming the fall-then-rise shape.
pub fn verify_signs(family: BoundFamily, p: f64, n: usize) -> Result<DefectReport, Error> {
    if n < 100 {
        return Err(Error::ParamOutOfRange { name: "n", value: n as f64 });
    }
    let at_one = defect(family, p, 1.0)?;
    let at_end = defect(family, p, TWO_POW_SIXTH)?;
    let negative = at_end <= 1e-12;

    let switch_point = {
        let p1 = defect_poly(family, p, 1.0)?;
        let p2 = defect_poly(family, p, TWO_POW_SIXTH)?;
        // the threshold ignores rounding noise: at the upper constants the
        // polynomial is exactly zero at t = 1 but evaluates to +-1e-15
        if p1 < -1e-9 && p2 > 1e-9 {
            let root = bisect(
                |t| defect_poly(family, p, t).expect("bracket in domain"),
                1.0,
                TWO_POW_SIXTH,
            )
            .expect("sign change bracketed");
            Some(root)
        } else {
            None
        }
    };

    let mut min_value = f64::INFINITY;
    let mut max_value = f64::NEG_INFINITY;
    for t in chebyshev_nodes(1.0, TWO_POW_SIXTH, n) {
        let v = defect(family, p, t)?;
        min_value = min_value.min(v);
        max_value = max_value.max(v);
        let bad = if negative { v >= 0.0 } else { v <= 0.0 };
        if bad {
            return Err(Error::SignViolation { t, value: v });
        }
        // derivative sign pattern: negative left of the switch, positive
        // right of it (a small window absorbs rounding of the root)
        if let Some(t0) = switch_point {
            if t < t0 - 1e-9 || t > t0 + 1e-9 {
                let d = defect_poly(family, p, t)?;
                if (t < t0) != (d < 0.0) {
                    return Err(Error::SignViolation { t, value: d });
                }
            }
        }
    }
    Ok(DefectReport {
        family,
        p,
        sample_count: n,
        min_value,
        max_value,
        sign_verified: true,
        negative,
        switch_point,
        endpoint_values: [at_one, at_end],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::constants;
    use crate::numeric::ulp_distance;

    // tools/gen_reference.py lemma
    const POLY_QA_ALPHA0_AT_T2: f64 = 0.569156238958331;
    const POLY_CA_LAMBDA0_AT_T2: f64 = 12.313359853104252;
    const DEFECT_QA_45_AT_T2: f64 = 2.770063511873828e-4;
    const DEFECT_QA_45_AT_105: f64 = 1.265725092358703e-5;
    const DEFECT_CA_825_AT_105: f64 = 6.803104815807188e-5;
    const SWITCH_T0: f64 = 1.0868517919336311;
    const SWITCH_T1: f64 = 1.087444405310529;

    #[test]
    fn zero_at_left_endpoint() {
        for family in [BoundFamily::Qa, BoundFamily::Ca] {
            for p in [0.8, 0.32, 0.5] {
                assert_eq!(defect(family, p, 1.0).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn reference_values() {
        let qa = defect(BoundFamily::Qa, 0.8, TWO_POW_SIXTH).unwrap();
        assert!((qa - DEFECT_QA_45_AT_T2).abs() <= 1e-15, "{qa:e}");
        let qa = defect(BoundFamily::Qa, 0.8, 1.05).unwrap();
        assert!((qa - DEFECT_QA_45_AT_105).abs() <= 1e-15, "{qa:e}");
        assert!(qa > 0.0);
        let ca = defect(BoundFamily::Ca, 0.32, 1.05).unwrap();
        assert!((ca - DEFECT_CA_825_AT_105).abs() <= 1e-15, "{ca:e}");
        assert!(ca > 0.0);
    }

    #[test]
    fn optimal_parameters_vanish_at_right_endpoint() {
        let c = constants();
        let qa = defect(BoundFamily::Qa, c.alpha0, TWO_POW_SIXTH).unwrap();
        assert!(qa.abs() <= 1e-12, "{qa:e}");
        let ca = defect(BoundFamily::Ca, c.lambda0, TWO_POW_SIXTH).unwrap();
        assert!(ca.abs() <= 1e-12, "{ca:e}");
    }

    #[test]
    fn poly_checkpoints() {
        let c = constants();
        let g1 = defect_poly(BoundFamily::Qa, c.alpha0, 1.0).unwrap();
        let want = 9.0 * (5.0 * c.alpha0 - 4.0);
        assert!((g1 - want).abs() <= 1e-12 && g1 < 0.0);

        let g2 = defect_poly(BoundFamily::Qa, c.alpha0, TWO_POW_SIXTH).unwrap();
        assert!((g2 - POLY_QA_ALPHA0_AT_T2).abs() <= 1e-12, "{g2:.17}");

        let h1 = defect_poly(BoundFamily::Ca, c.lambda0, 1.0).unwrap();
        let want = 18.0 * (25.0 * c.lambda0 - 8.0);
        assert!((h1 - want).abs() <= 1e-11 && h1 < 0.0);

        let h2 = defect_poly(BoundFamily::Ca, c.lambda0, TWO_POW_SIXTH).unwrap();
        assert!((h2 - POLY_CA_LAMBDA0_AT_T2).abs() <= 1e-11, "{h2:.17}");
    }

    #[test]
    fn factored_forms_match_expanded_polynomials() {
        // the derivative polynomials factor through (t-1) at the upper
        // constants; agreement checked on a dense grid
        let qa_factored = |t: f64| {
            (t - 1.0) / 25.0
                * (((((16.0 * t + 48.0) * t + 90.0) * t + 86.0) * t + 45.0) * t + 15.0)
        };
        let ca_factored = |t: f64| {
            let q = ((((((((((16.0 * t + 48.0) * t + 96.0) * t + 460.0) * t + 1140.0) * t
                + 2544.0)
                * t
                + 4832.0)
                * t
                + 8004.0)
                * t
                + 9510.0)
                * t
                + 7250.0)
                * t
                + 3825.0)
                * t
                + 1275.0;
            4.0 * (t - 1.0) / 625.0 * q
        };
        // agreement to 8 ulp of the evaluation scale (sum of |coefficient|
        // * t^i): both forms vanish at t = 1, so relative agreement there
        // is bounded by backward error, not forward error
        let qa_scale: f64 = 40.0;
        let ca_scale: f64 = 700.0;
        for i in 0..1000 {
            let t = 1.0 + (TWO_POW_SIXTH - 1.0) * (i as f64 + 0.5) / 1000.0;
            let g = defect_poly(BoundFamily::Qa, 0.8, t).unwrap();
            let diff = (g - qa_factored(t)).abs();
            assert!(
                ulp_distance(g, qa_factored(t)) <= 8 || diff <= 8.0 * f64::EPSILON * qa_scale,
                "qa at {t}: {g:e} vs {:e}",
                qa_factored(t)
            );
            let big = defect_poly(BoundFamily::Ca, 0.32, t).unwrap();
            let diff = (big - ca_factored(t)).abs();
            assert!(
                ulp_distance(big, ca_factored(t)) <= 8 || diff <= 8.0 * f64::EPSILON * ca_scale,
                "ca at {t}: {big:e} vs {:e}",
                ca_factored(t)
            );
        }
    }

    #[test]
    fn verify_signs_upper_constants_positive() {
        let r = verify_signs(BoundFamily::Qa, 0.8, 1000).unwrap();
        assert!(r.sign_verified && !r.negative);
        assert!(r.min_value > 0.0);
        assert!(r.switch_point.is_none());
        assert_eq!(r.endpoint_values[0], 0.0);

        let r = verify_signs(BoundFamily::Ca, 0.32, 1000).unwrap();
        assert!(!r.negative && r.min_value > 0.0 && r.switch_point.is_none());
    }

    #[test]
    fn verify_signs_lower_constants_negative_with_switch() {
        let c = constants();
        let r = verify_signs(BoundFamily::Qa, c.alpha0, 1000).unwrap();
        assert!(r.negative && r.max_value < 0.0);
        let t0 = r.switch_point.expect("derivative changes sign");
        assert!((t0 - SWITCH_T0).abs() <= 1e-12, "{t0:.17}");
        assert!(defect_poly(BoundFamily::Qa, c.alpha0, t0).unwrap().abs() <= 1e-12);

        let r = verify_signs(BoundFamily::Ca, c.lambda0, 1000).unwrap();
        assert!(r.negative && r.max_value < 0.0);
        let t1 = r.switch_point.expect("derivative changes sign");
        assert!((t1 - SWITCH_T1).abs() <= 1e-12, "{t1:.17}");
    }

    #[test]
    fn mid_parameter_defect_changes_sign() {
        // between the sharp constants the defect starts negative and ends
        // positive, so the uniform-sign claim must fail
        let c = constants();
        let p_mid = 0.5 * (c.alpha0 + 0.8);
        assert!(matches!(
            verify_signs(BoundFamily::Qa, p_mid, 1000),
            Err(Error::SignViolation { .. })
        ));
    }

    #[test]
    fn domain_checks() {
        assert!(matches!(
            defect(BoundFamily::Qa, 1.2, 1.05),
            Err(Error::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            defect(BoundFamily::Qa, 0.8, 0.99),
            Err(Error::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            verify_signs(BoundFamily::Qa, 0.8, 99),
            Err(Error::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn series_and_direct_agree_in_guard_band() {
        // frozen 50-digit values at s in the crossover band
        // (tools/gen_reference.py lemma); both evaluation paths must sit
        // within a hair of the truth
        let cases = [
            (BoundFamily::Qa, 0.8, 0.2f64, 1.0618241004324746e-8),
            (BoundFamily::Qa, 0.8, 0.3, 1.6850404711030808e-7),
            (BoundFamily::Ca, 0.32, 0.2, 5.545271012056302e-8),
            (BoundFamily::Ca, 0.32, 0.3, 8.845865227731501e-7),
        ];
        for (family, p, s, want) in cases {
            let table = match family {
                BoundFamily::Qa => &series::DEFECT_QA_SERIES,
                BoundFamily::Ca => &series::DEFECT_CA_SERIES,
            };
            let from_series = series::defect_series(table, p, s);
            let t = libm::pow(1.0 + s * s, 1.0 / 6.0);
            let direct = match family {
                BoundFamily::Qa => {
                    arcsinh(s) - 3.0 * s / (p * t * t * t + 3.0 * (1.0 - p) * t + 2.0 * p)
                }
                BoundFamily::Ca => {
                    arcsinh(s) - 6.0 * s / (p * (1.0 + s * s) + 6.0 * (1.0 - p) * t + 5.0 * p)
                }
            };
            assert!(
                (from_series - want).abs() <= 1e-6 * want.abs(),
                "series {family} p={p} s={s}: {from_series:e} vs {want:e}"
            );
            assert!(
                (direct - want).abs() <= 1e-6 * want.abs(),
                "direct {family} p={p} s={s}: {direct:e} vs {want:e}"
            );
        }
    }

    #[test]
    fn alpha0_case_guard_band_values() {
        let c = constants();
        // f(alpha0, t(s)) at s = 0.2 and s = 0.3, 50-digit reference
        for (s, want) in [(0.2f64, -1.8381359627525252e-7), (0.3, -1.231897897872878e-6)] {
            let t = libm::pow(1.0 + s * s, 1.0 / 6.0);
            let got = defect(BoundFamily::Qa, c.alpha0, t).unwrap();
            assert!(
                (got - want).abs() <= 1e-6 * want.abs(),
                "s={s}: {got:e} vs {want:e}"
            );
        }
    }
}
