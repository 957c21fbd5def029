//! Sharp two-sided bounds on the Neuman-Sandor mean by blends of the
//! quadratic/contra-harmonic means with the arithmetic mean.
//!
//! Each family interpolates affinely, at parameter `p in [0, 1]`, between
//! a weighted geometric combination (`p = 0`) and the matching convex
//! combination (`p = 1`). The lower blend constants `alpha0`, `lambda0`
//! and the upper ones `4/5`, `8/25` are best possible: the enclosure they
//! produce is strict for every distinct pair and fails under any
//! perturbation towards the inside.

use alloc::boxed::Box;

use libm::{expm1, log1p, pow, sqrt};
use once_cell::race::OnceBox;

use crate::arcsinh::arcsinh;
use crate::error::Error;
use crate::means::{self, MeanKind};
use crate::pair::PositivePair;
use crate::ratio;

/// `2^(1/6)`, the upper end of the substitution variable `t = (1+x^2)^(1/6)`.
pub const TWO_POW_SIXTH: f64 = 1.122462048309373;

/// The two bound families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    /// Blend of the quadratic and arithmetic means, weights 1/3 and 2/3.
    Qa,
    /// Blend of the contra-harmonic and arithmetic means, weights 1/6 and 5/6.
    Ca,
}

impl core::fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundFamily::Qa => write!(f, "qa"),
            BoundFamily::Ca => write!(f, "ca"),
        }
    }
}

impl core::str::FromStr for BoundFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "qa" => Ok(BoundFamily::Qa),
            "ca" => Ok(BoundFamily::Ca),
            _ => Err(Error::ParamOutOfRange { name: "family", value: f64::NAN }),
        }
    }
}

/// Which end of an enclosure a perturbation attacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    Lower,
    Upper,
}

/// Residuals of the independent routes to each computed constant.
#[derive(Debug, Clone, Copy)]
pub struct Residuals {
    /// |closed form - root of the QA endpoint defect equation|
    pub alpha0_root: f64,
    /// |closed form - root of the CA endpoint defect equation|
    pub lambda0_root: f64,
    /// |(p0+1)^(1/p0) - 2 log(1+sqrt 2)| at the bisection result
    pub p0_equation: f64,
}

/// The optimal blend constants with their cross-check residuals.
///
/// `alpha0` and `lambda0` come from closed forms in `log(1+sqrt 2)` and
/// `2^(1/6)` and are re-derived as roots of the endpoint defect equations;
/// `beta = 4/5` and `mu = 8/25` are exact rationals; `p0` is the exponent
/// at which the generalized logarithmic mean touches the Neuman-Sandor
/// mean in the wide-ratio limit.
#[derive(Debug, Clone, Copy)]
pub struct SharpConstants {
    pub alpha0: f64,
    pub beta: f64,
    pub lambda0: f64,
    pub mu: f64,
    pub p0: f64,
    pub residuals: Residuals,
}

impl SharpConstants {
    /// Optimal lower blend parameter of a family.
    pub fn lower_constant(&self, family: BoundFamily) -> f64 {
        match family {
            BoundFamily::Qa => self.alpha0,
            BoundFamily::Ca => self.lambda0,
        }
    }

    /// Optimal upper blend parameter of a family.
    pub fn upper_constant(&self, family: BoundFamily) -> f64 {
        match family {
            BoundFamily::Qa => self.beta,
            BoundFamily::Ca => self.mu,
        }
    }
}

const RESIDUAL_TOL: f64 = 1e-12;

/// Compute the constants from scratch and cross-check every route.
///
/// `alpha0 = (3 - 3*2^(1/6) log(1+sqrt2)) / ((2 + sqrt2 - 3*2^(1/6)) log(1+sqrt2))`
/// and `lambda0 = (6 - 6*2^(1/6) log(1+sqrt2)) / ((7 - 6*2^(1/6)) log(1+sqrt2))`
/// are also the unique roots of `defect(family, p, 2^(1/6)) = 0`, and `p0`
/// solves `(p+1)^(1/p) = 2 log(1+sqrt2)` on [1, 3].
pub fn compute_constants() -> Result<SharpConstants, Error> {
    let k = arcsinh(1.0); // log(1 + sqrt 2)
    let t2 = TWO_POW_SIXTH;
    let sqrt2 = sqrt(2.0);

    let alpha0 = (3.0 - 3.0 * t2 * k) / ((2.0 + sqrt2 - 3.0 * t2) * k);
    let lambda0 = (6.0 - 6.0 * t2 * k) / ((7.0 - 6.0 * t2) * k);
    let beta = 0.8;
    let mu = 0.32;
    let p0 = solve_p0()?;

    let root = |family| {
        crate::numeric::bisect(
            |p| crate::defect::defect(family, p, t2).expect("bracket in domain"),
            match family {
                BoundFamily::Qa => 0.5,
                BoundFamily::Ca => 0.1,
            },
            match family {
                BoundFamily::Qa => 0.99,
                BoundFamily::Ca => 0.5,
            },
        )
    };
    let alpha0_root = root(BoundFamily::Qa).ok_or(Error::InternalInconsistency {
        what: "alpha0 endpoint-root bracket",
        residual: f64::NAN,
    })?;
    let lambda0_root = root(BoundFamily::Ca).ok_or(Error::InternalInconsistency {
        what: "lambda0 endpoint-root bracket",
        residual: f64::NAN,
    })?;

    let residuals = Residuals {
        alpha0_root: libm::fabs(alpha0 - alpha0_root),
        lambda0_root: libm::fabs(lambda0 - lambda0_root),
        p0_equation: libm::fabs(pow(p0 + 1.0, 1.0 / p0) - 2.0 * k),
    };
    for (what, r) in [
        ("alpha0 closed form vs endpoint root", residuals.alpha0_root),
        ("lambda0 closed form vs endpoint root", residuals.lambda0_root),
        ("p0 defining equation", residuals.p0_equation),
    ] {
        if !(r <= RESIDUAL_TOL) {
            return Err(Error::InternalInconsistency { what, residual: r });
        }
    }
    Ok(SharpConstants { alpha0, beta, lambda0, mu, p0, residuals })
}

static CONSTANTS: OnceBox<SharpConstants> = OnceBox::new();

/// Cached constants. Computed on first use; every later call is a
/// lock-free read of the same immutable record.
///
/// # Panics
/// If the cross-checks of [`compute_constants`] fail, which indicates a
/// miscompiled or corrupted build rather than a runtime condition.
pub fn constants() -> &'static SharpConstants {
    CONSTANTS.get_or_init(|| {
        Box::new(compute_constants().expect("sharp-constant cross-checks hold"))
    })
}

/// Bisection solution of `(p+1)^(1/p) = 2 log(1+sqrt2)` on [1, 3].
pub fn solve_p0() -> Result<f64, Error> {
    let target = 2.0 * arcsinh(1.0);
    crate::numeric::bisect(|p| pow(p + 1.0, 1.0 / p) - target, 1.0, 3.0).ok_or(
        Error::InternalInconsistency { what: "p0 bracket on [1,3]", residual: f64::NAN },
    )
}

/// Evaluate a blend: `p * convex + (1-p) * geometric` of the family's
/// mean combination, affine and nondecreasing in `p`.
pub fn blend(p: f64, family: BoundFamily, pair: &PositivePair) -> Result<f64, Error> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParamOutOfRange { name: "p", value: p });
    }
    let n = pair.normalized();
    Ok(n.scale * (1.0 + blend_excess(p, family, n.x)))
}

/// Excess of the blend over the arithmetic mean. Assembled as
/// `geometric_excess + p * gap` so that the affine structure in `p` is
/// exact and the `O(x^4)` gap survives rounding near the diagonal.
pub(crate) fn blend_excess(p: f64, family: BoundFamily, x: f64) -> f64 {
    sixth_root_excess(x) + p * blend_gap(family, x)
}

/// `(1 + x^2)^(1/6) - 1`, the excess of both geometric blend parts.
pub(crate) fn sixth_root_excess(x: f64) -> f64 {
    expm1(log1p(x * x) / 6.0)
}

/// Convex part minus geometric part of a family's blend, divided by the
/// arithmetic mean: `(u^3 - 3u + 2)/3` for QA and `(u^6 - 6u + 5)/6` for
/// CA with `u = (1+x^2)^(1/6)`. Both factor through `(u-1)^2`, which is
/// what makes the evaluation exact to relative rounding even when the gap
/// is far below one ulp of the means.
pub(crate) fn blend_gap(family: BoundFamily, x: f64) -> f64 {
    let e = sixth_root_excess(x); // u - 1
    match family {
        // (u-1)^2 (u+2) / 3
        BoundFamily::Qa => e * e * (e + 3.0) / 3.0,
        // (u-1)^2 (u^4 + 2u^3 + 3u^2 + 4u + 5) / 6
        BoundFamily::Ca => {
            let u = 1.0 + e;
            let u2 = u * u;
            e * e * (u2 * u2 + 2.0 * u2 * u + 3.0 * u2 + 4.0 * u + 5.0) / 6.0
        }
    }
}

/// A two-sided bound on the Neuman-Sandor mean from one family.
#[derive(Debug, Clone, Copy)]
pub struct Enclosure {
    pub family: BoundFamily,
    pub lower: f64,
    pub upper: f64,
    /// `upper - lower`.
    pub width: f64,
}

/// The sharp enclosure of a pair. For distinct components the mean lies
/// strictly inside (up to rounding of the endpoints); for equal ones the
/// enclosure collapses to the common value.
pub fn enclose(family: BoundFamily, pair: &PositivePair) -> Enclosure {
    let c = constants();
    let lower = blend(c.lower_constant(family), family, pair)
        .expect("optimal constants lie in [0,1]");
    let upper = blend(c.upper_constant(family), family, pair)
        .expect("optimal constants lie in [0,1]");
    Enclosure { family, lower, upper, width: upper - lower }
}

/// Comparison of one family's sharp enclosure against its fixed outer
/// bounds (geometric combination below, convex combination above).
#[derive(Debug, Clone, Copy)]
pub struct FamilyBoundsReport {
    pub family: BoundFamily,
    /// Geometric combination, the fixed lower bound.
    pub simple_lower: f64,
    /// Convex combination, the fixed upper bound.
    pub simple_upper: f64,
    pub sharp_lower: f64,
    pub sharp_upper: f64,
    /// The Neuman-Sandor mean of the pair.
    pub mean_value: f64,
    /// `M - simple_lower`, positive; formed in excess coordinates.
    pub lower_margin: f64,
    /// `simple_upper - M`, positive; formed in excess coordinates.
    pub upper_margin: f64,
    /// `sharp_lower - simple_lower = alpha * gap * A`, positive.
    pub tighten_lower: f64,
    /// `simple_upper - sharp_upper = (1 - beta) * gap * A`, positive.
    pub tighten_upper: f64,
    /// All four margins strictly positive.
    pub strict: bool,
}

/// Check the fixed two-sided bounds of both families and that the sharp
/// enclosures sit strictly inside them.
pub fn simple_bounds_check(pair: &PositivePair) -> Result<[FamilyBoundsReport; 2], Error> {
    if pair.is_degenerate() {
        return Err(Error::DegeneratePair);
    }
    let c = constants();
    let n = pair.normalized();
    let em = means::reduced_excess(MeanKind::NeumanSandor, n.x);
    let report = |family| {
        let geo = sixth_root_excess(n.x);
        let gap = blend_gap(family, n.x);
        let (lo_c, hi_c) = (c.lower_constant(family), c.upper_constant(family));
        FamilyBoundsReport {
            family,
            simple_lower: n.scale * (1.0 + geo),
            simple_upper: n.scale * (1.0 + geo + gap),
            sharp_lower: n.scale * (1.0 + geo + lo_c * gap),
            sharp_upper: n.scale * (1.0 + geo + hi_c * gap),
            mean_value: n.scale * (1.0 + em),
            lower_margin: n.scale * (em - geo),
            upper_margin: n.scale * (geo + gap - em),
            tighten_lower: n.scale * (lo_c * gap),
            tighten_upper: n.scale * ((1.0 - hi_c) * gap),
            strict: em - geo > 0.0
                && geo + gap - em > 0.0
                && lo_c * gap > 0.0
                && (1.0 - hi_c) * gap > 0.0,
        }
    };
    Ok([report(BoundFamily::Qa), report(BoundFamily::Ca)])
}

/// Margins of the generalized-log bounds `L_p0 < M < L_2`.
#[derive(Debug, Clone, Copy)]
pub struct LpBoundsReport {
    /// `L_p0(a, b)`.
    pub lower: f64,
    /// The Neuman-Sandor mean.
    pub mean_value: f64,
    /// `L_2(a, b)`.
    pub upper: f64,
    /// `M - L_p0`, positive.
    pub lower_margin: f64,
    /// `L_2 - M`, positive; formed in excess coordinates.
    pub upper_margin: f64,
    pub strict: bool,
}

/// Check `L_p0 < M < L_2` with `p0` from [`compute_constants`].
pub fn lp_bounds_check(pair: &PositivePair, p0: f64) -> Result<LpBoundsReport, Error> {
    if pair.is_degenerate() {
        return Err(Error::DegeneratePair);
    }
    let n = pair.normalized();
    let em = means::reduced_excess(MeanKind::NeumanSandor, n.x);
    let lower = means::mean(MeanKind::GeneralizedLog(p0), pair);
    let mean_value = n.scale * (1.0 + em);
    // L_2/A = sqrt(1 + x^2/3); its excess has a cancellation-free form
    let y = n.x * n.x / 3.0;
    let e2 = y / (1.0 + sqrt(1.0 + y));
    let upper = n.scale * (1.0 + e2);
    let lower_margin = mean_value - lower;
    let upper_margin = n.scale * (e2 - em);
    Ok(LpBoundsReport {
        lower,
        mean_value,
        upper,
        lower_margin,
        upper_margin,
        strict: lower_margin > 0.0 && upper_margin > 0.0,
    })
}

/// A grid point at which a perturbed blend constant loses containment.
#[derive(Debug, Clone, Copy)]
pub struct SharpnessWitness {
    /// Normalized difference of the witnessing pair `(1+x, 1-x)`.
    pub x: f64,
    /// Exact blend parameter at `x` (the ratio function value).
    pub ratio_value: f64,
    /// The perturbed constant it crossed.
    pub threshold: f64,
}

/// Scan a dyadic grid refined towards the relevant endpoint for a
/// containment failure of a perturbed constant.
///
/// Containment of `blend(p)` versus the mean is equivalent to comparing
/// `p` with the exact blend parameter at `x` (the blend minus the mean is
/// `(p - ratio(x))` times a positive factor), so the scan compares ratio
/// values against the threshold directly: near the sharp endpoints the
/// raw difference of blend and mean falls below one ulp and would be
/// unreadable. A `1e-14` guard keeps rounding of the ratio itself from
/// producing witnesses when `delta = 0`.
pub fn sharpness_witness(
    family: BoundFamily,
    side: BoundSide,
    delta: f64,
    grid_n: usize,
) -> Option<SharpnessWitness> {
    const K_MAX: f64 = 30.0;
    const GUARD: f64 = 1e-14;
    let c = constants();
    let threshold = match side {
        BoundSide::Lower => c.lower_constant(family) + delta,
        BoundSide::Upper => c.upper_constant(family) - delta,
    };
    for j in 1..=grid_n {
        let k = j as f64 * K_MAX / grid_n as f64;
        let x = match side {
            // the lower constant is sharp as x -> 1, the upper as x -> 0
            BoundSide::Lower => 1.0 - pow(2.0, -k),
            BoundSide::Upper => pow(2.0, -k),
        };
        if x <= 0.0 || x >= 1.0 {
            continue;
        }
        let r = ratio::blend_ratio(family, x).expect("grid x in (0,1)");
        let violated = match side {
            BoundSide::Lower => r <= threshold - GUARD,
            BoundSide::Upper => r >= threshold + GUARD,
        };
        if violated {
            return Some(SharpnessWitness { x, ratio_value: r, threshold });
        }
    }
    None
}
