//! The bivariate means and their ordering/ratio checks.
//!
//! Every mean here is symmetric and homogeneous of degree 1, so it factors
//! as `A(a,b) * m(x)` with `x = (a-b)/(a+b)`. Evaluation goes through the
//! *excess* `m(x) - 1`: excesses of different means agree to `O(x^2)` near
//! the diagonal, so gaps between means stay meaningful long after the full
//! values have collapsed to the same binary64. The four arc-function means
//! switch to a short Maclaurin series below `x = 1e-4`, where `x/f(x)`
//! is an indeterminate form at the diagonal itself.

use core::fmt;
use core::str::FromStr;

use libm::{asin, atan, atanh, exp, expm1, fabs, log, log1p, pow, sqrt};

use crate::arcsinh::arcsinh;
use crate::error::Error;
use crate::pair::PositivePair;

/// The means exposed by this crate.
///
/// `GeneralizedLog(p)` is the one-parameter power family; `p = -1` and
/// `p = 0` dispatch to the logarithmic and identric closed forms (both are
/// removable singularities of the general formula), `p = 1` recovers the
/// arithmetic mean and `p = 2` the quadratic-type upper bound `sqrt((a^2 +
/// ab + b^2)/3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Logarithmic,
    ContraHarmonic,
    Quadratic,
    FirstSeiffert,
    SecondSeiffert,
    NeumanSandor,
    GeneralizedLog(f64),
}

/// The eight fixed means in their proven ascending order.
pub const CHAIN: [MeanKind; 8] = [
    MeanKind::Geometric,
    MeanKind::Logarithmic,
    MeanKind::FirstSeiffert,
    MeanKind::Arithmetic,
    MeanKind::NeumanSandor,
    MeanKind::SecondSeiffert,
    MeanKind::Quadratic,
    MeanKind::ContraHarmonic,
];

/// The six means whose Ky Fan ratios are strictly ordered on (0, 1/2).
pub const KY_FAN_CHAIN: [MeanKind; 6] = [
    MeanKind::Geometric,
    MeanKind::Logarithmic,
    MeanKind::FirstSeiffert,
    MeanKind::Arithmetic,
    MeanKind::NeumanSandor,
    MeanKind::SecondSeiffert,
];

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanKind::Arithmetic => write!(f, "arithmetic"),
            MeanKind::Geometric => write!(f, "geometric"),
            MeanKind::Logarithmic => write!(f, "logarithmic"),
            MeanKind::ContraHarmonic => write!(f, "contra-harmonic"),
            MeanKind::Quadratic => write!(f, "quadratic"),
            MeanKind::FirstSeiffert => write!(f, "first-seiffert"),
            MeanKind::SecondSeiffert => write!(f, "second-seiffert"),
            MeanKind::NeumanSandor => write!(f, "neuman-sandor"),
            MeanKind::GeneralizedLog(p) => write!(f, "generalized-log:{p}"),
        }
    }
}

/// Failure to parse a [`MeanKind`] name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseKindError;

impl fmt::Display for ParseKindError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown mean kind (expected arithmetic, geometric, logarithmic, \
             contra-harmonic, quadratic, first-seiffert, second-seiffert, \
             neuman-sandor or generalized-log:<p>)"
        )
    }
}

impl core::error::Error for ParseKindError {}

impl FromStr for MeanKind {
    type Err = ParseKindError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "arithmetic" => MeanKind::Arithmetic,
            "geometric" => MeanKind::Geometric,
            "logarithmic" => MeanKind::Logarithmic,
            "contra-harmonic" => MeanKind::ContraHarmonic,
            "quadratic" => MeanKind::Quadratic,
            "first-seiffert" => MeanKind::FirstSeiffert,
            "second-seiffert" => MeanKind::SecondSeiffert,
            "neuman-sandor" => MeanKind::NeumanSandor,
            _ => {
                let p = s
                    .strip_prefix("generalized-log:")
                    .and_then(|v| v.parse::<f64>().ok())
                    .filter(|p| p.is_finite())
                    .ok_or(ParseKindError)?;
                MeanKind::GeneralizedLog(p)
            }
        })
    }
}

/// Evaluate a mean. Total for every valid pair: equal components return
/// that component exactly (the continuity limit; the defining formulas are
/// 0/0 there), and the result always lies in `[lo, hi]`.
pub fn mean(kind: MeanKind, pair: &PositivePair) -> f64 {
    if pair.is_degenerate() {
        return pair.hi();
    }
    let (hi, lo) = (pair.hi(), pair.lo());
    match kind {
        MeanKind::GeneralizedLog(p) => gen_log(p, hi, lo),
        // sqrt*sqrt keeps full relative accuracy at any component ratio,
        // where the scale*(1+excess) form would cancel
        MeanKind::Geometric => sqrt(hi) * sqrt(lo),
        _ => {
            let scale = hi * 0.5 + lo * 0.5;
            let x = (hi - lo) * 0.5 / scale;
            let xm1 = lo / scale; // 1 - x, computed without cancellation
            scale * (1.0 + chain_excess(kind, x, xm1, EvalPath::Auto))
        }
    }
}

/// `mean(kind, (1+x, 1-x))` — the shape factor of a mean at normalized
/// difference `x in [0, 1)`. Switches to the series form below the
/// threshold automatically.
pub fn reduced_mean(kind: MeanKind, x: f64) -> f64 {
    1.0 + reduced_excess(kind, x)
}

/// `reduced_mean(kind, x) - 1`, kept to full relative accuracy near the
/// diagonal. Differences of excesses are how the ordering checks resolve
/// gaps far below one ulp of the means themselves.
pub fn reduced_excess(kind: MeanKind, x: f64) -> f64 {
    chain_excess(kind, x, 1.0 - x, EvalPath::Auto)
}

/// Shape factor evaluated from the defining arc-function formula only
/// (no series switch). Requires `x > 0` for the arc-function means.
pub fn reduced_mean_direct(kind: MeanKind, x: f64) -> f64 {
    1.0 + chain_excess(kind, x, 1.0 - x, EvalPath::Direct)
}

/// Shape factor evaluated from the Maclaurin series only. The truncation
/// error is `O(x^6)`, so this is meaningful for `|x|` up to ~1e-2; the
/// auto path uses it below 1e-4.
pub fn reduced_mean_series(kind: MeanKind, x: f64) -> f64 {
    1.0 + chain_excess(kind, x, 1.0 - x, EvalPath::Series)
}

/// Report of the full ascending chain at one pair.
#[derive(Debug, Clone)]
pub struct ChainReport {
    /// The eight means in chain order (ascending when `strict` holds).
    pub entries: [(MeanKind, f64); 8],
    /// Adjacent differences, computed in excess form: these stay accurate
    /// even when consecutive `entries` round to the same binary64.
    pub gaps: [f64; 7],
    /// All gaps strictly positive.
    pub strict: bool,
}

/// Evaluate all eight chain means and their adjacent gaps.
///
/// Near-diagonal pairs are the interesting case: at `a/b - 1 ~ 1e-9` the
/// gaps are `O(x^2 * A) ~ 1e-19 A`, far below one ulp of the means, and
/// survive only because they are formed from excess differences.
pub fn chain_check(pair: &PositivePair) -> Result<ChainReport, Error> {
    if pair.is_degenerate() {
        return Err(Error::DegeneratePair);
    }
    let (hi, lo) = (pair.hi(), pair.lo());
    let scale = hi * 0.5 + lo * 0.5;
    let x = (hi - lo) * 0.5 / scale;
    let xm1 = lo / scale;

    let mut excesses = [0.0; 8];
    for (e, kind) in excesses.iter_mut().zip(CHAIN) {
        *e = chain_excess(kind, x, xm1, EvalPath::Auto);
    }
    let mut entries = [(MeanKind::Arithmetic, 0.0); 8];
    for i in 0..8 {
        entries[i] = (CHAIN[i], scale * (1.0 + excesses[i]));
    }
    let mut gaps = [0.0; 7];
    for i in 0..7 {
        gaps[i] = scale * (excesses[i + 1] - excesses[i]);
    }
    let strict = gaps.iter().all(|&g| g > 0.0);
    Ok(ChainReport { entries, gaps, strict })
}

/// Report of the Ky Fan ratio chain at one pair from (0, 1/2)^2.
#[derive(Debug, Clone)]
pub struct KyFanReport {
    /// `mean(k, (a,b)) / mean(k, (1-a,1-b))` for the six chain means.
    pub ratios: [(MeanKind, f64); 6],
    /// Adjacent ratio differences.
    pub gaps: [f64; 5],
    /// All gaps strictly positive.
    pub strict: bool,
}

/// Ky Fan ratios `m(a,b)/m(a',b')` with `a' = 1-a`, `b' = 1-b`, which are
/// strictly increasing along the chain for distinct arguments in (0, 1/2).
pub fn ky_fan_check(pair: &PositivePair) -> Result<KyFanReport, Error> {
    if pair.hi() >= 0.5 {
        return Err(Error::OutOfDomain { name: "a", value: pair.hi() });
    }
    if pair.is_degenerate() {
        return Err(Error::DegeneratePair);
    }
    // components are in (0, 1/2), so the complements are in (1/2, 1)
    let complement = PositivePair::new(1.0 - pair.hi(), 1.0 - pair.lo())
        .expect("complement of a pair in (0,1/2) is valid");

    let mut ratios = [(MeanKind::Arithmetic, 0.0); 6];
    for (slot, kind) in ratios.iter_mut().zip(KY_FAN_CHAIN) {
        *slot = (kind, mean(kind, pair) / mean(kind, &complement));
    }
    let mut gaps = [0.0; 5];
    for i in 0..5 {
        gaps[i] = ratios[i + 1].1 - ratios[i].1;
    }
    let strict = gaps.iter().all(|&g| g > 0.0);
    Ok(KyFanReport { ratios, gaps, strict })
}

/// Margins of the three product/square relations tying M to A, T and P.
#[derive(Debug, Clone, Copy)]
pub struct SquaresReport {
    /// `M^2 - A*T`, positive.
    pub product_margin: f64,
    /// `(A^2 + T^2)/2 - M^2`, positive.
    pub rms_margin: f64,
    /// `A^2 - P*M`, positive.
    pub seiffert_margin: f64,
    /// All three margins strictly positive.
    pub strict: bool,
}

/// Check `A T < M^2 < (A^2 + T^2)/2` and `P M < A^2`.
///
/// The margins are `O(x^4 * A^2)`, so they are assembled from excesses;
/// forming them from the squared means would drown them in rounding for
/// near-diagonal pairs.
pub fn squares_check(pair: &PositivePair) -> Result<SquaresReport, Error> {
    if pair.is_degenerate() {
        return Err(Error::DegeneratePair);
    }
    let (hi, lo) = (pair.hi(), pair.lo());
    let scale = hi * 0.5 + lo * 0.5;
    let x = (hi - lo) * 0.5 / scale;
    let xm1 = lo / scale;
    let em = chain_excess(MeanKind::NeumanSandor, x, xm1, EvalPath::Auto);
    let et = chain_excess(MeanKind::SecondSeiffert, x, xm1, EvalPath::Auto);
    let ep = chain_excess(MeanKind::FirstSeiffert, x, xm1, EvalPath::Auto);
    let s2 = scale * scale;

    // M^2 - A T = A^2 [(1+em)^2 - (1+et)]
    let product_margin = s2 * (2.0 * em + em * em - et);
    // (A^2 + T^2)/2 - M^2 = A^2 [et + et^2/2 - 2 em - em^2]
    let rms_margin = s2 * (et + 0.5 * et * et - 2.0 * em - em * em);
    // A^2 - P M = -A^2 [ep + em + ep em]
    let seiffert_margin = -s2 * (ep + em + ep * em);

    let strict =
        product_margin > 0.0 && rms_margin > 0.0 && seiffert_margin > 0.0;
    Ok(SquaresReport { product_margin, rms_margin, seiffert_margin, strict })
}

// --------------------------------------------------------------------------

/// Below this the arc-function shapes switch to their series.
const SERIES_X_MAX: f64 = 1e-4;

#[derive(Clone, Copy, PartialEq)]
pub(crate) enum EvalPath {
    Auto,
    Direct,
    Series,
}

/// Excess `m(x) - 1` of a chain mean; `xm1` must equal `1 - x` but is
/// passed separately so callers with access to the original pair can
/// supply it without cancellation.
pub(crate) fn chain_excess(kind: MeanKind, x: f64, xm1: f64, strategy: EvalPath) -> f64 {
    match kind {
        MeanKind::Arithmetic => 0.0,
        MeanKind::ContraHarmonic => x * x,
        MeanKind::Quadratic => x * x / (1.0 + sqrt(1.0 + x * x)),
        MeanKind::Geometric => {
            // sqrt(1-x^2) - 1 without forming 1 - x^2
            let g = sqrt(xm1 * (2.0 - xm1));
            -(x * x) / (1.0 + g)
        }
        MeanKind::NeumanSandor => {
            arc_excess(x, strategy, 1.0 / 6.0, -17.0 / 360.0, arcsinh(x))
        }
        MeanKind::SecondSeiffert => {
            arc_excess(x, strategy, 1.0 / 3.0, -4.0 / 45.0, atan(x))
        }
        MeanKind::FirstSeiffert => {
            arc_excess(x, strategy, -1.0 / 6.0, -17.0 / 360.0, asin_stable(x, xm1))
        }
        MeanKind::Logarithmic => {
            arc_excess(x, strategy, -1.0 / 3.0, -4.0 / 45.0, atanh_stable(x, xm1))
        }
        MeanKind::GeneralizedLog(p) => gen_log(p, 1.0 + x, xm1) - 1.0,
    }
}

/// `x/f(x) - 1` with a series fallback. The coefficients are the exact
/// rationals of the `x/f` Maclaurin series (see tools/gen_reference.py):
/// truncation is `O(x^6)`, below 1e-24 at the switch point.
fn arc_excess(x: f64, strategy: EvalPath, e2: f64, e4: f64, f_of_x: f64) -> f64 {
    let series = match strategy {
        EvalPath::Auto => x < SERIES_X_MAX,
        EvalPath::Series => true,
        EvalPath::Direct => false,
    };
    if series {
        let y = x * x;
        (e2 + e4 * y) * y
    } else {
        (x - f_of_x) / f_of_x
    }
}

/// `asin(x)` with the complementary-angle form near 1, where the direct
/// call amplifies the rounding of `x` through the infinite derivative.
fn asin_stable(x: f64, xm1: f64) -> f64 {
    if x <= 0.9 {
        asin(x)
    } else {
        core::f64::consts::FRAC_PI_2 - 2.0 * asin(sqrt(0.5 * xm1))
    }
}

/// `atanh(x)` via the log-ratio form near 1 (the pole).
fn atanh_stable(x: f64, xm1: f64) -> f64 {
    if x <= 0.9 {
        atanh(x)
    } else {
        0.5 * log((2.0 - xm1) / xm1)
    }
}

/// Generalized logarithmic mean `L_p`, with the removable singularities
/// at `p = 0` (identric) and `p = -1` (logarithmic) dispatched to their
/// closed forms.
///
/// Accuracy: a few ulp for `|p|` and `|p+1|` of order one. Approaching
/// the removable singularities the `1/p` exponent amplifies the rounding
/// of the inner bracket, so the relative error grows like
/// `eps / min(|p|, |p+1|)` until the dispatch below `1e-12` hands over to
/// the exact closed forms; at `p = 1e-8` that is still ~1e-8, well inside
/// the continuity tolerance this crate tests.
fn gen_log(p: f64, hi: f64, lo: f64) -> f64 {
    debug_assert!(p.is_finite());
    if hi == lo {
        return hi;
    }
    if fabs(p) < 1e-12 {
        return identric(hi, lo);
    }
    if fabs(p + 1.0) < 1e-12 {
        return log_mean(hi, lo);
    }
    // [(hi^(p+1) - lo^(p+1)) / ((p+1)(hi - lo))]^(1/p)
    //   = lo * [expm1((p+1) log1p(h)) / ((p+1) h)]^(1/p),  h = (hi-lo)/lo
    let h = (hi - lo) / lo;
    let q = (p + 1.0) * log1p(h);
    if q > 700.0 {
        // expm1 would overflow; at this size exp(-q) is zero anyway
        lo * exp((q - log((p + 1.0) * h)) / p)
    } else {
        lo * pow(expm1(q) / ((p + 1.0) * h), 1.0 / p)
    }
}

/// Identric mean `(1/e) (hi^hi / lo^lo)^(1/(hi-lo))` via its logarithm.
fn identric(hi: f64, lo: f64) -> f64 {
    let h = (hi - lo) / lo;
    lo * exp((1.0 + h) * log1p(h) / h - 1.0)
}

/// Logarithmic mean `(hi - lo)/(log hi - log lo)`.
fn log_mean(hi: f64, lo: f64) -> f64 {
    let h = (hi - lo) / lo;
    lo * h / log1p(h)
}
