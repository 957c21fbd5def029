//! Validated argument pairs and the symmetry/scale reduction.

use crate::error::Error;
use crate::means::{self, MeanKind};

/// A pair of positive finite reals, the argument of every bivariate mean.
///
/// Construction canonicalizes the order (larger component first), which
/// makes every downstream evaluation symmetric by construction. The means
/// themselves are defined at `a = b` by their continuity limit, so equal
/// components are accepted here; operations that genuinely need distinct
/// arguments report [`Error::DegeneratePair`] themselves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    hi: f64,
    lo: f64,
}

impl PositivePair {
    /// Validates `a, b > 0` and finite (NaN and infinities rejected).
    pub fn new(a: f64, b: f64) -> Result<Self, Error> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(a) || !ok(b) {
            return Err(Error::InvalidPair { a, b });
        }
        if a >= b {
            Ok(Self { hi: a, lo: b })
        } else {
            Ok(Self { hi: b, lo: a })
        }
    }

    /// Larger component.
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Smaller component.
    pub fn lo(&self) -> f64 {
        self.lo
    }

    /// True when both components are equal (all means collapse to it).
    pub fn is_degenerate(&self) -> bool {
        self.hi == self.lo
    }

    /// Reduce to the normalized difference and the arithmetic-mean scale.
    pub fn normalized(&self) -> NormalizedArg {
        let scale = self.hi * 0.5 + self.lo * 0.5;
        let x = (self.hi - self.lo) * 0.5 / scale;
        NormalizedArg {
            // component ratios beyond ~4e15 round x up to 1.0; clamp to
            // keep the stated range, at the cost of accuracy out there
            x: x.min(ONE_BELOW_1),
            scale,
        }
    }
}

const ONE_BELOW_1: f64 = 0.9999999999999999; // largest f64 below 1

/// A mean argument reduced by symmetry and homogeneity: `x = (a-b)/(a+b)`
/// in `[0, 1)` and the scale `A(a, b)`. Every mean in the chain factors as
/// `scale * m(x)` for a shape function `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedArg {
    /// Normalized difference, `0 <= x < 1`.
    pub x: f64,
    /// Arithmetic mean of the original pair.
    pub scale: f64,
}

impl NormalizedArg {
    /// Reconstruct a mean from the reduced form; agrees with
    /// [`means::mean`] on the original pair to a few ulp.
    pub fn mean(&self, kind: MeanKind) -> f64 {
        self.scale * means::reduced_mean(kind, self.x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_components() {
        for (a, b) in [
            (0.0, 1.0),
            (-1.0, 2.0),
            (1.0, f64::NAN),
            (f64::INFINITY, 1.0),
            (1.0, -0.0),
        ] {
            assert!(matches!(
                PositivePair::new(a, b),
                Err(Error::InvalidPair { .. })
            ));
        }
    }

    #[test]
    fn canonical_order() {
        let p = PositivePair::new(2.0, 5.0).unwrap();
        assert_eq!((p.hi(), p.lo()), (5.0, 2.0));
        let q = PositivePair::new(5.0, 2.0).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn normalized_range() {
        let n = PositivePair::new(1.0, 3.0).unwrap().normalized();
        assert_eq!(n.x, 0.5);
        assert_eq!(n.scale, 2.0);
        let d = PositivePair::new(4.0, 4.0).unwrap().normalized();
        assert_eq!(d.x, 0.0);
        assert_eq!(d.scale, 4.0);
    }

    #[test]
    fn extreme_ratio_stays_below_one() {
        let n = PositivePair::new(1e-300, 1e300).unwrap().normalized();
        assert!(n.x < 1.0);
    }
}
