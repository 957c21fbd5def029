//! Bivariate means around the Neuman-Sandor mean
//! `M(a,b) = (a-b) / (2 arcsinh((a-b)/(a+b)))` and its classical
//! companions, together with the sharp convex/geometric blend enclosures
//! and a numeric verification toolkit for their optimality.
//!
//! The crate is `no_std` (`alloc` only) and fully deterministic: all
//! transcendental evaluation goes through `libm`, so results are
//! bit-identical across platforms.
//!
//! Conventions:
//!
//! - Means are defined at `a = b` by continuity and return that value
//!   exactly there; the defining formulas are 0/0 on the diagonal.
//! - Pairs are canonicalized on construction, making every mean exactly
//!   symmetric.
//! - Comparisons that are strict in exact arithmetic are tested with a
//!   few-ulp slack where the true margin can fall below binary64
//!   resolution; evaluation paths are arranged (series near switchovers,
//!   excess coordinates for gaps) so that this only happens where it
//!   genuinely must.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arcsinh;
pub mod bounds;
pub mod defect;
pub mod error;
pub mod means;
pub mod numeric;
pub mod pair;
pub mod ratio;
mod series;

pub use arcsinh::arcsinh;
pub use bounds::{
    blend, compute_constants, constants, enclose, lp_bounds_check, simple_bounds_check,
    sharpness_witness, solve_p0, BoundFamily, BoundSide, Enclosure, FamilyBoundsReport,
    LpBoundsReport, Residuals, SharpConstants, SharpnessWitness, TWO_POW_SIXTH,
};
pub use defect::{defect, defect_poly, verify_signs, DefectReport};
pub use error::Error;
pub use means::{
    chain_check, ky_fan_check, mean, reduced_excess, reduced_mean, reduced_mean_direct,
    reduced_mean_series, squares_check, ChainReport, KyFanReport, MeanKind, SquaresReport,
    CHAIN, KY_FAN_CHAIN,
};
pub use pair::{NormalizedArg, PositivePair};
pub use ratio::{blend_ratio, sharpness_scan, RatioProfile};
