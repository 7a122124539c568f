//! Numeric tolerances shared across the crate.
//!
//! Geometric predicates use absolute epsilons on inputs whose diameter has
//! been normalized to O(1); callers working on raw user data scale by the
//! body diameter first (see [`scaled_eps`]).

/// Points within this distance of a hyperplane count as lying on it
/// (absolute, after normalizing the body diameter to O(1)).
pub const EPS_ON_PLANE: f64 = 1e-10;

/// Required accuracy of unit normals.
pub const EPS_UNIT_NORMAL: f64 = 1e-12;

/// One-sided slack tolerance for every verified inequality of the chain.
pub const CHECK_TOL: f64 = 1e-9;

/// Relative tolerance for "plane passes through the centroid" on user input.
pub const CENTROID_PLANE_RTOL: f64 = 1e-7;

/// Abscissa tolerance for bisection / golden-section refinement.
pub const BISECT_X_TOL: f64 = 1e-12;

/// z-score of the two-sided 99% normal confidence interval.
pub const Z_99: f64 = 2.575_829_303_548_900_4;

/// Absolute epsilon scaled by the characteristic size of the data.
#[inline]
pub fn scaled_eps(scale: f64) -> f64 {
    EPS_ON_PLANE * scale.abs().max(1.0)
}
