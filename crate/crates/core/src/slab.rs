//! Continuous cube geometry in exact rational arithmetic: corner-simplex
//! volumes, cube/simplex intersections by inclusion-exclusion, the slab
//! volumes between consecutive diagonal sections, normalized diagonal
//! section measures, and the distribution of a sum of independent
//! uniform variables.
//!
//! Scaled by d!, the slab volumes of the unit cube are the Eulerian
//! numbers; that bridge is exercised by the cross-module tests rather
//! than assumed here.

use serde::{Deserialize, Serialize};

use crate::exact::{backward_difference, factorial, ExactInt, ExactRat};

/// Volume of the corner simplex `{x : sum x_j <= s, x_h >= 0}`:
/// `s^d / d!` for positive s, zero otherwise.
pub fn corner_simplex_volume(d: u32, s: &ExactRat) -> ExactRat {
    assert!(d >= 1);
    if s.is_positive() {
        s.pow(d as i32) / ExactRat::from(factorial(d))
    } else {
        ExactRat::zero()
    }
}

/// Volume of the intersection of the cube of edge e with the half-space
/// `sum x_j <= s`: the order-d backward difference of the corner-simplex
/// volume with step e.
pub fn cube_simplex_intersection(d: u32, e: &ExactRat, s: &ExactRat) -> ExactRat {
    assert!(d >= 1);
    assert!(e.is_positive(), "the cube needs a positive edge");
    backward_difference(|r| corner_simplex_volume(d, r), d, s, e)
}

/// Volume of the slab of `C(e)` between the diagonal sections at levels
/// `(s-1)e` and `s*e`, for s in 1..=d.
pub fn slab_volume(d: u32, e: &ExactRat, s: u32) -> ExactRat {
    assert!(
        (1..=d).contains(&s),
        "slabs are indexed 1..=d, got {s} for dimension {d}"
    );
    let level = ExactRat::from(ExactInt::from(s)) * e;
    let below = ExactRat::from(ExactInt::from(s - 1)) * e;
    cube_simplex_intersection(d, e, &level) - cube_simplex_intersection(d, e, &below)
}

/// The d slab volumes of `C(e)` with their integer ratios to the first
/// slab.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlabProfile {
    pub d: u32,
    pub e: ExactRat,
    pub volumes: Vec<ExactRat>,
    pub ratios: Vec<ExactInt>,
}

/// All d slab volumes of `C(e)`. The ratios to the corner slab are
/// exact integers.
pub fn slab_profile(d: u32, e: &ExactRat) -> SlabProfile {
    assert!(d >= 1);
    let volumes: Vec<ExactRat> = (1..=d).map(|s| slab_volume(d, e, s)).collect();
    let first = volumes[0].clone();
    let ratios = volumes
        .iter()
        .map(|v| {
            (v / &first)
                .to_integer()
                .expect("slab ratios are integers")
        })
        .collect();
    SlabProfile {
        d,
        e: e.clone(),
        volumes,
        ratios,
    }
}

/// Normalized measures of the diagonal sections of the unit cube at the
/// integer levels s = 1..d-1 (the common irrational factor is dropped;
/// only the rational ratios carry meaning).
pub fn section_profile(d: u32) -> Vec<ExactRat> {
    assert!(d >= 2, "sections need dimension at least 2");
    (1..d)
        .map(|s| {
            let level = ExactRat::from(ExactInt::from(s));
            backward_difference(
                |r| corner_simplex_volume(d - 1, r),
                d,
                &level,
                &ExactRat::one(),
            )
        })
        .collect()
}

/// Probability that the sum of d independent uniform-[0,1] variables is
/// at most s: the intersection volume of the unit cube with the
/// half-space `sum x_j <= s`.
pub fn uniform_sum_cdf(d: u32, s: &ExactRat) -> ExactRat {
    assert!(d >= 1);
    cube_simplex_intersection(d, &ExactRat::one(), s)
}
