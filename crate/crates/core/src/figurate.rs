//! Tetrahedral (simplicial) figurate numbers and their shells.
//!
//! `T(n, d)` counts the little cubes of the d-dimensional tetrahedron
//! with edge n: the solutions of `n >= X_1 >= ... >= X_d >= 1`. The
//! gnomon is the shell between consecutive cubes, which decomposes with
//! Eulerian coefficients one dimension down.

use serde::{Deserialize, Serialize};

use crate::eulerian::euler_row;
use crate::exact::{factorial, rising_factorial, ExactInt};

/// A tetrahedral number with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetraNumber {
    pub n: u64,
    pub d: u32,
    pub value: ExactInt,
}

impl TetraNumber {
    pub fn new(n: u64, d: u32) -> Self {
        TetraNumber {
            n,
            d,
            value: tetra(n, d),
        }
    }
}

/// T(n, d) = n(n+1)...(n+d-1)/d!. Zero when n = 0 and d >= 1; one for
/// d = 0.
pub fn tetra(n: u64, d: u32) -> ExactInt {
    rising_factorial(n, d)
        .div_exact(&factorial(d))
        .expect("d! divides any product of d consecutive integers")
}

/// T extended to nonpositive edges, which contain no little cubes.
pub(crate) fn tetra_clamped(n: i64, d: u32) -> ExactInt {
    if n <= 0 {
        ExactInt::zero()
    } else {
        tetra(n as u64, d)
    }
}

/// Rule of the sections: T(n, d) equals the sum of the T(h, d-1) over
/// h = 1..n.
pub fn section_sum_check(n: u64, d: u32) -> bool {
    assert!(n >= 1 && d >= 1);
    let total: ExactInt = (1..=n).map(|h| tetra(h, d - 1)).sum();
    tetra(n, d) == total
}

/// The gnomon shell n^d - (n-1)^d decomposed with Eulerian coefficients:
/// the terms (<d, s>, T(n-s, d-1)) for s = 0..d-1.
pub fn gnomon_decompose(n: u64, d: u32) -> Vec<(ExactInt, TetraNumber)> {
    assert!(n >= 1 && d >= 1);
    let row = euler_row(d);
    (0..d)
        .map(|s| {
            let edge = n as i64 - s as i64;
            let tetra = TetraNumber {
                n: edge.max(0) as u64,
                d: d - 1,
                value: tetra_clamped(edge, d - 1),
            };
            (row[s as usize].clone(), tetra)
        })
        .collect()
}
