//! Powers and iterated power sums as weighted sums of tetrahedral
//! numbers with Eulerian coefficients.
//!
//! The cube decomposition `n^d = sum_s <d,s> T(n-s, d)` lifts to sums by
//! raising the tetrahedral dimension: applying the rule of the sections
//! t times turns `T(n-s, d)` into `T(n-s, d+t)` and the left side into
//! the t-fold iterated sum of d-th powers.

use serde::{Deserialize, Serialize};

use crate::eulerian::euler_row;
use crate::exact::{factorial, ExactInt};
use crate::figurate::tetra_clamped;
use crate::GuardError;

/// One term of a decomposition: the Eulerian coefficient and the
/// tetrahedral number it multiplies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTerm {
    pub s: u32,
    pub coefficient: ExactInt,
    pub tetra: ExactInt,
}

impl DecompositionTerm {
    pub fn product(&self) -> ExactInt {
        &self.coefficient * &self.tetra
    }
}

/// `n^d` (t = 0) or the t-fold iterated power sum, with its terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: u64,
    pub d: u32,
    pub t: u32,
    pub terms: Vec<DecompositionTerm>,
    pub total: ExactInt,
}

fn decomposition(n: u64, d: u32, t: u32) -> Decomposition {
    let row = euler_row(d);
    let terms: Vec<DecompositionTerm> = (0..d)
        .map(|s| DecompositionTerm {
            s,
            coefficient: row[s as usize].clone(),
            tetra: tetra_clamped(n as i64 - s as i64, d + t),
        })
        .collect();
    let total = terms.iter().map(|term| term.product()).sum();
    Decomposition { n, d, t, terms, total }
}

/// The cube decomposition `n^d = sum_s <d,s> T(n-s, d)`.
pub fn decompose_power(n: u64, d: u32) -> Decomposition {
    assert!(n >= 1 && d >= 1);
    let result = decomposition(n, d, 0);
    assert_eq!(
        result.total,
        ExactInt::from(n).pow(d),
        "cube decomposition must reproduce n^d"
    );
    result
}

/// The t-fold iterated power sum: `sum_s <d,s> T(n-s, d+t)`.
pub fn power_sum(n: u64, d: u32, t: u32) -> Decomposition {
    assert!(n >= 1 && d >= 1 && t >= 1);
    decomposition(n, d, t)
}

/// Checks that `sum_{j<=n} j^d` is `n(n+1)/(d+1)!` times an integer k,
/// returning k and whether the division was exact. A false verdict
/// would falsify the divisibility theorem.
pub fn divisibility_check(n: u64, d: u32) -> (ExactInt, bool) {
    assert!(n >= 1 && d >= 1);
    let sum = power_sum(n, d, 1).total;
    let numerator = factorial(d + 1) * sum;
    let denominator = ExactInt::from(n) * ExactInt::from(n + 1);
    let (k, remainder) = numerator.div_rem(&denominator);
    (k, remainder.is_zero())
}

/// Literal iterated summation, the ground-truth oracle for
/// [`power_sum`]. t = 0 returns `n^d` by convention.
pub fn naive_power_sum(n: u64, d: u32, t: u32, add_guard: u64) -> Result<ExactInt, GuardError> {
    assert!(n >= 1 && d >= 1);
    let additions = n as u128 * t as u128;
    if additions > add_guard as u128 {
        return Err(GuardError {
            operation: "naive power summation",
            required: additions,
            limit: add_guard as u128,
            unit: "additions",
        });
    }
    if t == 0 {
        return Ok(ExactInt::from(n).pow(d));
    }
    let mut values: Vec<ExactInt> = (1..=n).map(|j| ExactInt::from(j).pow(d)).collect();
    for _ in 0..t {
        for j in 1..values.len() {
            let prev = values[j - 1].clone();
            values[j] += prev;
        }
    }
    Ok(values.pop().expect("n >= 1"))
}
