//! Eulerian numbers `<d, s>` by three independent algorithms: the
//! defining recurrence, the truncated-power backward difference, and
//! brute-force descent counting over all d! permutations. The three
//! routes exist to check one another; every consumer in the crate goes
//! through the recurrence.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, ExactInt};
use crate::GuardError;

/// Which route computes the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// `<d,s> = (1+s)<d-1,s> + (d-s)<d-1,s-1>`, base `<1,0> = 1`.
    Recurrence,
    /// Order-(d+1) backward difference of the truncated power `(s+1)^d`.
    Difference,
    /// Count permutations of 1..d with exactly s descents.
    DescentCount,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Recurrence => "recurrence",
            Algorithm::Difference => "difference",
            Algorithm::DescentCount => "descent-count",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recurrence" => Ok(Algorithm::Recurrence),
            "difference" => Ok(Algorithm::Difference),
            "descent-count" => Ok(Algorithm::DescentCount),
            other => Err(format!(
                "unknown algorithm `{other}` (expected recurrence, difference, or descent-count)"
            )),
        }
    }
}

/// The Euler triangle up to a maximum dimension. Row d holds
/// `<d, 0> .. <d, d-1>`; row 0 is empty (the recurrence starts at
/// `<1, 0>`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTriangle {
    pub max_d: u32,
    pub algorithm: Algorithm,
    rows: Vec<Vec<ExactInt>>,
}

impl EulerTriangle {
    pub fn row(&self, d: u32) -> &[ExactInt] {
        &self.rows[d as usize]
    }

    /// `<d, s>`, zero outside `0 <= s < d`.
    pub fn value(&self, d: u32, s: i64) -> ExactInt {
        if s < 0 || s >= d as i64 {
            ExactInt::zero()
        } else {
            self.rows[d as usize][s as usize].clone()
        }
    }
}

fn next_recurrence_row(prev: &[ExactInt], d: u32) -> Vec<ExactInt> {
    let get = |s: i64| -> ExactInt {
        if s < 0 || s as usize >= prev.len() {
            ExactInt::zero()
        } else {
            prev[s as usize].clone()
        }
    };
    (0..d as i64)
        .map(|s| {
            ExactInt::from(1 + s) * get(s) + ExactInt::from(d as i64 - s) * get(s - 1)
        })
        .collect()
}

/// Row d of the triangle by the defining recurrence. Row 0 is empty.
pub fn euler_row(d: u32) -> Vec<ExactInt> {
    let mut row = Vec::new();
    for k in 1..=d {
        row = if k == 1 {
            vec![ExactInt::one()]
        } else {
            next_recurrence_row(&row, k)
        };
    }
    row
}

/// `<d, s>` by the defining recurrence; zero outside `0 <= s < d`.
pub fn eulerian_recurrence(d: u32, s: i64) -> ExactInt {
    assert!(d >= 1, "eulerian numbers start at dimension 1");
    if s < 0 || s >= d as i64 {
        ExactInt::zero()
    } else {
        euler_row(d).swap_remove(s as usize)
    }
}

/// `<d, s>` as the order-(d+1) backward difference of the truncated
/// power: sum over h of (-1)^h C(d+1, h) (s+1-h)^d, where bases that are
/// not positive contribute nothing.
pub fn eulerian_difference(d: u32, s: i64) -> ExactInt {
    assert!(d >= 1, "eulerian numbers start at dimension 1");
    let mut acc = ExactInt::zero();
    for h in 0..=(d as i64 + 1) {
        let base = s + 1 - h;
        if base <= 0 {
            break;
        }
        let term = binomial(d as u64 + 1, h) * ExactInt::from(base).pow(d);
        if h % 2 == 0 {
            acc += term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

fn descent_tallies(d: u32) -> Vec<u64> {
    let mut tallies = vec![0u64; d as usize];
    for perm in (1..=d).permutations(d as usize) {
        let descents = perm.windows(2).filter(|w| w[1] < w[0]).count();
        tallies[descents] += 1;
    }
    tallies
}

pub(crate) fn perm_guard(d: u32, perm_cap: u32, operation: &'static str) -> Result<(), GuardError> {
    if d > perm_cap {
        Err(GuardError {
            operation,
            required: d as u128,
            limit: perm_cap as u128,
            unit: "dimensions of permutations",
        })
    } else {
        Ok(())
    }
}

/// `<d, s>` by enumerating all d! permutations and counting those with
/// exactly s descents. The independent oracle for the other two routes.
pub fn eulerian_descent_count(d: u32, s: i64, perm_cap: u32) -> Result<ExactInt, GuardError> {
    assert!(d >= 1, "eulerian numbers start at dimension 1");
    perm_guard(d, perm_cap, "descent counting")?;
    if s < 0 || s >= d as i64 {
        return Ok(ExactInt::zero());
    }
    Ok(ExactInt::from(descent_tallies(d)[s as usize]))
}

/// The full triangle for d = 1..max_d by the chosen algorithm.
pub fn euler_triangle(
    max_d: u32,
    algorithm: Algorithm,
    perm_cap: u32,
) -> Result<EulerTriangle, GuardError> {
    assert!(max_d >= 1, "the triangle starts at dimension 1");
    let mut rows: Vec<Vec<ExactInt>> = vec![Vec::new()];
    match algorithm {
        Algorithm::Recurrence => {
            for d in 1..=max_d {
                let row = if d == 1 {
                    vec![ExactInt::one()]
                } else {
                    next_recurrence_row(&rows[d as usize - 1], d)
                };
                rows.push(row);
            }
        }
        Algorithm::Difference => {
            for d in 1..=max_d {
                rows.push((0..d as i64).map(|s| eulerian_difference(d, s)).collect());
            }
        }
        Algorithm::DescentCount => {
            perm_guard(max_d, perm_cap, "descent counting")?;
            for d in 1..=max_d {
                rows.push(descent_tallies(d).into_iter().map(ExactInt::from).collect());
            }
        }
    }
    Ok(EulerTriangle {
        max_d,
        algorithm,
        rows,
    })
}
