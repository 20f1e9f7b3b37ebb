//! Exact dissection of the d-dimensional lattice cube into "fishbone"
//! tetrahedra, and the machinery the dissection carries: Eulerian numbers
//! by three independent algorithms, Worpitzky-style power-sum
//! decompositions, and the exact rational volumes of the hypercube slabs
//! between consecutive diagonal sections.
//!
//! Everything is computed in exact arithmetic with arbitrary-precision
//! integers and rationals. There is no floating-point path.
//!
//! Module map:
//!
//! * [`exact`]: big integers, exact rationals, binomials, rising
//!   factorials, backward differences.
//! * [`figurate`]: tetrahedral numbers `T(n, d)` and gnomon shells.
//! * [`eulerian`]: Eulerian numbers `<d, s>` and the Euler triangle.
//! * [`fishbone`]: inequality chains over zone-coordinates, point
//!   classification, solution enumeration, the canonical bijection, and
//!   exhaustive partition verification of the cube.
//! * [`powersum`]: `n^d` and 1-, 2-, t-fold power sums as weighted sums
//!   of tetrahedral numbers.
//! * [`slab`]: corner-simplex volumes, cube/simplex intersections, slab
//!   profiles, and the uniform-sum distribution, all as exact rationals.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod eulerian;
pub mod exact;
pub mod figurate;
pub mod fishbone;
pub mod powersum;
pub mod slab;

/// Budgets for the operations that walk factorially or exponentially
/// large spaces. Everything else in the crate is closed-form and
/// unguarded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest dimension whose d! permutations may be enumerated
    /// (descent counting, Escher construction, partition verification).
    pub perm_cap: u32,
    /// Largest number of lattice points a verification may visit.
    pub point_guard: u64,
    /// Largest number of additions a naive iterated power sum may
    /// perform.
    pub add_guard: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            perm_cap: 9,
            point_guard: 100_000_000,
            add_guard: 10_000_000,
        }
    }
}

/// An operation asked for more work than its budget allows.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{operation} needs {required} {unit}, above the limit of {limit}")]
pub struct GuardError {
    pub operation: &'static str,
    pub required: u128,
    pub limit: u128,
    pub unit: &'static str,
}
