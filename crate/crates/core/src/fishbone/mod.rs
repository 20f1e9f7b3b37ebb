//! Fishbones: chains of all d variables joined by weak (`>=`) or strict
//! (`>`) signs, optionally bounded by integer extremes. Their solution
//! sets over zone-coordinates are lattice tetrahedra; the d! chains
//! produced by the rule of the climbs partition the cube `C(n, d)`.
//!
//! The rule of the climbs places `>=` between consecutive variables
//! `X_h, X_k` exactly when `k > h`, and `>` otherwise. With ties broken
//! toward the smaller index, every lattice point then satisfies exactly
//! one such chain ([`classify`]).

mod parse;
mod verify;

pub use parse::FishboneError;
pub use verify::{
    rectangular_section_check, verify_partition, PartitionEntry, PartitionReport, StrictGroup,
};

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::eulerian::perm_guard;
use crate::exact::ExactInt;
use crate::figurate::tetra_clamped;
use crate::GuardError;

/// One little cube of the positive lattice, identified by its
/// zone-coordinates (all at least 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Result<Self, FishboneError> {
        if coords.is_empty() {
            return Err(FishboneError::EmptyPoint);
        }
        if coords.contains(&0) {
            return Err(FishboneError::ZeroCoordinate);
        }
        Ok(LatticePoint(coords))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coords = Vec::<u32>::deserialize(deserializer)?;
        LatticePoint::new(coords).map_err(serde::de::Error::custom)
    }
}

/// The sign between two consecutive chain variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Weak,
    Strict,
}

impl Sign {
    pub fn token(&self) -> &'static str {
        match self {
            Sign::Weak => ">=",
            Sign::Strict => ">",
        }
    }
}

/// A chain of distinct variables joined by weak or strict signs, with
/// optional integer extremes. Extremes are stored normalized to weak
/// bounds (`M > X` becomes `M-1 >= X`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fishbone {
    order: Vec<usize>,
    signs: Vec<Sign>,
    upper: Option<i64>,
    lower: Option<i64>,
}

impl Fishbone {
    /// Builds a fishbone from a variable order (1-based indices forming
    /// a permutation of 1..=d), the d-1 signs, and optional extremes.
    pub fn new(
        order: Vec<usize>,
        signs: Vec<Sign>,
        upper: Option<i64>,
        lower: Option<i64>,
    ) -> Result<Self, FishboneError> {
        if order.is_empty() {
            return Err(FishboneError::EmptyChain);
        }
        if signs.len() != order.len() - 1 {
            return Err(FishboneError::SignCountMismatch {
                variables: order.len(),
                signs: signs.len(),
            });
        }
        let d = order.len();
        let mut seen = vec![false; d];
        for &index in &order {
            if index == 0 || index > d {
                return Err(FishboneError::VariableOutOfRange {
                    index,
                    dimension: d,
                });
            }
            if seen[index - 1] {
                return Err(FishboneError::DuplicateVariable(index));
            }
            seen[index - 1] = true;
        }
        Ok(Fishbone {
            order,
            signs,
            upper,
            lower,
        })
    }

    /// The unique climbs-rule fishbone over the given variable order:
    /// `>=` where the next index climbs, `>` where it falls.
    pub fn euler_from_order(order: Vec<usize>) -> Result<Self, FishboneError> {
        let signs = order
            .windows(2)
            .map(|w| if w[1] > w[0] { Sign::Weak } else { Sign::Strict })
            .collect();
        Fishbone::new(order, signs, None, None)
    }

    pub fn dimension(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn upper(&self) -> Option<i64> {
        self.upper
    }

    pub fn lower(&self) -> Option<i64> {
        self.lower
    }

    /// Number of strict signs in the chain.
    pub fn strict_count(&self) -> usize {
        self.signs.iter().filter(|s| **s == Sign::Strict).count()
    }

    /// Whether the signs follow the rule of the climbs.
    pub fn is_euler(&self) -> bool {
        self.order.windows(2).zip(&self.signs).all(|(w, sign)| {
            let expected = if w[1] > w[0] { Sign::Weak } else { Sign::Strict };
            *sign == expected
        })
    }

    /// Effective bounds over the lattice: explicit extremes when
    /// present, otherwise `edge..1`. The lower bound is clamped to 1,
    /// where zone-coordinates start.
    fn bounds(&self, edge: u32) -> (i64, i64) {
        let upper = self.upper.unwrap_or(edge as i64);
        let lower = self.lower.unwrap_or(1).max(1);
        (upper, lower)
    }

    /// Whether the point satisfies every sign constraint and the
    /// extremes.
    pub fn satisfied_by(&self, point: &LatticePoint) -> bool {
        if point.dimension() != self.dimension() {
            return false;
        }
        let coords = point.coords();
        let chain_ok = self.order.windows(2).zip(&self.signs).all(|(w, sign)| {
            let a = coords[w[0] - 1];
            let b = coords[w[1] - 1];
            match sign {
                Sign::Weak => a >= b,
                Sign::Strict => a > b,
            }
        });
        if !chain_ok {
            return false;
        }
        if let Some(upper) = self.upper {
            if (coords[self.order[0] - 1] as i64) > upper {
                return false;
            }
        }
        if let Some(lower) = self.lower {
            if (coords[self.order[self.order.len() - 1] - 1] as i64) < lower {
                return false;
            }
        }
        true
    }

    /// For each chain position, the number of strict signs strictly to
    /// its right.
    fn strict_suffixes(&self) -> Vec<u32> {
        let d = self.dimension();
        let mut suffix = vec![0u32; d];
        for i in (0..d - 1).rev() {
            suffix[i] = suffix[i + 1] + (self.signs[i] == Sign::Strict) as u32;
        }
        suffix
    }

    /// Lazily enumerates the solutions within extremes `edge..1` (or the
    /// fishbone's own extremes), in lexicographic order of the chain
    /// values.
    pub fn solutions(&self, edge: u32) -> Solutions {
        let (upper, lower) = self.bounds(edge);
        assert!(
            upper <= u32::MAX as i64,
            "upper extreme exceeds the coordinate range"
        );
        let suffixes = self.strict_suffixes();
        let mins: Vec<i64> = suffixes.iter().map(|&s| lower + s as i64).collect();
        let current = if upper >= lower && mins[0] <= upper {
            Some(mins.iter().map(|&m| m as u32).collect())
        } else {
            None
        };
        Solutions {
            order: self.order.clone(),
            strict: self.signs.iter().map(|s| *s == Sign::Strict).collect(),
            mins: mins.iter().map(|&m| m.max(1) as u32).collect(),
            upper: upper.max(0) as u32,
            current,
        }
    }

    /// The number of solutions within extremes `edge..1` (or the
    /// fishbone's own extremes), without enumeration: the tetrahedral
    /// number of edge `span - v`, where v counts the strict signs.
    pub fn solution_count(&self, edge: u32) -> ExactInt {
        let (upper, lower) = self.bounds(edge);
        let span = upper - lower + 1 - self.strict_count() as i64;
        tetra_clamped(span, self.dimension() as u32)
    }

    /// The all-weak tetrahedron the solutions map onto: same variable
    /// order, every sign weak, upper extreme lowered by one per strict
    /// sign.
    pub fn canonical_target(&self, edge: u32) -> Fishbone {
        let (upper, lower) = self.bounds(edge);
        Fishbone {
            order: self.order.clone(),
            signs: vec![Sign::Weak; self.dimension() - 1],
            upper: Some(upper - self.strict_count() as i64),
            lower: Some(lower),
        }
    }

    /// Maps a solution onto the canonical all-weak tetrahedron by
    /// subtracting, from each variable, the number of strict signs
    /// strictly to its right in the chain. Bijective on the solution
    /// set.
    pub fn canonical_map(&self, point: &LatticePoint) -> Result<LatticePoint, FishboneError> {
        if point.dimension() != self.dimension() {
            return Err(FishboneError::DimensionMismatch {
                fishbone: self.dimension(),
                point: point.dimension(),
            });
        }
        if !self.satisfied_by(point) {
            return Err(FishboneError::UnsatisfiedPoint {
                fishbone: self.to_string(),
                point: point.to_string(),
            });
        }
        let suffixes = self.strict_suffixes();
        let mut coords = point.coords().to_vec();
        for (position, &variable) in self.order.iter().enumerate() {
            coords[variable - 1] -= suffixes[position];
        }
        Ok(LatticePoint(coords))
    }

    /// Shifts both extremes by -a; solution sets correspond under the
    /// same translation of every coordinate.
    pub fn translate_extremes(&self, shift: i64) -> Fishbone {
        let upper = self
            .upper
            .expect("translate_extremes needs both extremes present");
        let lower = self
            .lower
            .expect("translate_extremes needs both extremes present");
        Fishbone {
            order: self.order.clone(),
            signs: self.signs.clone(),
            upper: Some(upper - shift),
            lower: Some(lower - shift),
        }
    }
}

impl Serialize for Fishbone {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Fishbone {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The unique climbs-rule fishbone a point satisfies: coordinates sorted
/// in non-increasing order, ties broken toward the smaller variable
/// index.
pub fn classify(point: &LatticePoint) -> Fishbone {
    let coords = point.coords();
    let mut order: Vec<usize> = (1..=coords.len()).collect();
    order.sort_by(|&a, &b| coords[b - 1].cmp(&coords[a - 1]).then(a.cmp(&b)));
    Fishbone::euler_from_order(order).expect("a sorted index range is a permutation")
}

/// All d! climbs-rule fishbones, in lexicographic order of their
/// variable permutations. Grouped by strict-sign count v, the group
/// sizes are the Eulerian numbers `<d, v>`.
pub fn escher(d: u32, perm_cap: u32) -> Result<Vec<Fishbone>, GuardError> {
    assert!(d >= 1);
    perm_guard(d, perm_cap, "Escher construction")?;
    Ok((1..=d as usize)
        .permutations(d as usize)
        .map(|order| Fishbone::euler_from_order(order).expect("permutations are valid orders"))
        .collect())
}

/// Lazy lexicographic enumeration of a fishbone's solutions.
pub struct Solutions {
    order: Vec<usize>,
    strict: Vec<bool>,
    mins: Vec<u32>,
    upper: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for Solutions {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let chain = self.current.as_ref()?;
        let mut coords = vec![0u32; chain.len()];
        for (position, &variable) in self.order.iter().enumerate() {
            coords[variable - 1] = chain[position];
        }
        let point = LatticePoint(coords);

        // advance to the lexicographic successor
        let chain = self.current.as_mut().expect("checked above");
        let d = chain.len();
        let mut i = d;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            let cap = if i == 0 {
                self.upper
            } else {
                chain[i - 1] - self.strict[i - 1] as u32
            };
            if chain[i] < cap {
                chain[i] += 1;
                chain[i + 1..d].copy_from_slice(&self.mins[i + 1..d]);
                break;
            }
        }
        Some(point)
    }
}
