//! Exhaustive verification that the d! climbs-rule fishbones partition
//! the cube, with counts predicted by tetrahedral and Eulerian numbers.
//!
//! Every lattice point is classified *and* re-tested directly against
//! every fishbone's constraints, so cover and disjointness do not rest
//! on the classification rule alone.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{escher, Fishbone, Sign};
use crate::eulerian::euler_row;
use crate::exact::ExactInt;
use crate::figurate::tetra_clamped;
use crate::{GuardError, Limits};

/// One fishbone's share of the cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionEntry {
    pub fishbone: Fishbone,
    pub strict: u32,
    pub count: ExactInt,
    pub expected: ExactInt,
    pub ok: bool,
}

/// Totals over all fishbones with the same number of strict signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictGroup {
    pub strict: u32,
    /// How many fishbones carry this many strict signs.
    pub fishbones: u64,
    /// The Eulerian number the group size must equal.
    pub eulerian: ExactInt,
    pub count: ExactInt,
    pub expected: ExactInt,
    pub ok: bool,
}

/// The verdict of an exhaustive partition check of `C(n, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub n: u32,
    pub d: u32,
    /// Every point satisfied at least one fishbone.
    pub cover_ok: bool,
    /// No point satisfied two fishbones.
    pub disjoint_ok: bool,
    /// The unique satisfied fishbone was always the classified one.
    pub classify_ok: bool,
    /// Every fishbone's count equals its tetrahedral number.
    pub counts_ok: bool,
    /// Group sizes and totals per strict count match the Eulerian
    /// decomposition.
    pub groups_ok: bool,
    pub total: ExactInt,
    pub total_ok: bool,
    pub entries: Vec<PartitionEntry>,
    pub by_strict: Vec<StrictGroup>,
}

impl PartitionReport {
    pub fn all_ok(&self) -> bool {
        self.cover_ok
            && self.disjoint_ok
            && self.classify_ok
            && self.counts_ok
            && self.groups_ok
            && self.total_ok
    }
}

fn point_guard(n: u32, d: u32, limit: u64, operation: &'static str) -> Result<u64, GuardError> {
    let points = (n as u128)
        .checked_pow(d)
        .unwrap_or(u128::MAX);
    if points > limit as u128 {
        return Err(GuardError {
            operation,
            required: points,
            limit: limit as u128,
            unit: "lattice points",
        });
    }
    Ok(points as u64)
}

/// Decodes a point index into 1-based coordinates.
fn decode(mut index: u64, n: u32, coords: &mut [u32]) {
    for c in coords.iter_mut() {
        *c = (index % n as u64) as u32 + 1;
        index /= n as u64;
    }
}

fn satisfies(coords: &[u32], order: &[u8], strict_mask: u32) -> bool {
    for i in 0..order.len() - 1 {
        let a = coords[order[i] as usize];
        let b = coords[order[i + 1] as usize];
        if strict_mask & (1 << i) != 0 {
            if a <= b {
                return false;
            }
        } else if a < b {
            return false;
        }
    }
    true
}

struct Tally {
    counts: Vec<u64>,
    cover_bad: u64,
    disjoint_bad: u64,
    classify_bad: u64,
    coords: Vec<u32>,
    ranking: Vec<u8>,
}

impl Tally {
    fn new(fishbones: usize, d: usize) -> Self {
        Tally {
            counts: vec![0; fishbones],
            cover_bad: 0,
            disjoint_bad: 0,
            classify_bad: 0,
            coords: vec![0; d],
            ranking: vec![0; d],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.cover_bad += other.cover_bad;
        self.disjoint_bad += other.disjoint_bad;
        self.classify_bad += other.classify_bad;
        self
    }
}

/// Classifies every lattice point of `C(n, d)`, re-checks membership
/// against every fishbone directly, and reports cover, disjointness,
/// and all count identities.
pub fn verify_partition(n: u32, d: u32, limits: &Limits) -> Result<PartitionReport, GuardError> {
    assert!(n >= 1 && d >= 1);
    let points = point_guard(n, d, limits.point_guard, "partition verification")?;
    let fishbones = escher(d, limits.perm_cap)?;

    // flat tables for the hot membership loop
    let orders: Vec<Vec<u8>> = fishbones
        .iter()
        .map(|f| f.order().iter().map(|&v| (v - 1) as u8).collect())
        .collect();
    let masks: Vec<u32> = fishbones
        .iter()
        .map(|f| {
            f.signs().iter().enumerate().fold(0u32, |mask, (i, sign)| {
                mask | (((*sign == Sign::Strict) as u32) << i)
            })
        })
        .collect();
    let index_of: HashMap<Vec<u8>, usize> = orders
        .iter()
        .enumerate()
        .map(|(i, o)| (o.clone(), i))
        .collect();

    let chunk = 1u64 << 12;
    let chunks: Vec<u64> = (0..points.div_ceil(chunk)).collect();
    let tally = chunks
        .into_par_iter()
        .fold(
            || Tally::new(fishbones.len(), d as usize),
            |mut tally, chunk_index| {
                let start = chunk_index * chunk;
                let end = (start + chunk).min(points);
                for index in start..end {
                    decode(index, n, &mut tally.coords);
                    for (i, r) in tally.ranking.iter_mut().enumerate() {
                        *r = i as u8;
                    }
                    let coords = &tally.coords;
                    tally.ranking.sort_unstable_by(|&a, &b| {
                        coords[b as usize]
                            .cmp(&coords[a as usize])
                            .then(a.cmp(&b))
                    });
                    let classified = index_of[&tally.ranking];

                    let mut matches = 0u32;
                    let mut classified_matched = false;
                    for (i, order) in orders.iter().enumerate() {
                        if satisfies(&tally.coords, order, masks[i]) {
                            matches += 1;
                            if i == classified {
                                classified_matched = true;
                            }
                        }
                    }
                    if matches == 0 {
                        tally.cover_bad += 1;
                    }
                    if matches > 1 {
                        tally.disjoint_bad += 1;
                    }
                    if !(matches == 1 && classified_matched) {
                        tally.classify_bad += 1;
                    }
                    tally.counts[classified] += 1;
                }
                tally
            },
        )
        .reduce(
            || Tally::new(fishbones.len(), d as usize),
            Tally::merge,
        );

    let row = euler_row(d);
    let mut entries = Vec::with_capacity(fishbones.len());
    let mut counts_ok = true;
    for (i, fishbone) in fishbones.iter().enumerate() {
        let strict = fishbone.strict_count() as u32;
        let count = ExactInt::from(tally.counts[i]);
        let expected = tetra_clamped(n as i64 - strict as i64, d);
        let ok = count == expected;
        counts_ok &= ok;
        entries.push(PartitionEntry {
            fishbone: fishbone.clone(),
            strict,
            count,
            expected,
            ok,
        });
    }

    let mut by_strict = Vec::with_capacity(d as usize);
    let mut groups_ok = true;
    for v in 0..d {
        let group: Vec<&PartitionEntry> =
            entries.iter().filter(|e| e.strict == v).collect();
        let count: ExactInt = group.iter().map(|e| e.count.clone()).sum();
        let eulerian = row[v as usize].clone();
        let expected = &eulerian * &tetra_clamped(n as i64 - v as i64, d);
        let ok = ExactInt::from(group.len()) == eulerian && count == expected;
        groups_ok &= ok;
        by_strict.push(StrictGroup {
            strict: v,
            fishbones: group.len() as u64,
            eulerian,
            count,
            expected,
            ok,
        });
    }

    let total: ExactInt = entries.iter().map(|e| e.count.clone()).sum();
    let total_ok = total == ExactInt::from(n as u64).pow(d);

    Ok(PartitionReport {
        n,
        d,
        cover_ok: tally.cover_bad == 0,
        disjoint_ok: tally.disjoint_bad == 0,
        classify_ok: tally.classify_bad == 0,
        counts_ok,
        groups_ok,
        total,
        total_ok,
        entries,
        by_strict,
    })
}

/// Sections of the ordered chain `n >= X_1 >= ... >= X_d >= 1` at
/// `X_d = h`, counted by brute enumeration.
fn chain_section_sizes(n: u32, d: u32) -> Vec<u64> {
    let order: Vec<usize> = (1..=d as usize).collect();
    let chain = Fishbone::euler_from_order(order).expect("identity order is valid");
    let mut sections = vec![0u64; n as usize];
    for point in chain.solutions(n) {
        let last = point.coords()[d as usize - 1];
        sections[last as usize - 1] += 1;
    }
    sections
}

/// Sections of the rectangular tetrahedron (the little cubes meeting
/// `sum x_j <= n` in real coordinates, i.e. `sum X_j <= n + d - 1` in
/// zone-coordinates) at constant coordinate sum, by brute enumeration.
fn rectangular_section_sizes(n: u32, d: u32) -> Vec<u64> {
    let budget = n as usize + d as usize - 1;
    let mut sections = vec![0u64; budget + 1];
    fn count(dims_left: u32, used: usize, budget: usize, sections: &mut [u64]) {
        if dims_left == 0 {
            sections[used] += 1;
            return;
        }
        // leave at least 1 per remaining dimension
        let max = budget - used - (dims_left as usize - 1);
        for x in 1..=max {
            count(dims_left - 1, used + x, budget, sections);
        }
    }
    count(d, 0, budget, &mut sections);
    sections
}

/// Double enumeration check that the chain tetrahedron and the
/// rectangular tetrahedron have the same sections: the nonempty section
/// sizes agree as multisets, and the totals agree.
pub fn rectangular_section_check(n: u32, d: u32, limits: &Limits) -> Result<bool, GuardError> {
    assert!(n >= 1 && d >= 1);
    point_guard(n, d, limits.point_guard, "section comparison")?;
    let mut chain: Vec<u64> = chain_section_sizes(n, d)
        .into_iter()
        .filter(|&c| c > 0)
        .collect();
    let mut rectangular: Vec<u64> = rectangular_section_sizes(n, d)
        .into_iter()
        .filter(|&c| c > 0)
        .collect();
    let totals_match =
        chain.iter().sum::<u64>() == rectangular.iter().sum::<u64>();
    chain.sort_unstable();
    rectangular.sort_unstable();
    Ok(totals_match && chain == rectangular)
}
