//! Acceptance suite: every release criterion as one test, each printing
//! a PASS line with its measured runtime (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! All comparisons are exact; the only statistical check is the
//! Monte-Carlo sampling in criterion 8, which is still evaluated with
//! exact rational arithmetic against a three-standard-error band.

use std::collections::HashSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eulercube::eulerian::{euler_row, euler_triangle, Algorithm};
use eulercube::exact::{factorial, ExactInt, ExactRat};
use eulercube::figurate::tetra;
use eulercube::fishbone::{
    classify, rectangular_section_check, verify_partition, Fishbone, LatticePoint, Sign,
};
use eulercube::powersum::{decompose_power, divisibility_check, power_sum};
use eulercube::slab::{slab_profile, slab_volume, uniform_sum_cdf};
use eulercube::Limits;

fn eulercube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulercube"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn pass(criterion: u32, start: Instant, budget: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} overran its budget: {elapsed:?} > {budget:?}"
    );
    println!("criterion {criterion:2} PASS in {elapsed:?}: {what}");
}

/// The printed triangle rows for d = 1..17, first nine columns; the
/// remaining columns are determined by the row palindrome.
const TRIANGLE_ANCHOR_ROWS: [&[u64]; 17] = [
    &[1],
    &[1, 1],
    &[1, 4, 1],
    &[1, 11, 11, 1],
    &[1, 26, 66, 26, 1],
    &[1, 57, 302, 302, 57, 1],
    &[1, 120, 1191, 2416, 1191, 120, 1],
    &[1, 247, 4293, 15619, 15619, 4293, 247, 1],
    &[1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1],
    &[1, 1013, 47840, 455192, 1310354, 1310354, 455192, 47840, 1013],
    &[1, 2036, 152637, 2203488, 9738114, 15724248, 9738114, 2203488, 152637],
    &[
        1, 4083, 478271, 10187685, 66318474, 162512286, 162512286, 66318474, 10187685,
    ],
    &[
        1,
        8178,
        1479726,
        45533450,
        423281535,
        1505621508,
        2275172004,
        1505621508,
        423281535,
    ],
    &[
        1,
        16369,
        4537314,
        198410786,
        2571742175,
        12843262863,
        27971176092,
        27971176092,
        12843262863,
    ],
    &[
        1,
        32752,
        13824739,
        848090912,
        15041229521,
        102776998928,
        311387598411,
        447538817472,
        311387598411,
    ],
    &[
        1,
        65519,
        41932745,
        3572085255,
        85383238549,
        782115518299,
        3207483178157,
        6382798925475,
        6382798925475,
    ],
    &[
        1,
        131054,
        126781020,
        14875399450,
        473353301060,
        5717291972382,
        31055652948388,
        83137223185370,
        114890380658550,
    ],
];

fn expected_row(d: usize) -> Vec<u64> {
    let prefix = TRIANGLE_ANCHOR_ROWS[d - 1];
    (0..d)
        .map(|s| {
            if s < prefix.len() {
                prefix[s]
            } else {
                prefix[d - 1 - s]
            }
        })
        .collect()
}

#[test]
fn criterion_01_euler_triangle_golden() {
    let start = Instant::now();
    let out = eulercube(&["triangle", "--max-d", "17"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<Vec<u64>> = stdout(&out)
        .lines()
        .map(|line| {
            line.split(' ')
                .map(|token| token.parse().expect("numeric triangle entry"))
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), 17);
    for d in 1..=17usize {
        assert_eq!(rows[d - 1], expected_row(d), "row {d} diverges");
    }
    assert_eq!(rows[5][2], 302);
    assert_eq!(rows[9][4], 1_310_354);
    assert_eq!(rows[16][8], 114_890_380_658_550);
    pass(1, start, Duration::from_secs(1), "triangle rows 1..17 match the table");
}

#[test]
fn criterion_02_triple_algorithm_agreement() {
    let start = Instant::now();
    let by_recurrence = euler_triangle(40, Algorithm::Recurrence, 9).unwrap();
    let by_difference = euler_triangle(40, Algorithm::Difference, 9).unwrap();
    for d in 1..=40 {
        assert_eq!(
            by_recurrence.row(d),
            by_difference.row(d),
            "recurrence and difference disagree at d={d}"
        );
    }
    let by_descents = euler_triangle(9, Algorithm::DescentCount, 9).unwrap();
    for d in 1..=9 {
        assert_eq!(
            by_recurrence.row(d),
            by_descents.row(d),
            "descent counting disagrees at d={d}"
        );
    }
    pass(
        2,
        start,
        Duration::from_secs(30),
        "recurrence = difference (d <= 40) = descent count (d <= 9)",
    );
}

#[test]
fn criterion_03_worpitzky_identity() {
    let start = Instant::now();
    for d in 1..=12u32 {
        let row = euler_row(d);
        for n in 1..=50u64 {
            let total: ExactInt = (0..d as u64)
                .map(|s| row[s as usize].clone() * tetra(n.saturating_sub(s), d))
                .sum();
            assert_eq!(total, ExactInt::from(n).pow(d), "n={n}, d={d}");
        }
    }
    pass(
        3,
        start,
        Duration::from_secs(5),
        "sum_s <d,s> T(n-s, d) = n^d for d <= 12, n <= 50",
    );
}

#[test]
fn criterion_04_worked_power_sums() {
    let start = Instant::now();
    let products = |n: u64, d: u32, t: u32| -> Vec<u64> {
        let decomposition = if t == 0 {
            decompose_power(n, d)
        } else {
            power_sum(n, d, t)
        };
        decomposition
            .terms
            .iter()
            .map(|term| term.product().to_string().parse().unwrap())
            .collect()
    };

    assert_eq!(products(4, 3, 0), [20, 40, 4]);
    assert_eq!(decompose_power(4, 3).total, ExactInt::from(64u32));

    assert_eq!(products(5, 4, 0), [70, 385, 165, 5]);
    assert_eq!(decompose_power(5, 4).total, ExactInt::from(625u32));

    assert_eq!(products(5, 4, 1), [126, 616, 231, 6]);
    assert_eq!(power_sum(5, 4, 1).total, ExactInt::from(979u32));

    assert_eq!(products(5, 4, 2), [210, 924, 308, 7]);
    assert_eq!(power_sum(5, 4, 2).total, ExactInt::from(1449u32));

    assert_eq!(power_sum(100, 4, 1).total, ExactInt::from(2_050_333_330u64));
    let (k, ok) = divisibility_check(100, 4);
    assert!(ok);
    assert_eq!(k, ExactInt::from(24_360_396u64));

    pass(
        4,
        start,
        Duration::from_secs(5),
        "worked decompositions reproduced bit-exactly",
    );
}

#[test]
fn criterion_05_partition_verification() {
    let start = Instant::now();
    let limits = Limits::default();

    for (n, d) in [(6, 2), (4, 3), (6, 3), (5, 4), (4, 5), (3, 6), (3, 8)] {
        let report = verify_partition(n, d, &limits).unwrap();
        assert!(report.all_ok(), "partition falsified at n={n}, d={d}");
        assert_eq!(report.total, ExactInt::from(n as u64).pow(d));
    }

    let counts = |n: u32, d: u32| -> Vec<u64> {
        verify_partition(n, d, &limits)
            .unwrap()
            .entries
            .iter()
            .map(|e| e.count.to_string().parse().unwrap())
            .collect()
    };
    assert_eq!(counts(4, 3), [20, 10, 10, 10, 10, 4]);
    assert_eq!(counts(6, 2), [21, 15]);

    for (n, d) in [("4", "3"), ("6", "2")] {
        let out = eulercube(&["verify", "-n", n, "-d", d]);
        assert_eq!(out.status.code(), Some(0));
    }

    pass(
        5,
        start,
        Duration::from_secs(60),
        "escher partitions verified for the seven cubes",
    );
}

fn random_fishbone(rng: &mut StdRng, d: usize) -> Fishbone {
    let mut order: Vec<usize> = (1..=d).collect();
    for i in (1..d).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let signs = (0..d.saturating_sub(1))
        .map(|_| {
            if rng.random_bool(0.5) {
                Sign::Strict
            } else {
                Sign::Weak
            }
        })
        .collect();
    Fishbone::new(order, signs, None, None).unwrap()
}

#[test]
fn criterion_06_canonical_bijection() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1883);
    for _ in 0..1000 {
        let d = rng.random_range(1..=7usize);
        let n = rng.random_range(1..=8u32);
        let fishbone = random_fishbone(&mut rng, d);
        let strict = fishbone.strict_count() as u32;

        let solutions: Vec<LatticePoint> = fishbone.solutions(n).collect();
        let expected = if n > strict {
            tetra((n - strict) as u64, d as u32)
        } else {
            ExactInt::zero()
        };
        assert_eq!(ExactInt::from(solutions.len()), expected);
        assert_eq!(fishbone.solution_count(n), expected);

        let images: HashSet<LatticePoint> = solutions
            .iter()
            .map(|p| fishbone.canonical_map(p).unwrap())
            .collect();
        assert_eq!(images.len(), solutions.len(), "not injective: {fishbone}");
        let target: HashSet<LatticePoint> =
            fishbone.canonical_target(n).solutions(n).collect();
        assert_eq!(images, target, "image mismatch: {fishbone}, n={n}");
    }
    pass(
        6,
        start,
        Duration::from_secs(60),
        "canonical map is a bijection on 1000 random fishbones",
    );
}

#[test]
fn criterion_07_classification_goldens() {
    let start = Instant::now();

    let classify_of = |coords: &[u32]| {
        classify(&LatticePoint::new(coords.to_vec()).unwrap()).to_string()
    };
    assert_eq!(classify_of(&[3, 2, 4]), "X3 > X1 >= X2");
    assert_eq!(classify_of(&[2, 2, 4]), "X3 > X1 >= X2");
    assert_eq!(
        classify_of(&[6, 6, 1, 6, 3, 1, 5, 9]),
        "X8 > X1 >= X2 >= X4 >= X7 > X5 > X3 >= X6"
    );

    assert_eq!(stdout(&eulercube(&["classify", "3", "2", "4"])), "X3 > X1 >= X2\n");
    assert_eq!(stdout(&eulercube(&["classify", "2", "2", "4"])), "X3 > X1 >= X2\n");
    assert_eq!(
        stdout(&eulercube(&["classify", "6", "6", "1", "6", "3", "1", "5", "9"])),
        "X8 > X1 >= X2 >= X4 >= X7 > X5 > X3 >= X6\n"
    );

    let canon = eulercube(&[
        "canon",
        "4 >= X1 >= X3 > X2 >= X4 >= X8 > X5 >= X7 > X6 >= 1",
        "4", "3", "4", "3", "2", "1", "2", "3",
    ]);
    assert_eq!(stdout(&canon), "1 1 1 1 1 1 1 1\n");

    pass(7, start, Duration::from_secs(5), "classification goldens hold");
}

#[test]
fn criterion_08_slab_geometry() {
    let start = Instant::now();

    // Eulerian bridge: d! times the unit-cube slab volume is <d, s-1>
    for d in 1..=25u32 {
        let row = euler_row(d);
        let scale = ExactRat::from(factorial(d));
        for s in 1..=d {
            assert_eq!(
                slab_volume(d, &ExactRat::one(), s) * &scale,
                ExactRat::from(row[s as usize - 1].clone()),
                "bridge broken at d={d}, s={s}"
            );
        }
    }

    // profiles sum to e^d for randomized rational edges
    let mut rng = StdRng::seed_from_u64(8);
    for d in 1..=25u32 {
        let e = ExactRat::ratio(rng.random_range(1..=12), rng.random_range(1..=12));
        let profile = slab_profile(d, &e);
        let total: ExactRat = profile.volumes.iter().cloned().sum();
        assert_eq!(total, e.pow(d as i32), "profile of d={d}, e={e}");
    }

    // symmetry of the uniform-sum distribution on the eighth-integer grid
    for d in 1..=15u32 {
        for eighth in -8..=(8 * d as i64 + 8) {
            let s = ExactRat::ratio(eighth, 8);
            let mirrored = ExactRat::from(d as i64) - &s;
            assert_eq!(
                uniform_sum_cdf(d, &s) + uniform_sum_cdf(d, &mirrored),
                ExactRat::one(),
                "asymmetric at d={d}, s={s}"
            );
        }
    }

    // Monte-Carlo: million-sample empirical CDF within three standard
    // errors at s = d/4, d/2, 3d/4. Uniforms are discretized to k/2^32
    // so the hit test and the error band stay in exact arithmetic.
    let samples = 1_000_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_811);
    for d in [2u32, 3, 5] {
        let levels: Vec<ExactRat> = [1i64, 2, 3]
            .iter()
            .map(|q| ExactRat::ratio(d as i64 * q, 4))
            .collect();
        let thresholds: Vec<u64> = levels
            .iter()
            .map(|s| {
                let scaled = s * &ExactRat::from(1i64 << 32);
                scaled.to_integer().unwrap().to_string().parse().unwrap()
            })
            .collect();
        let mut hits = [0u64; 3];
        for _ in 0..samples {
            let sum: u64 = (0..d).map(|_| rng.next_u32() as u64).sum();
            for (i, &threshold) in thresholds.iter().enumerate() {
                if sum <= threshold {
                    hits[i] += 1;
                }
            }
        }
        for (i, level) in levels.iter().enumerate() {
            let exact = uniform_sum_cdf(d, level);
            let observed = ExactRat::new(hits[i].into(), samples.into()).unwrap();
            let deviation = (&observed - &exact).pow(2);
            let band = ExactRat::from(9)
                * &exact
                * (ExactRat::one() - &exact)
                * ExactRat::new(1u64.into(), samples.into()).unwrap();
            assert!(
                deviation <= band,
                "d={d}, s={level}: sampled {observed} vs exact {exact}"
            );
        }
    }

    pass(
        8,
        start,
        Duration::from_secs(60),
        "slab bridge, normalization, symmetry, and sampling all hold",
    );
}

#[test]
fn criterion_09_divisibility_theorem() {
    let start = Instant::now();
    for d in 1..=10u32 {
        for n in 1..=500u64 {
            let (_, ok) = divisibility_check(n, d);
            assert!(ok, "divisibility falsified at n={n}, d={d}");
        }
    }
    pass(
        9,
        start,
        Duration::from_secs(10),
        "n(n+1)/(d+1)! divides every power sum for d <= 10, n <= 500",
    );
}

#[test]
fn criterion_10_section_comparison() {
    let start = Instant::now();
    let limits = Limits::default();
    for (n, d) in [(4, 3), (7, 4), (6, 5)] {
        assert!(
            rectangular_section_check(n, d, &limits).unwrap(),
            "sections differ at n={n}, d={d}"
        );
    }
    pass(
        10,
        start,
        Duration::from_secs(10),
        "chain and rectangular tetrahedra have matching sections",
    );
}
