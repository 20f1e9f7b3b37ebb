//! Command-line surface for the eulercube library.
//!
//! Exit codes: 0 success (and verified invariants), 1 falsified
//! mathematical invariant, 2 usage error, 3 enumeration budget exceeded.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eulercube::eulerian::{euler_triangle, Algorithm, EulerTriangle};
use eulercube::exact::{ExactInt, ExactRat};
use eulercube::fishbone::{
    classify, rectangular_section_check, verify_partition, Fishbone, LatticePoint,
    PartitionReport,
};
use eulercube::powersum::{decompose_power, divisibility_check, power_sum, Decomposition};
use eulercube::slab::{section_profile, slab_profile, uniform_sum_cdf, SlabProfile};
use eulercube::{GuardError, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "eulercube",
    version,
    about = "Exact lattice-cube dissections: Eulerian numbers, fishbone tetrahedra, power sums, slab volumes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    Algorithm::from_str(s)
}

fn parse_rational(s: &str) -> Result<ExactRat, String> {
    ExactRat::from_str(s).map_err(|_| format!("`{s}` is not an integer or p/q rational"))
}

#[derive(Subcommand)]
enum Command {
    /// Print the Euler triangle rows d = 1..max_d.
    Triangle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_d: u32,
        /// recurrence, difference, or descent-count.
        #[arg(long, default_value = "recurrence", value_parser = parse_algorithm)]
        algorithm: Algorithm,
    },
    /// Decompose n^d into Eulerian multiples of tetrahedral numbers.
    Decompose {
        #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
    /// The t-fold iterated sum of d-th powers up to n.
    Powersum {
        #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
    },
    /// Check that sum j^d is n(n+1)/(d+1)! times an integer k.
    Divisibility {
        #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
    /// The unique climbs-rule fishbone the point satisfies.
    Classify {
        /// Zone-coordinates, each at least 1.
        #[arg(required = true, num_args = 1..)]
        coords: Vec<u32>,
    },
    /// Enumerate a fishbone's solutions in lexicographic chain order.
    Solutions {
        /// Fishbone text, e.g. "6 >= X2 > X1 >= X3 >= 1".
        fishbone: String,
        /// Cube edge, used when the fishbone has no upper extreme.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        edge: Option<u32>,
        /// Emit at most this many points.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count a fishbone's solutions without enumerating them.
    Count {
        fishbone: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        edge: Option<u32>,
    },
    /// Map a solution onto the canonical all-weak tetrahedron.
    Canon {
        fishbone: String,
        #[arg(required = true, num_args = 1..)]
        coords: Vec<u32>,
    },
    /// Exhaustively verify the fishbone partition of C(n, d).
    Verify {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
    /// Exact volumes of the d slabs between consecutive diagonal sections.
    Slab {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Cube edge as an integer or p/q rational.
        #[arg(short, long, default_value = "1", value_parser = parse_rational)]
        e: ExactRat,
    },
    /// Normalized diagonal section measures at integer levels.
    Sections {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
    },
    /// CDF of a sum of d independent uniform-[0,1] variables.
    Cdf {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Evaluation point as an integer or p/q rational.
        #[arg(short, long, value_parser = parse_rational, allow_hyphen_values = true)]
        s: ExactRat,
    },
    /// Compare chain-tetrahedron and rectangular-tetrahedron sections.
    SectionCheck {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
}

enum Failure {
    /// Bad flags or unparsable operands (exit 2).
    Usage(String),
    /// Enumeration budget exceeded (exit 3).
    Guard(String),
    /// A mathematical invariant did not hold (exit 1).
    Falsified(String),
}

impl From<GuardError> for Failure {
    fn from(e: GuardError) -> Self {
        Failure::Guard(e.to_string())
    }
}

fn limits_from_env() -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Ok(value) = std::env::var("EULERCUBE_PERM_CAP") {
        limits.perm_cap = value
            .parse()
            .map_err(|_| Failure::Usage(format!("EULERCUBE_PERM_CAP=`{value}` is not a number")))?;
    }
    if let Ok(value) = std::env::var("EULERCUBE_POINT_GUARD") {
        limits.point_guard = value.parse().map_err(|_| {
            Failure::Usage(format!("EULERCUBE_POINT_GUARD=`{value}` is not a number"))
        })?;
    }
    Ok(limits)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize") + "\n"
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Falsified(message)) => {
            eprintln!("FALSIFIED: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let limits = limits_from_env()?;
    match cli.command {
        Command::Triangle { max_d, algorithm } => {
            let triangle = euler_triangle(max_d, algorithm, limits.perm_cap)?;
            Ok(render_triangle(&triangle, cli.format))
        }
        Command::Decompose { n, d } => {
            Ok(render_decomposition(&decompose_power(n, d), cli.format))
        }
        Command::Powersum { n, d, t } => {
            Ok(render_decomposition(&power_sum(n, d, t), cli.format))
        }
        Command::Divisibility { n, d } => cmd_divisibility(n, d, cli.format),
        Command::Classify { coords } => {
            let point = LatticePoint::new(coords).map_err(|e| Failure::Usage(e.to_string()))?;
            let fishbone = classify(&point);
            Ok(match cli.format {
                Format::Text => format!("{fishbone}\n"),
                Format::Json => json(&ClassifyOut {
                    point: &point,
                    fishbone: &fishbone,
                }),
                Format::Csv => format!("fishbone\n{fishbone}\n"),
            })
        }
        Command::Solutions {
            fishbone,
            edge,
            limit,
        } => cmd_solutions(&fishbone, edge, limit, cli.format),
        Command::Count { fishbone, edge } => {
            let (fishbone, edge) = parse_bounded(&fishbone, edge)?;
            let count = fishbone.solution_count(edge);
            Ok(match cli.format {
                Format::Text => format!("{count}\n"),
                Format::Json => json(&CountOut {
                    fishbone: &fishbone,
                    strict: fishbone.strict_count(),
                    count: &count,
                }),
                Format::Csv => format!("fishbone,strict,count\n{fishbone},{},{count}\n", {
                    fishbone.strict_count()
                }),
            })
        }
        Command::Canon { fishbone, coords } => cmd_canon(&fishbone, coords, cli.format),
        Command::Verify { n, d } => cmd_verify(n, d, &limits, cli.format),
        Command::Slab { d, e } => {
            if !e.is_positive() {
                return Err(Failure::Usage("the cube edge must be positive".into()));
            }
            Ok(render_slab(&slab_profile(d, &e), cli.format))
        }
        Command::Sections { d } => {
            let measures = section_profile(d);
            let first = measures[0].clone();
            let ratios: Vec<ExactInt> = measures
                .iter()
                .map(|m| (m / &first).to_integer().expect("section ratios are integers"))
                .collect();
            Ok(match cli.format {
                Format::Text => {
                    let line = measures
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    format!("{line}\n")
                }
                Format::Json => json(&SectionsOut {
                    d,
                    measures: &measures,
                    ratios: &ratios,
                }),
                Format::Csv => {
                    let mut out = String::from("s,measure,ratio\n");
                    for (i, m) in measures.iter().enumerate() {
                        let _ = writeln!(out, "{},{m},{}", i + 1, ratios[i]);
                    }
                    out
                }
            })
        }
        Command::Cdf { d, s } => {
            let value = uniform_sum_cdf(d, &s);
            Ok(match cli.format {
                Format::Text => format!("{value}\n"),
                Format::Json => json(&CdfOut { d, s: &s, value: &value }),
                Format::Csv => format!("d,s,value\n{d},{s},{value}\n"),
            })
        }
        Command::SectionCheck { n, d } => {
            let ok = rectangular_section_check(n, d, &limits)?;
            let output = match cli.format {
                Format::Text => format!("{}\n", if ok { "sections match" } else { "MISMATCH" }),
                Format::Json => json(&SectionCheckOut { n, d, ok }),
                Format::Csv => format!("n,d,ok\n{n},{d},{ok}\n"),
            };
            if ok {
                Ok(output)
            } else {
                print!("{output}");
                Err(Failure::Falsified(format!(
                    "chain and rectangular sections differ for n={n}, d={d}"
                )))
            }
        }
    }
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    point: &'a LatticePoint,
    fishbone: &'a Fishbone,
}

#[derive(Serialize)]
struct SolutionsOut<'a> {
    fishbone: &'a Fishbone,
    edge: u32,
    count: &'a ExactInt,
    emitted: usize,
    truncated: bool,
    points: &'a [LatticePoint],
}

#[derive(Serialize)]
struct CountOut<'a> {
    fishbone: &'a Fishbone,
    strict: usize,
    count: &'a ExactInt,
}

#[derive(Serialize)]
struct CanonOut<'a> {
    fishbone: &'a Fishbone,
    point: &'a LatticePoint,
    image: &'a LatticePoint,
    /// Present when the fishbone carries its own extremes; the target
    /// tetrahedron is undefined otherwise.
    target: Option<&'a Fishbone>,
}

#[derive(Serialize)]
struct DivisibilityOut<'a> {
    n: u64,
    d: u32,
    sum: &'a ExactInt,
    k: &'a ExactInt,
    ok: bool,
}

#[derive(Serialize)]
struct SectionsOut<'a> {
    d: u32,
    measures: &'a [ExactRat],
    ratios: &'a [ExactInt],
}

#[derive(Serialize)]
struct CdfOut<'a> {
    d: u32,
    s: &'a ExactRat,
    value: &'a ExactRat,
}

#[derive(Serialize)]
struct SectionCheckOut {
    n: u32,
    d: u32,
    ok: bool,
}

fn parse_bounded(text: &str, edge: Option<u32>) -> Result<(Fishbone, u32), Failure> {
    let fishbone: Fishbone = text.parse().map_err(|e: eulercube::fishbone::FishboneError| {
        Failure::Usage(e.to_string())
    })?;
    match (fishbone.upper(), edge) {
        (_, Some(edge)) => Ok((fishbone, edge)),
        (Some(upper), None) if upper >= 1 => Ok((fishbone, upper as u32)),
        (Some(_), None) => Ok((fishbone, 1)),
        (None, None) => Err(Failure::Usage(
            "the fishbone has no upper extreme; pass --edge".into(),
        )),
    }
}

fn cmd_solutions(
    text: &str,
    edge: Option<u32>,
    limit: Option<usize>,
    format: Format,
) -> Result<String, Failure> {
    let (fishbone, edge) = parse_bounded(text, edge)?;
    let count = fishbone.solution_count(edge);
    let limit = limit.unwrap_or(usize::MAX);
    let points: Vec<LatticePoint> = fishbone.solutions(edge).take(limit).collect();
    let truncated = ExactInt::from(points.len()) != count;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for p in &points {
                let _ = writeln!(out, "{p}");
            }
            out
        }
        Format::Json => json(&SolutionsOut {
            fishbone: &fishbone,
            edge,
            count: &count,
            emitted: points.len(),
            truncated,
            points: &points,
        }),
        Format::Csv => {
            let d = fishbone.dimension();
            let header: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
            let mut out = header.join(",");
            out.push('\n');
            for p in &points {
                let row: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
    })
}

fn cmd_canon(text: &str, coords: Vec<u32>, format: Format) -> Result<String, Failure> {
    let fishbone: Fishbone = text
        .parse()
        .map_err(|e: eulercube::fishbone::FishboneError| Failure::Usage(e.to_string()))?;
    let point = LatticePoint::new(coords).map_err(|e| Failure::Usage(e.to_string()))?;
    let image = fishbone
        .canonical_map(&point)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let target = fishbone
        .upper()
        .map(|u| fishbone.canonical_target(u.max(1) as u32));
    Ok(match format {
        Format::Text => format!("{image}\n"),
        Format::Json => json(&CanonOut {
            fishbone: &fishbone,
            point: &point,
            image: &image,
            target: target.as_ref(),
        }),
        Format::Csv => {
            let d = image.dimension();
            let header: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
            let row: Vec<String> = image.coords().iter().map(ToString::to_string).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    })
}

fn cmd_divisibility(n: u64, d: u32, format: Format) -> Result<String, Failure> {
    let sum = power_sum(n, d, 1).total;
    let (k, ok) = divisibility_check(n, d);
    let output = match format {
        Format::Text => {
            let verdict = if ok { "ok" } else { "FALSIFIED" };
            format!(
                "sum[j=1..{n}] j^{d} = {n}*{}/{}! * {k} = {sum} ({verdict})\n",
                n + 1,
                d + 1
            )
        }
        Format::Json => json(&DivisibilityOut {
            n,
            d,
            sum: &sum,
            k: &k,
            ok,
        }),
        Format::Csv => format!("n,d,sum,k,ok\n{n},{d},{sum},{k},{ok}\n"),
    };
    if ok {
        Ok(output)
    } else {
        print!("{output}");
        Err(Failure::Falsified(format!(
            "(d+1)! * sum[j<=n] j^d is not divisible by n(n+1) for n={n}, d={d}"
        )))
    }
}

fn cmd_verify(n: u32, d: u32, limits: &Limits, format: Format) -> Result<String, Failure> {
    let report = verify_partition(n, d, limits)?;
    let output = match format {
        Format::Text => render_report(&report),
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("fishbone,strict,count,expected,ok\n");
            for e in &report.entries {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.fishbone, e.strict, e.count, e.expected, e.ok
                );
            }
            out
        }
    };
    if report.all_ok() {
        Ok(output)
    } else {
        print!("{output}");
        Err(Failure::Falsified(format!(
            "the fishbone family does not partition C({n},{d}) as predicted"
        )))
    }
}

fn render_triangle(triangle: &EulerTriangle, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for d in 1..=triangle.max_d {
                let row: Vec<String> = triangle.row(d).iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
            out
        }
        Format::Json => json(triangle),
        Format::Csv => {
            let mut out = String::from("d,s,value\n");
            for d in 1..=triangle.max_d {
                for (s, value) in triangle.row(d).iter().enumerate() {
                    let _ = writeln!(out, "{d},{s},{value}");
                }
            }
            out
        }
    }
}

fn render_decomposition(decomposition: &Decomposition, format: Format) -> String {
    match format {
        Format::Text => {
            let Decomposition { n, d, t, .. } = decomposition;
            let lhs = if *t == 0 {
                format!("{n}^{d}")
            } else {
                format!("sum^{t}[j=1..{n}] j^{d}")
            };
            let symbolic: Vec<String> = decomposition
                .terms
                .iter()
                .map(|term| {
                    let edge = *n as i64 - term.s as i64;
                    format!("{}*T({}, {})", term.coefficient, edge, d + t)
                })
                .collect();
            let products: Vec<String> = decomposition
                .terms
                .iter()
                .map(|term| term.product().to_string())
                .collect();
            format!(
                "{lhs} = {} = {} = {}\n",
                symbolic.join(" + "),
                products.join(" + "),
                decomposition.total
            )
        }
        Format::Json => json(decomposition),
        Format::Csv => {
            let mut out = String::from("s,coefficient,tetra,product\n");
            for term in &decomposition.terms {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    term.s,
                    term.coefficient,
                    term.tetra,
                    term.product()
                );
            }
            out
        }
    }
}

fn render_slab(profile: &SlabProfile, format: Format) -> String {
    match format {
        Format::Text => {
            let volumes: Vec<String> = profile.volumes.iter().map(ToString::to_string).collect();
            format!("{}\n", volumes.join(" "))
        }
        Format::Json => json(profile),
        Format::Csv => {
            let mut out = String::from("s,volume,ratio\n");
            for (i, v) in profile.volumes.iter().enumerate() {
                let _ = writeln!(out, "{},{v},{}", i + 1, profile.ratios[i]);
            }
            out
        }
    }
}

fn render_report(report: &PartitionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "partition of C({}, {}): {} little cubes, {} fishbones",
        report.n,
        report.d,
        report.total,
        report.entries.len()
    );
    let _ = writeln!(out, "fishbone | strict | count | expected | ok");
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{} | {} | {} | {} | {}",
            e.fishbone, e.strict, e.count, e.expected, e.ok
        );
    }
    let _ = writeln!(out, "by strict signs:");
    for g in &report.by_strict {
        let _ = writeln!(
            out,
            "v={}: fishbones {} (eulerian {}), count {}, expected {}, {}",
            g.strict,
            g.fishbones,
            g.eulerian,
            g.count,
            g.expected,
            if g.ok { "ok" } else { "MISMATCH" }
        );
    }
    let flag = |ok: bool| if ok { "ok" } else { "VIOLATED" };
    let _ = writeln!(
        out,
        "cover {}, disjoint {}, classification {}, counts {}, groups {}, total {} {}",
        flag(report.cover_ok),
        flag(report.disjoint_ok),
        flag(report.classify_ok),
        flag(report.counts_ok),
        flag(report.groups_ok),
        report.total,
        flag(report.total_ok)
    );
    let _ = writeln!(
        out,
        "verdict: {}",
        if report.all_ok() {
            "partition verified"
        } else {
            "PARTITION FALSIFIED"
        }
    );
    out
}
