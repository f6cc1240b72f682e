//! `rathyp`: runs the relation derivations, solvers and scans and reports
//! each check as text or JSON.

mod commands;
mod report;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rathyp_core::evidence::{Expr, DEFAULT_BUDGET};
use rathyp_core::trig::AngleQ;

use crate::commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "rathyp", version, about = "Verifies relations and scans for rational-angled hyperbolic polygons")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rebuild a relation or the intermediate identities and check them.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Write the relation in the exponential-polynomial line format.
        #[arg(long, value_name = "FILE")]
        dump: Option<std::path::PathBuf>,
    },
    /// Solve a triangle from its three angles.
    Solve {
        #[arg(long, value_enum)]
        geometry: Option<GeometryArg>,
        #[command(flatten)]
        angles: AngleArgs,
        #[command(flatten)]
        curvature: CurvatureArg,
    },
    /// Finite side of a triangle with one ideal vertex; without angles, runs the reference cases.
    Ideal {
        #[command(flatten)]
        angles: OptAngleArgs,
        #[command(flatten)]
        curvature: CurvatureArg,
    },
    /// Metrics of a regular hyperbolic polygon.
    Polygon {
        /// Number of sides.
        #[arg(long, short = 'n')]
        sides: u32,
        /// Interior angle as p/q (meaning p·π/q).
        #[arg(long, value_parser = parse_angle, conflicts_with = "angle_degrees", required_unless_present = "angle_degrees")]
        angle: Option<AngleQ>,
        /// Interior angle in integer degrees.
        #[arg(long)]
        angle_degrees: Option<u64>,
        #[command(flatten)]
        curvature: CurvatureArg,
    },
    /// Degree formula for cos(2kπ/n) and the totient bound 2φ(n)² ≥ n.
    Degrees {
        #[arg(long, default_value_t = 100)]
        max_n: u64,
        #[arg(long, default_value_t = 1_000_000)]
        totient_max: u64,
    },
    /// Rational angle triples whose side ratios are all rational.
    Sigma1 {
        #[arg(long, default_value_t = 60)]
        max_den: u64,
    },
    /// Degree-two representatives of the fourteen classes and two reconstructed triangles.
    Table1 {
        /// Also test this triple of integer degrees.
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<u64>>,
    },
    /// Bounded search for an integer polynomial vanishing at a constant.
    Evidence {
        /// Registry name (tri-side-pi4, ideal-pi3, quad-fig3-radius) or an expression.
        constant: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 20)]
        height: u32,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Evaluate both relations on seeded random configurations.
    Oracle {
        #[arg(long, default_value_t = 20240501)]
        triangle_seed: u64,
        #[arg(long, default_value_t = 1000)]
        triangles: usize,
        #[arg(long, default_value_t = 20240502)]
        quad_seed: u64,
        #[arg(long, default_value_t = 200)]
        quads: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    TriangleRelation,
    QuadRelation,
    Identities,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GeometryArg {
    Hyperbolic,
    Spherical,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct AngleArgs {
    /// Angles as p/q (meaning p·π/q), comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_angle)]
    angles: Option<Vec<AngleQ>>,
    /// Angles in integer degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptAngleArgs {
    /// Angles as p/q (meaning p·π/q), comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_angle)]
    angles: Option<Vec<AngleQ>>,
    /// Angles in integer degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
struct CurvatureArg {
    /// Curvature as a decimal or expression, e.g. `-(acosh(1+sqrt2))^2` or `pi^2/4`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_curvature)]
    curvature: Option<f64>,
}

fn parse_angle(s: &str) -> Result<AngleQ, String> {
    s.parse().map_err(|e: rathyp_core::Error| e.to_string())
}

fn parse_curvature(s: &str) -> Result<f64, String> {
    let e = Expr::parse(s).map_err(|e| e.to_string())?;
    let k = e.eval_f64().map_err(|e| e.to_string())?;
    if k.is_finite() {
        Ok(k)
    } else {
        Err(format!("curvature `{s}` is not finite"))
    }
}

fn angles_from(angles: Option<Vec<AngleQ>>, degrees: Option<Vec<u64>>) -> Result<Option<Vec<AngleQ>>, CliError> {
    match (angles, degrees) {
        (Some(a), _) => Ok(Some(a)),
        (None, Some(d)) => d
            .into_iter()
            .map(AngleQ::from_degrees)
            .collect::<rathyp_core::Result<Vec<_>>>()
            .map(Some)
            .map_err(|e| CliError::Usage(e.to_string())),
        (None, None) => Ok(None),
    }
}

fn exact_count(v: Option<Vec<AngleQ>>, n: usize) -> Result<Option<Vec<AngleQ>>, CliError> {
    match v {
        Some(a) if a.len() != n => Err(CliError::Usage(format!("expected {n} angles, got {}", a.len()))),
        other => Ok(other),
    }
}

fn run(cli: Cli) -> Result<report::Report, CliError> {
    match cli.command {
        Command::Verify { target, dump } => match target {
            VerifyTarget::TriangleRelation => Ok(commands::verify_triangle(dump.as_deref())),
            VerifyTarget::QuadRelation => Ok(commands::verify_quad(dump.as_deref())),
            VerifyTarget::Identities => {
                if dump.is_some() {
                    return Err(CliError::Usage("--dump applies to relations only".into()));
                }
                Ok(commands::verify_identities())
            }
        },
        Command::Solve {
            geometry,
            angles,
            curvature,
        } => {
            let a = exact_count(angles_from(angles.angles, angles.degrees)?, 3)?.expect("group is required");
            Ok(commands::solve(geometry, [a[0], a[1], a[2]], curvature.curvature))
        }
        Command::Ideal { angles, curvature } => {
            let a = exact_count(angles_from(angles.angles, angles.degrees)?, 2)?;
            Ok(commands::ideal(a.map(|a| [a[0], a[1]]), curvature.curvature))
        }
        Command::Polygon {
            sides,
            angle,
            angle_degrees,
            curvature,
        } => {
            let theta = match (angle, angle_degrees) {
                (Some(a), _) => a,
                (None, Some(d)) => AngleQ::from_degrees(d).map_err(|e| CliError::Usage(e.to_string()))?,
                (None, None) => unreachable!("clap requires one angle form"),
            };
            Ok(commands::polygon(sides, theta, curvature.curvature))
        }
        Command::Degrees { max_n, totient_max } => Ok(commands::degrees(max_n, totient_max)),
        Command::Sigma1 { max_den } => Ok(commands::sigma1(max_den)),
        Command::Table1 { triple } => {
            let triple = match triple {
                Some(t) if t.len() != 3 => {
                    return Err(CliError::Usage(format!("--triple needs 3 degrees, got {}", t.len())));
                }
                t => t.map(|t| [t[0], t[1], t[2]]),
            };
            Ok(commands::table1(triple))
        }
        Command::Evidence {
            constant,
            degree,
            height,
            digits,
            budget,
        } => commands::evidence(&constant, degree, height, digits, budget),
        Command::Oracle {
            triangle_seed,
            triangles,
            quad_seed,
            quads,
        } => Ok(commands::oracle(triangle_seed, triangles, quad_seed, quads)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
