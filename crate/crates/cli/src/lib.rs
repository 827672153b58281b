//! Command-line front end for `vfcomb`.
//!
//! Data goes to the output stream, diagnostics to the error stream. Exit
//! codes: 0 success, 1 a verification or validation failure, 2 a usage
//! error.

pub mod render;
pub mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vfcomb::asymptotics::{asymptotic_report, exact_constants, Trend};
use vfcomb::counting::CountTable;
use vfcomb::enumerate::{enumerate, enumerate_sorted};
use vfcomb::moduli::{ModuliReport, BURNSIDE_BOUND};
use vfcomb::{parse, render as render_text};

use render::Model;

/// Largest degree accepted by most subcommands.
pub const MAX_DEGREE: usize = 1000;
/// `count --by-type` runs a recursion whose cost grows like `d^6`.
pub const MAX_TYPE_DEGREE: usize = 60;

#[derive(Debug, Parser)]
#[command(
    name = "vfcomb",
    version,
    about = "Exact enumeration of combinatorial classes of polynomial vector fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DrawFormat {
    Svg,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Burnside,
    Polya,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    /// Coefficient of z^(d-1)
    Dm1,
    /// Coefficient of z^d
    D,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact class counts for one degree
    Count {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        by_dimension: bool,
        #[arg(long)]
        by_type: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: CountFormat,
    },
    /// List configurations as bracket strings, one per line
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        limit: Option<usize>,
        /// Sort lexicographically instead of generation order
        #[arg(long)]
        sorted: bool,
    },
    /// Draw the disk model of one configuration
    Render {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        config: String,
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: DrawFormat,
    },
    /// Classes up to rotation
    Moduli {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "burnside")]
        method: Method,
        #[arg(long, value_enum)]
        convention: Option<Convention>,
    },
    /// Growth, mean, variance and normality trends
    Asymptotics {
        #[arg(long, value_delimiter = ',', default_value = "25,50,100,200")]
        degrees: Vec<usize>,
    },
    /// Run every cross-check suite up to a degree
    Verify {
        #[arg(long)]
        max_degree: usize,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn io(e: std::io::Error) -> Failure {
    Failure::Check(format!("write failed: {e}"))
}

fn check_degree(d: usize, min: usize, max: usize) -> Outcome {
    if (min..=max).contains(&d) {
        Ok(())
    } else {
        Err(usage(format!("degree must be in {min}..={max}, got {d}")))
    }
}

#[derive(Serialize)]
struct TypeEntry {
    s: usize,
    h: usize,
    count: String,
}

#[derive(Serialize)]
struct CountDoc {
    degree: usize,
    total: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_dimension: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_type: Option<Vec<TypeEntry>>,
}

fn count(
    out: &mut dyn Write,
    degree: usize,
    by_dim: bool,
    by_type: bool,
    format: CountFormat,
) -> Outcome {
    check_degree(degree, 1, MAX_DEGREE)?;
    if by_type && degree > MAX_TYPE_DEGREE {
        return Err(usage(format!(
            "--by-type supports degrees up to {MAX_TYPE_DEGREE}"
        )));
    }
    if format == CountFormat::Csv && by_dim && by_type {
        return Err(usage("csv output takes one of --by-dimension or --by-type"));
    }
    let table = CountTable::build(degree as i64, by_type).map_err(|e| usage(e.to_string()))?;
    match format {
        CountFormat::Json => {
            let doc = CountDoc {
                degree,
                total: table.total.to_string(),
                by_dimension: by_dim
                    .then(|| table.by_dimension.iter().map(|c| c.to_string()).collect()),
                by_type: table.by_type.as_ref().map(|m| {
                    m.iter()
                        .map(|(&(s, h), c)| TypeEntry {
                            s,
                            h,
                            count: c.to_string(),
                        })
                        .collect()
                }),
            };
            let text = serde_json::to_string(&doc).expect("serializable");
            writeln!(out, "{text}").map_err(io)
        }
        CountFormat::Csv => {
            let mut text = String::new();
            if by_dim {
                text.push_str("degree,q,count\n");
                for (q, c) in table.by_dimension.iter().enumerate() {
                    text.push_str(&format!("{degree},{q},{c}\n"));
                }
            } else if let Some(types) = &table.by_type {
                text.push_str("degree,s,h,count\n");
                for ((s, h), c) in types {
                    text.push_str(&format!("{degree},{s},{h},{c}\n"));
                }
            } else {
                text.push_str(&format!("degree,total\n{degree},{}\n", table.total));
            }
            out.write_all(text.as_bytes()).map_err(io)
        }
    }
}

fn list(out: &mut dyn Write, degree: usize, limit: Option<usize>, sorted: bool) -> Outcome {
    check_degree(degree, 1, MAX_DEGREE)?;
    let limit = limit.unwrap_or(usize::MAX);
    let configs: Box<dyn Iterator<Item = _>> = if sorted {
        Box::new(
            enumerate_sorted(degree)
                .map_err(|e| usage(e.to_string()))?
                .into_iter(),
        )
    } else {
        Box::new(enumerate(degree).map_err(|e| usage(e.to_string()))?)
    };
    for c in configs.take(limit) {
        writeln!(out, "{}", render_text(&c)).map_err(io)?;
    }
    Ok(())
}

fn draw(degree: usize, config: &str, model: Model, path: &PathBuf, format: DrawFormat) -> Outcome {
    check_degree(degree, 1, MAX_DEGREE)?;
    let c = parse(config).map_err(|e| usage(format!("invalid bracket string: {e}")))?;
    if c.degree() != degree {
        return Err(usage(format!(
            "bracket string has {} elements, degree {degree} needs {}",
            c.len(),
            2 * (degree - 1)
        )));
    }
    let doc = match format {
        DrawFormat::Svg => render::svg(&c, model),
        DrawFormat::Dot => render::dot(&c, model),
    }
    .map_err(|e| Failure::Check(e.to_string()))?;
    fs::write(path, doc)
        .map_err(|e| Failure::Check(format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct ModuliDoc {
    degree: usize,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    convention: Option<&'static str>,
    count: Option<String>,
    burnside: Option<String>,
    polya_dm1: String,
    polya_d: String,
    discrepancy: bool,
    note: &'static str,
}

const POLYA_NOTE: &str = "the Polya series is experimental; its coefficients do not match the Burnside orbit counts under either convention";

fn moduli(
    out: &mut dyn Write,
    degree: usize,
    method: Method,
    convention: Option<Convention>,
) -> Outcome {
    check_degree(degree, 2, MAX_DEGREE)?;
    if method == Method::Burnside && degree > BURNSIDE_BOUND {
        return Err(usage(format!(
            "burnside counting supports degrees up to {BURNSIDE_BOUND}"
        )));
    }
    let report = ModuliReport::build(degree as i64).map_err(|e| usage(e.to_string()))?;
    let convention = match method {
        Method::Burnside => None,
        Method::Polya => Some(convention.unwrap_or(Convention::Dm1)),
    };
    let count = match convention {
        None => report.burnside.as_ref().map(|b| b.to_string()),
        Some(Convention::Dm1) => Some(report.polya_d_minus_1.to_string()),
        Some(Convention::D) => Some(report.polya_d.to_string()),
    };
    let doc = ModuliDoc {
        degree,
        method: match method {
            Method::Burnside => "burnside",
            Method::Polya => "polya",
        },
        convention: convention.map(|c| match c {
            Convention::Dm1 => "dm1",
            Convention::D => "d",
        }),
        count,
        burnside: report.burnside.as_ref().map(|b| b.to_string()),
        polya_dm1: report.polya_d_minus_1.to_string(),
        polya_d: report.polya_d.to_string(),
        discrepancy: report.discrepancy(),
        note: POLYA_NOTE,
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("serializable")
    )
    .map_err(io)
}

#[derive(Serialize)]
struct ConstantDoc {
    name: &'static str,
    exact: String,
    value: f64,
}

#[derive(Serialize)]
struct TrendDoc {
    name: &'static str,
    points: Vec<(usize, f64)>,
    tolerance: f64,
    decreasing: bool,
    within_tolerance: bool,
}

impl From<&Trend> for TrendDoc {
    fn from(t: &Trend) -> Self {
        TrendDoc {
            name: t.name,
            points: t.points.clone(),
            tolerance: t.tolerance,
            decreasing: t.strictly_decreasing(),
            within_tolerance: t.last_within(),
        }
    }
}

#[derive(Serialize)]
struct AsymptoticsDoc {
    constants: Vec<ConstantDoc>,
    trends: Vec<TrendDoc>,
}

fn asymptotics(out: &mut dyn Write, degrees: &[usize]) -> Outcome {
    if degrees.is_empty() {
        return Err(usage("--degrees needs at least one degree"));
    }
    for &d in degrees {
        check_degree(d, 2, MAX_DEGREE)?;
    }
    let consts = exact_constants();
    let report = asymptotic_report(degrees).map_err(|e| usage(e.to_string()))?;
    let doc = AsymptoticsDoc {
        constants: consts
            .named()
            .into_iter()
            .map(|(name, v)| ConstantDoc {
                name,
                exact: v.to_string(),
                value: v.to_f64(),
            })
            .collect(),
        trends: report.trends().into_iter().map(TrendDoc::from).collect(),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable")
    )
    .map_err(io)
}

fn run_verify(out: &mut dyn Write, max_degree: usize) -> Outcome {
    check_degree(max_degree, 1, verify::MAX_DEGREE)?;
    let results = verify::run_all(max_degree);
    let mut failed = 0;
    for r in &results {
        if r.passed() {
            writeln!(out, "{}: PASS ({})", r.name, r.detail).map_err(io)?;
        } else {
            failed += 1;
            writeln!(out, "{}: FAIL ({})", r.name, r.failures.join("; ")).map_err(io)?;
        }
    }
    writeln!(
        out,
        "{} of {} suites passed",
        results.len() - failed,
        results.len()
    )
    .map_err(io)?;
    if failed > 0 {
        Err(Failure::Check(format!(
            "{failed} verification suites failed"
        )))
    } else {
        Ok(())
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let text = e.render().to_string();
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            let _ = writeln!(err, "{}", line.trim());
            return 2;
        }
    };
    let outcome = match &cli.command {
        Command::Count {
            degree,
            by_dimension,
            by_type,
            format,
        } => count(out, *degree, *by_dimension, *by_type, *format),
        Command::Enumerate {
            degree,
            limit,
            sorted,
        } => list(out, *degree, *limit, *sorted),
        Command::Render {
            degree,
            config,
            model,
            out: path,
            format,
        } => draw(*degree, config, *model, path, *format),
        Command::Moduli {
            degree,
            method,
            convention,
        } => moduli(out, *degree, *method, *convention),
        Command::Asymptotics { degrees } => asymptotics(out, degrees),
        Command::Verify { max_degree } => run_verify(out, *max_degree),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
