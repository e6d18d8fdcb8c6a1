//! Command-line front end for the `unimodal` library.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a usage
//! error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use unimodal::asymptotics::{self, GrowthTarget};
use unimodal::enumerators::{self, FamilyTag};
use unimodal::error::Error;
use unimodal::gf::{self, NamedSeriesKey};
use unimodal::identities;
use unimodal::parity;

/// Largest order accepted by `expand` and `scan-nonneg`.
const MAX_ORDER: usize = 5000;

#[derive(Parser)]
#[command(name = "unimodal", version, about = "Exact q-series experiments on unimodal sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignedFamily {
    Ubar,
    U2bar,
    U2,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a named generating function.
    Expand {
        #[arg(long)]
        series: String,
        #[arg(long, env = "UNIMODAL_ORDER", default_value_t = 100)]
        order: usize,
        /// Keep the ζ-refinement.
        #[arg(long)]
        zeta: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count the objects of a family by enumeration.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
    },
    /// Verify catalog identities.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        identity: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Format,
    },
    /// Compare the three routes to the parity of u2(n).
    Parity {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "json")]
        emit: Format,
    },
    /// Compare exact counts with their main terms.
    Asym {
        #[arg(long)]
        target: String,
        #[arg(long, value_delimiter = ',', default_value = "500,1000,2000")]
        checkpoints: Vec<usize>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Format,
    },
    /// Report negative rank-refined coefficients.
    ScanNonneg {
        #[arg(long, value_enum)]
        family: SignedFamily,
        #[arg(long)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn print_json(v: &Value) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer() -> csv::Writer<io::Stdout> {
    csv::Writer::from_writer(io::stdout())
}

fn check_order(order: usize) -> Outcome {
    if order > MAX_ORDER {
        return Err(Failure::Usage(format!("order {order} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn expand(series: &str, order: usize, zeta: bool, format: Format) -> Outcome {
    let key: NamedSeriesKey = series.parse()?;
    check_order(order)?;
    let built = gf::build(key, order)?;
    match format {
        Format::Json => print_json(&built.to_json(key, order, zeta)?),
        Format::Csv => {
            let body = built.refined_body()?;
            let mut w = csv_writer();
            w.write_record(["key", "m", "n", "coefficient"])?;
            if zeta {
                for (n, c) in body.coeffs().iter().enumerate() {
                    for (m, v) in c.terms() {
                        w.write_record([key.name(), &m.to_string(), &n.to_string(), &v.to_string()])?;
                    }
                }
            } else {
                for (n, c) in body.at_zeta_one().coeffs().iter().enumerate() {
                    w.write_record([key.name(), "", &n.to_string(), &c.to_string()])?;
                }
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn count(family: &str, n: u32) -> Outcome {
    let family: FamilyTag = family.parse()?;
    let by_rank = enumerators::count_by_rank(family, n)?;
    let total: i64 = by_rank.values().sum();
    let ranks: serde_json::Map<String, Value> = by_rank.iter().map(|(m, c)| (m.to_string(), json!(c))).collect();
    print_json(&json!({"family": family.name(), "n": n, "count": total, "by_rank": ranks}))
}

fn verify(identity: Option<&str>, order: Option<usize>, emit: Format) -> Outcome {
    let reports = match identity {
        Some(key) => {
            let order = order.unwrap_or(identities::record(key)?.default_order);
            vec![identities::verify(key, order)?]
        }
        None => identities::verify_all(order.unwrap_or(40)),
    };
    match emit {
        Format::Json => print_json(&Value::Array(reports.iter().map(|r| r.to_json()).collect()))?,
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["key", "order", "pass", "checks", "first_mismatch"])?;
            for r in &reports {
                let at = r.first_mismatch.map(|(m, n)| format!("{m}:{n}")).unwrap_or_default();
                w.write_record([r.key.clone(), r.order.to_string(), r.pass.to_string(), r.checks.to_string(), at])?;
            }
            w.flush()?;
        }
    }
    for r in &reports {
        eprintln!("{r}");
    }
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn parity(max_n: u64, emit: Format) -> Outcome {
    let rows = parity::parity_scan(max_n)?;
    let disagreements = rows.iter().filter(|r| !r.agree()).count();
    match emit {
        Format::Json => print_json(&json!({
            "max_n": max_n,
            "disagreements": disagreements,
            "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "u2_mod2", "rep_half_mod2", "predicate", "agree"])?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    (r.series as u8).to_string(),
                    (r.norm_form as u8).to_string(),
                    r.predicate.to_string(),
                    r.agree().to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    if disagreements == 0 {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn asym(target: &str, checkpoints: &[usize], emit: Format) -> Outcome {
    let target: GrowthTarget = target.parse()?;
    let top = checkpoints.iter().copied().max().unwrap_or(0);
    let counts = asymptotics::exact_counts(target, top)?;
    let report = asymptotics::ratio_report_from(target, &counts, checkpoints)?;
    let first_decrease = asymptotics::first_decrease(&counts);
    match emit {
        Format::Json => {
            let mut v = report.to_json();
            v["first_decrease"] = json!(first_decrease);
            print_json(&v)?;
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["target", "n", "count", "ratio", "deviation", "log_ratio"])?;
            for r in &report.rows {
                w.write_record([
                    target.name().to_string(),
                    r.n.to_string(),
                    r.count.to_string(),
                    r.ratio.to_string(),
                    r.deviation().to_string(),
                    r.log_ratio.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    if report.deviation_decreasing() && first_decrease.is_none() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn scan_nonneg(family: SignedFamily, max_n: usize) -> Outcome {
    check_order(max_n)?;
    let (key, name) = match family {
        SignedFamily::Ubar => (NamedSeriesKey::Ubar, "ubar"),
        SignedFamily::U2bar => (NamedSeriesKey::Ubar2Neg, "u2bar"),
        SignedFamily::U2 => (NamedSeriesKey::U2Neg, "u2"),
    };
    let s = gf::build_series(key, max_n)?;
    let negatives: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(n, c)| {
            c.terms()
                .filter(|(_, v)| v.sign() == num_bigint::Sign::Minus)
                .map(move |(m, v)| json!({"m": m, "n": n, "c": v.to_string()}))
                .collect::<Vec<_>>()
        })
        .collect();
    print_json(&json!({"family": name, "max_n": max_n, "negative_count": negatives.len(), "negatives": negatives}))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Expand { series, order, zeta, format } => expand(&series, order, zeta, format),
        Command::Count { family, n } => count(&family, n),
        Command::Verify { identity, order, emit, .. } => verify(identity.as_deref(), order, emit),
        Command::Parity { max_n, emit } => parity(max_n, emit),
        Command::Asym { target, checkpoints, emit } => asym(&target, &checkpoints, emit),
        Command::ScanNonneg { family, max_n } => scan_nonneg(family, max_n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
