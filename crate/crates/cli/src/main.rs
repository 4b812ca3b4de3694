mod catalog;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcap::partition::GapConfig;
use qcap::series::{term_string, QSeries};
use qcap::verify::{self, Report, RunConfig, Status, REGISTRY, SCHEMA_VERSION};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "qcap", version, about = "Exact q-series verification for level 3 gap partition identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// Exclusive upper q-exponent.
    #[arg(long, env = "QCAP_DEFAULT_ORDER")]
    q_order: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks; exits 1 if any fails.
    Verify {
        /// A check name, or "all".
        #[arg(long, default_value = "all")]
        identity: String,
        #[command(flatten)]
        common: Common,
        /// Truncation degree in z for the q-difference residuals.
        #[arg(long)]
        z_degree: Option<usize>,
        /// Restrict to configurations with this alpha (0 or 1).
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        alpha: Option<u8>,
        /// Restrict to configurations with this beta (0 or 1).
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        beta: Option<u8>,
    },
    /// Print a named series (see `qcap list`).
    Expand {
        #[arg(long)]
        series: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        alpha: u8,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        beta: u8,
    },
    /// List the registered checks and expandable series.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

const DEFAULT_EXPAND_ORDER: i64 = 50;

struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), UsageError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| UsageError(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    match cli.command {
        Command::Verify { identity, common, z_degree, alpha, beta } => {
            if let Some(o) = common.q_order {
                if o < 1 {
                    return Err(UsageError(format!("--q-order must be at least 1, got {o}")));
                }
            }
            let only = if identity == "all" {
                None
            } else {
                if verify::find(&identity).is_none() {
                    return Err(UsageError(format!(
                        "unknown identity {identity:?}; valid names: all, {}",
                        verify::names().join(", ")
                    )));
                }
                Some(vec![identity.clone()])
            };
            let residuals = identity == "all" || identity.ends_with("qdiff-residual");
            if let Some(z) = z_degree.filter(|&z| z < 3 && residuals) {
                return Err(UsageError(format!("--z-degree must be at least 3, got {z}")));
            }
            let config = RunConfig {
                order: common.q_order,
                z_degree,
                alpha: alpha.map(|a| a == 1),
                beta: beta.map(|b| b == 1),
                only,
                fault: None,
            };
            let report = verify::run_all(&config).map_err(|e| UsageError(e.to_string()))?;
            let text = match common.format {
                Format::Json => json(&report),
                Format::Text => report_text(&report),
            };
            emit(&common.output, &text)?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Expand { series, common, alpha, beta } => {
            let order = common.q_order.unwrap_or(DEFAULT_EXPAND_ORDER);
            if order < 1 {
                return Err(UsageError(format!("--q-order must be at least 1, got {order}")));
            }
            let cfg = GapConfig::new(alpha == 1, beta == 1);
            let s = catalog::expand(&series, cfg, order).map_err(|e| match e {
                catalog::CatalogError::Unknown(n) => UsageError(format!(
                    "unknown series {n:?}; known: {}",
                    catalog::ENTRIES.iter().map(|e| e.pattern).collect::<Vec<_>>().join("; ")
                )),
                catalog::CatalogError::Compute(m) => UsageError(m),
            })?;
            let text = match common.format {
                Format::Text => series_text(&s),
                Format::Json => json(&SeriesJson::new(&series, &s)),
            };
            emit(&common.output, &text)?;
            Ok(0)
        }
        Command::List { format } => {
            let text = match format {
                Format::Json => json(&REGISTRY.iter().map(ListEntry::from).collect::<Vec<_>>()),
                Format::Text => {
                    let mut out = String::new();
                    for name in verify::names() {
                        let c = verify::find(name).expect("registered");
                        out += &format!("{} - {} [{}]\n", c.name, c.description, c.label);
                    }
                    out += "\nseries for `expand`:\n";
                    for e in catalog::ENTRIES {
                        out += &format!("  {} - {}\n", e.pattern, e.description);
                    }
                    out
                }
            };
            emit(&None, &text)?;
            Ok(0)
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ListEntry {
    name: &'static str,
    description: &'static str,
    label: &'static str,
    default_order: i64,
}

impl From<&verify::CheckInfo> for ListEntry {
    fn from(c: &verify::CheckInfo) -> Self {
        Self {
            name: c.name,
            description: c.description,
            label: c.label,
            default_order: c.default_order,
        }
    }
}

/// `coeffs[i]` holds the `q^{lo + i}` coefficient as `[t_exp, "coeff"]` pairs.
#[derive(Serialize)]
struct SeriesJson {
    schema_version: u32,
    series: String,
    lo: i64,
    order: i64,
    coeffs: Vec<Vec<(i64, String)>>,
}

impl SeriesJson {
    fn new(name: &str, s: &QSeries) -> Self {
        let mut coeffs: BTreeMap<i64, Vec<(i64, String)>> = BTreeMap::new();
        for (q, t, c) in s.terms() {
            coeffs.entry(q).or_default().push((t, c.to_string()));
        }
        Self {
            schema_version: SCHEMA_VERSION,
            series: name.to_string(),
            lo: s.lo(),
            order: s.order(),
            coeffs: (s.lo()..s.order()).map(|q| coeffs.remove(&q).unwrap_or_default()).collect(),
        }
    }
}

/// One term per line, by ascending `q` then `t`.
fn series_text(s: &QSeries) -> String {
    let mut out = String::new();
    for (q, t, c) in s.terms() {
        out += &term_string(c, t, q);
        out.push('\n');
    }
    if out.is_empty() {
        out = "0\n".to_string();
    }
    out
}

fn report_text(r: &Report) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Error => "ERROR",
        };
        let order = c.params.get("order").map(|v| v.to_string()).unwrap_or_default();
        out += &format!("{tag:5} {:22} order {order:>4} {:>9.3}s", c.name, c.elapsed_us as f64 / 1e6);
        if let Some(d) = &c.discrepancy {
            out += &format!(
                "  first difference at q^{} t^{}: {} vs {}",
                d.q_exp, d.t_exp, d.lhs_coeff, d.rhs_coeff
            );
        }
        if let Some(n) = &c.note {
            out += &format!("  ({n})");
        }
        out.push('\n');
    }
    let s = &r.summary;
    out += &format!(
        "{} checks: {} passed, {} failed, {} skipped, {} errors\n",
        s.total, s.passed, s.failed, s.skipped, s.errored
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcap::series::qs;

    #[test]
    fn term_formatting() {
        let s = qs(5, &[(0, 0, 1), (1, 1, -1), (2, -1, 3), (3, 0, -2)]);
        assert_eq!(series_text(&s), "1\n-t q\n3 t^-1 q^2\n-2 q^3\n");
        assert_eq!(series_text(&QSeries::zero(3)), "0\n");
    }
}
