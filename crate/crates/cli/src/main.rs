//! `isotemporal`: count, enumerate and verify isotemporal classes of n-gons,
//! inspect ±-form symmetries and answer temporal reachability queries.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use isotemporal::counting::{self, CountError, ExactCount};
use isotemporal::enumeration::{self, VerifyOptions, DEFAULT_CAP};
use isotemporal::{detect_symmetries, PmForm, SymmetryProfile, TemporalNetwork};

#[derive(Debug, Parser)]
#[command(name = "isotemporal", version, about)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// The three-branch closed formula.
    Formula,
    /// Burnside's lemma over cycle orientations.
    Burnside,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of isotemporal classes of the n-gon.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// Print class counts for a range of n as CSV.
    Sequence {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Add a column with N(n) / N(n - 1).
        #[arg(long)]
        ratios: bool,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// List one canonical ±-form per class with its orbit size and symmetries.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check the closed formulas against exhaustive oracles.
    Verify {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Report the symmetries of a ±-form such as "+0-0".
    Symmetry {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// List the vertices that may hold an object first held by SOURCE.
    Reach { network: PathBuf, source: String },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn class_count(n: u64, method: Method) -> Result<ExactCount, CountError> {
    match method {
        Method::Formula => counting::isotemporal_class_count(n),
        Method::Burnside => counting::burnside_class_count(n),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable report")
}

fn count(n: u64, method: Method, format: Format) -> Result<String, Failure> {
    if n < 3 {
        return Err(usage(format!("n must be at least 3, got {n}")));
    }
    let value = class_count(n, method).map_err(usage)?;
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("n,count\n{n},{value}\n"),
        Format::Json => format!(
            "{}\n",
            to_json(&serde_json::json!({"n": n, "count": value}))
        ),
    })
}

fn sequence(
    from: u64,
    to: u64,
    ratios: bool,
    method: Method,
    format: Format,
) -> Result<String, Failure> {
    if from < 3 || from > to {
        return Err(usage(format!("need 3 <= from <= to, got {from}..{to}")));
    }
    let mut rows = Vec::new();
    let mut previous = if from > 3 {
        Some(class_count(from - 1, method).map_err(usage)?)
    } else {
        None
    };
    for n in from..=to {
        let value = class_count(n, method).map_err(usage)?;
        let ratio = previous
            .as_ref()
            .map(|p| counting::decimal_ratio(value.value(), p.value(), 6));
        rows.push((n, value.clone(), ratio));
        previous = Some(value);
    }
    let mut out = String::new();
    match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, c, r)| {
                    let mut item = serde_json::json!({"n": n, "count": c});
                    if ratios {
                        item["ratio"] = serde_json::json!(r);
                    }
                    item
                })
                .collect();
            writeln!(out, "{}", to_json(&items)).unwrap();
        }
        Format::Csv | Format::Text => {
            let sep = if format == Format::Csv { "," } else { " " };
            if format == Format::Csv {
                writeln!(out, "n{sep}count{}", if ratios { ",ratio" } else { "" }).unwrap();
            }
            for (n, c, r) in rows {
                write!(out, "{n}{sep}{c}").unwrap();
                if ratios {
                    write!(out, "{sep}{}", r.unwrap_or_default()).unwrap();
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn enumerate(n: usize, cap: usize, threads: usize, format: Format) -> Result<String, Failure> {
    let census = enumeration::enumerate_pm_classes_parallel(n, cap, threads).map_err(usage)?;
    let mut out = String::new();
    match format {
        Format::Json => writeln!(out, "{}", to_json(&census.classes)).unwrap(),
        Format::Text | Format::Csv => {
            for c in &census.classes {
                writeln!(
                    out,
                    "{} orbit={} sym={}",
                    c.form,
                    c.orbit_size,
                    c.profile.signature()
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

fn verify(
    from: usize,
    to: usize,
    cap: usize,
    threads: usize,
    format: Format,
) -> Result<(String, bool), Failure> {
    if from < 3 || from > to {
        return Err(usage(format!("need 3 <= from <= to, got {from}..{to}")));
    }
    if to > cap {
        return Err(usage(format!("to = {to} is above the census cap {cap}")));
    }
    let options = VerifyOptions {
        census_cap: cap,
        threads,
        ..VerifyOptions::default()
    };
    let report = enumeration::verify(from..to + 1, options);
    let mut out = String::new();
    match format {
        Format::Json => writeln!(out, "{}", to_json(&report)).unwrap(),
        Format::Csv => {
            writeln!(out, "n,check,formula,oracle,pass").unwrap();
            for e in &report.entries {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.n, e.check, e.formula, e.oracle, e.pass
                )
                .unwrap();
            }
        }
        Format::Text => {
            for e in &report.entries {
                writeln!(
                    out,
                    "{:>3}  {:<30} {:>12} {:>12}  {}",
                    e.n,
                    e.check,
                    e.formula,
                    e.oracle,
                    if e.pass { "PASS" } else { "FAIL" }
                )
                .unwrap();
            }
            let failed = report.failures().count();
            writeln!(
                out,
                "{} checks, {} passed, {} failed",
                report.entries.len(),
                report.entries.len() - failed,
                failed
            )
            .unwrap();
        }
    }
    Ok((out, report.all_pass()))
}

fn axes(label: &str, set: &std::collections::BTreeSet<usize>, prefix: &str) -> String {
    let items: Vec<String> = set.iter().map(|a| format!("{prefix}{}", a + 1)).collect();
    format!(
        "{label}: {}\n",
        if items.is_empty() {
            "-".into()
        } else {
            items.join(" ")
        }
    )
}

fn symmetry_text(form: &PmForm, p: &SymmetryProfile) -> String {
    let mut out = format!("form: {form} (n = {})\n", form.len());
    out += &axes("mirror axes", &p.mirror_edge_axes, "e");
    out += &axes("skewed mirror edge axes", &p.skewed_mirror_edge_axes, "e");
    out += &axes(
        "skewed mirror vertex axes",
        &p.skewed_mirror_vertex_axes,
        "v",
    );
    let folds = |s: &std::collections::BTreeSet<usize>| {
        if s.is_empty() {
            "-".to_string()
        } else {
            s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        }
    };
    out += &format!("rotational folds: {}\n", folds(&p.rotational_folds));
    out += &format!(
        "skewed rotational folds: {}\n",
        folds(&p.skewed_rotational_folds)
    );
    out += &format!("negation isomorphic: {}\n", p.negation_isomorphic);
    out
}

fn symmetry(text: &str, format: Format) -> Result<String, Failure> {
    let form: PmForm = text.parse().map_err(usage)?;
    let profile = detect_symmetries(&form);
    Ok(match format {
        Format::Text => symmetry_text(&form, &profile),
        Format::Json | Format::Csv => format!("{}\n", to_json(&profile)),
    })
}

fn reach(path: &PathBuf, source: &str, format: Format) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let net = TemporalNetwork::from_json(&text).map_err(usage)?;
    let set = net.temporal_reachable_set(source).map_err(usage)?;
    Ok(match format {
        Format::Json => format!("{}\n", to_json(&set)),
        Format::Text | Format::Csv => set.into_iter().map(|v| v + "\n").collect(),
    })
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let f = cli.format;
    let ok = |s: String| (s, true);
    match cli.command {
        Command::Count { n, method } => count(n, method, f.unwrap_or(Format::Text)).map(ok),
        Command::Sequence {
            from,
            to,
            ratios,
            method,
        } => sequence(from, to, ratios, method, f.unwrap_or(Format::Csv)).map(ok),
        Command::Enumerate { n, cap, threads } => {
            enumerate(n, cap, threads, f.unwrap_or(Format::Text)).map(ok)
        }
        Command::Verify {
            from,
            to,
            cap,
            threads,
        } => verify(from, to, cap, threads, f.unwrap_or(Format::Text)),
        Command::Symmetry { form } => symmetry(&form, f.unwrap_or(Format::Json)).map(ok),
        Command::Reach { network, source } => {
            reach(&network, &source, f.unwrap_or(Format::Text)).map(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, all_pass)) => {
            print!("{out}");
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
