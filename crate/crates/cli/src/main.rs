//! `bellforge`: exact partition-function sequences from the command line.
//!
//! Exit codes: 0 success, 1 a check or cross-method comparison failed,
//! 2 usage or parse error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bellforge::arith::format_rational;
use bellforge::errata::errata_report;
use bellforge::partfun::{partition_p, ratio_values, Method, NamedFunction, DEFAULT_FAA_CAP};
use bellforge::partitions::pentagonal_table;
use bellforge::product::{Factor, SupportSet};
use bellforge::report::SequenceReport;
use bellforge::specfile::parse_ratio;
use bellforge::verify::{run_identity, Identity};
use bellforge::GeneratingRatio;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

const CAP_ENV: &str = "BELLFORGE_FAA_CAP";

#[derive(Parser)]
#[command(name = "bellforge", version, about = "Exact partition functions via Bell partition polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print f(0..=max) for a named partition function.
    Seq {
        /// p, w, cubic, overcubic, psi-star or phi-star
        function: String,
        #[arg(long)]
        max: usize,
        /// Allowed parts for `w`, e.g. 1,2,5
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = SeqMethod::Auto)]
        method: SeqMethod,
    },
    /// Coefficients of a product ratio read from a JSON spec file.
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = EvalMethod::Both)]
        method: EvalMethod,
    },
    /// Run an identity suite and print one verdict per checked instance.
    Verify {
        /// reciprocal, euler, sigma, chan, kim, additivity-index,
        /// additivity-set, restricted-recursion or theta
        identity: String,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
    },
    /// Time three p(n) algorithms per bucket of n and compare their values.
    Bench {
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long, default_value_t = 10)]
        bucket: usize,
    },
    /// Compare transcribed closed forms against the engine.
    Errata {
        #[arg(long, default_value_t = 20)]
        max: usize,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqMethod {
    Auto,
    Faa,
    Series,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalMethod {
    Faa,
    Series,
    Both,
}

enum Failure {
    /// Exit 1.
    Check(String),
    /// Exit 2.
    Usage(String),
}

impl From<bellforge::Error> for Failure {
    fn from(e: bellforge::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn faa_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{CAP_ENV} must be a natural number, got '{raw}'"))),
        Err(_) => Ok(DEFAULT_FAA_CAP),
    }
}

fn within_cap(max: usize, cap: usize) -> Result<(), Failure> {
    if max > cap {
        return Err(Failure::Usage(format!(
            "partition sums are capped at n = {cap} (set {CAP_ENV} to raise it); got --max {max}"
        )));
    }
    Ok(())
}

fn cmd_seq(function: &str, max: usize, parts: Option<&[u64]>, format: Format, method: SeqMethod) -> CmdResult {
    let named = NamedFunction::parse(function, parts)?;
    if parts.is_some() && !matches!(named, NamedFunction::Restricted(_)) {
        return Err(Failure::Usage(format!("--parts only applies to w, not {function}")));
    }
    let cap = faa_cap()?;
    let method = match method {
        SeqMethod::Auto => Method::Auto { cap },
        SeqMethod::Faa => {
            within_cap(max, cap)?;
            Method::FaaDiBruno
        }
        SeqMethod::Series => Method::Series,
    };
    let values = named.sequence(max, method)?;
    let mut report = SequenceReport::new(named.name()).param("max", max);
    if let Some(parts) = parts {
        let joined: Vec<String> = parts.iter().map(u64::to_string).collect();
        report = report.param("parts", joined.join(","));
    }
    for (n, v) in values.iter().enumerate() {
        report.push_value(n, v);
    }
    Ok(match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json() + "\n",
    })
}

fn cmd_eval(spec: &PathBuf, max: usize, method: EvalMethod) -> CmdResult {
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", spec.display())))?;
    let ratio = parse_ratio(&text)?;
    if method != EvalMethod::Series {
        within_cap(max, faa_cap()?)?;
    }
    let mut out = String::new();
    match method {
        EvalMethod::Faa | EvalMethod::Series => {
            let m = if method == EvalMethod::Faa { Method::FaaDiBruno } else { Method::Series };
            out.push_str("n,value\n");
            for (n, v) in ratio_values(&ratio, max, m).iter().enumerate() {
                writeln!(out, "{n},{}", format_rational(v)).unwrap();
            }
            Ok(out)
        }
        EvalMethod::Both => {
            let faa = ratio_values(&ratio, max, Method::FaaDiBruno);
            let series = ratio_values(&ratio, max, Method::Series);
            out.push_str("n,faa,series,agree\n");
            let mut mismatches = 0;
            for (n, (f, s)) in faa.iter().zip(&series).enumerate() {
                let agree = f == s;
                mismatches += usize::from(!agree);
                writeln!(out, "{n},{},{},{agree}", format_rational(f), format_rational(s)).unwrap();
            }
            if mismatches == 0 {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check(format!("{mismatches} coefficients disagree between methods")))
            }
        }
    }
}

fn cmd_verify(identity: &str, max: usize, format: VerifyFormat) -> CmdResult {
    let identity: Identity = identity.parse()?;
    let report = run_identity(identity, max, faa_cap()?)?;
    let out = match format {
        VerifyFormat::Json => report.to_json() + "\n",
        VerifyFormat::Text => {
            let mut out = String::new();
            for v in &report.verdicts {
                let tag = if v.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} {}: {}", report.name, v.check, v.details).unwrap();
            }
            writeln!(out, "{}: {} checks, {} failed", report.name, report.verdicts.len(), report.failures()).unwrap();
            out
        }
    };
    if report.all_pass() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check(format!("{} failed {} checks", report.name, report.failures())))
    }
}

/// Minimum wall time of `repeat` runs, and the last result.
fn timed<T>(repeat: usize, mut f: impl FnMut() -> T) -> (Duration, T) {
    let mut best = Duration::MAX;
    let mut result = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed());
        result = Some(value);
    }
    (best, result.expect("at least one run"))
}

fn series_p_table(max: usize) -> Vec<BigUint> {
    let euler = Factor::unit(SupportSet::AllNaturals, 1).expect("valid factor");
    GeneratingRatio::new(vec![], vec![euler])
        .series(max)
        .coeffs()
        .iter()
        .map(|c| c.to_integer().to_biguint().expect("p(n) is natural"))
        .collect()
}

fn cmd_bench(max: usize, repeat: usize, bucket: usize) -> CmdResult {
    within_cap(max, faa_cap()?)?;
    if bucket == 0 {
        return Err(Failure::Usage("--bucket must be positive".into()));
    }
    let mut out = String::from("n_from,n_to,p_n_to,partition_sum_us,pentagonal_us,series_us,agree\n");
    let mut disagreements = 0;
    let mut lo = 0;
    while lo <= max {
        let hi = (lo + bucket - 1).min(max);
        let (t_sum, by_sum) = timed(repeat, || {
            (lo..=hi).map(partition_p).collect::<Result<Vec<_>, _>>()
        });
        let by_sum = by_sum?;
        let (t_pent, pent) = timed(repeat, || pentagonal_table(hi).split_off(lo));
        let (t_series, series) = timed(repeat, || series_p_table(hi).split_off(lo));
        let agree = by_sum == pent && pent == series;
        disagreements += usize::from(!agree);
        writeln!(
            out,
            "{lo},{hi},{},{},{},{},{agree}",
            pent[pent.len() - 1],
            t_sum.as_micros(),
            t_pent.as_micros(),
            t_series.as_micros()
        )
        .unwrap();
        lo = hi + 1;
    }
    if disagreements == 0 {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check(format!("{disagreements} buckets disagree")))
    }
}

fn cmd_errata(max: usize, format: VerifyFormat) -> CmdResult {
    let report = errata_report(max);
    Ok(match format {
        VerifyFormat::Text => report.render_text(),
        VerifyFormat::Json => report.to_json() + "\n",
    })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Seq { function, max, parts, format, method } => {
            cmd_seq(&function, max, parts.as_deref(), format, method)
        }
        Command::Eval { spec, max, method } => cmd_eval(&spec, max, method),
        Command::Verify { identity, max, format } => cmd_verify(&identity, max, format),
        Command::Bench { max, repeat, bucket } => cmd_bench(max, repeat, bucket),
        Command::Errata { max, format } => cmd_errata(max, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            eprintln!("bellforge: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("bellforge: {msg}");
            ExitCode::from(2)
        }
    }
}
