use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use podq_core::congruence::{equidistribution_check, family_members, family_scan, Family, FamilySpec};
use podq_core::enumeration::{stat_table, ENUMERATION_CAP};
use podq_core::qproducts::{a_series, expand_product, expand_product_mod, phi, pod2_gf, pod_gf, psi};
use podq_core::verify::{identity_names, run_all, run_identity, GROUPS};
use podq_core::{CheckReport, Error, ProductSpec, Series, Statistic};

mod output;

use output::{Format, Sink};

const THREADS_VAR: &str = "PODQ_THREADS";

#[derive(Parser)]
#[command(name = "podq", version)]
#[command(about = "Series expansion, enumeration and congruence checks for pod_{-2}(n)")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Output format for data records
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Stop at the first failing check
    #[arg(long, global = true)]
    fail_fast: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the coefficients of a named series or a product
    Expand(ExpandArgs),
    /// Tabulate a bipartition statistic by enumeration
    Oracle {
        /// Largest weight to enumerate
        #[arg(long = "n", value_name = "K")]
        n: usize,
        #[arg(long, value_parser = parse_stat)]
        stat: Statistic,
    },
    /// Run identity and congruence checks
    Verify(VerifyArgs),
    /// Scan a congruence family for alpha up to a bound
    Scan {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        alpha_max: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Check that a statistic is equidistributed mod 3 on weights 3n+2
    Equidist {
        #[arg(long, value_parser = parse_stat)]
        stat: Statistic,
        #[arg(long)]
        max_weight: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Pod2,
    Pod1,
    Psi,
    Phi,
    #[value(name = "A")]
    A,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_enum, required_unless_present = "product", conflicts_with = "product")]
    target: Option<Target>,
    /// Product such as "(-q;q^2)^2 * (q^2;q^2)^-2"
    #[arg(long)]
    product: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    order: u64,
    /// Reduce coefficients modulo m
    #[arg(long = "mod", value_name = "m")]
    modulus: Option<u64>,
    /// Keep only the terms q^{Mn+R}, reindexed by n
    #[arg(long, num_args = 2, value_names = ["M", "R"])]
    dissect: Option<Vec<usize>>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = ["all"], required_unless_present = "identity", conflicts_with = "identity")]
    suite: Option<String>,
    #[arg(long)]
    identity: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    order: u64,
}

fn parse_stat(s: &str) -> Result<Statistic, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// How a run ended, short of a library error.
enum Outcome {
    Pass,
    Fail,
}

impl From<bool> for Outcome {
    fn from(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

fn expand(args: &ExpandArgs, sink: &mut Sink) -> Result<Outcome, Failure> {
    let order = args.order as usize;
    let series: Series = match (&args.product, args.target) {
        (Some(text), _) => {
            let spec: ProductSpec = text.parse()?;
            match args.modulus {
                Some(m) => expand_product_mod(&spec, order, m)?,
                None => expand_product(&spec, order),
            }
        }
        (None, Some(Target::Pod2)) => pod2_gf(order, args.modulus)?,
        (None, Some(Target::Pod1)) => pod_gf(order, args.modulus)?,
        (None, Some(t)) => {
            let s = match t {
                Target::Psi => psi(order),
                Target::Phi => phi(order),
                _ => a_series(order),
            };
            match args.modulus {
                Some(m) => s.reduce_mod(m)?,
                None => s,
            }
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let series = match args.dissect.as_deref() {
        Some(&[m, r]) => {
            if r >= m {
                return Err(usage(format!("--dissect needs 0 <= R < M, got M = {m}, R = {r}")));
            }
            series.dissect(m, r)?
        }
        _ => series,
    };
    sink.coefficients(&series)?;
    Ok(Outcome::Pass)
}

fn oracle(n: usize, stat: Statistic, sink: &mut Sink) -> Result<Outcome, Failure> {
    if n > ENUMERATION_CAP {
        return Err(usage(format!("--n {n} exceeds the enumeration cap {ENUMERATION_CAP}")));
    }
    sink.stat_rows(&stat_table(stat, n))?;
    Ok(Outcome::Pass)
}

fn verify(args: &VerifyArgs, fail_fast: bool, sink: &mut Sink) -> Result<Outcome, Failure> {
    let order = args.order as usize;
    let reports = match (&args.identity, fail_fast) {
        (Some(name), _) => {
            if !identity_names().contains(&name.as_str()) {
                return Err(usage(format!(
                    "unknown identity '{name}'; expected one of: {}",
                    identity_names().join(", ")
                )));
            }
            run_identity(name, order)?
        }
        (None, false) => run_all(order)?,
        (None, true) => {
            let mut out = Vec::new();
            for g in GROUPS {
                out.extend(g.run(order)?);
                if out.iter().any(|r| !r.pass) {
                    break;
                }
            }
            out
        }
    };
    emit_reports(reports, fail_fast, sink)
}

fn scan(family: Family, alpha_max: u32, order: u64, fail_fast: bool, sink: &mut Sink) -> Result<Outcome, Failure> {
    let order = order as usize;
    if alpha_max < family.min_alpha() {
        return Err(usage(format!("{family} needs --alpha-max >= {}", family.min_alpha())));
    }
    let members = family_members(family, alpha_max, order)?;
    if members.is_empty() {
        let first = FamilySpec::new(family, family.min_alpha())?;
        return Err(usage(format!(
            "{family}: first index {} exceeds order {order}",
            first.offset
        )));
    }
    if let Some(last) = members.last() {
        if last.alpha < alpha_max {
            eprintln!("note: {family} alpha > {} has no index below order {order}", last.alpha);
        }
    }
    let mut reports = Vec::new();
    for spec in &members {
        let r = family_scan(spec, order)?;
        let failed = !r.pass;
        reports.push(r);
        if failed && fail_fast {
            break;
        }
    }
    emit_reports(reports, fail_fast, sink)
}

fn emit_reports(reports: Vec<CheckReport>, fail_fast: bool, sink: &mut Sink) -> Result<Outcome, Failure> {
    let mut pass = true;
    sink.begin_reports()?;
    for r in &reports {
        sink.report(r)?;
        pass &= r.pass;
        if !r.pass && fail_fast {
            break;
        }
    }
    Ok(pass.into())
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = match raw.trim().parse() {
        Ok(n) if n >= 1 => n,
        _ => return Err(format!("{THREADS_VAR} must be a positive integer, got '{raw}'")),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn usage(msg: String) -> Failure {
    Failure::Core(Error::Usage(msg))
}

/// Anything that ends a run early.
enum Failure {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Usage(_) | Error::Parse { .. } | Error::ModulusMismatch { .. }) => 2,
            Failure::Core(_) | Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("podq: {msg}");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut sink = Sink::new(stdout.lock(), cli.format);
    let result = match &cli.command {
        Command::Expand(args) => expand(args, &mut sink),
        Command::Oracle { n, stat } => oracle(*n, *stat, &mut sink),
        Command::Verify(args) => verify(args, cli.fail_fast, &mut sink),
        Command::Scan {
            family,
            alpha_max,
            order,
        } => scan(*family, *alpha_max, *order, cli.fail_fast, &mut sink),
        Command::Equidist { stat, max_weight } => equidistribution_check(*stat, *max_weight)
            .map_err(Failure::from)
            .and_then(|r| emit_reports(vec![r], cli.fail_fast, &mut sink)),
    };
    let result = result.and_then(|outcome| {
        sink.finish()?;
        Ok(outcome)
    });
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("podq: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
