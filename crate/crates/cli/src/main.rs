mod compute;
mod config;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qpbw::presets::WordLabel;
use qpbw::tuple::{parse_tuple, Weight};
use qpbw::verify::{self, Mode, Report};
use qpbw::{AlgebraId, Error};

use compute::{Format, Kind, Request, Selection};
use config::Config;

/// Exact PBW transition matrices and intertwiners for A2, C2 and G2.
#[derive(Parser, Debug)]
#[command(name = "qpbw", version)]
struct Cli {
    /// Settings file with `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print nonzero coefficients of a table.
    Compute(ComputeArgs),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Quick end-to-end check of every pipeline.
    Selftest,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long)]
    algebra: AlgebraId,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Input tuple, e.g. `3,1,4`; emits that column only.
    #[arg(long = "in", conflicts_with = "weight")]
    input: Option<String>,
    /// Weight block `n1,n2`; emits the whole block.
    #[arg(long)]
    weight: Option<String>,
    /// Emits every block of height at most this (when neither `--in` nor
    /// `--weight` is given), and rejects larger explicit requests.
    #[arg(long)]
    max_height: Option<i32>,
    /// Word (1 or 2) of the input tuples of `gamma` and `phi`.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    source: u8,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Algebra to check; all three when omitted.
    #[arg(long)]
    algebra: Option<AlgebraId>,
    #[arg(long)]
    max_height: Option<i32>,
}

#[derive(Args, Debug)]
struct EquationArgs {
    #[arg(long)]
    max_occ: Option<i32>,
    #[arg(long)]
    mode: Option<Mode>,
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// Tetrahedron equation for R.
    Tetra(EquationArgs),
    /// 3D reflection equation for R and K.
    Reflect3d(EquationArgs),
    /// PBW transition coefficients against the intertwiner.
    Theorem(AlgebraArgs),
    /// Structural properties of the checked intertwiners.
    Props(AlgebraArgs),
    /// Intertwining of every generator; `--max-height` bounds input tuple sums.
    Intertwine(AlgebraArgs),
}

enum Failure {
    Usage(String),
    Check,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownAlgebra(_) | Error::TupleLength { .. } | Error::EmptyBlock(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, Failure> {
    let Some(p) = path else { return Ok(Config::default()) };
    let text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
    Config::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
}

fn parse_weight(s: &str) -> Result<Weight, Failure> {
    let t = parse_tuple(s, 2)?;
    Ok(Weight(t[0], t[1]))
}

fn compute(args: &ComputeArgs, cfg: &Config, out: &mut dyn Write) -> Result<(), Failure> {
    let p = args.algebra.preset();
    let source = WordLabel::from_number(args.source).expect("validated by clap");
    let selection = match (&args.input, &args.weight) {
        (Some(t), _) => Selection::Column(parse_tuple(t, p.len())?),
        (None, Some(w)) => Selection::Block(parse_weight(w)?),
        (None, None) => Selection::UpTo(args.max_height.unwrap_or_else(|| cfg.max_height(args.algebra))),
    };
    if !args.kind.defined_for(args.algebra) {
        return Err(Failure::Usage(format!("kind {:?} is not defined for {} (use {})", args.kind, args.algebra, args.algebra.checked_kind())));
    }
    let request = Request { algebra: args.algebra, kind: args.kind, source, selection };
    if let Some(h) = args.max_height {
        let weight = match &request.selection {
            Selection::Column(t) => Some(compute::column_weight(&request, t)?),
            Selection::Block(w) => Some(*w),
            Selection::UpTo(_) => None,
        };
        if let Some(w) = weight.filter(|w| w.height() > h) {
            return Err(Failure::Usage(format!("block {w} exceeds --max-height {h}")));
        }
    }
    let records = compute::records(&request)?;
    compute::write_records(&records, args.format, out)?;
    Ok(())
}

fn algebras(a: &AlgebraArgs) -> Vec<AlgebraId> {
    a.algebra.map(|x| vec![x]).unwrap_or_else(|| AlgebraId::ALL.to_vec())
}

fn run_suite(suite: &Suite, cfg: &Config) -> Result<Vec<Report>, Failure> {
    let mut reports = Vec::new();
    match suite {
        Suite::Tetra(e) => {
            let runs = match (e.max_occ.or(cfg.tetra_max_occ), e.mode.or(cfg.tetra_mode)) {
                (None, None) => vec![(1, Mode::Exact), (2, Mode::Sampled)],
                (occ, mode) => {
                    let mode = mode.unwrap_or(Mode::Sampled);
                    vec![(occ.unwrap_or(if mode == Mode::Exact { 1 } else { 2 }), mode)]
                }
            };
            for (occ, mode) in runs {
                reports.push(verify::verify_tetrahedron(occ, mode)?);
            }
        }
        Suite::Reflect3d(e) => {
            let occ = e.max_occ.or(cfg.reflect_max_occ).unwrap_or(1);
            let mode = e.mode.or(cfg.reflect_mode).unwrap_or(Mode::Sampled);
            reports.push(verify::verify_reflection_3d(occ, mode)?);
        }
        Suite::Theorem(a) => {
            for id in algebras(a) {
                reports.push(verify::verify_theorem(id, a.max_height.unwrap_or_else(|| cfg.max_height(id)))?);
            }
        }
        Suite::Props(a) => {
            for id in algebras(a) {
                reports.push(verify::verify_properties(id, a.max_height.unwrap_or_else(|| cfg.max_height(id)))?);
            }
        }
        Suite::Intertwine(a) => {
            for id in algebras(a) {
                let h = a.max_height.unwrap_or_else(|| cfg.intertwine_height(id));
                reports.push(verify::verify_t_intertwining(id, h)?);
            }
        }
    }
    Ok(reports)
}

fn selftest() -> Result<Vec<Report>, Failure> {
    let mut reports = Vec::new();
    for id in AlgebraId::ALL {
        reports.push(verify::verify_golden(id)?);
        reports.push(verify::verify_theorem(id, 3)?);
        reports.push(verify::verify_xi_left_multiplication(id, 2)?);
    }
    reports.push(verify::verify_properties(AlgebraId::A2, 4)?);
    reports.push(verify::verify_t_intertwining(AlgebraId::A2, 2)?);
    reports.push(verify::verify_tetrahedron(1, Mode::Exact)?);
    Ok(reports)
}

fn print_reports(reports: &[Report], out: &mut dyn Write) -> Result<(), Failure> {
    for r in reports {
        write!(out, "{r}")?;
    }
    let ok = reports.iter().all(Report::passed);
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
    out.flush()?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn configure_workers() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("QPBW_WORKERS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Failure::Usage(format!("QPBW_WORKERS must be a positive integer, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Internal(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    configure_workers()?;
    let cfg = load_config(&cli.config)?;
    match &cli.command {
        Command::Compute(args) => {
            let mut out = output(&cli.out)?;
            compute(args, &cfg, &mut *out)?;
            out.flush()?;
            Ok(())
        }
        Command::Verify { suite } => {
            let reports = run_suite(suite, &cfg)?;
            print_reports(&reports, &mut *output(&cli.out)?)
        }
        Command::Selftest => {
            let reports = selftest()?;
            print_reports(&reports, &mut *output(&cli.out)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
