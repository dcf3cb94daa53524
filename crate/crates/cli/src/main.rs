mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use arcstab::ledger::{ExceptionCase, ExceptionGrid};
use arcstab::surface::{Side, SurfaceType};
use arcstab::zchain::{DEFAULT_DEGREE_CAP, MAX_DEGREE_CAP};
use arcstab::Perm;
use clap::{Args, CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use crate::report::{Format, Report};

const USAGE: u8 = 2;

/// Arc-complex invariants, quotient homology and stability bookkeeping.
#[derive(Debug, Parser)]
#[command(name = "arcstab", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table", env = "ARCSTAB_FORMAT")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20240611)]
    seed: u64,
    /// Print every flag and subcommand as JSON and exit.
    #[arg(long)]
    describe: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Args)]
struct DegreeCap {
    /// Largest permutation degree to enumerate (at most 8).
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP, value_parser = parse_degree)]
    max_degree: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Boundary count, genus and stabilizer of one arc class.
    Invariants {
        /// Permutation in one-line notation, e.g. 1,2,0.
        #[arg(long, value_parser = parse_perm)]
        perm: Perm,
        /// Boundary side the arcs end on (1 or 2).
        #[arg(long, value_parser = parse_side)]
        side: Side,
        /// Ambient surface as g,r.
        #[arg(long, value_parser = parse_surface)]
        ambient: Option<SurfaceType>,
    },
    /// Compare the boundary-count formula with the ribbon-graph trace.
    OracleDiff {
        #[command(flatten)]
        cap: DegreeCap,
    },
    /// Homology of the realizable quotient complexes.
    Homology {
        /// Genera to check (at least 2).
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        genus: Vec<u32>,
        /// Restrict to one side.
        #[arg(long, value_parser = parse_side)]
        side: Option<Side>,
        #[command(flatten)]
        cap: DegreeCap,
    },
    /// Contracting homotopy checks on the full and quotient complexes.
    Homotopy {
        #[command(flatten)]
        cap: DegreeCap,
        /// Random permutations per degree above the cap (0 disables).
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Genera for the quotient homotopy.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        genus: Vec<u32>,
        /// Restrict the quotient checks to one side.
        #[arg(long, value_parser = parse_side)]
        side: Option<Side>,
    },
    /// First page of the spectral sequence, or one d1 matrix.
    E1 {
        /// Ambient surface as g,r.
        #[arg(long, value_parser = parse_surface)]
        ambient: SurfaceType,
        #[arg(long, value_parser = parse_side)]
        side: Side,
        #[command(flatten)]
        cap: DegreeCap,
        /// Emit the entries of d1 out of column p instead of the page.
        #[arg(long)]
        d1: Option<usize>,
    },
    /// Replay the inequalities of the stability arguments.
    Ledger {
        #[arg(long, default_value_t = 50)]
        g_max: u32,
        #[arg(long, default_value_t = 20)]
        k_max: u32,
        /// List every obligation instead of a per-claim summary.
        #[arg(long)]
        all: bool,
    },
    /// Parameter tuples where the realizability hypotheses fail.
    Exceptions {
        /// surj-s01, surj-s1-1 or inj-s1-1; all cases when omitted.
        #[arg(long, value_parser = parse_case)]
        case: Option<ExceptionCase>,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long, default_value_t = 12)]
        g_max: u32,
        #[arg(long, default_value_t = 12)]
        k_max: u32,
    },
}

fn parse_degree(s: &str) -> Result<usize, String> {
    let d: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_DEGREE_CAP).contains(&d) {
        Ok(d)
    } else {
        Err(format!("degree cap must be in 1..={MAX_DEGREE_CAP}"))
    }
}

fn parse_perm(s: &str) -> Result<Perm, String> {
    Perm::parse(s).map_err(|e| e.to_string())
}

fn parse_side(s: &str) -> Result<Side, String> {
    let n: u8 = s.parse().map_err(|_| format!("side must be 1 or 2, got {s}"))?;
    Side::try_from(n).map_err(|e| e.to_string())
}

fn parse_surface(s: &str) -> Result<SurfaceType, String> {
    SurfaceType::from_str(s).map_err(|e| e.to_string())
}

fn parse_case(s: &str) -> Result<ExceptionCase, String> {
    match s {
        "inj-s11" => Ok(ExceptionCase::InjS1m1),
        "surj-s11" => Ok(ExceptionCase::SurjS1m1),
        _ => ExceptionCase::from_str(s).map_err(|e| e.to_string()),
    }
}

fn describe(cmd: &clap::Command) -> Value {
    let args: Vec<Value> = cmd
        .get_arguments()
        .filter(|a| !matches!(a.get_id().as_str(), "help" | "version"))
        .map(|a| {
            json!({
                "name": a.get_id().as_str(),
                "long": a.get_long(),
                "short": a.get_short().map(String::from),
                "help": a.get_help().map(|h| h.to_string()),
                "required": a.is_required_set(),
                "global": a.is_global_set(),
                "default": a.get_default_values().iter().map(|v| v.to_string_lossy().into_owned()).collect::<Vec<_>>(),
                "env": a.get_env().map(|e| e.to_string_lossy().into_owned()),
                "values": a.get_possible_values().iter().map(|v| v.get_name().to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let subs: Vec<Value> = cmd.get_subcommands().filter(|s| s.get_name() != "help").map(describe).collect();
    json!({
        "name": cmd.get_name(),
        "about": cmd.get_about().map(|a| a.to_string()),
        "args": args,
        "subcommands": subs,
    })
}

fn run(command: Command, seed: u64) -> arcstab::Result<Report> {
    Ok(match command {
        Command::Invariants { perm, side, ambient } => commands::invariants(&perm, side, ambient)?,
        Command::OracleDiff { cap } => commands::oracle_diff(cap.max_degree),
        Command::Homology { genus, side, cap } => commands::homology(&genus, side, cap.max_degree)?,
        Command::Homotopy {
            cap,
            samples,
            genus,
            side,
        } => commands::homotopy(commands::HomotopyArgs {
            max_degree: cap.max_degree,
            samples,
            seed,
            genera: &genus,
            side,
        })?,
        Command::E1 { ambient, side, cap, d1 } => commands::e1(ambient, side, cap.max_degree, d1)?,
        Command::Ledger { g_max, k_max, all } => commands::ledger(g_max, k_max, all),
        Command::Exceptions {
            case,
            n_max,
            g_max,
            k_max,
        } => commands::exceptions(case, ExceptionGrid { n_max, g_max, k_max }),
    })
}

fn emit(text: &str, output: Option<&PathBuf>) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.describe {
        let text = serde_json::to_string_pretty(&describe(&Cli::command())).expect("json") + "\n";
        return match emit(&text, cli.output.as_ref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(USAGE)
            }
        };
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required\n\n{}", Cli::command().render_help());
        return ExitCode::from(USAGE);
    };
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(n))
            .build_global()
            .expect("thread pool is configured once");
    }
    let report = match run(command, cli.seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    };
    if let Err(e) = emit(&report.render(cli.format), cli.output.as_ref()) {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        if cli.format != Format::Json {
            eprintln!("{}", report.failure_json());
        }
        ExitCode::FAILURE
    }
}
