use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ltlmon::cli::{cmd_analyze, cmd_bench, cmd_monitor, cmd_run, exit_code_for};
use ltlmon::monitor::RenderFormat;
use ltlmon::runtime::HandlerPolicy;

#[derive(Parser)]
#[command(
    name = "ltlmon",
    version,
    about = "LTL monitor synthesis and monitorability analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Both,
    SatOnly,
    VioOnly,
    None,
}

impl From<PolicyArg> for HandlerPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Both => HandlerPolicy::BOTH,
            PolicyArg::SatOnly => HandlerPolicy::SATISFACTION_ONLY,
            PolicyArg::VioOnly => HandlerPolicy::VIOLATION_ONLY,
            PolicyArg::None => HandlerPolicy::NONE,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute monitorability verdicts and the per-state table
    Analyze {
        /// LTL formula
        formula: String,
        /// Emit the machine-readable JSON schema instead of text
        #[arg(long)]
        json: bool,
        /// Also report the state count of every construction stage
        #[arg(long)]
        stages: bool,
    },
    /// Export the six-valued monitor
    Monitor {
        /// LTL formula
        formula: String,
        /// Output format
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a trace file against the monitor
    Run {
        /// LTL formula
        formula: String,
        /// Trace file: one event per line, comma-separated proposition
        /// names, `-` for the empty event
        tracefile: PathBuf,
        /// Registered verdict handlers
        #[arg(long, value_enum, default_value = "both")]
        policy: PolicyArg,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Analyze every formula of a corpus file and print summary counts
    Bench {
        /// Corpus file: one formula per line, `#` comments, optional
        /// `# @expect: <verdict>` annotations
        corpus: PathBuf,
        /// Print only the summary lines
        #[arg(long)]
        summary: bool,
        /// Also write per-formula results as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn read_file(path: &PathBuf) -> Result<String, ltlmon::Error> {
    std::fs::read_to_string(path).map_err(ltlmon::Error::Io)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), ltlmon::Error> {
    std::fs::write(path, contents).map_err(ltlmon::Error::Io)
}

fn run() -> Result<u8, (ltlmon::Error, i32)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            formula,
            json,
            stages,
        } => {
            let out = cmd_analyze(&formula, json, stages).map_err(|e| {
                let code = exit_code_for(&e);
                (e, code)
            })?;
            print!("{out}");
            Ok(0)
        }
        Command::Monitor {
            formula,
            format,
            out,
        } => {
            let format = match format {
                FormatArg::Dot => RenderFormat::Dot,
                FormatArg::Json => RenderFormat::Json,
            };
            let rendered = cmd_monitor(&formula, format).map_err(|e| {
                let code = exit_code_for(&e);
                (e, code)
            })?;
            match out {
                Some(path) => write_file(&path, &rendered).map_err(|e| (e, 4))?,
                None => print!("{rendered}"),
            }
            Ok(0)
        }
        Command::Run {
            formula,
            tracefile,
            policy,
            json,
        } => {
            let trace = read_file(&tracefile).map_err(|e| (e, 4))?;
            let out = cmd_run(&formula, &trace, policy.into(), json).map_err(|e| {
                let code = exit_code_for(&e);
                (e, code)
            })?;
            print!("{out}");
            Ok(0)
        }
        Command::Bench {
            corpus,
            summary,
            csv,
        } => {
            let text = read_file(&corpus).map_err(|e| (e, 4))?;
            let outcome = cmd_bench(&text, summary);
            print!("{}", outcome.output);
            if let Some(path) = csv {
                write_file(&path, &outcome.csv).map_err(|e| (e, 4))?;
            }
            Ok(outcome.exit_code as u8)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err((e, code)) => {
            eprintln!("error: {e}");
            ExitCode::from(code as u8)
        }
    }
}
