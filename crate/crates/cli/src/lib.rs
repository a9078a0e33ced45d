//! `consample` command-line front end.
//!
//! Exit codes: 0 success, 1 an analysis report failed, 2 usage error,
//! 3 input error, 4 sample size larger than the population.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use consample::analysis::{self, StatReport};
use consample::output::{self, Format};
use consample::{Error, Population};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REPORT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_SAMPLE_SIZE: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "consample",
    version,
    about = "Consistent sampling with and without replacement"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a sample from newline-delimited item ids.
    Draw(DrawArgs),
    /// Run a statistical check and print JSON-lines reports.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Lines,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Lines => Format::Lines,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct DrawArgs {
    #[arg(long)]
    pub seed: String,
    #[arg(long)]
    pub size: usize,
    #[arg(long)]
    pub with_replacement: bool,
    #[arg(long, value_enum, default_value = "lines")]
    pub format: FormatArg,
    /// Include each draw's ticket number in the output.
    #[arg(long)]
    pub show_tickets: bool,
    /// File with one item id per line; `-` or absent reads standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    /// Mean of ln(1 - x_k) against -k.
    LogGap {
        #[arg(long, default_value_t = 10)]
        k: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// Replacement-loop attempt counts.
    GAttempts {
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Growth of the leading run of nines per generation.
    NineRun {
        #[arg(long, default_value_t = 20)]
        max_k: u32,
        #[arg(long, default_value_t = 2_000)]
        trials: u64,
    },
    /// Chi-square uniformity of the first drawn item.
    ChiSquare {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 50_000)]
        trials: u64,
    },
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Draw(args) => run_draw(&args, stdin, stdout),
        Command::Analyze(cmd) => run_analyze(&cmd, stdout),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "consample: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::new(EXIT_INPUT, format!("I/O error: {e}"))
}

/// Splits newline-delimited ids. One trailing newline is optional and a
/// trailing `\r` on each line is dropped.
pub fn parse_ids(bytes: &[u8]) -> Result<Vec<String>, Failure> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        Failure::new(EXIT_INPUT, format!("line {line}: input is not valid UTF-8"))
    })?;
    if text.is_empty() {
        return Err(Failure::new(EXIT_INPUT, "input contains no item ids"));
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    Ok(body
        .split('\n')
        .map(|line| line.strip_suffix('\r').unwrap_or(line).to_owned())
        .collect())
}

fn population_failure(e: Error) -> Failure {
    match e {
        Error::InvalidItem { index, source } => {
            Failure::new(EXIT_INPUT, format!("line {}: {source}", index + 1))
        }
        Error::DuplicateId { id, index } => Failure::new(
            EXIT_INPUT,
            format!("line {}: duplicate item id {id:?}", index + 1),
        ),
        other => Failure::new(EXIT_INPUT, other.to_string()),
    }
}

pub fn run_draw(
    args: &DrawArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<u8, Failure> {
    if args.seed.contains('\0') {
        return Err(Failure::new(EXIT_USAGE, "seed must not contain a NUL byte"));
    }
    let bytes = match &args.input {
        Some(path) if path.as_os_str() != "-" => fs::read(path).map_err(|e| {
            Failure::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display()))
        })?,
        _ => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf).map_err(io_failure)?;
            buf
        }
    };
    let population = Population::new(parse_ids(&bytes)?).map_err(population_failure)?;
    let records = consample::sample(&population, &args.seed, args.size, args.with_replacement)
        .map_err(|e| match e {
            Error::SampleTooLarge { .. } => Failure::new(EXIT_SAMPLE_SIZE, e.to_string()),
            other => Failure::new(EXIT_INPUT, other.to_string()),
        })?;
    let text = output::render(&records, args.format.into(), args.show_tickets);
    stdout.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(EXIT_OK)
}

pub fn analyze_reports(cmd: &AnalyzeCommand) -> consample::Result<Vec<StatReport>> {
    Ok(match *cmd {
        AnalyzeCommand::LogGap { k, trials } => vec![analysis::log_gap_mean(k, trials)?],
        AnalyzeCommand::GAttempts { trials } => vec![analysis::g_attempt_stats(trials)?],
        AnalyzeCommand::NineRun { max_k, trials } => analysis::nine_run_reports(max_k, trials)?,
        AnalyzeCommand::ChiSquare { n, trials } => {
            vec![analysis::chi_square_first_draw(n, trials)?]
        }
    })
}

pub fn run_analyze(cmd: &AnalyzeCommand, stdout: &mut dyn Write) -> Result<u8, Failure> {
    let reports = analyze_reports(cmd).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    for report in &reports {
        let line = serde_json::to_string(report).expect("reports serialize");
        writeln!(stdout, "{line}").map_err(io_failure)?;
    }
    Ok(if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_REPORT_FAILED
    })
}
