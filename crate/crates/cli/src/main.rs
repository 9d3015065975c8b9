use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sierpinski_core::base_graph::exponent;
use sierpinski_core::{BaseGraph, SierpinskiParams, DEFAULT_EXPLICIT_CAP};

mod commands;

use commands::Status;

/// Generalized Sierpinski graphs S(G,t): construction, degree sequences and
/// general first Zagreb indices.
#[derive(Debug, Parser)]
#[command(name = "sierpinski", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Base graph summary and the vertex/edge counts and extremal degrees of S(G,t).
    Info(Common),
    /// Stream the edges of S(G,t).
    Generate(Common),
    /// Degree histogram of S(G,t) from the closed form.
    Degseq {
        #[command(flatten)]
        common: Common,
        /// Also run the brute-force census and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// General first Zagreb indices Z_alpha of S(G,t).
    Zagreb {
        #[command(flatten)]
        common: Common,
        /// Comma-separated exponents.
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            default_value = "0,1,2,3"
        )]
        alpha: Vec<i64>,
        /// Also compute each value by brute force and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Cross-check every closed form against explicit construction.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Highest Zagreb exponent to check.
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        alpha_max: i64,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Edge-list file, or `-` for standard input.
    #[arg(long)]
    input: PathBuf,
    /// Dimension t >= 1.
    #[arg(long = "t", value_parser = clap::value_parser!(u64).range(1..))]
    t: u64,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Largest n^t allowed for explicit enumeration.
    #[arg(long, default_value_t = DEFAULT_EXPLICIT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json-like")]
    Json,
    Ranks,
    Words,
    Dot,
}

impl Common {
    fn params(&self) -> anyhow::Result<SierpinskiParams> {
        let text = if self.input.as_os_str() == "-" {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            buf
        } else {
            std::fs::read_to_string(&self.input)
                .with_context(|| format!("reading {}", self.input.display()))?
        };
        let base = BaseGraph::parse_edge_list(&text)
            .with_context(|| format!("parsing {}", self.input.display()))?;
        let t = usize::try_from(self.t).context("t too large")?;
        Ok(SierpinskiParams::new(base, t)?.with_cap(self.cap)?)
    }

    fn format(&self, allowed: &[Format]) -> anyhow::Result<Format> {
        let format = self.format.unwrap_or(allowed[0]);
        if !allowed.contains(&format) {
            let names: Vec<String> = allowed
                .iter()
                .map(|f| f.to_possible_value().unwrap().get_name().to_string())
                .collect();
            bail!(
                "format {:?} not supported here; use one of: {}",
                format.to_possible_value().unwrap().get_name(),
                names.join(", ")
            );
        }
        Ok(format)
    }
}

const REPORT_FORMATS: &[Format] = &[Format::Text, Format::Json];

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<Status> {
    match cli.command {
        Command::Info(common) => {
            let format = common.format(REPORT_FORMATS)?;
            commands::info(&common.params()?, format, out)
        }
        Command::Generate(common) => {
            let format = common.format(&[Format::Ranks, Format::Words, Format::Dot])?;
            commands::generate(&common.params()?, format, out)
        }
        Command::Degseq { common, oracle } => {
            let format = common.format(REPORT_FORMATS)?;
            commands::degseq(&common.params()?, format, oracle, out)
        }
        Command::Zagreb {
            common,
            alpha,
            oracle,
        } => {
            let format = common.format(REPORT_FORMATS)?;
            let alphas = alpha
                .into_iter()
                .map(exponent)
                .collect::<Result<Vec<_>, _>>()?;
            commands::zagreb(&common.params()?, &alphas, format, oracle, out)
        }
        Command::Verify { common, alpha_max } => {
            let format = common.format(REPORT_FORMATS)?;
            let alpha_max = exponent(alpha_max)?;
            let label = common.input.display().to_string();
            commands::verify(&common.params()?, &label, alpha_max, format, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Status::Success), Ok(())) => ExitCode::SUCCESS,
        (Ok(Status::ChecksFailed), _) => ExitCode::from(1),
        (Ok(_), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Ok(_), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(e), _) => {
            if let Some(io) = e.downcast_ref::<io::Error>() {
                if io.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
