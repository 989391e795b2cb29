use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubic_bundles::exact_field::text::parse_scalar;
use cubic_bundles::exact_field::Scalar;
use cubic_bundles::pipeline::{render_report, run_standalone, Format, Report, Request, Scenario};
use cubic_bundles::Result;

#[derive(Parser)]
#[command(name = "cubic-bundles", version, about = "Exact computations with bundles of singular plane cubics")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Build the bundle descriptor of a scenario's input.
    Construct { scenario: PathBuf },
    /// Decide whether the constructed bundle is projective.
    Decide { scenario: PathBuf },
    /// Construct, recover the input, and compare.
    Roundtrip { scenario: PathBuf },
    /// Local Q-Cartier test of an osculating section through a cusp.
    Cartier {
        #[arg(long, value_parser = scalar)]
        xi: Scalar,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
    /// Osculating points on a nodal fiber.
    Osculate {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        fiber: Scalar,
        scenario: PathBuf,
    },
    /// Run every request of a scenario.
    Run {
        scenario: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn scalar(s: &str) -> std::result::Result<Scalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

fn with_requests(path: &Path, requests: Vec<Request>) -> Result<Report> {
    let mut s = Scenario::load(path)?;
    s.requests = requests;
    s.run()
}

fn report(command: &Command) -> Result<Report> {
    match command {
        Command::Construct { scenario } => with_requests(scenario, vec![Request::Construct]),
        Command::Decide { scenario } => with_requests(scenario, vec![Request::Decide]),
        Command::Roundtrip { scenario } => with_requests(scenario, vec![Request::Roundtrip]),
        Command::Osculate { k, fiber, scenario } => {
            with_requests(scenario, vec![Request::Osculate { k: *k, fiber: fiber.clone() }])
        }
        Command::Cartier { xi, k, m } => {
            Ok(run_standalone("cartier", &[Request::Cartier { xi: xi.clone(), k: *k, m: *m }]))
        }
        Command::Run { scenario, .. } => Scenario::load(scenario)?.run(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = match report(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Structured => Format::Structured,
    };
    let rendered = render_report(&report, format);
    match &cli.command {
        Command::Run { out: Some(path), .. } => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        _ => print!("{rendered}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
