use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use latmono::{export_text, render_json, render_text, run_selection, CliError, ExportObject, SuiteSelection};

#[derive(Parser)]
#[command(name = "latmono", version, about = "Exact verification of del Pezzo, Weyl group and K3 lattice computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a certificate.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a constructed object as text.
    Export {
        #[arg(long, value_enum)]
        object: ObjectArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    #[value(name = "del_pezzo")]
    DelPezzo,
    Gosset,
    Weyl,
    Lattices,
    #[value(name = "k3_glue")]
    K3Glue,
    Gaussian,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::DelPezzo => "del_pezzo",
            SuiteArg::Gosset => "gosset",
            SuiteArg::Weyl => "weyl",
            SuiteArg::Lattices => "lattices",
            SuiteArg::K3Glue => "k3_glue",
            SuiteArg::Gaussian => "gaussian",
            SuiteArg::All => "all",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectArg {
    Gosset,
    Schlafli,
    HMinus,
    K3Gram,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { suite, format, out } => {
            let selection: SuiteSelection = suite.name().parse()?;
            let certs = run_selection(&selection);
            let body = match format {
                Format::Text => render_text(&certs),
                Format::Json => render_json(&certs)?,
            };
            match out {
                Some(path) => fs::write(path, body)?,
                None => print!("{body}"),
            }
            Ok(certs.iter().all(|c| c.passed()))
        }
        Command::Export { object, out } => {
            let object = match object {
                ObjectArg::Gosset => ExportObject::Gosset,
                ObjectArg::Schlafli => ExportObject::Schlafli,
                ObjectArg::HMinus => ExportObject::HMinus,
                ObjectArg::K3Gram => ExportObject::K3Gram,
            };
            fs::write(out, export_text(object)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("latmono: {e}");
            ExitCode::from(1)
        }
    }
}
