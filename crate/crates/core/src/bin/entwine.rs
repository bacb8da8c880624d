use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use entwine::catalog::{make_example, Params};
use entwine::io::{CertificateDoc, Document, Parsed};
use entwine::report::{
    coextension_report, extension_report, hochschild_report, solve, CheckSummary, SolveKind,
};
use entwine::Error;

/// Exact checks and solvers for entwining structures and coalgebra-Galois
/// extensions.
#[derive(Parser)]
#[command(name = "entwine", version)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every structure present in a file.
    Check { file: PathBuf },
    /// Solve for an integral-type witness.
    Solve {
        /// integral, cointegral, integral-map, cointegral-map, lambda or frakz
        #[arg(long)]
        kind: String,
        /// Impose the normalisation (for lambda and frakz: totality).
        #[arg(long)]
        normalized: bool,
        /// Write the particular solution as a certificate file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        file: PathBuf,
    },
    /// Reports on the coalgebra-Galois extension given by `coactionA`.
    Extension {
        #[command(subcommand)]
        action: ReportAction,
    },
    /// Reports on the coalgebra-Galois coextension given by `actionC`.
    Coextension {
        #[command(subcommand)]
        action: ReportAction,
    },
    /// Relative Hochschild cohomology of the algebra in a file.
    Hochschild {
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// File with the algebra and optionally a bimodule and a subalgebra.
        #[arg(long)]
        bimodule: PathBuf,
    },
    /// Emit a catalog example as a structure file.
    Catalog {
        #[arg(long)]
        name: String,
        /// Q or Fp for a prime p, such as F2.
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate against a structure file.
    Verify { file: PathBuf, certificate: PathBuf },
}

#[derive(Subcommand)]
enum ReportAction {
    Report { file: PathBuf },
}

/// Normal completion: whether the mathematical property holds.
type Outcome = Result<bool, Error>;

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Parsed, Error> {
    Parsed::from_json(&read(path)?).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize + std::fmt::Display>(json: bool, value: &T) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialise"));
    } else {
        print!("{value}");
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Check { file } => {
            let summary = CheckSummary { reports: load(&file)?.check() };
            emit(json, &summary);
            Ok(summary.passed())
        }
        Command::Solve { kind, normalized, output, file } => {
            let kind = SolveKind::parse(&kind)?;
            let doc = load(&file)?;
            let r = solve(&doc, kind, normalized)?;
            emit(json, &r);
            if let (Some(out), Some(cert)) = (output, &r.certificate) {
                write(&out, &CertificateDoc::new(doc.field, cert.clone()).to_json())?;
            }
            Ok(r.feasible)
        }
        Command::Extension { action: ReportAction::Report { file } } => {
            let g = load(&file)?.galois()?;
            let r = extension_report(&g)?;
            emit(json, &r);
            Ok(r.passed())
        }
        Command::Coextension { action: ReportAction::Report { file } } => {
            let x = load(&file)?.coextension()?;
            let r = coextension_report(&x)?;
            emit(json, &r);
            Ok(r.passed())
        }
        Command::Hochschild { n, bimodule } => {
            let r = hochschild_report(&load(&bimodule)?, n)?;
            emit(json, &r);
            Ok(r.delta_squared_zero)
        }
        Command::Catalog { name, field, n, d, m, output } => {
            let params = Params { field: field.parse()?, n, d, m };
            let entry = make_example(&name, &params)?;
            for w in &entry.warnings {
                eprintln!("warning: {w}");
            }
            let text = Document::from_structures(params.field, &entry.payload).to_json();
            match output {
                Some(path) => write(&path, &format!("{text}\n"))?,
                None => println!("{text}"),
            }
            Ok(true)
        }
        Command::Verify { file, certificate } => {
            let doc = load(&file)?;
            let cert = CertificateDoc::from_json(&read(&certificate)?)?;
            if cert.field.to_field()? != doc.field {
                return Err(Error::Input("certificate and structures use different fields".into()));
            }
            let r = cert.certificate.verify(&doc)?;
            emit(json, &r);
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input() { 2 } else { 1 })
        }
    }
}
