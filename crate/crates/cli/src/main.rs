use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homalg::commands::{self, AcSide, Checked, TwistSource};
use homalg::file::{self, Document};
use homalg::{campaign, check_dim, sorted_json, CliError, Result};
use homalg_core::constructions::GeneratorConfig;
use homalg_core::{Field, Matrix, Scalar};

/// Exact analysis of hom-associative structures on finite-dimensional algebras.
///
/// Exit status: 0 on success, 1 when a consistency check fails, 2 on usage or parse errors.
#[derive(Parser)]
#[command(name = "homalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structure report as JSON.
    Analyze { file: PathBuf },
    /// Basis of the space of hom-associative twisting maps.
    TwistSpace { file: PathBuf },
    /// The AC subspace of one side, with its splitting and idempotents.
    Ac {
        file: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Iterated Cayley-Dickson doubling of the ground field.
    CayleyDickson {
        #[arg(long)]
        levels: usize,
        /// Comma-separated doubling parameters, one per level; all -1 when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma: Vec<String>,
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: Field,
        #[command(flatten)]
        out: Out,
    },
    /// Adjoin a two-sided unity.
    Unitalize {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Yau twist (A, α∘μ, α).
    Yau {
        file: PathBuf,
        #[command(flatten)]
        twist: YauTwist,
        #[command(flatten)]
        out: Out,
    },
    Opposite {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Truncated polynomial algebra in one variable.
    Poly {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        with_constants: bool,
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: Field,
        #[command(flatten)]
        out: Out,
    },
    /// Leibniz identities, hom-unities and, with a twist, hom-Lie checks.
    Leibniz {
        file: PathBuf,
        /// Twist as a JSON grid of scalar strings; defaults to the file's own twist.
        #[arg(long)]
        twist: Option<String>,
    },
    /// Seeded random structure tensor.
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_parser = parse_field)]
        field: Field,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        left_unital: bool,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        anticommutative: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Invariant suite over a corpus directory plus generated algebras.
    Campaign {
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seeds: u64,
        /// Report destination; standard output when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Two,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct YauTwist {
    /// Use the `twist` grid of the input file.
    #[arg(long)]
    twist_from_file: bool,
    /// α = L_{e_i}.
    #[arg(long, value_name = "I")]
    left_mult: Option<usize>,
    /// α = R_{e_i}.
    #[arg(long, value_name = "I")]
    right_mult: Option<usize>,
}

#[derive(Args)]
struct Out {
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    match s {
        "Q" => Ok(Field::Rational),
        _ => {
            let p = s
                .strip_prefix("Fp:")
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| format!("expected Q or Fp:<prime>, got `{s}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn load(path: &Path) -> Result<Document> {
    let doc = file::parse(path)?;
    check_dim(doc.definition.algebra().dim())?;
    Ok(doc)
}

/// Writes `text` to standard output. A closed pipe (`homalg ... | head`) is not an error.
fn print(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{text}").and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn write_doc(doc: &Document, out: &Out) -> Result<()> {
    match &out.output {
        Some(p) => Ok(file::emit(doc, p)?),
        None => print(&file::to_json(doc)),
    }
}

fn print_checked(c: Checked) -> Result<bool> {
    print(&sorted_json(&c.report))?;
    Ok(c.failed)
}

fn parse_grid(field: Field, n: usize, text: &str) -> Result<Matrix> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("--twist: {e}")))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("--twist must be a {n}×{n} grid")));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| field.parse_scalar(s)).collect::<homalg_core::Result<Vec<_>>>())
        .collect::<homalg_core::Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, rows)?)
}

/// Runs the command; `Ok(true)` means a consistency check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { file } => print_checked(commands::analyze(&load(&file)?)),
        Command::TwistSpace { file } => {
            print(&sorted_json(&commands::twist_space(&load(&file)?)))?;
            Ok(false)
        }
        Command::Ac { file, side } => {
            let side = match side {
                SideArg::Left => AcSide::Left,
                SideArg::Right => AcSide::Right,
                SideArg::Two => AcSide::Two,
            };
            print(&sorted_json(&commands::ac(&load(&file)?, side)?))?;
            Ok(false)
        }
        Command::CayleyDickson { levels, gamma, field, out } => {
            check_dim(1usize.checked_shl(levels as u32).unwrap_or(usize::MAX))?;
            let gammas = gamma
                .iter()
                .map(|g| field.parse_scalar(g))
                .collect::<homalg_core::Result<Vec<Scalar>>>()?;
            if !gammas.is_empty() && gammas.len() != levels {
                return Err(CliError::Usage(format!("--gamma needs {levels} values, got {}", gammas.len())));
            }
            write_doc(&commands::cayley_dickson(field, levels, &gammas)?, &out)?;
            Ok(false)
        }
        Command::Unitalize { file, out } => {
            write_doc(&commands::unitalize(&load(&file)?), &out)?;
            Ok(false)
        }
        Command::Yau { file, twist, out } => {
            let source = match (twist.twist_from_file, twist.left_mult, twist.right_mult) {
                (_, Some(i), _) => TwistSource::LeftMult(i),
                (_, _, Some(i)) => TwistSource::RightMult(i),
                _ => TwistSource::FromFile,
            };
            write_doc(&commands::yau(&load(&file)?, &source)?, &out)?;
            Ok(false)
        }
        Command::Opposite { file, out } => {
            write_doc(&commands::opposite(&load(&file)?)?, &out)?;
            Ok(false)
        }
        Command::Poly { degree, with_constants, field, out } => {
            check_dim(degree + 1)?;
            write_doc(&commands::poly(field, degree, with_constants)?, &out)?;
            Ok(false)
        }
        Command::Leibniz { file, twist } => {
            let doc = load(&file)?;
            let a = doc.definition.algebra();
            let twist = twist.map(|t| parse_grid(a.field(), a.dim(), &t)).transpose()?;
            print_checked(commands::leibniz(&doc, twist.as_ref())?)
        }
        Command::Random {
            dim,
            field,
            seed,
            left_unital,
            commutative,
            anticommutative,
            out,
        } => {
            check_dim(dim)?;
            let mut cfg = GeneratorConfig::new(seed, dim, field);
            cfg.force_left_unital = left_unital;
            cfg.commutative = commutative;
            cfg.anticommutative = anticommutative;
            write_doc(&commands::random(&cfg)?, &out)?;
            Ok(false)
        }
        Command::Campaign { dir, seeds, report } => {
            let r = campaign::run(dir.as_deref(), seeds)?;
            let text = sorted_json(&r);
            match report {
                Some(p) => std::fs::write(p, text + "\n")?,
                None => print(&text)?,
            }
            if r.failed() {
                eprintln!("{} failing checks in {} entries", r.failed_checks, r.failed_entries);
            }
            Ok(r.failed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("homalg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
