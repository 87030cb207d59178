//! Command-line front end for `crtfourier`.
//!
//! Exit codes: 0 on success, 1 for usage, parse and I/O errors, 2 when the
//! input is well-formed but violates a mathematical constraint (shared
//! factors, residue out of range, wrong transform length, invalid grid).

pub mod csvio;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crtfourier::contft::{self, ContftError, GridParams, SampledFunction, Spectrum, TestFunction};
use crtfourier::crt::{CongruenceSystem, CrtError};
use crtfourier::dft::{self, ComplexVector, DftError, Direction};
use num_bigint::BigInt;
use num_complex::Complex64;
use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Crt(#[from] CrtError),
    #[error(transparent)]
    Dft(#[from] DftError),
    #[error(transparent)]
    Contft(#[from] ContftError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Crt(CrtError::LengthMismatch { .. }) => 1,
            CliError::Contft(ContftError::UnknownFunction(_)) => 1,
            CliError::Crt(_) | CliError::Dft(_) | CliError::Contft(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "crtfourier",
    version,
    about = "Chinese remainder theorem and CRT-based Fourier transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve x ≡ r_j (mod m_j) and report Γ, the unit coefficients and the use index.
    Crt(CrtArgs),
    /// Discrete Fourier transform of an `index,re,im` CSV.
    Dft(DftArgs),
    /// Dual-grid continuous Fourier transform.
    Contft(ContftArgs),
    /// Compare the integer-point sums of a function and its spectrum.
    Poisson(PoissonArgs),
    /// Evaluate the Dirichlet kernel D(x) for a grid.
    Dirichlet(DirichletArgs),
}

#[derive(Debug, Args)]
pub struct CrtArgs {
    /// Pairwise coprime moduli, comma separated.
    #[arg(
        long = "mod",
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    pub moduli: Vec<BigInt>,
    /// Residues, comma separated, one per modulus.
    #[arg(
        long = "res",
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    pub residues: Vec<BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Naive,
    Radix2,
    GoodThomas,
}

#[derive(Debug, Args)]
pub struct DftArgs {
    /// Input CSV (`-` or absent for stdin).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output CSV (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Method::Naive)]
    pub method: Method,
    /// Coprime split `n1,n2` for good-thomas; defaults to the smallest prime power and its cofactor.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub factors: Option<Vec<usize>>,
    /// Compute the inverse transform (normalized by 1/n).
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridDirection {
    Forward,
    Inverse,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Spatial extent N (even, ≥ 2).
    #[arg(long = "n", default_value_t = 16)]
    pub big_n: usize,
    /// Frequency extent M (even, ≥ 2).
    #[arg(long = "m", default_value_t = 16)]
    pub big_m: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<GridParams, CliError> {
        Ok(GridParams::new(self.big_n, self.big_m)?)
    }
}

#[derive(Debug, Args)]
pub struct ContftArgs {
    /// Built-in function: `gaussian`, `gaussian:<width>` or `zero`.
    #[arg(long, conflicts_with = "input")]
    pub function: Option<String>,
    /// CSV with MN rows (`-` for stdin; stdin is also used when neither source is given).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(value_enum)]
    pub direction: GridDirection,
}

#[derive(Debug, Args)]
pub struct PoissonArgs {
    #[arg(long, default_value = "gaussian")]
    pub function: String,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct DirichletArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[command(flatten)]
    pub grid: GridArgs,
}

/// Runs one command against the given streams.
pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Crt(args) => cmd_crt(&args, stdout),
        Command::Dft(args) => cmd_dft(&args, stdin, stdout),
        Command::Contft(args) => cmd_contft(&args, stdin, stdout),
        Command::Poisson(args) => cmd_poisson(&args, stdout),
        Command::Dirichlet(args) => cmd_dirichlet(&args, stdout),
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Vec<Complex64>, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let file = File::open(p)
                .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", p.display())))?;
            csvio::read_complex(BufReader::new(file))
        }
        _ => csvio::read_complex(stdin),
    }
}

fn with_output<F>(path: Option<&PathBuf>, stdout: &mut dyn Write, body: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match path {
        Some(p) => {
            let mut file = io::BufWriter::new(File::create(p)?);
            body(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => body(stdout),
    }
}

pub fn cmd_crt(args: &CrtArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let system = CongruenceSystem::new(args.moduli.clone(), args.residues.clone())?;
    let sol = system.solve();
    writeln!(out, "n={}", sol.value)?;
    writeln!(out, "gamma={}", sol.gamma)?;
    for (j, u) in sol.unit_coeffs.iter().enumerate() {
        writeln!(out, "u_{j}={u}")?;
    }
    writeln!(out, "ell={}", sol.use_index)?;
    writeln!(out, "use={}", sol.use_kind())?;
    Ok(())
}

pub fn cmd_dft(args: &DftArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    if args.factors.is_some() && args.method != Method::GoodThomas {
        return Err(CliError::Usage(
            "--factors only applies to --method good-thomas".into(),
        ));
    }
    let input = ComplexVector::new(read_input(args.input.as_ref(), stdin)?)?;
    let direction = if args.inverse {
        Direction::Inverse
    } else {
        Direction::Forward
    };
    let result = match args.method {
        Method::Naive => match direction {
            Direction::Forward => dft::dft_naive(&input),
            Direction::Inverse => dft::idft_lagrange(&input),
        },
        Method::Radix2 => dft::fft_radix2(&input, direction)?,
        Method::GoodThomas => {
            let factors = match args.factors.as_deref() {
                Some(&[n1, n2]) => (n1, n2),
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "--factors takes exactly two values, got {}",
                        other.len()
                    )))
                }
                None => dft::coprime_split(input.len()),
            };
            dft::fft_good_thomas(&input, factors, direction)?
        }
    };
    with_output(args.output.as_ref(), out, |w| {
        csvio::write_indexed(w, &result)
    })
}

pub fn cmd_contft(
    args: &ContftArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    let function = args
        .function
        .as_deref()
        .map(TestFunction::<f64>::from_name)
        .transpose()?;
    match args.direction {
        GridDirection::Forward => {
            let sampled = match &function {
                Some(f) => contft::sample(f, &grid)?,
                None => SampledFunction::new(grid, read_input(args.input.as_ref(), stdin)?)?,
            };
            let spectrum = contft::forward(&sampled);
            with_output(args.output.as_ref(), out, |w| {
                csvio::write_grid(w, "y", &grid.ys(), spectrum.values())
            })
        }
        GridDirection::Inverse => {
            let spectrum = match &function {
                Some(f) => f.sample_transform(&grid)?,
                None => Spectrum::new(grid, read_input(args.input.as_ref(), stdin)?)?,
            };
            let sampled = contft::inverse(&spectrum);
            with_output(args.output.as_ref(), out, |w| {
                csvio::write_grid(w, "x", &grid.xs(), sampled.samples())
            })
        }
    }
}

pub fn cmd_poisson(args: &PoissonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let function = TestFunction::<f64>::from_name(&args.function)?;
    let grid = args.grid.grid()?;
    let check = contft::poisson_check(&function, &grid)?;
    writeln!(out, "lhs={}", check.lhs.re)?;
    writeln!(out, "lhs_im={}", check.lhs.im)?;
    writeln!(out, "rhs={}", check.rhs.re)?;
    writeln!(out, "rhs_im={}", check.rhs.im)?;
    writeln!(out, "gap={}", check.gap)?;
    Ok(())
}

pub fn cmd_dirichlet(args: &DirichletArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    writeln!(out, "{}", contft::dirichlet_kernel(args.x, &grid))?;
    Ok(())
}
