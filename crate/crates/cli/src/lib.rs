//! `hsc`: command-line calculator and renderer for hyperspherical
//! hypercomplex numbers.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
pub mod config;
pub mod format;

pub use format::{fmt_exact, fmt_g, OutputFormat};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] hyperspherical::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// A check ran to completion but some case exceeded its tolerance.
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hsc", version, about = "Spherical and hyperspherical hypercomplex numbers")]
pub struct Cli {
    /// Output format [default: $HSC_FORMAT, else text]
    #[arg(long, global = true, value_parser = ["text", "json-lines", "csv"])]
    pub format: Option<String>,

    /// key=value file with defaults for format, seed, cases, nmax, threads
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Spherical,
    Cartesian,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Spherical => "spherical",
            Form::Cartesian => "cartesian",
        }
    }
}

#[derive(Debug, Args)]
pub struct Operands {
    /// How operands are written: `r,θ₂,…,θ_N` or `x₁,…,x_N`
    #[arg(long, value_enum, default_value_t = Form::Spherical)]
    pub form: Form,

    /// Expected dimension of every operand
    #[arg(long)]
    pub dim: Option<usize>,

    /// Longitudes used when the first operand's leading components vanish
    #[arg(long, allow_hyphen_values = true)]
    pub fallback: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ApproachArg {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SecondModulusArg {
    Squared,
    AsPrinted,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExportArg {
    PgmSlice,
    Csv,
    VoxelRaw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Full,
    Second,
    Third,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two numbers
    Mul {
        #[command(flatten)]
        ops: Operands,
        /// Fallback longitudes for the second operand
        #[arg(long = "fallback-b", allow_hyphen_values = true)]
        fallback_b: Option<String>,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Sum of two numbers
    Add {
        #[command(flatten)]
        ops: Operands,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Multiplicative inverse
    Inv {
        #[command(flatten)]
        ops: Operands,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Quotient a / b
    Div {
        #[command(flatten)]
        ops: Operands,
        #[arg(long = "fallback-b", allow_hyphen_values = true)]
        fallback_b: Option<String>,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Integer power
    Pow {
        #[command(flatten)]
        ops: Operands,
        #[arg(long, allow_hyphen_values = true)]
        exp: i32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Change representation
    Convert {
        #[command(flatten)]
        ops: Operands,
        #[arg(long, value_enum)]
        to: Form,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// All distinct m-th roots, including those of the replicate forms
    Roots {
        #[command(flatten)]
        ops: Operands,
        #[arg(long = "m")]
        m: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Full, second or third conjugate
    Conjugate {
        #[command(flatten)]
        ops: Operands,
        #[arg(long, value_enum, default_value_t = VariantArg::Full)]
        variant: VariantArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Run the seeded invariant suites and report the worst error per property
    PropertyCheck {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cases: Option<usize>,
    },
    /// Render the escape-time 3D Mandelbrot set
    Fractal {
        #[arg(long, value_enum, default_value_t = ApproachArg::First)]
        approach: ApproachArg,
        #[arg(long)]
        nmax: Option<u32>,
        /// Sampling box `x0:x1,y0:y1,z0:z1`
        #[arg(long, allow_hyphen_values = true, default_value = "-2:2,-2:2,-2:2")]
        region: String,
        /// Cells per axis, `nx,ny,nz` or a single count
        #[arg(long, default_value = "64,64,64")]
        res: String,
        /// Fixed coordinate, e.g. `z=0`
        #[arg(long, allow_hyphen_values = true)]
        slice: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output kind; inferred from the `--out` extension when absent
        #[arg(long, value_enum)]
        export: Option<ExportArg>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long = "second-modulus", value_enum, default_value_t = SecondModulusArg::Squared)]
        second_modulus: SecondModulusArg,
    },
    /// Check that the spatial modulus of h² equals |ds²| before and after boosts
    RelativityCheck {
        /// Displacement `dx,dy,dz,cdt`; random seeded cases when absent
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        /// Boost velocities, comma separated
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cases: Option<usize>,
    },
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code. The default format comes from `$HSC_FORMAT`.
pub fn run<I, S, W, E>(argv: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let env = std::env::var(config::FORMAT_ENV).ok();
    run_with_env(argv, env.as_deref(), out, err)
}

/// [`run`] with the environment default passed explicitly.
pub fn run_with_env<I, S, W, E>(argv: I, env_format: Option<&str>, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code();
        }
    };
    match commands::execute(cli, env_format, out) {
        Ok(()) => 0,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
