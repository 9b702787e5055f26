use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use soliton_core::{QuadratureConfig, StabilityMode};

use crate::error::Result;

#[derive(Debug, Parser)]
#[command(
    name = "soliton",
    version,
    about = "Profile curves, weighted second variation and critical lengths of cylindrical translating λ-solitons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a base curve and write it as CSV
    Curve(CurveArgs),
    /// Evaluate the quadratic form on a compact piece
    Qform(QformArgs),
    /// Critical length L0 beyond which the test family certifies instability
    CriticalLength(CriticalArgs),
    /// Table of the reduced integral I(u) for λ < 1
    Table(TableArgs),
    /// Quadratic-form values on a circular cylinder
    Cylinder(CylinderArgs),
    /// Write a triangulated OBJ mesh of a piece or cylinder
    Mesh(MeshArgs),
    /// Run the verification suites
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Absolute quadrature tolerance
    #[arg(long, default_value = "1e-10")]
    pub abs_tol: f64,
    /// Relative quadrature tolerance
    #[arg(long, default_value = "1e-10")]
    pub rel_tol: f64,
    /// Maximum number of quadrature subdivisions
    #[arg(long, default_value_t = 2000)]
    pub max_subdivisions: usize,
}

impl QuadArgs {
    pub fn config(&self) -> Result<QuadratureConfig> {
        Ok(QuadratureConfig::new(self.abs_tol, self.rel_tol, self.max_subdivisions)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Markdown,
    Csv,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Soliton constant λ > 0
    #[arg(long)]
    pub lambda: f64,
    /// Start of the arc-length interval
    #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
    pub s_min: f64,
    /// End of the arc-length interval
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    pub s_max: f64,
    /// Number of uniform samples, at least 2
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    /// Output file; stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Which compact piece of the λ-soliton to use.
#[derive(Debug, Clone, Args)]
pub struct PieceArgs {
    /// Soliton constant λ > 0
    #[arg(long)]
    pub lambda: f64,
    /// Shift σ of the fundamental piece [−s0+σ, s0+σ] (λ > 1)
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<f64>,
    /// Half-width of the symmetric piece [−s0, s0] (λ ≤ 1)
    #[arg(long)]
    pub s0: Option<f64>,
}

#[derive(Debug, Args)]
pub struct QformArgs {
    #[command(flatten)]
    pub piece: PieceArgs,
    /// Axial length L
    #[arg(long)]
    pub length: f64,
    /// Use the strong-stability axial mode sin(πt/L)
    #[arg(long)]
    pub strong: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("surface").required(true).args(["lambda", "radius"])))]
pub struct CriticalArgs {
    /// Soliton constant λ > 0
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Cylinder radius r
    #[arg(long, conflicts_with_all = ["sigma", "s0", "uniform"])]
    pub radius: Option<f64>,
    /// Shift σ of the fundamental piece (λ > 1), default 0
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<f64>,
    /// Half-width of the symmetric piece (λ ≤ 1)
    #[arg(long)]
    pub s0: Option<f64>,
    /// σ-independent bound L0* (λ > 1)
    #[arg(long, conflicts_with = "sigma")]
    pub uniform: bool,
    /// Cylinder as a cmc surface instead of a soliton
    #[arg(long, requires = "radius")]
    pub cmc: bool,
    /// Strong stability (halves the closed-form lengths)
    #[arg(long)]
    pub strong: bool,
    /// Largest L searched when λ < 1
    #[arg(long, default_value_t = 200.0)]
    pub l_max: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Soliton constant 0 < λ < 1
    #[arg(long)]
    pub lambda: f64,
    /// Comma-separated s0 rows; defaults exist for λ = 0.25, 0.5, 0.75
    #[arg(long, value_delimiter = ',')]
    pub s0: Option<Vec<f64>>,
    /// Comma-separated L columns; defaults exist for λ = 0.25, 0.5, 0.75
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<f64>>,
    /// Output format
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    pub format: TableFormat,
    /// Output file; stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
pub struct CylinderArgs {
    /// Radius r > 0
    #[arg(long)]
    pub radius: f64,
    /// Axial length L
    #[arg(long)]
    pub length: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("surface").required(true).args(["lambda", "radius"])))]
pub struct MeshArgs {
    /// Soliton constant λ > 0
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Cylinder radius r
    #[arg(long, conflicts_with_all = ["sigma", "s0"])]
    pub radius: Option<f64>,
    /// Shift σ of the fundamental piece (λ > 1), default 0
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<f64>,
    /// Half-width of the symmetric piece (λ ≤ 1)
    #[arg(long)]
    pub s0: Option<f64>,
    /// Axial length L
    #[arg(long)]
    pub length: f64,
    /// Vertices along the curve, at least 2
    #[arg(long, default_value_t = 33)]
    pub ns: usize,
    /// Vertices along the rulings, at least 2
    #[arg(long, default_value_t = 17)]
    pub nt: usize,
    /// Output OBJ file
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Numerics,
    Geometry,
    ClosedForms,
    Tables,
    Brackets,
    Cylinder,
    Probe,
    Errata,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Restrict the table suite to one of 0.25, 0.5, 0.75
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Random profiles per graph-stability probe
    #[arg(long, default_value_t = 200)]
    pub probe_samples: usize,
    /// Seed for sampled checks
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub quad: QuadArgs,
}

pub fn mode(strong: bool) -> StabilityMode {
    if strong {
        StabilityMode::Strong
    } else {
        StabilityMode::VolumePreserving
    }
}
