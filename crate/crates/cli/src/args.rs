use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gft", version)]
#[command(about = "Multiplier operators, the Omega functional and sampled subordination checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Truncation order N. Inputs longer than N are truncated; generated
    /// series (chi, trials) use it directly.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(8..=1024))]
    pub order: Option<u16>,

    /// Indented JSON with numbers rounded to 6 significant digits.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Worker threads for sampled trials (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Sampling radii, comma separated (default 0.10, 0.15, ..., 0.95).
    #[arg(long, global = true, value_delimiter = ',')]
    pub radii: Option<Vec<f64>>,

    /// Angular samples per radius.
    #[arg(long, global = true)]
    pub angles: Option<usize>,
}

/// Operator descriptor and input series shared by most commands.
#[derive(Args, Debug, Clone)]
pub struct OperatorInput {
    /// Operator descriptor: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub op: String,

    /// Series JSON: inline, a path, or `-` for stdin.
    #[arg(long, short)]
    pub input: String,
}

#[derive(Args, Debug, Clone)]
pub struct Exponents {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: f64,

    #[arg(long, allow_hyphen_values = true)]
    pub nu: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundaryFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply an operator to a series.
    Apply {
        #[command(flatten)]
        target: OperatorInput,
    },
    /// Integral transform a_n -> alpha a_n / (alpha + n - p).
    Bernardi {
        /// Series JSON: inline, a path, or `-` for stdin.
        #[arg(long, short)]
        input: String,
        /// alpha as `re` or `re,im`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "op")]
        alpha: Option<String>,
        /// Take alpha from this operator's recurrence instead.
        #[arg(long)]
        op: Option<String>,
    },
    /// Omega_{mu,nu}(f).
    Omega {
        #[command(flatten)]
        target: OperatorInput,
        #[command(flatten)]
        exponents: Exponents,
    },
    /// The first-order functional Phi(f).
    Phi {
        #[command(flatten)]
        target: OperatorInput,
        #[command(flatten)]
        exponents: Exponents,
        /// Report alpha_{a+1} Phi, the form the dominant chi curves use.
        #[arg(long)]
        scaled: bool,
    },
    /// The functional Psi(f, F); F defaults to the integral transform of f.
    Psi {
        #[command(flatten)]
        target: OperatorInput,
        #[command(flatten)]
        exponents: Exponents,
        /// Explicit F (inline JSON, path or `-`).
        #[arg(long)]
        transformed: Option<String>,
    },
    /// Coefficients of the dominant chi built from psi.
    Chi {
        #[arg(long)]
        op: String,
        /// Dominant psi, e.g. `janowski:0.5,-0.5`, `power-sector:0.5`,
        /// `sqrt-shift`, `half-plane-map:0`.
        #[arg(long, allow_hyphen_values = true)]
        dominant: String,
        #[command(flatten)]
        exponents: Exponents,
        #[arg(long, value_enum, default_value = "1")]
        theorem: TheoremArg,
    },
    /// Sampled membership of f in a function class.
    CheckClass {
        /// Series JSON: inline, a path, or `-` for stdin.
        #[arg(long, short)]
        input: String,
        /// Class: `R:alpha`, `S*:alpha`, `Sr*:alpha`, `S*[A,B]:A,B`, `SS*:eta`, `SL:eta`.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Sampled test that a normalized q maps the grid into a region.
    Subordinate {
        /// Series JSON with base power 0 and constant term 1.
        #[arg(long, short)]
        input: String,
        /// Region, e.g. `half-plane:0`, `janowski:1,-1`, `sector:0.5`,
        /// `lemniscate:0.5`, `parabola:0.3,1`, `reciprocal:0.2`, `disk:0,0,1.1`.
        #[arg(long, allow_hyphen_values = true)]
        region: String,
    },
    /// Run a verification: `identities`, `constants`, `trials` (every
    /// preset) or a single preset id.
    Verify(VerifyArgs),
    /// Table of boundary constants next to their closed forms.
    Constants,
    /// Sample a region boundary as CSV `theta,u,v` or JSON.
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        region: String,
        /// Number of points; odd counts include theta = 0.
        #[arg(long, default_value_t = 361)]
        points: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: BoundaryFormat,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub id: String,

    /// Number of random functions (default 50 for identities, 200 for trials).
    #[arg(long)]
    pub trials: Option<usize>,

    /// Coefficient decay of the random functions (default 0.3 for
    /// identities, 0.08 for trials).
    #[arg(long)]
    pub rho: Option<f64>,

    #[arg(long, env = "GFT_SEED", default_value_t = gft_core::verify::DEFAULT_SEED)]
    pub seed: u64,

    /// Operators for the identity suite instead of random ones (repeatable).
    #[arg(long)]
    pub op: Vec<String>,

    /// Also run the reversed-containment heuristic on each trial.
    #[arg(long)]
    pub superordination: bool,
}
