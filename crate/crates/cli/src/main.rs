//! `fatpoints`: Hilbert functions of fat points, reduction vectors, Macaulay
//! bounds, intersection multiplicities and Cremona reduction from the shell.

mod commands;
mod inputs;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fatpoints::Error;
use output::Format;

const AFTER_HELP: &str = "\
Schemes are JSON files {\"field\": {\"kind\": \"prime\", \"p\": 32003}, \"n\": 2,
\"points\": [[\"1\",\"0\",\"0\"], ...], \"multiplicities\": [...], \"curves\": [...],
\"lines\": [...]}, or generic:R[xM] (R seeded random points of multiplicity M)
or star:S[xM] (the pairwise intersections of S seeded random lines).
Classes are written d;m1,m2,...

Exit status: 0 success, 1 other errors, 2 parse errors, 3 budget exceeded,
4 internal invariant violated.";

#[derive(Debug, Parser)]
#[command(name = "fatpoints", version, about, after_help = AFTER_HELP)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// `rational` or a prime; used by commands that build schemes or curves
    /// without a file.
    #[arg(long, global = true, default_value = "rational")]
    pub field: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// I^r inside I^(m)
    OrdinaryInSymbolic,
    /// I^(m) inside I^r
    SymbolicInOrdinary,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of I(Z) and R/I(Z).
    ///
    /// TSV columns: t, H_I, H_R/I; then `H_R/I` with the values through
    /// stabilisation.
    Hilbert { scheme: String },
    /// Least degree of a nonzero form in I(Z).
    Alpha {
        scheme: String,
        #[arg(long)]
        budget: Option<u32>,
    },
    /// alpha(I^(m)) for m <= mmax and bounds on the Waldschmidt constant.
    ///
    /// TSV columns: m, alpha, alpha/m.
    Waldschmidt {
        scheme: String,
        #[arg(long)]
        mmax: u32,
        /// Degree budget per m (default mmax times the number of points).
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Minimal homogeneous generators. TSV columns: degree, generator.
    Generators {
        scheme: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Containment between ordinary and symbolic powers of the support.
    Containment {
        scheme: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Direction::OrdinaryInSymbolic)]
        direction: Direction,
        #[arg(long)]
        tmax: Option<u32>,
    },
    /// Antidiagonal dot counts of a vector such as 8,6,5,2.
    Diag { vector: String },
    /// Lower and upper bounds on H_R/I from a reduction vector.
    ///
    /// TSV columns: t, lower, lower_exact, upper.
    ChtBounds {
        vector: String,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Reduction vector of a scheme with respect to its `lines`.
    ///
    /// TSV columns: step, line, d_i, residual multiplicities.
    Reduction {
        scheme: String,
        /// JSON array of lines overriding those in the file.
        #[arg(long)]
        lines: Option<String>,
    },
    /// Points realising a strictly decreasing vector.
    Realize {
        #[arg(long)]
        dvector: String,
        /// Print the scheme as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// d-binomial expansion of h and the Macaulay bound h^<d>.
    Macaulay {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        d: u64,
    },
    /// Classifies a Hilbert function prefix with constant tail.
    Osequence { sequence: String },
    /// Lex ideal and lifted points for a differentiable O-sequence.
    Gmr {
        #[arg(long)]
        sequence: String,
    },
    /// Multiplicity of a curve at a point.
    Mult {
        scheme: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 0)]
        curve: usize,
    },
    /// Tangent cones at a point, and whether the first two curves share a tangent.
    Tangent {
        scheme: String,
        #[arg(long)]
        point: String,
    },
    /// Intersection multiplicity of the first two curves at a point.
    Intmult {
        scheme: String,
        #[arg(long)]
        point: String,
    },
    /// Sums intersection multiplicities of the first two curves.
    ///
    /// Candidates are the file's points, or all of P^2(F_p) for p <= 101.
    /// TSV columns: point, I_p.
    Bezout { scheme: String },
    /// Intersection pairing of two classes.
    Pair { a: String, b: String },
    /// Applies generators s_i left to right.
    Weyl {
        #[arg(long)]
        word: String,
        class: String,
    },
    /// Cremona reduction with its word. TSV columns: step, class.
    Reduce { class: String },
    /// C(d+2,2) - sum C(m_i+1,2).
    Expdim { class: String },
    /// Predicted dim I_t for generic points with multiplicities m.
    Shgh {
        multiplicities: String,
        #[arg(long)]
        t: i64,
        /// Allow more than nine points (conjectural).
        #[arg(long)]
        conjectural: bool,
    },
    /// Least t with a positive prediction.
    ShghAlpha {
        multiplicities: String,
        #[arg(long)]
        conjectural: bool,
    },
    /// The (-1)-classes on the blowup at r points, r <= 8.
    Exceptional {
        #[arg(long)]
        r: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Budget(_) => 3,
        Error::Invariant(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
