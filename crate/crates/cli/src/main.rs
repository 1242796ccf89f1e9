//! `rab`: build, verify and inspect right-angled buildings.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage,
//! parse and resource-cap errors.

mod commands;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rab_core::building::Check;

#[derive(Debug, Parser)]
#[command(name = "rab", version, about = "Right-angled Coxeter groups and right-angled buildings")]
struct Cli {
    /// Report wall-clock time (reports gain a `timing_ms` field).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Glue residues chamber by chamber.
    Glue,
    /// Take the ball in the universal cover of the product local building.
    Cover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HalfSpaceOp {
    Shortest,
    Crossing,
    Hull,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HomologyMode {
    /// Realization of a `.bldg` ball.
    Realize,
    /// Antipodal subcomplex of a product building given by `--sizes`.
    Antipodal,
    /// A complex in the export format.
    Complex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the elements of a ball in the Coxeter group.
    Ball {
        racs: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Build a regular building ball and write it as `.bldg`.
    Build {
        racs: PathBuf,
        /// Thickness per generator, or one value for all.
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<usize>,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "glue")]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the building axioms on a `.bldg` ball.
    Verify {
        bldg: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "f1,f2,f3,axioms,q,b1")]
        checks: Vec<Check>,
    },
    /// Shortest elements, crossing sets and convex hulls.
    Halfspace {
        racs: PathBuf,
        /// Group element, as a word like `s1.s3`; repeat for `--op hull`.
        #[arg(long = "w", required = true)]
        w: Vec<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long, value_enum)]
        op: HalfSpaceOp,
        /// Longest crossing-set member listed.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Two self-maps that are the identity on the preimage of conv(π(N) ∪ {1})
    /// and have disjoint images elsewhere.
    Disjoint {
        bldg: PathBuf,
        #[arg(long = "N", value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Directory receiving `phi.morph` and `psi.morph`.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Reduced integral homology.
    Homology {
        /// `.bldg` ball, complex file, or (optionally) a spherical `.racs` for antipodal mode.
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: HomologyMode,
        /// Panel sizes of the product building.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Also write the complex in the export format.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Draw one apartment of a right-angled p-gon building as SVG.
    Render {
        /// A `.racs` p-gon system; `--p` alone uses the standard one.
        racs: Option<PathBuf>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).filter(|a| a != "--timing").collect();
    let ctx = commands::Context::new(echo, cli.timing, Instant::now());
    let outcome = match cli.command {
        Command::Ball { racs, radius } => commands::ball(&ctx, &racs, radius),
        Command::Build { racs, q, radius, method, out } => {
            commands::build(&ctx, &racs, &q, radius, method, out.as_deref())
        }
        Command::Verify { bldg, checks } => commands::verify(&ctx, &bldg, &checks),
        Command::Halfspace { racs, w, s, op, max_len } => {
            commands::halfspace(&ctx, &racs, &w, s.as_deref(), op, max_len)
        }
        Command::Disjoint { bldg, n, out_dir } => commands::disjoint(&ctx, &bldg, &n, &out_dir),
        Command::Homology { input, mode, sizes, export } => {
            commands::homology(&ctx, input.as_deref(), mode, &sizes, export.as_deref())
        }
        Command::Render { racs, p, depth, out } => commands::render(&ctx, racs.as_deref(), p, depth, out.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
