//! `aromatic`: command-line front end for the aromatic B-series library.
//!
//! Exit status is 0 on success, 1 when a computation fails or a
//! verification sweep finds a counterexample, and 2 on a usage error.

mod commands;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "aromatic",
    version,
    about = "Exact algebra of aromatic forests and series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Forest classes accepted by `enumerate`.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum Class {
    /// All aromatic forests.
    #[value(name = "AF")]
    Af,
    /// Aromatic trees.
    #[value(name = "AT")]
    At,
    /// Rooted trees.
    #[value(name = "T")]
    T,
    /// Rootless forests.
    #[value(name = "A")]
    A,
    /// Forests without cycles.
    #[value(name = "F")]
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preprocess {
    On,
    Off,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every forest of a class with the given number of vertices.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "AF")]
        class: Class,
    },
    /// Print the symmetry coefficient of a forest.
    Sigma { forest: String },
    /// Print the coproduct of a forest.
    Coproduct { forest: String },
    /// Compose two coefficient maps: prints B·A for `--left A --right B`.
    Compose {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// Substitution law, numerically from two maps or symbolically at a forest.
    #[command(group(ArgGroup::new("mode").required(true).args(["symbolic", "b"])))]
    Substitute {
        #[arg(long, requires_all = ["a", "order"])]
        b: Option<PathBuf>,
        #[arg(long, requires = "b")]
        a: Option<PathBuf>,
        #[arg(long)]
        order: Option<usize>,
        /// Print the symbolic coefficient of b★a at this forest.
        #[arg(long, value_name = "FOREST")]
        symbolic: Option<String>,
    },
    /// Divergence of the B-series of an aromatic-tree map.
    Divergence {
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// Regenerate a golden table: 1 coproducts, 2 and 3 substitution law.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Run an exact verification sweep against elemental differentials.
    #[command(group(ArgGroup::new("sweep").required(true).args(["lemma31", "thm41", "thm42", "thm53"])))]
    Verify {
        /// Operator composition for every pair of forests.
        #[arg(long)]
        lemma31: bool,
        /// Composition of S-series for random map pairs.
        #[arg(long)]
        thm41: bool,
        /// S-series of a flow map for random aromatic-tree maps.
        #[arg(long)]
        thm42: bool,
        /// Substitution into S-series for random map pairs.
        #[arg(long)]
        thm53: bool,
        /// Largest total forest size (pair sweep) or truncation order.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random instances.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// One-step volume error of the implicit midpoint rule as CSV.
    Integrate {
        /// One of cubic2d, pendulum, quad3d, abc, harmonic.
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value = "both")]
        preprocess: Preprocess,
        #[arg(long, default_value_t = 0.02)]
        hmin: f64,
        #[arg(long, default_value_t = 0.2)]
        hmax: f64,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        /// Starting point as comma-separated coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y0: Option<Vec<f64>>,
        /// Append a JSON line with the fitted slopes.
        #[arg(long)]
        summary: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result =
        commands::run(cli.command, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
