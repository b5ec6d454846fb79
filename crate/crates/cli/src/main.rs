use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use gl11_cli::{commands, suite, RunReport};
use gl11_core::PaletteSpec;

#[derive(Parser)]
#[command(name = "gl11", version, about = "Exact gl(1|1) Alexander polynomial and 3-manifold invariant")]
struct Cli {
    /// Palette used when a file has no `palette` line: qt, xi<l> or free=a,b;torsion=l.
    #[arg(long, global = true, default_value = "qt")]
    palette: String,
    /// Print the wall-clock time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed colored diagram (Kirby colors are expanded).
    Eval {
        path: PathBuf,
        /// Component to cut open.
        #[arg(long)]
        cut: Option<String>,
    },
    /// Normalized invariant of a surgery presentation with an omega block.
    Invariant {
        path: PathBuf,
        #[arg(long)]
        cut: Option<String>,
    },
    /// Compare the state sum on the (m, n) chain with the closed form.
    Lens {
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        /// Use every nontrivial torsion class (the default).
        #[arg(long, conflicts_with = "omega")]
        enumerate: bool,
        /// A single class `u,v`.
        #[arg(long)]
        omega: Option<String>,
    },
    /// Run the blow-up and handle-slide invariance suite.
    VerifyKirby {
        #[arg(env = "GL11_SUITE_DIR")]
        dir: Option<PathBuf>,
    },
    /// Tell L(7,1) from L(7,2).
    Distinguish,
}

fn run(cli: &Cli) -> anyhow::Result<RunReport> {
    let palette: PaletteSpec = cli.palette.parse()?;
    match &cli.command {
        Command::Eval { path, cut } => commands::eval(path, cut.as_deref(), &palette),
        Command::Invariant { path, cut } => commands::invariant(path, cut.as_deref(), &palette),
        Command::Lens { m, n, omega, .. } => commands::lens(*m, *n, &palette, omega.as_deref()),
        Command::VerifyKirby { dir } => commands::verify_kirby(&dir.clone().unwrap_or_else(suite::default_dir)),
        Command::Distinguish => commands::distinguish(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    match result {
        Ok(mut report) => {
            report.elapsed = start.elapsed();
            print!("{report}");
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
