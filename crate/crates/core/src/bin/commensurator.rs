//! Command-line front end: replays the demonstration scenarios, checks the
//! kernel witness and evaluates commensurator words.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
//! or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use commensurator::cli::{self, EvalError, PsiSource, ScenarioReport};
use commensurator::comm::DEFAULT_STEP_BUDGET;

#[derive(Parser)]
#[command(name = "commensurator", version, about = "Arithmetic in abstract commensurators of F2 and the genus-2 surface group")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Baumslag-Solitar witness in the free group
    FreeDemo {
        /// Iso definition file for psi (default: shipped data)
        #[arg(long, conflicts_with = "auto_psi")]
        psi_file: Option<PathBuf>,
        /// Use the automatic psi pairing the kernels' bases
        #[arg(long)]
        auto_psi: bool,
        #[arg(long)]
        json: bool,
    },
    /// Baumslag-Solitar witness in the genus-2 surface group
    SurfaceDemo {
        /// Iso definition file for psi (default: shipped data)
        #[arg(long)]
        psi_file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a word in named commensurators on a group element
    Eval {
        /// Letters file naming the commensurators
        #[arg(long)]
        letters: PathBuf,
        /// Word over the letter names, applied right to left, e.g. "a^-1 b a"
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Group element to evaluate on, e.g. "B*A*B^-1*A^-1"
        #[arg(long, allow_hyphen_values = true)]
        test: String,
        /// Also decide whether the word is the identity commensurator
        #[arg(long)]
        verdict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check that gamma lies in the kernel of a -> a, b -> b^2 on BS(2,3)
    KernelCheck {
        /// Rewrite step budget
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit(report: &ScenarioReport, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(if report.passed() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match args.command {
        Command::FreeDemo { psi_file, auto_psi, json } => {
            let source = match (&psi_file, auto_psi) {
                (_, true) => PsiSource::Auto,
                (Some(p), false) => PsiSource::File(p),
                (None, false) => PsiSource::Shipped,
            };
            emit(&cli::free_demo(source), json)
        }
        Command::SurfaceDemo { psi_file, json } => {
            let source = psi_file.as_deref().map_or(PsiSource::Shipped, PsiSource::File);
            emit(&cli::surface_demo(source), json)
        }
        Command::KernelCheck { budget, json } => emit(&cli::kernel_check(budget), json),
        Command::Eval { letters, word, test, verdict, json } => match cli::eval(&letters, &word, &test, verdict) {
            Ok(out) => {
                if json {
                    println!("{}", out.to_json());
                } else {
                    print!("{}", out.to_text());
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(match e {
                    EvalError::Input(_) => 2,
                    EvalError::Failed(_) => 1,
                })
            }
        },
    }
}
