use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sl2loop::expression::{eval_str, EvalOptions, Images, Model};
use sl2loop::par::Execution;
use sl2loop::random::DEFAULT_SEED;
use sl2loop::suites::{run_suite, SuiteOptions, DEFAULT_MAX_DEGREE, DEFAULT_SAMPLES, SUITE_NAMES};

const USAGE_ERROR: u8 = 2;

/// Exact computations in the three-point sl2 loop algebra and its universal
/// central extension.
#[derive(Parser, Debug)]
#[command(name = "sl2loop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = ModelArg::Lhat)]
        model: ModelArg,
        /// Image map for generator symbols. By default `x[i,j]` uses sigma
        /// and `Xh[i,j]`, `Ch[ij|kl]` use sigma-hat.
        #[arg(long, value_enum)]
        images: Option<ImagesArg>,
    },
    /// Run a verification suite; exit 0 if every check passes, 1 otherwise.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITE_NAMES))]
        suite: String,
        /// Single degree cap for `center` and `onsager`.
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Evaluate on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    L,
    Lhat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ImagesArg {
    Sigma,
    SigmaHat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Machine,
}

fn eval(expr: &str, model: ModelArg, images: Option<ImagesArg>) -> ExitCode {
    let opts = EvalOptions {
        model: match model {
            ModelArg::L => Model::L,
            ModelArg::Lhat => Model::LHat,
        },
        images: images.map(|i| match i {
            ImagesArg::Sigma => Images::Sigma,
            ImagesArg::SigmaHat => Images::SigmaHat,
        }),
    };
    match eval_str(expr, &opts) {
        Ok(rendered) => {
            println!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{expr}");
            eprintln!("{}^", " ".repeat(e.position()));
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn verify(suite: &str, opts: SuiteOptions, format: Format, out: Option<PathBuf>) -> ExitCode {
    let doc = match run_suite(suite, &opts) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let rendered = match format {
        Format::Text => doc.render_text(),
        Format::Machine => doc.to_json() + "\n",
    };
    match out {
        None => print!("{rendered}"),
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(USAGE_ERROR);
            }
            let verdict = if doc.overall_pass { "PASS" } else { "FAIL" };
            println!(
                "{verdict}: {}/{} checks passed; report written to {}",
                doc.summary.passed,
                doc.summary.total,
                path.display()
            );
        }
    }
    ExitCode::from(doc.exit_code() as u8)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval {
            expr,
            model,
            images,
        } => eval(&expr, model, images),
        Command::Verify {
            suite,
            cap,
            max_degree,
            samples,
            seed,
            format,
            out,
            sequential,
        } => {
            let execution = if sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let opts = SuiteOptions {
                cap,
                max_degree,
                samples,
                seed,
                execution,
            };
            verify(&suite, opts, format, out)
        }
    }
}
