//! `freeprob`: command-line access to the exact free-probability kernels.
//!
//! Exit status: 0 on success, 1 on a domain error (`error[category]: …` on
//! standard error), 2 on a usage error.

mod commands;
mod inputs;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "freeprob", version, about = "Exact multivariate free probability")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Number of variables for built-in series literals
    #[arg(long, global = true)]
    pub s: Option<usize>,
    /// Truncation order (word length); must agree with input files
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Coefficient ring: `rational` or `mod:p`
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Seed for randomized checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the result here instead of standard output
    #[arg(short = 'o', long, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List NC(n) in canonical order
    NcEnum { n: usize },
    /// Kreweras complement of a partition such as `{1,3}{2}`
    Kreweras { partition: String },
    /// Boxed convolution of two series
    BoxConv { f: String, g: String },
    /// Inverse under boxed convolution
    BoxInv { f: String },
    /// The all-ones series
    Zeta,
    /// The boxed-convolution inverse of Zeta
    Moeb,
    /// Free additive convolution of moment series
    FreeAdd { f: String, g: String },
    /// Free multiplicative convolution of moment series
    FreeMul { f: String, g: String },
    /// Moment series to cumulant series
    M2c { f: String },
    /// Cumulant series to moment series
    C2m { f: String },
    /// Print a built-in law as a distribution
    Law { law: String },
    /// Distribution in which the two inputs are free
    FreeProduct { d1: String, d2: String },
    /// Free cumulant table of a distribution
    Cumulants { d: String },
    /// Distribution from a free cumulant table
    Moments { c: String },
    /// Test freeness of generator groups, e.g. `--groups "a1,a2;b1"`
    CheckFree {
        d: String,
        #[arg(long)]
        groups: String,
    },
    /// Cumulant-wise product of one-variable laws
    HadamardMul { l1: String, l2: String },
    /// Voiculescu S-transform of a one-variable law
    #[command(name = "s-transform-1d")]
    STransform1d { law: String },
    /// Ghost map on an element of 1 + zR[[z]]
    Ghost { f: String },
    /// Witt product of two elements of 1 + zR[[z]]
    WittMul { f: String, g: String },
    /// LOG of a mean-one law
    Log { law: String },
    /// EXP, the inverse of LOG
    Exp { law: String },
    /// The product pulled back from the Witt product
    CircledAst { l1: String, l2: String },
    /// Coproduct of the generator X_w, word as `1,2`
    Coproduct { word: String },
    /// Antipode of the generator X_w
    Antipode { word: String },
    /// Counit of a polynomial such as `X(1)^-1*X(1,1) + 3*X(1)`
    Counit { polynomial: String },
    /// Check the Hopf algebra axioms on all generators up to --order
    HopfCheck,
    /// Triangular S-transform matrix of a group element
    STransform {
        f: String,
        /// Representation order (defaults to the series order)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check S(a⋆b) = S(a)S(b) for free tuples of a distribution
    VerifyS {
        d: String,
        /// Comma-separated names of the first tuple
        #[arg(long)]
        a: String,
        /// Comma-separated names of the second tuple
        #[arg(long)]
        b: String,
        /// Representation order
        #[arg(long)]
        n: usize,
    },
    /// Run the acceptance suite
    Verify {
        /// Suite name (only `paper-props`)
        #[arg(long, default_value = "paper-props")]
        suite: String,
        /// Run a single criterion
        #[arg(long)]
        only: Option<u8>,
    },
}

fn emit(global: &Global, mut text: String) -> Result<(), String> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &global.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, failure) = match commands::run(&cli) {
        Ok(text) => (Some(text), None),
        Err(mut e) => (e.output.take(), Some(e)),
    };
    if let Some(text) = output {
        if let Err(msg) = emit(&cli.global, text) {
            eprintln!("error[io]: {msg}");
            return ExitCode::from(1);
        }
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error[{}]: {}", e.category, e.message);
            ExitCode::from(e.exit_code())
        }
    }
}
