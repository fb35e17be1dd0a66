//! Command-line front end: every verb is a thin adapter that parses flags
//! and text, calls the library, and renders a deterministic table.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "convalg",
    version,
    about = "Convolution-algebra calculator",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Convolve two finitely supported coefficient functions.
    Conv {
        /// Index monoid: `Z`, `W`, `W^<n>`, or `Zmod:<m>`.
        #[arg(long)]
        monoid: String,
        /// Scalar field: `Q`, `Fp:<p>`, or `C`.
        #[arg(long)]
        field: String,
        /// Inline operand in polynomial syntax (may repeat).
        #[arg(long)]
        input: Vec<String>,
        /// Coefficient files (`<element> <scalar>` lines).
        files: Vec<String>,
    },
    /// Invert a power series with nonzero constant term.
    SeriesInvert {
        #[arg(long)]
        field: String,
        /// Polynomial syntax, `geom`, or a rational function `p / q`.
        #[arg(long)]
        input: String,
        /// Print coefficients of total degree below this order.
        #[arg(long)]
        order: u64,
    },
    /// Reciprocal of a Laurent series.
    LaurentRecip {
        #[arg(long)]
        field: String,
        /// Laurent polynomial syntax (negative exponents allowed) or `p / q`.
        #[arg(long)]
        input: String,
        /// How far to scan for the lowest nonzero coefficient.
        #[arg(long, default_value_t = 16)]
        probe: u64,
        /// Number of coefficients to print.
        #[arg(long)]
        order: u64,
    },
    /// Evaluate a polynomial at a tuple of scalars.
    PolyEval {
        #[arg(long)]
        field: String,
        #[arg(long)]
        input: String,
        /// Comma-separated scalars, one per variable.
        #[arg(long)]
        at: String,
    },
    /// Substitute polynomials for the variables of a polynomial.
    PolyCompose {
        #[arg(long)]
        field: String,
        #[arg(long)]
        input: String,
        /// Semicolon-separated replacement polynomials.
        #[arg(long)]
        with: String,
    },
    /// Evaluate an expression in a quotient ring.
    Quotient {
        /// Ambient ring: `Z`, `Q[t]`, `C[t]`, or `F<p>[t]`.
        #[arg(long)]
        ring: String,
        /// Modulus for Z (an integer).
        #[arg(long = "mod")]
        modulus: Option<String>,
        /// Generator polynomial for `k[t]`.
        #[arg(long)]
        gen: Option<String>,
        /// Expression over integers, `t`, `+ - * ^`, and `inv(..)`.
        #[arg(long)]
        eval: String,
    },
    /// Classify a principal ideal.
    Classify {
        #[arg(long)]
        ring: String,
        /// Generator: an integer for Z, a polynomial for `k[t]`.
        #[arg(long)]
        gen: String,
    },
    /// Spectral-radius estimates against the circle maximum.
    Specrad {
        /// Coefficient file with complex entries.
        #[arg(long)]
        input: String,
        /// Index monoid: `Z` or `W`.
        #[arg(long, default_value = "Z")]
        monoid: String,
        #[arg(long, default_value_t = 256)]
        nmax: u64,
        #[arg(long, default_value_t = 10000)]
        grid: u64,
    },
    /// Sample phi_f on the unit circle.
    Fourier {
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "Z")]
        monoid: String,
        #[arg(long)]
        grid: u64,
    },
    /// Characteristic of a scalar field.
    Characteristic {
        #[arg(long)]
        field: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.cmd) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            ExitCode::from(2)
        }
        Err(commands::CliError::Domain { code, msg }) => {
            eprintln!("error: {code}: {msg}");
            ExitCode::from(1)
        }
    }
}
