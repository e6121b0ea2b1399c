//! begnum: exact tables and identity-verification suites on the command
//! line. Every value is emitted as an exact string ("num/den" rationals,
//! {order, coeffs} cyclotomics); reports are deterministic byte-for-byte.

mod output;

use anyhow::{bail, Context};
use begnum::identities::suites::{run_all, run_suite, SuiteOptions, SUITE_NAMES};
use begnum::tables;
use begnum::{enumerate_characters, Rat};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "begnum",
    version,
    about = "Exact Bernoulli/Euler/Genocchi tables, Dirichlet characters, and identity verification",
    after_help = "All output is exact: rationals are \"num/den\" strings and cyclotomic numbers \
are {order, coeffs} objects. `verify` exits 0 only if every certificate passed."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Bernoulli, Euler and Genocchi numbers up to a degree.
    Numbers {
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coefficient vectors of B_n(x), E_n(x), G_n(x) and, with a character,
    /// the twisted Euler polynomials.
    Poly {
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        /// Even modulus of the character to include.
        #[arg(long, requires = "char_index")]
        modulus: Option<u64>,
        /// Index of the character in the stable enumeration order.
        #[arg(long, requires = "modulus")]
        char_index: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Enumerate the Dirichlet characters of a modulus.
    Chars {
        #[arg(long)]
        modulus: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Character-twisted Euler/Genocchi tables and alternating power sums.
    Twisted {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        char_index: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Alternating partial sums vs Euler numbers: the valuation table.
    Fermionic {
        /// An odd prime.
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// Highest level N (partial sums run over 0 ≤ j < p^N).
        #[arg(long, default_value_t = 5)]
        level: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run verification suites and emit a certificate report.
    Verify {
        /// Suite name or "all".
        #[arg(long)]
        suite: String,
        /// Restrict character/modulus grids to one even modulus.
        #[arg(long)]
        modulus: Option<u64>,
        /// Cap the degree grid.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Restrict character grids to one character.
        #[arg(long)]
        char_index: Option<usize>,
        /// Restrict the w1 grid (theorem5).
        #[arg(long)]
        w1: Option<u64>,
        /// Restrict the w2 grid (theorem5).
        #[arg(long)]
        w2: Option<u64>,
        /// Restrict the x grid to one rational, e.g. "1/2" (theorem5).
        #[arg(long)]
        x: Option<String>,
        /// Restrict the prime grid (fermionic).
        #[arg(long)]
        p: Option<u64>,
        /// Level cap (fermionic) / shift cap (shift).
        #[arg(long)]
        level: Option<u32>,
        /// Widen theorem5 to the principal character, whose certificates
        /// fail by design (the identity does not hold there).
        #[arg(long)]
        include_principal: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Numbers { max_degree, out } => {
            let doc = tables::numbers_doc(max_degree);
            emit(&out, &doc, output::numbers_csv(&doc))?;
            Ok(true)
        }
        Command::Poly {
            max_degree,
            modulus,
            char_index,
            out,
        } => {
            let chi = match (modulus, char_index) {
                (Some(d), Some(i)) => {
                    require_even(d)?;
                    Some(character(d, i)?)
                }
                _ => None,
            };
            let doc = tables::poly_doc(max_degree, chi.as_ref())?;
            emit(&out, &doc, output::poly_csv(&doc))?;
            Ok(true)
        }
        Command::Chars { modulus, out } => {
            if modulus == 0 {
                bail!("modulus must be positive");
            }
            let doc = tables::characters_doc(modulus);
            emit(&out, &doc, output::chars_csv(&doc))?;
            Ok(true)
        }
        Command::Twisted {
            modulus,
            char_index,
            max_degree,
            out,
        } => {
            require_even(modulus)?;
            let chi = character(modulus, char_index)?;
            let doc = tables::twisted_doc(&chi, max_degree)?;
            emit(&out, &doc, output::twisted_csv(&doc))?;
            Ok(true)
        }
        Command::Fermionic {
            p,
            max_degree,
            level,
            out,
        } => {
            let doc = tables::fermionic_doc(p, max_degree, level)
                .with_context(|| format!("fermionic table for p = {p}"))?;
            emit(&out, &doc, output::fermionic_csv(&doc))?;
            Ok(true)
        }
        Command::Verify {
            suite,
            modulus,
            max_degree,
            char_index,
            w1,
            w2,
            x,
            p,
            level,
            include_principal,
            out,
        } => {
            let x = x
                .map(|s| s.parse::<Rat>())
                .transpose()
                .context("--x must be an exact rational like 1/2")?;
            let opts = SuiteOptions {
                modulus,
                max_degree,
                char_index,
                w1,
                w2,
                x,
                p,
                level,
                include_principal,
            };
            if suite == "all" {
                let report = run_all(&opts).context("suite options were rejected")?;
                emit(&out, &report, output::full_report_csv(&report))?;
                Ok(report.all_passed())
            } else {
                if !SUITE_NAMES.contains(&suite.as_str()) {
                    bail!(
                        "unknown suite {suite:?}; expected \"all\" or one of: {}",
                        SUITE_NAMES.join(", ")
                    );
                }
                let report = run_suite(&suite, &opts).context("suite options were rejected")?;
                emit(&out, &report, output::report_csv(&report))?;
                Ok(report.all_passed())
            }
        }
    }
}

fn require_even(d: u64) -> anyhow::Result<()> {
    if d == 0 || d % 2 != 0 {
        bail!("modulus must be even and positive, got {d}");
    }
    Ok(())
}

fn character(d: u64, index: usize) -> anyhow::Result<begnum::DirichletCharacter> {
    let mut all = enumerate_characters(d);
    if index >= all.len() {
        bail!(
            "character index {index} out of range for modulus {d} (there are {})",
            all.len()
        );
    }
    Ok(all.swap_remove(index))
}

fn emit<T: serde::Serialize>(
    out: &OutputArgs,
    doc: &T,
    csv: anyhow::Result<String>,
) -> anyhow::Result<()> {
    let text = match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc)?;
            s.push('\n');
            s
        }
        Format::Csv => csv?,
    };
    match &out.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display())),
    }
}
