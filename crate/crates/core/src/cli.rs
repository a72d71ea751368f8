//! Command-line front end.
//!
//! Exit status contract: 0 when everything requested succeeded (and every identity
//! passed), 1 when an identity check failed, 2 on usage errors.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::coeffs::{reconcile, CoeffTable};
use crate::legendre::{higher_order_series, ExplicitFormula, Generator};
use crate::render::{render_higher, render_poly, render_reports, render_table, OutputFormat};
use crate::verify::verify_all;

#[derive(Debug, Parser)]
#[command(
    name = "legendre-ode",
    version,
    about = "Exact Legendre polynomial identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of p_n(x), lowest power first.
    Legendre {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the coefficient triangle a_i(N) for N = 1..=n-max.
    Coeffs {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        /// Compare the nested-sum closed forms against the recurrence.
        #[arg(long)]
        check_closed_form: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print p_n^(alpha)(x) for n = 0..=order.
    Higher {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        alpha: u32,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long = "N-max", value_parser = clap::value_parser!(u32).range(1..))]
        big_n_max: u32,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Rodrigues,
    Explicit1,
    Explicit2,
    Explicit3,
}

impl From<Method> for Generator {
    fn from(m: Method) -> Self {
        match m {
            Method::Recurrence => Generator::Recurrence,
            Method::Rodrigues => Generator::Rodrigues,
            Method::Explicit1 => Generator::Explicit(ExplicitFormula::SquaredBinomials),
            Method::Explicit2 => Generator::Explicit(ExplicitFormula::NegativeUpperBinomial),
            Method::Explicit3 => Generator::Explicit(ExplicitFormula::HalfIntegerBinomial),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    IdentityFailure,
    UsageError,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::IdentityFailure => 1,
            Outcome::UsageError => 2,
        }
    }
}

/// Execute a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> io::Result<Outcome> {
    match cli.command {
        Command::Legendre { n, method, format } => {
            let generator = Generator::from(method);
            let p = generator.build(n);
            out.write_all(render_poly(n, generator.name(), &p, format).as_bytes())?;
        }
        Command::Coeffs {
            n_max,
            check_closed_form,
            format,
        } => {
            let table = match CoeffTable::recurrence(n_max as usize) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(Outcome::UsageError);
                }
            };
            let rec = check_closed_form.then(|| reconcile(&table));
            out.write_all(render_table(&table, rec.as_ref(), format).as_bytes())?;
        }
        Command::Higher {
            alpha,
            order,
            format,
        } => match higher_order_series(alpha, order) {
            Ok(series) => out.write_all(render_higher(alpha, &series, format).as_bytes())?,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(Outcome::UsageError);
            }
        },
        Command::Verify {
            n_max,
            big_n_max,
            order,
            format,
        } => {
            let reports = match verify_all(n_max, big_n_max as usize, order) {
                Ok(r) => r,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(Outcome::UsageError);
                }
            };
            out.write_all(render_reports(&reports, format).as_bytes())?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                writeln!(err, "{failed} identity check(s) failed")?;
                return Ok(Outcome::IdentityFailure);
            }
        }
    }
    Ok(Outcome::Success)
}
