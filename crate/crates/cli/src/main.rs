mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::UsageError;
use regalg_core::bost_connes::GaloisParameter;
use regalg_core::ExpectationMode;
use report::Report;

/// Exact audits and evaluations for the regular C*-algebra of a Euclidean
/// domain. Exit code 0 when every check passes, 1 on a failed check or a
/// failed computation, 2 on bad flags or unparsable input.
#[derive(Parser)]
#[command(name = "regalg", version)]
struct Cli {
    /// z, zi, zw or fq:<q>
    #[arg(long, global = true, default_value = "z")]
    ring: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the report as JSON instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Multiplicative,
    Additive,
}

#[derive(Subcommand)]
enum Command {
    /// Defining relations for every non-unit modulus up to a norm, checked
    /// symbolically and on a window of basis vectors.
    Relations {
        #[arg(long, default_value_t = 20)]
        max_norm: u64,
        #[arg(long, default_value_t = 30)]
        window_norm: u64,
    },
    /// Conditional expectation of an expression.
    Expect {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
    },
    /// Isometry s with s*s = 1 and s*ys = 1.
    Witness {
        #[arg(long)]
        expr: String,
    },
    /// Separating projection family and the compression it induces.
    Separate {
        #[arg(long)]
        expr: String,
    },
    /// Quotient maps of a truncated profinite completion, and tower data.
    Adele {
        /// Divisor-closed level set, e.g. 2,3,6.
        #[arg(long)]
        levels: String,
        /// Levels to check the quotient map at (default: all).
        #[arg(long)]
        l: Option<String>,
        /// Ring elements to embed into the truncation.
        #[arg(long)]
        embed: Option<String>,
    },
    /// Chinese remainder splitting audits.
    Crt {
        /// Comma-separated moduli.
        #[arg(long, conflicts_with = "max_norm", required_unless_present = "max_norm")]
        m: Option<String>,
        /// Audit every non-unit up to this norm instead.
        #[arg(long)]
        max_norm: Option<u64>,
    },
    /// Bost–Connes relations for all p, m up to a norm.
    BcRelations {
        #[arg(long, default_value_t = 20)]
        max_norm: u64,
    },
    /// Truncated KMS state value with its error bound.
    Kms {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 2.0)]
        beta: f64,
        #[arg(long, default_value_t = 10_000)]
        trunc: u64,
        /// Galois parameter seeds, e.g. 1mod2,2mod3 (default: trivial).
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Compare two expressions on a window, or sampled products against the
    /// partial-map oracle when no expressions are given.
    OracleDiff {
        #[arg(long, requires = "rhs")]
        expr: Option<String>,
        #[arg(long, requires = "expr")]
        rhs: Option<String>,
        #[arg(long, default_value_t = 30)]
        window_norm: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Relations { .. } => "relations",
            Command::Expect { .. } => "expect",
            Command::Witness { .. } => "witness",
            Command::Separate { .. } => "separate",
            Command::Adele { .. } => "adele",
            Command::Crt { .. } => "crt",
            Command::BcRelations { .. } => "bc-relations",
            Command::Kms { .. } => "kms",
            Command::OracleDiff { .. } => "oracle-diff",
        }
    }
}

fn run(cli: &Cli) -> Result<Report, UsageError> {
    let ring = commands::ring_from_flag(&cli.ring)?;
    let mut report = Report::new(cli.command.name(), ring.name(), cli.seed);
    match &cli.command {
        Command::Relations { max_norm, window_norm } => commands::relations(&mut report, &ring, *max_norm, *window_norm),
        Command::Expect { expr, mode } => {
            let x = commands::expr(expr, &ring)?;
            report.input("expr", expr.as_str());
            let mode = match mode {
                Mode::Full => ExpectationMode::Full,
                Mode::Multiplicative => ExpectationMode::Multiplicative,
                Mode::Additive => ExpectationMode::Additive,
            };
            commands::expect(&mut report, &x, mode);
        }
        Command::Witness { expr } => {
            let y = commands::expr(expr, &ring)?;
            report.input("expr", expr.as_str());
            commands::witness(&mut report, &y);
        }
        Command::Separate { expr } => {
            let y = commands::expr(expr, &ring)?;
            report.input("expr", expr.as_str());
            commands::separate(&mut report, &y);
        }
        Command::Adele { levels, l, embed } => {
            let levels = commands::element_list(levels, &ring)?;
            let l = l.as_deref().map(|s| commands::element_list(s, &ring)).transpose()?;
            let embed = embed.as_deref().map(|s| commands::element_list(s, &ring)).transpose()?.unwrap_or_default();
            commands::adele(&mut report, &ring, &levels, l.as_deref(), &embed);
        }
        Command::Crt { m, max_norm } => {
            let moduli = match (m, max_norm) {
                (Some(m), _) => commands::element_list(m, &ring)?,
                (None, Some(n)) => {
                    report.input("max_norm", *n);
                    ring.nonunits_up_to_norm(*n)
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            commands::crt(&mut report, &ring, &moduli);
        }
        Command::BcRelations { max_norm } => commands::bc_relations(&mut report, &ring, *max_norm),
        Command::Kms { expr, beta, trunc, alpha } => {
            let x = commands::expr(expr, &ring)?;
            report.input("expr", expr.as_str());
            let alpha = match alpha {
                Some(a) => commands::alpha(a, &ring)?,
                None => GaloisParameter::trivial(),
            };
            commands::kms(&mut report, &x, *beta, *trunc, &alpha);
        }
        Command::OracleDiff { expr, rhs, window_norm, samples } => match (expr, rhs) {
            (Some(e), Some(r)) => {
                let (x, y) = (commands::expr(e, &ring)?, commands::expr(r, &ring)?);
                report.input("expr", e.as_str());
                report.input("rhs", r.as_str());
                commands::oracle_diff_pair(&mut report, &x, &y, *window_norm);
            }
            _ => commands::oracle_diff_sampled(&mut report, &ring, *samples, *window_norm, cli.seed),
        },
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                print!("{}", report.text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
