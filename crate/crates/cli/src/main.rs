//! `dorey`: orbits, fusings, q-characters and the fusing/q-character check
//! from the command line.
//!
//! Exit status is 0 on success, 1 on bad input or a domain error, 2 when
//! `verify` finds a mismatch.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dorey_core::correspondence::{verify_coxeter_side, verify_theorem, VerifyOptions};
use dorey_core::dorey::{
    enumerate_fusings_with, prv_admissible_capped, unordered_fusings, DEFAULT_PRV_CAP,
};
use dorey_core::export;
use dorey_core::qchar::{fm_qcharacter_capped, DEFAULT_MAX_MONOMIALS};
use dorey_core::{Error, Exec, Family, Node, RootSystem};

/// Monomial cap used for E7 when `--max-monomials` is not given.
const E7_MAX_MONOMIALS: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "dorey",
    version,
    about = "Coxeter orbits, Dorey fusings and fundamental q-characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, colouring, bar involution and Coxeter matrix.
    Algebra(Common),
    /// The Coxeter orbit of a fundamental weight.
    Orbit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        node: String,
    },
    /// All solutions of the fusing rule.
    Fusings {
        #[command(flatten)]
        common: Common,
        /// One solution per unordered node triple.
        #[arg(long)]
        unordered: bool,
        /// Angles in radians instead of integer multiples of pi/h.
        #[arg(long)]
        float_angles: bool,
    },
    /// Whether the trivial module occurs in V(λ_i) ⊗ V(λ_j) ⊗ V(λ_k).
    Prv {
        #[command(flatten)]
        common: Common,
        /// Three nodes, comma separated.
        #[arg(long)]
        triple: String,
        #[arg(long, default_value_t = DEFAULT_PRV_CAP)]
        cap: usize,
    },
    /// The q-character of a fundamental module.
    Qchar {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        node: String,
        #[arg(long)]
        max_monomials: Option<usize>,
    },
    /// Compares fusing rapidities with quadratic q-character monomials.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_monomials: Option<usize>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Allow the expensive E7 computations.
    #[arg(long)]
    e7: bool,
    /// Allow E8; `verify` then runs the Coxeter-side checks only.
    #[arg(long)]
    e8: bool,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

impl Common {
    fn root_system(&self) -> Result<RootSystem, Error> {
        let family: Family = self.family.parse()?;
        RootSystem::new(family, self.rank)
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }

    /// E7 and E8 q-characters are large; they need an explicit flag.
    fn require_opt_in(&self, rs: &RootSystem) -> Result<(), Failure> {
        match (rs.family(), rs.rank()) {
            (Family::E, 7) if !self.e7 => Err(Failure::Usage("E7 needs --e7".into())),
            (Family::E, 8) if !self.e8 => Err(Failure::Usage("E8 needs --e8".into())),
            _ => Ok(()),
        }
    }

    fn max_monomials(&self, rs: &RootSystem, given: Option<usize>) -> usize {
        given.unwrap_or(if (rs.family(), rs.rank()) == (Family::E, 7) {
            E7_MAX_MONOMIALS
        } else {
            DEFAULT_MAX_MONOMIALS
        })
    }
}

enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Usage(s) => f.write_str(s),
        }
    }
}

struct Output {
    text: String,
    code: u8,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::Usage(
            "--format dot is only available for qchar".into(),
        ))
    } else {
        Ok(())
    }
}

fn parse_triple(rs: &RootSystem, s: &str) -> Result<[Node; 3], Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "expected three comma-separated nodes, got {s:?}"
        )));
    }
    Ok([
        rs.parse_node(parts[0])?,
        rs.parse_node(parts[1])?,
        rs.parse_node(parts[2])?,
    ])
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Algebra(common) => {
            no_dot(common.format)?;
            let rs = common.root_system()?;
            Ok(match common.format {
                Format::Json => export::pretty(&export::algebra_json(&rs)),
                _ => export::algebra_table(&rs),
            }
            .into())
        }
        Command::Orbit { common, node } => {
            no_dot(common.format)?;
            let rs = common.root_system()?;
            let i = rs.parse_node(&node)?;
            Ok(match common.format {
                Format::Json => export::pretty(&export::orbit_json(&rs, i)),
                _ => export::orbit_table(&rs, i),
            }
            .into())
        }
        Command::Fusings {
            common,
            unordered,
            float_angles,
        } => {
            no_dot(common.format)?;
            let rs = common.root_system()?;
            let mut sols = enumerate_fusings_with(&rs, common.exec());
            if unordered {
                sols = unordered_fusings(&sols);
            }
            Ok(match common.format {
                Format::Json => export::pretty(&export::fusings_json(&rs, &sols, float_angles)),
                _ => export::fusings_table(&rs, &sols, float_angles),
            }
            .into())
        }
        Command::Prv {
            common,
            triple,
            cap,
        } => {
            no_dot(common.format)?;
            let rs = common.root_system()?;
            let t = parse_triple(&rs, &triple)?;
            let outcome = prv_admissible_capped(&rs, t[0], t[1], t[2], cap)?;
            Ok(match common.format {
                Format::Json => export::pretty(&export::prv_json(&rs, t, outcome)),
                _ => format!(
                    "{} ({}, {}, {}): {}\n",
                    rs.name(),
                    rs.node_name(t[0]),
                    rs.node_name(t[1]),
                    rs.node_name(t[2]),
                    export::prv_word(outcome)
                ),
            }
            .into())
        }
        Command::Qchar {
            common,
            node,
            max_monomials,
        } => {
            let rs = common.root_system()?;
            common.require_opt_in(&rs)?;
            let i = rs.parse_node(&node)?;
            let qc = fm_qcharacter_capped(&rs, i, common.max_monomials(&rs, max_monomials))?;
            Ok(match common.format {
                Format::Json => export::pretty(&export::qchar_json(&qc)),
                Format::Dot => export::qchar_dot(&qc),
                Format::Table => export::qchar_table(&qc),
            }
            .into())
        }
        Command::Verify {
            common,
            max_monomials,
        } => {
            no_dot(common.format)?;
            let rs = common.root_system()?;
            common.require_opt_in(&rs)?;
            if (rs.family(), rs.rank()) == (Family::E, 8) {
                let report = verify_coxeter_side(&rs, common.exec());
                let text = match common.format {
                    Format::Json => export::pretty(&export::coxeter_report_json(&report)),
                    _ => export::coxeter_report_table(&report),
                };
                let code = if report.is_clean() { 0 } else { 2 };
                return Ok(Output { text, code });
            }
            let opts = VerifyOptions {
                max_monomials: common.max_monomials(&rs, max_monomials),
                exec: common.exec(),
            };
            let report = verify_theorem(&rs, &opts)?;
            let text = match common.format {
                Format::Json => export::pretty(&export::report_json(&report)),
                _ => export::report_table(&rs, &report),
            };
            Ok(Output {
                text,
                code: report.exit_code() as u8,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
