//! `specht`: command-line access to the library.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on unparsable
//! input, 3 when a precondition does not hold.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use specht_core::combinatorics::{mu_of_monomial, Partition};
use specht_core::isotypic::pruning_report;
use specht_core::polyring::{parse_monomial, parse_polynomial, FieldSpec, Monomial, Scalar};
use specht_core::reduction::{solve, SymmetricSystem, DEFAULT_BUDGET};
use specht_core::specht::{
    column_blocks_of_shape, dominance_certificate, generators_of_shape, point_in_variety,
    symmetric_certificate_char0, symmetric_certificate_general, Certificate, ColumnBlocks,
};
use specht_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "specht",
    version,
    about = "Specht ideals and symmetric polynomial systems"
)]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two partitions in the dominance order.
    Dominance { lhs: String, rhs: String },
    /// Print the conjugate partition.
    Conjugate { partition: String },
    /// Print the partition attached to a monomial.
    Mu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        monomial: String,
        /// Print its conjugate instead.
        #[arg(long)]
        perp: bool,
    },
    /// List the Specht polynomials generating the ideal of a shape.
    SpechtGen {
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Prefix each polynomial with its columns.
        #[arg(long)]
        columns: bool,
    },
    /// Decide whether a point lies in the Specht variety of a shape.
    Membership {
        #[arg(long)]
        shape: String,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Also evaluate every generator and fail if the answers disagree.
        #[arg(long)]
        check: bool,
    },
    /// Build (and verify) an ideal membership certificate.
    #[command(subcommand)]
    Certificate(CertificateCommand),
    /// Solve a symmetric system over a prime field.
    Solve {
        /// System JSON file, or `-` for standard input.
        input: String,
        /// Compare against exhaustive enumeration.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Report the isotypic components a leading monomial forces to vanish.
    Isotypic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        monomial: String,
    },
}

#[derive(Args)]
struct Budget {
    /// Maximum number of points to evaluate.
    #[arg(long = "budget", env = "SPECHT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    value: u128,
}

#[derive(Subcommand)]
enum CertificateCommand {
    /// A Specht polynomial of one shape in the ideal of a dominating shape.
    Dominance {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        n: usize,
        /// Columns of the source polynomial, e.g. `1,3|2|4`. Defaults to the
        /// first canonical filling.
        #[arg(long)]
        columns: Option<String>,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Specht polynomial from a symmetric ideal, normalized by factorials.
    Sym0(SymArgs),
    /// Specht polynomial from a symmetric ideal, valid in any characteristic.
    Symgen(SymArgs),
    /// Verify a certificate file (`-` for standard input).
    Verify { input: String },
}

#[derive(Args)]
struct SymArgs {
    #[arg(long)]
    poly: String,
    #[arg(long)]
    n: usize,
    /// Top-degree monomial to use. Defaults to the leading one.
    #[arg(long)]
    monomial: Option<String>,
    #[arg(long, default_value = "q")]
    field: FieldSpec,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn json(cli: &Cli, compact: String, pretty: impl FnOnce() -> String) -> String {
    if cli.pretty {
        pretty()
    } else {
        compact
    }
}

fn read_input(path: &str) -> Result<String> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    };
    text.map_err(|e| Error::Malformed(format!("{path}: {e}")))
}

fn parse_point(text: &str, field: FieldSpec) -> Result<Vec<Scalar>> {
    text.split(',')
        .map(|c| Ok(parse_polynomial(c.trim(), field, 0)?.coefficient(&Monomial::one())))
        .collect()
}

fn emit_certificate(cli: &Cli, cert: &Certificate) -> Result<u8> {
    println!("{}", json(cli, cert.to_json(), || cert.to_json_pretty()));
    Ok(if cert.verify(None)? { 0 } else { 1 })
}

fn symmetric(cli: &Cli, args: &SymArgs, general: bool) -> Result<u8> {
    let p = parse_polynomial(&args.poly, args.field, args.n)?;
    let m = match &args.monomial {
        Some(text) => parse_monomial(text, args.n)?,
        None => p.leading_term().map(|(m, _)| m.clone()).ok_or_else(|| {
            Error::Precondition("the zero polynomial has no leading monomial".into())
        })?,
    };
    let cert = if general {
        symmetric_certificate_general(&p, &m, args.n)?
    } else {
        symmetric_certificate_char0(&p, &m, args.n)?
    };
    emit_certificate(cli, &cert)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Dominance { lhs, rhs } => {
            let (a, b): (Partition, Partition) = (lhs.parse()?, rhs.parse()?);
            let verdict = if a.dominates(&b)? {
                "dominates"
            } else if b.dominates(&a)? {
                "dominated-by"
            } else {
                "incomparable"
            };
            println!("{verdict}");
        }
        Command::Conjugate { partition } => {
            println!("{}", partition.parse::<Partition>()?.conjugate());
        }
        Command::Mu { n, monomial, perp } => {
            let mu = mu_of_monomial(&parse_monomial(monomial, *n)?, *n)?;
            println!("{}", if *perp { mu.conjugate() } else { mu });
        }
        Command::SpechtGen {
            shape,
            n,
            field,
            columns,
        } => {
            for (cb, g) in generators_of_shape(&shape.parse()?, *n, *field)? {
                if *columns {
                    println!("{cb}\t{g}");
                } else {
                    println!("{g}");
                }
            }
        }
        Command::Membership {
            shape,
            point,
            field,
            check,
        } => {
            let shape: Partition = shape.parse()?;
            let x = parse_point(point, *field)?;
            let inside = point_in_variety(&x, &shape)?;
            println!(
                "{}",
                if inside {
                    "in-variety"
                } else {
                    "not-in-variety"
                }
            );
            if *check {
                let vanishing = generators_of_shape(&shape, x.len(), *field)?
                    .iter()
                    .map(|(_, g)| g.evaluate(&x))
                    .collect::<Result<Vec<Scalar>>>()?
                    .iter()
                    .all(Scalar::is_zero);
                if vanishing != inside {
                    eprintln!("generator evaluation disagrees: vanishing = {vanishing}");
                    return Ok(1);
                }
            }
        }
        Command::Certificate(sub) => {
            return match sub {
                CertificateCommand::Dominance {
                    shape,
                    to,
                    n,
                    columns,
                    field,
                } => {
                    let shape: Partition = shape.parse()?;
                    let cols = match columns {
                        Some(text) => text.parse::<ColumnBlocks>()?,
                        None => column_blocks_of_shape(&shape, *n)?.remove(0),
                    };
                    if cols.shape() != shape {
                        return Err(Error::Precondition(format!(
                            "columns {cols} have shape {}, not {shape}",
                            cols.shape()
                        )));
                    }
                    let cert = dominance_certificate(&cols, &to.parse()?, *field, *n)?;
                    emit_certificate(cli, &cert)
                }
                CertificateCommand::Sym0(args) => symmetric(cli, args, false),
                CertificateCommand::Symgen(args) => symmetric(cli, args, true),
                CertificateCommand::Verify { input } => {
                    let cert = Certificate::from_json(&read_input(input)?)?;
                    let ok = cert.verify(None)?;
                    println!("{}", if ok { "verified" } else { "failed" });
                    Ok(if ok { 0 } else { 1 })
                }
            };
        }
        Command::Solve {
            input,
            verify,
            budget,
        } => {
            let system = SymmetricSystem::from_json(&read_input(input)?)?;
            let report = solve(&system, *verify, budget.value)?;
            println!(
                "{}",
                json(cli, report.to_json(), || report.to_json_pretty())
            );
            if report.verified_against_bruteforce == Some(false) {
                return Ok(1);
            }
        }
        Command::Isotypic { n, monomial } => {
            let report = pruning_report(*n, &parse_monomial(monomial, *n)?)?;
            println!(
                "{}",
                json(cli, report.to_json(), || report.to_json_pretty())
            );
        }
    }
    Ok(0)
}
