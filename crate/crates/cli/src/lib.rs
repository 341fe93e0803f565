//! Command-line front end: argument grammar, dispatch and output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use parkspace::certify::{binomial_basis, period_enumerate, q_binomial_basis};
use parkspace::characters::{CharLabel, Decomposition};
use parkspace::exact::{Polynomial, Rational, UPolynomial};
use parkspace::groups::{
    catalan_at_one, catalan_q, catalan_star_at_one, catalan_star_q, character_condition, group,
    integrality_condition, q_polynomiality_condition, verify_tables,
};
use parkspace::partitions::{class_divisibility_check, stirling_divisibility_check, stirling_first, Partition};
use parkspace::symfunc::{
    gcd_int_schur, gcd_poly_schur, predicted_gcd_int, predicted_gcd_poly, schur_quotient, unimodality_check,
};
use parkspace::{Error, Result};

mod decompose;
pub mod output;

use output::{
    CatalanValue, DihedralReport, DihedralSymbolic, GcdValue, StirlingClass, StirlingRow, UnimodalityReport,
};

#[derive(Parser)]
#[command(name = "parkspace", version, about = "Parking-space characters and q-Catalan numbers of reflection groups")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for parallel scans.
    #[arg(long, env = "PARKSPACE_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Cat_k(W, q), Cat*_k(W, q) or their values at q = 1.
    Catalan {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, conflicts_with = "at_one")]
        q: bool,
        #[arg(long)]
        at_one: bool,
        #[arg(long)]
        dual: bool,
    },
    /// Congruence condition on k.
    Condition {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = ConditionKind::Both)]
        kind: ConditionKind,
        /// Use Cat* for `cat` and `integral`.
        #[arg(long)]
        dual: bool,
    },
    /// Recompute the congruence tables for the exceptional groups.
    VerifyTables,
    /// gcd of s_lambda(1^k) (or of the principal specializations with --q) over lambda |- n.
    Gcd {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        q: bool,
        /// Print the closed form instead of the brute-force gcd.
        #[arg(long)]
        predicted: bool,
    },
    /// Multiplicity of one character in phi_k.
    Mult {
        #[command(flatten)]
        target: DecomposeArgs,
        #[arg(long)]
        label: String,
    },
    /// All multiplicities of phi_k.
    Decompose {
        #[command(flatten)]
        target: DecomposeArgs,
    },
    /// Dihedral group of order 2m: decompositions and the character test.
    Dihedral {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Unimodality of the Schur quotient and of its even and odd parts.
    Unimodality {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        k: u64,
    },
    /// Divisibility of Stirling numbers, or of class sizes with --partition.
    Stirling {
        #[arg(long, required_unless_present = "partition")]
        n: Option<i64>,
        #[arg(long, conflicts_with = "n")]
        partition: Option<String>,
    },
    /// Nonnegativity certificates.
    Certify {
        #[command(subcommand)]
        what: CertifyCommand,
    },
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    group: String,
    /// Omit for the symbolic multiplicities in u.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    q: bool,
    #[arg(long, value_enum, default_value_t = BasisArg::Irreducible)]
    basis: BasisArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Irreducible,
    Permutation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConditionKind {
    /// Both q-Catalan numbers are polynomials.
    Both,
    /// Cat_k (or Cat*_k) is a polynomial.
    Cat,
    /// Cat_k(W, 1) (or Cat*_k(W, 1)) is an integer.
    Integral,
    /// phi_k is a character.
    Character,
    /// Cat, Cat* and both, with the isolated vanishing values.
    Full,
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// Binomial-basis coordinates of a polynomial in t.
    Binomial {
        /// Coefficients from the constant term up, e.g. `0,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// q-binomial coordinates of a polynomial in u over Q(q), given as JSON.
    QBinomial {
        #[arg(long)]
        h: String,
        #[arg(long)]
        base: u64,
    },
    /// Residues k mod L with f(k) in N, justified by a certificate for f(t + L) - f(t).
    Period {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        period: u64,
        #[arg(long)]
        divisor: u64,
    },
    /// Certificates for every shifted dihedral multiplicity.
    Dihedral {
        #[arg(long)]
        m: u64,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    let s = match format {
        Format::Json => serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?,
        Format::Text => text(),
    };
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{s}") {
        // a closed pipe (e.g. `| head`) is not an error
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            std::process::exit(1);
        }
    }
    Ok(())
}

fn parse_poly(s: &str) -> Result<Polynomial> {
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<Rational>().map_err(|_| Error::Parse(format!("bad coefficient `{c}`"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}

fn positive(name: &str, k: i64) -> Result<u64> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("{name} must be >= 1, got {k}")));
    }
    Ok(k as u64)
}

fn run(cli: Cli) -> Result<bool> {
    let f = cli.format;
    match cli.command {
        Command::Catalan { group: g, k, q, at_one, dual } => {
            let w = group(&g)?;
            // graded is the default; --q only makes it explicit
            let _ = q;
            let value = if at_one {
                CatalanValue::from_rational(&if dual { catalan_star_at_one(&w, k) } else { catalan_at_one(&w, k) })
            } else {
                CatalanValue::RationalFunction(if dual { catalan_star_q(&w, k) } else { catalan_q(&w, k) })
            };
            emit(f, &value, || value.to_string())?;
        }
        Command::Condition { group: g, kind, dual } => {
            let w = group(&g)?;
            if kind == ConditionKind::Full {
                let c = q_polynomiality_condition(&w);
                emit(f, &c, || format!("Cat: {}\nCat*: {}\nboth: {}", c.cat, c.cat_star, c.both))?;
            } else {
                let c = match kind {
                    ConditionKind::Both => q_polynomiality_condition(&w).both,
                    ConditionKind::Cat if dual => q_polynomiality_condition(&w).cat_star,
                    ConditionKind::Cat => q_polynomiality_condition(&w).cat,
                    ConditionKind::Integral => integrality_condition(&w, dual),
                    ConditionKind::Character => character_condition(&w),
                    ConditionKind::Full => unreachable!(),
                };
                emit(f, &c, || c.to_string())?;
            }
        }
        Command::VerifyTables => {
            let report = verify_tables();
            emit(f, &report, || {
                let mut lines: Vec<String> = report
                    .failures()
                    .map(|c| format!("table {} {}: expected {}, computed {}", c.table, c.group, c.expected, c.computed))
                    .collect();
                for t in 1..=4 {
                    lines.push(format!("table {t}: {}", if report.table_ok(t) { "ok" } else { "MISMATCH" }));
                }
                lines.join("\n")
            })?;
            return Ok(report.all_ok);
        }
        Command::Gcd { n, k, q, predicted } => {
            if n == 0 || k == 0 {
                return Err(Error::InvalidArgument("gcd needs n >= 1 and k >= 1".into()));
            }
            let v = match (q, predicted) {
                (false, false) => GcdValue::Integer(gcd_int_schur(n, k).to_string()),
                (false, true) => GcdValue::Integer(predicted_gcd_int(n, k).to_string()),
                (true, false) => GcdValue::Polynomial(gcd_poly_schur(n, k)),
                (true, true) => GcdValue::Polynomial(predicted_gcd_poly(n, k)),
            };
            emit(f, &v, || v.to_string())?;
        }
        Command::Mult { target, label } => {
            let d = decompose::run(&target)?;
            let label: CharLabel = label.parse()?;
            let entries: Vec<_> = d.entries.iter().filter(|e| e.label == label).cloned().collect();
            if entries.is_empty() {
                return Err(Error::InvalidArgument(format!("no character `{label}` in {}", d.group)));
            }
            let valid = entries.iter().all(|e| e.valid);
            let single = Decomposition { entries, representation_valid: valid, ..d };
            emit(f, &single, || output::decomposition_text(&single))?;
        }
        Command::Decompose { target } => {
            let d = decompose::run(&target)?;
            emit(f, &d, || output::decomposition_text(&d))?;
        }
        Command::Dihedral { m, k } => match k {
            Some(k) => {
                let r = DihedralReport::compute(m, k)?;
                emit(f, &r, || r.to_string())?;
            }
            None => {
                let r = DihedralSymbolic::compute(m)?;
                emit(f, &r, || r.to_string())?;
            }
        },
        Command::Unimodality { partition, k } => {
            let lambda: Partition = partition.parse()?;
            let u = unimodality_check(&lambda, k)?;
            let r = UnimodalityReport {
                partition: lambda.clone(),
                k,
                quotient: schur_quotient(&lambda, k)?,
                even_ok: u.even_ok,
                odd_ok: u.odd_ok,
                whole_ok: u.whole_ok,
            };
            emit(f, &r, || r.to_string())?;
        }
        Command::Stirling { n, partition } => match (n, partition) {
            (_, Some(p)) => {
                let lambda: Partition = p.parse()?;
                let r = StirlingClass { divisible: class_divisibility_check(&lambda)?, partition: lambda };
                emit(f, &r, || r.to_string())?;
            }
            (Some(n), None) => {
                let divisible = stirling_divisibility_check(n)?;
                let row = (0..=n).map(|j| stirling_first(n, j).map(|c| c.to_string())).collect::<Result<_>>()?;
                let r = StirlingRow { n, row, divisible };
                emit(f, &r, || r.to_string())?;
            }
            (None, None) => unreachable!("clap requires one of them"),
        },
        Command::Certify { what } => match what {
            CertifyCommand::Binomial { poly } => {
                let c = binomial_basis(&parse_poly(&poly)?);
                emit(f, &c, || output::binomial_text(&c))?;
            }
            CertifyCommand::QBinomial { h, base } => {
                let h: UPolynomial =
                    serde_json::from_str(&h).map_err(|e| Error::Parse(format!("bad u-polynomial JSON: {e}")))?;
                let c = q_binomial_basis(&h, base)?;
                emit(f, &c, || output::q_binomial_text(&c))?;
            }
            CertifyCommand::Period { poly, period, divisor } => {
                let o = period_enumerate(&parse_poly(&poly)?, period, divisor)?;
                emit(f, &o, || output::period_text(&o))?;
            }
            CertifyCommand::Dihedral { m } => {
                let r = output::DihedralCertificates::compute(m)?;
                emit(f, &r, || r.to_string())?;
                return Ok(r.soundness.all_certified);
            }
        },
    }
    Ok(true)
}

/// Parse the process arguments, run, and map the outcome to an exit code:
/// 0 success, 1 domain error or failed check, 2 usage error.
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_rational_coefficients() {
        let p = parse_poly("-1/2, 1/2").unwrap();
        assert_eq!(p.eval_i64(3), Rational::from_integer(1.into()));
        assert!(parse_poly("1,x").is_err());
    }

    #[test]
    fn positive_rejects_zero() {
        assert!(positive("k", 0).is_err());
        assert_eq!(positive("k", 3).unwrap(), 3);
    }
}
