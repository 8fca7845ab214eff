//! Command-line front end: parse a field, polynomial and `n`, pick the
//! applicable factorization method, and print the factors as text or
//! JSON.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fqfactor::cyclotomic::factor_x2npt_minus_one;
use fqfactor::error::Error;
use fqfactor::ffield::ints::integer_factorize;
use fqfactor::ffield::FieldSpec;
use fqfactor::oracle;
use fqfactor::polyring::{IrreducibleInfo, Poly};
use fqfactor::splitter::{
    check_reducible_condition, is_fxn_irreducible, split_general, split_prime_power,
    split_q3mod4, split_radical,
};
use fqfactor::textio::{parse_field, parse_poly, print_field, print_poly};
use fqfactor::DEFAULT_SEED;

const EXIT_PARSE: i32 = 2;
const EXIT_SCOPE: i32 = 3;
const EXIT_INTERNAL: i32 = 4;

#[derive(Parser)]
#[command(name = "fqfactor", version, about = "Factor f(x^n) into irreducibles over GF(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor f(x^n) for an irreducible f over GF(q)
    Factor(FactorArgs),
    /// Closed-form factorization of x^(2^n p^t) - 1
    Cyclotomic(CyclotomicArgs),
    /// Check whether f (and f(x^n)) is irreducible
    IrreducibleCheck(IrreducibleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    PrimePower,
    Radical,
    #[value(name = "q3mod4")]
    Q3Mod4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct FactorArgs {
    /// Field, e.g. "GF(59)" or "GF(7^2; y^2 + 1)"
    #[arg(long)]
    field: String,
    /// Monic irreducible polynomial in x, e.g. "x^2 - 11*x + 1"
    #[arg(long)]
    poly: String,
    /// Composition exponent: the target is f(x^n)
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
    /// Cross-check the result against the reference factorizer
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct CyclotomicArgs {
    /// Field, e.g. "5" or "GF(5)"
    #[arg(long)]
    q: String,
    /// Odd prime p with q a primitive root mod p^2
    #[arg(long)]
    p: u64,
    /// Exponent of p
    #[arg(long)]
    t: u32,
    /// Exponent of 2 (n <= nu_2(q-1))
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct IrreducibleArgs {
    #[arg(long)]
    field: String,
    #[arg(long)]
    poly: String,
    /// Also check f(x^n)
    #[arg(long, default_value_t = 1)]
    n: u64,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::Parse(_) => EXIT_PARSE,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_SCOPE,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Factor(args) => run_factor(&args),
        Command::Cyclotomic(args) => run_cyclotomic(&args),
        Command::IrreducibleCheck(args) => run_irreducible_check(&args),
    };
    if let Err(failure) = outcome {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}

fn parse_field_text(text: &str) -> Result<FieldSpec, Failure> {
    // a bare integer is shorthand for a prime field; any invalid field
    // description (bad syntax, composite p, reducible modulus) is an
    // input error
    let parsed = if let Ok(p) = text.trim().parse::<u64>() {
        FieldSpec::prime(p)
    } else {
        parse_field(text)
    };
    parsed.map_err(|err| Failure::new(EXIT_PARSE, err.to_string()))
}

fn load_info(field: &str, poly: &str) -> Result<(FieldSpec, IrreducibleInfo), Failure> {
    let spec = parse_field_text(field)?;
    let poly = parse_poly(poly, &spec)?;
    let info = IrreducibleInfo::new(&poly).map_err(|err| match err {
        Error::NotIrreducible => Failure::new(
            EXIT_SCOPE,
            "the input polynomial must be monic irreducible with nonzero constant term",
        ),
        other => Failure::from(other),
    })?;
    Ok((spec, info))
}

/// Prints to stdout, ignoring broken pipes (e.g. `fqfactor .. | head`).
fn print_out(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn emit(
    output: OutputFormat,
    spec: &FieldSpec,
    poly: &Poly,
    n: u64,
    method: &str,
    seed: u64,
    factors: &[Poly],
    verified: bool,
    extra_notes: &[String],
) {
    match output {
        OutputFormat::Json => {
            let value = json!({
                "field": print_field(spec),
                "poly": print_poly(poly),
                "n": n,
                "method": method,
                "seed": seed,
                "factors": factors.iter().map(print_poly).collect::<Vec<_>>(),
                "verified": verified,
            });
            print_out(&format!("{value}\n"));
        }
        OutputFormat::Text => {
            let mut text = String::new();
            text.push_str(&format!("field:    {}\n", print_field(spec)));
            text.push_str(&format!("poly:     {}\n", print_poly(poly)));
            text.push_str(&format!("n:        {n}\n"));
            text.push_str(&format!("method:   {method}\n"));
            text.push_str(&format!("seed:     {seed}\n"));
            text.push_str(&format!("verified: {verified}\n"));
            text.push_str(&format!("factors ({}):\n", factors.len()));
            for f in factors {
                text.push_str(&format!("  {}\n", print_poly(f)));
            }
            for note in extra_notes {
                text.push_str(&format!("note: {note}\n"));
            }
            print_out(&text);
        }
    }
}

/// Runs the oracle cross-check; returns notes and whether it passed.
fn oracle_check(target: &Poly, factors: &[Poly]) -> (bool, Vec<String>) {
    let report = oracle::verify(target, factors);
    let mut notes = report.notes.clone();
    notes.push(format!(
        "oracle check: product_ok={} all_irreducible={} multiset_match={:?}",
        report.product_ok, report.all_irreducible, report.multiset_match_vs_oracle
    ));
    (report.all_ok(), notes)
}

fn run_factor(args: &FactorArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::new(EXIT_PARSE, "--n must be positive"));
    }
    let (spec, info) = load_info(&args.field, &args.poly)?;
    let (method, factors): (&str, Vec<Poly>) = match args.mode {
        Mode::Auto => {
            if is_fxn_irreducible(&info, args.n)? {
                let composed = info.poly().compose_xn(args.n as usize);
                ("irreducible", vec![composed])
            } else if check_reducible_condition(&info, args.n)? {
                ("general", split_general(&info, args.n, args.seed)?.factors)
            } else {
                match split_radical(&info, args.n, args.seed) {
                    Ok(res) => ("radical", res.factors),
                    Err(Error::QuadExtObstruction(_)) | Err(Error::Precondition(_)) => {
                        let t = args.n.trailing_zeros();
                        if args.n == 1 << t {
                            ("q3mod4", split_q3mod4(&info, t, args.seed)?.factors)
                        } else {
                            return Err(Failure::new(
                                EXIT_SCOPE,
                                "out of method scope: no applicable factorization method",
                            ));
                        }
                    }
                    Err(other) => return Err(other.into()),
                }
            }
        }
        Mode::PrimePower => {
            let factorization = integer_factorize(args.n)?;
            let &[(p, t)] = factorization.pairs() else {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("--mode prime-power needs n to be a prime power, got {}", args.n),
                ));
            };
            ("prime-power", split_prime_power(&info, p, t, args.seed)?.factors)
        }
        Mode::Radical => ("radical", split_radical(&info, args.n, args.seed)?.factors),
        Mode::Q3Mod4 => {
            let t = args.n.trailing_zeros();
            if args.n != 1 << t {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("--mode q3mod4 needs n to be a power of two, got {}", args.n),
                ));
            }
            ("q3mod4", split_q3mod4(&info, t, args.seed)?.factors)
        }
    };
    let mut verified = true;
    let mut notes = Vec::new();
    if args.verify {
        let target = info.poly().compose_xn(args.n as usize);
        let (ok, oracle_notes) = oracle_check(&target, &factors);
        notes = oracle_notes;
        verified = ok;
    }
    emit(
        args.output,
        &spec,
        info.poly(),
        args.n,
        method,
        args.seed,
        &factors,
        verified,
        &notes,
    );
    if args.verify && !verified {
        return Err(Failure::new(EXIT_INTERNAL, "verification failed"));
    }
    Ok(())
}

fn run_cyclotomic(args: &CyclotomicArgs) -> Result<(), Failure> {
    let spec = parse_field_text(&args.q)?;
    let res = factor_x2npt_minus_one(&spec, args.p, args.t, args.n, args.seed)?;
    let degree = 2u64.pow(args.n) * args.p.pow(args.t);
    let target = Poly::monomial(&spec, spec.one(), degree as usize)
        .sub(&Poly::one(&spec));
    let mut verified = true;
    let mut notes = Vec::new();
    if args.verify {
        let (ok, oracle_notes) = oracle_check(&target, &res.factors);
        notes = oracle_notes;
        verified = ok;
    }
    emit(
        args.output,
        &spec,
        &target,
        1,
        "cyclotomic",
        args.seed,
        &res.factors,
        verified,
        &notes,
    );
    if args.verify && !verified {
        return Err(Failure::new(EXIT_INTERNAL, "verification failed"));
    }
    Ok(())
}

fn run_irreducible_check(args: &IrreducibleArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::new(EXIT_PARSE, "--n must be positive"));
    }
    let (spec, info) = load_info(&args.field, &args.poly)?;
    let fxn_irreducible = is_fxn_irreducible(&info, args.n)?;
    match args.output {
        OutputFormat::Json => {
            let value = json!({
                "field": print_field(&spec),
                "poly": print_poly(info.poly()),
                "n": args.n,
                "degree": info.m(),
                "exponent": info.e(),
                "irreducible": true,
                "fxn_irreducible": fxn_irreducible,
            });
            println!("{value}");
        }
        OutputFormat::Text => {
            println!("field:    {}", print_field(&spec));
            println!("poly:     {}", print_poly(info.poly()));
            println!("degree:   {}", info.m());
            println!("exponent: {}", info.e());
            println!("f is irreducible; f(x^{}) is {}", args.n, if fxn_irreducible {
                "irreducible"
            } else {
                "reducible"
            });
        }
    }
    Ok(())
}
