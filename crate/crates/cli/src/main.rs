mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use frobgen_core::oracle::{oracle_ds_image, oracle_pow, oracle_recompose, DEFAULT_ENUMERATION_LIMIT};
use frobgen_core::{
    compute_chain, frob_decompose, frobenius_root_ideal, generator_witness, parse_operator, parse_poly,
    synthesize_delta, verify_delta, ChainReport, Error, ExponentVector, LevelCap, MonomialOrder, Poly, Ring,
    RingContext,
};

use report::{Chain, Coord, Operator, Report, Root, Witness};

const EXIT_REJECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "frobgen", version, about = "Frobenius root ideals and D-module generators over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Prime characteristic.
    #[arg(short = 'p', long = "prime")]
    p: u32,
    /// Comma-separated variable names.
    #[arg(short = 'v', long = "vars", value_delimiter = ',', required = true)]
    vars: Vec<String>,
    #[arg(long, default_value = "grevlex", value_parser = ["grevlex", "lex"])]
    order: String,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the chain I_s(f^(p^s-1)) until it stabilizes.
    Chain {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'f')]
        f: String,
        /// Highest level to compute; defaults to a bound that always suffices.
        #[arg(long)]
        max_level: Option<u32>,
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Synthesize and verify an operator with delta(1/f) = 1/f^p.
    Operator {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'f')]
        f: String,
        #[arg(long)]
        max_level: Option<u32>,
        /// Also emit a witness mapping 1/f to 1/f^(p^t).
        #[arg(long = "power")]
        power: Option<u32>,
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Check that an operator of level N maps 1/f to 1/f^p.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'f')]
        f: String,
        /// Operator in normal form, e.g. "4 * D[2,2,2,2]".
        #[arg(long = "op")]
        op: String,
        #[arg(short = 'N', long = "level")]
        level: u32,
    },
    /// Frobenius decomposition of g and the ideal I_s(g).
    Root {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'g')]
        g: String,
        #[arg(short = 's')]
        s: u32,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_USAGE, msg: e.to_string() }
    }
}

type Outcome = Result<(Report, u8), Failure>;

fn ring_of(common: &Common) -> Result<Ring, Failure> {
    let order: MonomialOrder = common.order.parse().map_err(|msg| Failure { code: EXIT_USAGE, msg })?;
    Ok(RingContext::new(common.p, &common.vars, order)?)
}

fn cap_of(max_level: Option<u32>) -> LevelCap {
    max_level.map_or(LevelCap::Auto, LevelCap::Max)
}

/// Replays each level with the naive routines.
fn oracle_check(report: &ChainReport) -> Result<(), Failure> {
    let f = &report.f;
    let p = f.ring().p() as u64;
    for level in &report.levels {
        let s = level.s;
        let mismatch = |what: &str| Failure { code: EXIT_REJECTED, msg: format!("oracle mismatch at level {s}: {what}") };
        let power = oracle_pow(f, p.pow(s) - 1)?;
        if power != f.pow_ps_minus_one(s)? {
            return Err(mismatch("power"));
        }
        if oracle_recompose(&frob_decompose(&power, s)?)? != power {
            return Err(mismatch("decomposition"));
        }
        match oracle_ds_image(&power, s, DEFAULT_ENUMERATION_LIMIT) {
            Ok(image) => {
                if !image.ideal_eq(&level.ideal.bracket_power(s)?)? {
                    return Err(mismatch("operator image"));
                }
            }
            Err(Error::EnumerationLimit(..)) => {
                eprintln!("oracle: level {s} skipped, operator space too large");
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn run_chain(common: &Common, f: &str, max_level: Option<u32>, oracle: bool) -> Outcome {
    let ring = ring_of(common)?;
    let f = parse_poly(f, &ring)?;
    let chain = compute_chain(&f, cap_of(max_level))?;
    if oracle {
        oracle_check(&chain)?;
    }
    let mut report = Report::new("chain", &ring, f.to_string());
    report.chain = Some(Chain::of(&chain));
    if chain.stabilized_at.is_none() {
        eprintln!("chain did not stabilize within {} levels", chain.cap);
        return Ok((report, EXIT_CAP));
    }
    Ok((report, 0))
}

fn run_operator(common: &Common, f: &str, max_level: Option<u32>, power: Option<u32>, oracle: bool) -> Outcome {
    let ring = ring_of(common)?;
    let f = parse_poly(f, &ring)?;
    let chain = compute_chain(&f, cap_of(max_level))?;
    if oracle {
        oracle_check(&chain)?;
    }
    let mut report = Report::new("operator", &ring, f.to_string());
    report.chain = Some(Chain::of(&chain));
    if chain.stabilized_at.is_none() {
        eprintln!("chain did not stabilize within {} levels", chain.cap);
        return Ok((report, EXIT_CAP));
    }
    let delta = synthesize_delta(&chain)?;
    let verified = verify_delta(&delta.operator, &f, delta.level)?;
    report.operator = Some(Operator { normal_form: delta.operator.to_string(), level: delta.level, verified });
    if let Some(t) = power {
        let w = generator_witness(&delta, t)?;
        report.witness = Some(Witness { expr: w.to_string(), target_power: t });
    }
    Ok((report, if verified { 0 } else { EXIT_REJECTED }))
}

fn run_verify(common: &Common, f: &str, op: &str, level: u32) -> Outcome {
    let ring = ring_of(common)?;
    let f = parse_poly(f, &ring)?;
    let op = parse_operator(op, &ring)?;
    let verified = match verify_delta(&op, &f, level) {
        Ok(v) => v,
        Err(Error::LevelMismatch { op, requested }) => {
            eprintln!("operator has level {op}, above the requested level {requested}");
            false
        }
        Err(e) => return Err(e.into()),
    };
    let mut report = Report::new("verify", &ring, f.to_string());
    report.operator = Some(Operator { normal_form: op.to_string(), level, verified });
    if !verified {
        eprintln!("verification failed");
    }
    Ok((report, if verified { 0 } else { EXIT_REJECTED }))
}

fn run_root(common: &Common, g: &str, s: u32) -> Outcome {
    let ring = ring_of(common)?;
    let g = parse_poly(g, &ring)?;
    let dec = frob_decompose(&g, s)?;
    let ideal = frobenius_root_ideal(&g, s)?;
    let coords = dec
        .coords()
        .iter()
        .map(|(alpha, c)| Coord { basis: basis_text(&ring, alpha), coord: c.to_string() })
        .collect();
    let mut report = Report::new("root", &ring, g.to_string());
    report.root = Some(Root { s, coords, groebner: ideal.groebner().iter().map(|h| h.to_string()).collect() });
    Ok((report, 0))
}

fn basis_text(ring: &Ring, alpha: &ExponentVector) -> String {
    Poly::monomial(ring, alpha.clone(), 1).to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, json) = match &cli.command {
        Command::Chain { common, f, max_level, oracle } => (run_chain(common, f, *max_level, *oracle), common.json),
        Command::Operator { common, f, max_level, power, oracle } => {
            (run_operator(common, f, *max_level, *power, *oracle), common.json)
        }
        Command::Verify { common, f, op, level } => (run_verify(common, f, op, *level), common.json),
        Command::Root { common, g, s } => (run_root(common, g, *s), common.json),
    };
    match outcome {
        Ok((report, code)) => {
            let text = if json { report.to_json() } else { report.to_text() };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.msg);
            ExitCode::from(failure.code)
        }
    }
}
