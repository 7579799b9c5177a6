//! Command-line surface: counting, polynomial fitting, tables, the oracle
//! batteries, Gröbner verification, and the binomial identity grids.
//!
//! Output formats: `plain` (default, human-readable), `json` (one top-level
//! object `{command, inputs, result}`), and `csv` (RFC-4180-style with a
//! header row). Integers cross the boundary as decimal strings — counts
//! overflow 64-bit types quickly — and infinite bounds as the literal string
//! `"inf"`.
//!
//! Exit codes: 0 success, 1 mathematical verification failure, 2 usage or
//! budget error. The environment variable `HK_ENUM_BUDGET` overrides the
//! default enumeration budgets of the brute-force oracle and the
//! standard-monomial count.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::binomial;
use crate::counting::{self, Bound, CountQuery};
use crate::error::Error;
use crate::fit;
use crate::groebner;
use crate::oracles;

#[derive(Debug, Parser)]
#[command(
    name = "hkdet",
    version,
    about = "Exact Hilbert-Kunz functions of 2x2 determinantal rings",
    long_about = "Counts staircase exponent matrices exactly, recovers Hilbert-Kunz \
                  polynomials and multiplicities, and cross-checks everything against \
                  independent oracles and a Groebner-basis verifier."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count staircase exponent matrices with row/column sum bounds.
    Count {
        m: u32,
        n: u32,
        q: u64,
        /// Comma list of m row bounds, each a nonnegative integer or "inf".
        #[arg(long)]
        rows: Option<String>,
        /// Comma list of n column bounds, each a nonnegative integer or "inf".
        #[arg(long)]
        cols: Option<String>,
    },
    /// The Hilbert-Kunz polynomial in q, by exact interpolation.
    Poly { m: u32, n: u32 },
    /// The Hilbert-Kunz multiplicity (leading coefficient of the polynomial).
    Mult { m: u32, n: u32 },
    /// Hilbert-Kunz values for q = 1..q_max.
    Table { m: u32, n: u32, q_max: u64 },
    /// Sweep the brute-force and Segre oracles against the recursion.
    OracleCheck {
        max_mn: u32,
        max_q: u64,
        /// Seed for the random bound vectors of the brute battery.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Verify the predicted Gröbner basis and count standard monomials.
    GbVerify { m: u32, n: u32, q: u64 },
    /// Check the binomial summation identity grids.
    Lemmas {
        #[arg(long, default_value_t = 30)]
        max_q: u64,
        #[arg(long, default_value_t = 6)]
        max_n: u64,
    },
}

struct CommandOutput {
    command: &'static str,
    inputs: Value,
    result: Value,
    plain: String,
    csv: String,
    exit: i32,
}

/// Parses and executes a full argument vector (including argv[0]), printing
/// to stdout/stderr, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders usage errors itself; --help and --version land
            // here too, with exit code 0.
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };

    let output = match execute(cli.command) {
        Ok(output) => output,
        Err(err) => {
            eprintln!("error: {err}");
            return exit_code_for(&err);
        }
    };

    match cli.format {
        Format::Plain => println!("{}", output.plain),
        Format::Json => println!(
            "{}",
            json!({
                "command": output.command,
                "inputs": output.inputs,
                "result": output.result,
            })
        ),
        Format::Csv => println!("{}", output.csv),
    }
    output.exit
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::BudgetExceeded { .. } => 2,
        Error::InterpolationMismatch { .. } => 1,
    }
}

fn enum_budget() -> Result<u64, Error> {
    match std::env::var("HK_ENUM_BUDGET") {
        Ok(raw) => raw.parse().map_err(|_| {
            Error::InvalidArgument(format!("HK_ENUM_BUDGET must be an integer, got {raw:?}"))
        }),
        Err(_) => Ok(oracles::DEFAULT_ENUM_BUDGET),
    }
}

fn parse_bounds(raw: Option<String>, len: usize, what: &str) -> Result<Vec<Bound>, Error> {
    let Some(raw) = raw else {
        return Ok(vec![Bound::Infinite; len]);
    };
    let bounds: Result<Vec<Bound>, Error> = raw
        .split(',')
        .map(|part| Bound::from_str(part.trim()))
        .collect();
    let bounds = bounds?;
    if bounds.len() != len {
        return Err(Error::InvalidArgument(format!(
            "expected {len} {what} bounds, got {}",
            bounds.len()
        )));
    }
    Ok(bounds)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn bounds_json(bounds: &[Bound]) -> Value {
    Value::Array(
        bounds
            .iter()
            .map(|b| Value::String(b.to_string()))
            .collect(),
    )
}

fn bounds_text(bounds: &[Bound]) -> String {
    bounds
        .iter()
        .map(Bound::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn ratio_json(value: &BigRational) -> Value {
    json!({
        "numerator": value.numer().to_string(),
        "denominator": value.denom().to_string(),
    })
}

fn execute(command: Command) -> Result<CommandOutput, Error> {
    match command {
        Command::Count {
            m,
            n,
            q,
            rows,
            cols,
        } => cmd_count(m, n, q, rows, cols),
        Command::Poly { m, n } => cmd_poly(m, n),
        Command::Mult { m, n } => cmd_mult(m, n),
        Command::Table { m, n, q_max } => cmd_table(m, n, q_max),
        Command::OracleCheck {
            max_mn,
            max_q,
            seed,
        } => cmd_oracle_check(max_mn, max_q, seed),
        Command::GbVerify { m, n, q } => cmd_gb_verify(m, n, q),
        Command::Lemmas { max_q, max_n } => cmd_lemmas(max_q, max_n),
    }
}

fn cmd_count(
    m: u32,
    n: u32,
    q: u64,
    rows: Option<String>,
    cols: Option<String>,
) -> Result<CommandOutput, Error> {
    let rows = parse_bounds(rows, m as usize, "row")?;
    let cols = parse_bounds(cols, n as usize, "column")?;
    let query = CountQuery::new(m, n, q, rows, cols)?;
    let value = counting::count(&query);

    let csv = [
        csv_line(&[
            "m".into(),
            "n".into(),
            "q".into(),
            "rows".into(),
            "cols".into(),
            "count".into(),
        ]),
        csv_line(&[
            m.to_string(),
            n.to_string(),
            q.to_string(),
            bounds_text(query.rows()),
            bounds_text(query.cols()),
            value.to_string(),
        ]),
    ]
    .join("\n");

    Ok(CommandOutput {
        command: "count",
        inputs: json!({
            "m": m.to_string(),
            "n": n.to_string(),
            "q": q.to_string(),
            "rows": bounds_json(query.rows()),
            "cols": bounds_json(query.cols()),
        }),
        result: json!({ "count": value.to_string() }),
        plain: value.to_string(),
        csv,
        exit: 0,
    })
}

fn cmd_poly(m: u32, n: u32) -> Result<CommandOutput, Error> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("poly requires m, n >= 1".into()));
    }
    let poly = fit::hk_polynomial(m, n)?;
    let multiplicity = poly.coefficient((m + n - 1) as usize);

    let coeffs: Vec<Value> = (0..=(m + n - 1) as usize)
        .map(|power| ratio_json(&poly.coefficient(power)))
        .collect();

    let mut csv_lines = vec![csv_line(&[
        "power".into(),
        "numerator".into(),
        "denominator".into(),
    ])];
    for power in 0..=(m + n - 1) as usize {
        let c = poly.coefficient(power);
        csv_lines.push(csv_line(&[
            power.to_string(),
            c.numer().to_string(),
            c.denom().to_string(),
        ]));
    }

    let plain = format!(
        "HK({m},{n}) = {poly}\ncoefficients (lowest power first): {}\nmultiplicity = {multiplicity}",
        (0..=(m + n - 1) as usize)
            .map(|p| poly.coefficient(p).to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );

    Ok(CommandOutput {
        command: "poly",
        inputs: json!({ "m": m.to_string(), "n": n.to_string() }),
        result: json!({
            "degree": poly.degree().unwrap_or(0).to_string(),
            "coefficients": coeffs,
            "multiplicity": ratio_json(&multiplicity),
        }),
        plain,
        csv: csv_lines.join("\n"),
        exit: 0,
    })
}

fn cmd_mult(m: u32, n: u32) -> Result<CommandOutput, Error> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("mult requires m, n >= 1".into()));
    }
    let value = fit::multiplicity(m, n)?;
    let csv = [
        csv_line(&[
            "m".into(),
            "n".into(),
            "numerator".into(),
            "denominator".into(),
        ]),
        csv_line(&[
            m.to_string(),
            n.to_string(),
            value.numer().to_string(),
            value.denom().to_string(),
        ]),
    ]
    .join("\n");

    Ok(CommandOutput {
        command: "mult",
        inputs: json!({ "m": m.to_string(), "n": n.to_string() }),
        result: ratio_json(&value),
        plain: value.to_string(),
        csv,
        exit: 0,
    })
}

fn cmd_table(m: u32, n: u32, q_max: u64) -> Result<CommandOutput, Error> {
    if m == 0 || n == 0 || q_max == 0 {
        return Err(Error::InvalidArgument(
            "table requires m, n, q_max >= 1".into(),
        ));
    }
    let rows: Vec<(u64, String)> = (1..=q_max)
        .map(|q| (q, counting::hilbert_kunz(m, n, q).to_string()))
        .collect();

    let mut csv_lines = vec![csv_line(&["q".into(), "value".into()])];
    let mut plain_lines = Vec::new();
    let mut json_rows = Vec::new();
    for (q, value) in &rows {
        csv_lines.push(csv_line(&[q.to_string(), value.clone()]));
        plain_lines.push(format!("q = {q}: {value}"));
        json_rows.push(json!({ "q": q.to_string(), "value": value }));
    }

    Ok(CommandOutput {
        command: "table",
        inputs: json!({
            "m": m.to_string(),
            "n": n.to_string(),
            "q_max": q_max.to_string(),
        }),
        result: json!({ "rows": json_rows }),
        plain: plain_lines.join("\n"),
        csv: csv_lines.join("\n"),
        exit: 0,
    })
}

fn cmd_oracle_check(max_mn: u32, max_q: u64, seed: u64) -> Result<CommandOutput, Error> {
    let budget = enum_budget()?;
    let brute = oracles::brute_battery(max_mn, max_q, seed, budget)?;
    let segre = oracles::segre_battery(max_mn, max_q);

    let batteries = [
        ("brute-vs-recursion", &brute),
        ("segre-vs-recursion", &segre),
    ];
    let pass = brute.pass() && segre.pass();

    let mut plain_lines = Vec::new();
    let mut json_batteries = Vec::new();
    let mut csv_lines = vec![csv_line(&[
        "battery".into(),
        "cases".into(),
        "pass".into(),
        "mismatch".into(),
    ])];
    for (name, outcome) in batteries {
        let mismatch_text = outcome.mismatch.as_ref().map(|mismatch| {
            format!(
                "query m={} n={} q={} rows={} cols={}: oracle {} vs recursion {}",
                mismatch.query.m(),
                mismatch.query.n(),
                mismatch.query.q(),
                bounds_text(mismatch.query.rows()),
                bounds_text(mismatch.query.cols()),
                mismatch.oracle,
                mismatch.recursion,
            )
        });
        plain_lines.push(format!(
            "{name}: {} ({} cases){}",
            if outcome.pass() { "PASS" } else { "FAIL" },
            outcome.cases,
            mismatch_text
                .as_deref()
                .map(|t| format!(" first mismatch: {t}"))
                .unwrap_or_default(),
        ));
        json_batteries.push(json!({
            "name": name,
            "cases": outcome.cases.to_string(),
            "pass": outcome.pass(),
            "mismatch": mismatch_text.clone().map(Value::String).unwrap_or(Value::Null),
        }));
        csv_lines.push(csv_line(&[
            name.to_string(),
            outcome.cases.to_string(),
            outcome.pass().to_string(),
            mismatch_text.unwrap_or_default(),
        ]));
    }

    Ok(CommandOutput {
        command: "oracle-check",
        inputs: json!({
            "max_mn": max_mn.to_string(),
            "max_q": max_q.to_string(),
            "seed": seed.to_string(),
        }),
        result: json!({ "batteries": json_batteries, "pass": pass }),
        plain: plain_lines.join("\n"),
        csv: csv_lines.join("\n"),
        exit: i32::from(!pass),
    })
}

fn cmd_gb_verify(m: u32, n: u32, q: u64) -> Result<CommandOutput, Error> {
    if m == 0 || n == 0 || q == 0 {
        return Err(Error::InvalidArgument(
            "gb-verify requires m, n, q >= 1".into(),
        ));
    }
    let budget = enum_budget()?;
    // The standard-monomial enumeration is the tightest budget; check it
    // before building anything.
    let states = (q as u128).checked_pow(m * n).unwrap_or(u128::MAX);
    if states > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: states,
            budget,
        });
    }

    let report = groebner::verify_groebner(m, n, q)?;
    let standard = groebner::standard_monomial_count_with_budget(
        m,
        n,
        q,
        groebner::DEFAULT_STAIR_BUDGET,
        budget,
    )?;
    let recursion = counting::hilbert_kunz(m, n, q);
    let matches = standard == recursion;
    let pass = report.pass() && matches;

    let plain = format!(
        "basis: {} stairs + {} minors\nS-pairs: {} total, {} reduced, {} coprime skipped, {} monomial pairs\nverification: {}\nminimal: {}, reduced: {}\nstandard monomials: {standard}\nhilbert-kunz: {recursion}\nmatch: {matches}{}",
        report.stair_count,
        report.minor_count,
        report.pairs_total,
        report.pairs_reduced,
        report.pairs_coprime,
        report.pairs_monomial,
        if report.pass() { "PASS" } else { "FAIL" },
        report.minimal,
        report.reduced,
        report
            .failures
            .first()
            .map(|f| format!("\nfirst failure: {f}"))
            .unwrap_or_default(),
    );

    let csv = [
        csv_line(&[
            "m".into(),
            "n".into(),
            "q".into(),
            "stairs".into(),
            "minors".into(),
            "pairs".into(),
            "pass".into(),
            "standard_monomials".into(),
            "hilbert_kunz".into(),
            "match".into(),
        ]),
        csv_line(&[
            m.to_string(),
            n.to_string(),
            q.to_string(),
            report.stair_count.to_string(),
            report.minor_count.to_string(),
            report.pairs_total.to_string(),
            report.pass().to_string(),
            standard.to_string(),
            recursion.to_string(),
            matches.to_string(),
        ]),
    ]
    .join("\n");

    Ok(CommandOutput {
        command: "gb-verify",
        inputs: json!({
            "m": m.to_string(),
            "n": n.to_string(),
            "q": q.to_string(),
        }),
        result: json!({
            "stairs": report.stair_count.to_string(),
            "minors": report.minor_count.to_string(),
            "pairs": report.pairs_total.to_string(),
            "pairs_reduced": report.pairs_reduced.to_string(),
            "pass": report.pass(),
            "minimal": report.minimal,
            "reduced": report.reduced,
            "first_failure": report.failures.first().cloned().map(Value::String).unwrap_or(Value::Null),
            "standard_monomials": standard.to_string(),
            "hilbert_kunz": recursion.to_string(),
            "match": matches,
        }),
        plain,
        csv,
        exit: i32::from(!pass),
    })
}

fn cmd_lemmas(max_q: u64, max_n: u64) -> Result<CommandOutput, Error> {
    if max_q == 0 || max_n == 0 {
        return Err(Error::InvalidArgument(
            "lemmas requires max_q, max_n >= 1".into(),
        ));
    }
    let report = binomial::identity_grid(max_q, max_n);
    let pass = report.iter().all(|(_, outcome)| outcome.pass());

    let mut plain_lines = Vec::new();
    let mut json_checks = Vec::new();
    let mut csv_lines = vec![csv_line(&[
        "check".into(),
        "cases".into(),
        "pass".into(),
        "first_failure".into(),
    ])];
    for (name, outcome) in &report {
        plain_lines.push(format!(
            "{name}: {} ({} cases){}",
            if outcome.pass() { "PASS" } else { "FAIL" },
            outcome.cases,
            outcome
                .first_failure
                .as_deref()
                .map(|f| format!(" first failure: {f}"))
                .unwrap_or_default(),
        ));
        json_checks.push(json!({
            "name": name,
            "cases": outcome.cases.to_string(),
            "pass": outcome.pass(),
            "first_failure": outcome.first_failure.clone().map(Value::String).unwrap_or(Value::Null),
        }));
        csv_lines.push(csv_line(&[
            name.to_string(),
            outcome.cases.to_string(),
            outcome.pass().to_string(),
            outcome.first_failure.clone().unwrap_or_default(),
        ]));
    }

    Ok(CommandOutput {
        command: "lemmas",
        inputs: json!({
            "max_q": max_q.to_string(),
            "max_n": max_n.to_string(),
        }),
        result: json!({ "checks": json_checks, "pass": pass }),
        plain: plain_lines.join("\n"),
        csv: csv_lines.join("\n"),
        exit: i32::from(!pass),
    })
}
