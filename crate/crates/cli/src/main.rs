//! `ratcount`: list, rank and check enumerations of the rationals.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use ratcount::numerics::{cf_expand, Natural, PositiveRational};
use ratcount::pairings::{decode_pair, encode_pair, LatticePair, PairingScheme};
use ratcount::registry::{compose_permutation, schemes, verify_prefix_with, VerifyOptions};
use ratcount::sequences::{engel_expand, hyperbinary};
use ratcount::{get_scheme, Error, MapKind, SchemeDescriptor};

use output::{Format, Table};

#[derive(Parser)]
#[command(
    name = "ratcount",
    version,
    about = "Enumerations of the positive rationals"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Accepted for compatibility; every command is deterministic.
    #[arg(long, global = true)]
    seed_free: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the values at positions start, start+1, ...
    List {
        scheme: String,
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        start: u64,
    },
    /// Position of a value.
    Rank { scheme: String, value: String },
    /// Value at a position.
    Unrank { scheme: String, index: Natural },
    /// The permutation rank_b(unrank_a(k)) for k = 1..prefix.
    Compare {
        a: String,
        b: String,
        #[arg(long, default_value_t = 10)]
        prefix: u64,
    },
    /// Check bijectivity on the first indices.
    Verify {
        scheme: String,
        #[arg(long, default_value_t = 10_000)]
        prefix: u64,
        #[arg(long)]
        parallel: bool,
        /// Report every failure, not just the first.
        #[arg(long)]
        all_failures: bool,
    },
    /// Catalog of registered schemes.
    Schemes,
    /// Continued-fraction quotients, closing with 1.
    Cf { value: PositiveRational },
    /// Engel denominators of a rational in (0, 1).
    Engel { value: PositiveRational },
    /// Number of hyperbinary representations of n.
    Hyperbinary { n: Natural },
    /// Encode a pair of positive integers.
    Pair { scheme: String, n: u64, m: u64 },
    /// Decode a pairing code.
    Unpair { scheme: String, code: Natural },
}

enum Failure {
    /// Stdout was closed by the reader; nothing left to report.
    Closed,
    Usage(String),
    Domain(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFound(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn pairing_scheme(id: &str) -> Result<PairingScheme, Failure> {
    let desc = get_scheme(id)?;
    PairingScheme::from_id(desc.id)
        .ok_or_else(|| Failure::Domain(format!("{id} is not a pairing function")))
}

fn natural_json(k: &Natural) -> serde_json::Value {
    match u64::try_from(k) {
        Ok(small) => json!(small),
        Err(_) => json!(k.to_string()),
    }
}

fn list(format: Format, desc: &SchemeDescriptor, start: u64, count: u64) -> Result<(), Failure> {
    if start == 0 {
        return Err(Failure::Domain("positions start at 1".into()));
    }
    let mut table = Table::new(format, &["index", "value"])?;
    for k in start..start.saturating_add(count) {
        match desc.unrank(&Natural::from(k)) {
            Ok(v) => table.row(
                &[k.to_string(), v.to_string()],
                json!({"scheme": desc.id, "index": k, "value": v.to_string()}),
            )?,
            Err(Error::NotInImage { .. }) if desc.kind == MapKind::Injective => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(table.finish()?)
}

fn verify(format: Format, id: &str, prefix: u64, opts: VerifyOptions) -> Result<(), Failure> {
    let report = verify_prefix_with(get_scheme(id)?, prefix, opts)?;
    let failures: Vec<_> = report
        .failures
        .iter()
        .map(|f| json!({"index": f.index, "check": f.check, "detail": f.detail}))
        .collect();
    let summary = json!({
        "scheme": report.scheme,
        "prefix": report.prefix,
        "checks": report.checks,
        "image_gaps": report.image_gaps,
        "passed": report.passed(),
        "failures": failures,
    });
    match format {
        Format::Plain => {
            output::line(format_args!("scheme: {}", report.scheme))?;
            output::line(format_args!("prefix: {}", report.prefix))?;
            output::line(format_args!("checks: {}", report.checks.join(", ")))?;
            output::line(format_args!("image gaps: {}", report.image_gaps))?;
            for f in &report.failures {
                output::line(format_args!(
                    "failure at {}: {}: {}",
                    f.index, f.check, f.detail
                ))?;
            }
            output::line(format_args!(
                "result: {}",
                if report.passed() { "pass" } else { "fail" }
            ))?;
            output::line(format_args!("{summary}"))?;
        }
        Format::Csv => {
            let mut table = Table::new(
                format,
                &["scheme", "prefix", "passed", "index", "check", "detail"],
            )?;
            let head = [
                report.scheme.clone(),
                report.prefix.to_string(),
                report.passed().to_string(),
            ];
            if report.failures.is_empty() {
                table.row(
                    &[&head[..], &[String::new(), String::new(), String::new()]].concat(),
                    json!(null),
                )?;
            }
            for f in &report.failures {
                let tail = [f.index.to_string(), f.check.to_string(), f.detail.clone()];
                table.row(&[&head[..], &tail[..]].concat(), json!(null))?;
            }
            table.finish()?;
        }
        Format::Jsonl => output::line(format_args!("{summary}"))?,
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::List {
            scheme,
            count,
            start,
        } => list(format, get_scheme(&scheme)?, start, count),
        Command::Rank { scheme, value } => {
            let desc = get_scheme(&scheme)?;
            let v = desc.parse_value(&value)?;
            let k = desc.rank(&v)?;
            output::single(
                format,
                &["value", "index"],
                &[v.to_string(), k.to_string()],
                json!({"scheme": desc.id, "value": v.to_string(), "index": natural_json(&k)}),
            )
        }
        Command::Unrank { scheme, index } => {
            let desc = get_scheme(&scheme)?;
            let v = desc.unrank(&index)?;
            output::single(
                format,
                &["index", "value"],
                &[index.to_string(), v.to_string()],
                json!({"scheme": desc.id, "index": natural_json(&index), "value": v.to_string()}),
            )
        }
        Command::Compare { a, b, prefix } => {
            let (a, b) = (get_scheme(&a)?, get_scheme(&b)?);
            // Surface direction errors before printing a header.
            compose_permutation(a.id, b.id, &Natural::from(1u32))?;
            let mut table = Table::new(format, &["index", "value", "rank"])?;
            for k in 1..=prefix {
                let idx = Natural::from(k);
                let v = a.unrank(&idx)?;
                let j = b.rank(&v)?;
                table.row(
                    &[k.to_string(), v.to_string(), j.to_string()],
                    json!({"scheme": format!("{}->{}", a.id, b.id), "index": k, "value": v.to_string(), "rank": natural_json(&j)}),
                )?;
            }
            Ok(table.finish()?)
        }
        Command::Verify {
            scheme,
            prefix,
            parallel,
            all_failures,
        } => verify(
            format,
            &scheme,
            prefix,
            VerifyOptions {
                parallel,
                all_failures,
            },
        ),
        Command::Schemes => {
            let mut table = Table::new(
                format,
                &["id", "domain", "kind", "rank", "unrank", "summary"],
            )?;
            for s in schemes() {
                table.row(
                    &[
                        s.id.to_string(),
                        s.domain.to_string(),
                        s.kind.to_string(),
                        s.has_rank.to_string(),
                        s.has_unrank.to_string(),
                        s.summary.to_string(),
                    ],
                    json!({
                        "id": s.id,
                        "domain": s.domain.to_string(),
                        "kind": s.kind.to_string(),
                        "rank": s.has_rank,
                        "unrank": s.has_unrank,
                        "summary": s.summary,
                    }),
                )?;
            }
            Ok(table.finish()?)
        }
        Command::Cf { value } => {
            let cf = cf_expand(&value);
            let terms: Vec<_> = cf.quotients().iter().map(natural_json).collect();
            output::single(
                format,
                &["value", "quotients"],
                &[value.to_string(), cf.to_string()],
                json!({"value": value.to_string(), "quotients": terms}),
            )
        }
        Command::Engel { value } => {
            let e = engel_expand(&value)?;
            let terms: Vec<_> = e.denoms().iter().map(natural_json).collect();
            output::single(
                format,
                &["value", "denominators"],
                &[value.to_string(), e.to_string()],
                json!({"value": value.to_string(), "denominators": terms}),
            )
        }
        Command::Hyperbinary { n } => {
            let b = hyperbinary(&n);
            output::single(
                format,
                &["n", "count"],
                &[n.to_string(), b.to_string()],
                json!({"n": natural_json(&n), "count": natural_json(&b)}),
            )
        }
        Command::Pair { scheme, n, m } => {
            let s = pairing_scheme(&scheme)?;
            let pair = LatticePair::new(n, m)?;
            let code = encode_pair(s, pair)?;
            output::single(
                format,
                &["pair", "code"],
                &[pair.to_string(), code.to_string()],
                json!({"scheme": s.id(), "pair": [n, m], "code": natural_json(&code)}),
            )
        }
        Command::Unpair { scheme, code } => {
            let s = pairing_scheme(&scheme)?;
            let pair = decode_pair(s, &code)?;
            output::single(
                format,
                &["code", "pair"],
                &[code.to_string(), pair.to_string()],
                json!({"scheme": s.id(), "code": natural_json(&code), "pair": [pair.n, pair.m]}),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
