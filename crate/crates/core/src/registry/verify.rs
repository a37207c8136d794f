use std::collections::HashMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{get_scheme, MapKind, SchemeDescriptor, SchemeId, Value};
use crate::numerics::Natural;
use crate::pairings::{encode_pair, LatticePair, PairingScheme};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Split the index range across the rayon pool.
    pub parallel: bool,
    /// Keep every failure instead of only the lowest-indexed one.
    pub all_failures: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: u64,
    pub check: &'static str,
    pub detail: String,
}

/// Outcome of checking a scheme on the indices `1..=prefix`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub scheme: String,
    pub prefix: u64,
    pub checks: Vec<&'static str>,
    /// Indices with no preimage; only tolerated for injective schemes.
    pub image_gaps: u64,
    /// Sorted by index.
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

pub const CHECK_UNRANK: &str = "unrank-defined";
pub const CHECK_DISTINCT: &str = "duplicate-free";
pub const CHECK_ROUND_TRIP: &str = "rank-inverts-unrank";
pub const CHECK_IMAGE: &str = "image-prefix";

struct Probe {
    value: Result<Value>,
    rank: Option<Result<Natural>>,
}

fn probe(scheme: &SchemeDescriptor, k: u64) -> Probe {
    let value = scheme.unrank(&Natural::from(k));
    let rank = match (&value, scheme.has_rank) {
        (Ok(v), true) => Some(scheme.rank(v)),
        _ => None,
    };
    Probe { value, rank }
}

/// Checks `id` on `1..=prefix` with default options.
pub fn verify_prefix(id: &str, prefix: u64) -> Result<VerificationReport> {
    verify_prefix_with(get_scheme(id)?, prefix, VerifyOptions::default())
}

/// Checks, for every `k` in `1..=prefix`: unrank is defined (gaps allowed for
/// injective schemes), values are distinct (unless surjective), and
/// `rank(unrank(k)) == k` where rank exists. Bijective pairings additionally
/// have their image prefix enumerated from the pair side.
///
/// The report does not depend on `opts.parallel`.
pub fn verify_prefix_with(
    scheme: &SchemeDescriptor,
    prefix: u64,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    if prefix == 0 {
        return Err(Error::domain("prefix length must be at least 1"));
    }
    let probes: Vec<Probe> = if opts.parallel {
        (1..=prefix)
            .into_par_iter()
            .map(|k| probe(scheme, k))
            .collect()
    } else {
        (1..=prefix).map(|k| probe(scheme, k)).collect()
    };

    let mut checks = vec![CHECK_UNRANK];
    let check_distinct = scheme.kind != MapKind::Surjective;
    if check_distinct {
        checks.push(CHECK_DISTINCT);
    }
    if scheme.has_rank {
        checks.push(CHECK_ROUND_TRIP);
    }

    let mut failures = Vec::new();
    let mut image_gaps = 0;
    let mut seen: HashMap<Value, u64> = HashMap::with_capacity(probes.len());
    for (k, p) in (1u64..).zip(probes) {
        let value = match p.value {
            Ok(v) => v,
            Err(Error::NotInImage { .. }) if scheme.kind == MapKind::Injective => {
                image_gaps += 1;
                continue;
            }
            Err(e) => {
                failures.push(Failure {
                    index: k,
                    check: CHECK_UNRANK,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        match p.rank {
            Some(Ok(j)) if j == Natural::from(k) => {}
            Some(Ok(j)) => failures.push(Failure {
                index: k,
                check: CHECK_ROUND_TRIP,
                detail: format!("unrank gives {value}, which ranks at {j}"),
            }),
            Some(Err(e)) => failures.push(Failure {
                index: k,
                check: CHECK_ROUND_TRIP,
                detail: format!("rank({value}) failed: {e}"),
            }),
            None => {}
        }
        if check_distinct {
            if let Some(first) = seen.get(&value) {
                failures.push(Failure {
                    index: k,
                    check: CHECK_DISTINCT,
                    detail: format!("{value} already listed at {first}"),
                });
            } else {
                seen.insert(value, k);
            }
        }
    }

    if let SchemeId::Pairing(p) = scheme.scheme {
        if scheme.kind == MapKind::Bijective {
            checks.push(CHECK_IMAGE);
            failures.extend(image_prefix_failures(p, prefix)?);
        }
    }

    failures.sort_by_key(|f| f.index);
    if !opts.all_failures {
        failures.truncate(1);
    }
    Ok(VerificationReport {
        scheme: scheme.id.to_string(),
        prefix,
        checks,
        image_gaps,
        failures,
    })
}

fn small_code(scheme: PairingScheme, n: u64, m: u64) -> Result<Option<u64>> {
    Ok(encode_pair(scheme, LatticePair { n, m })?.to_u64())
}

/// Enumerates every pair whose code is at most `limit` and checks the codes
/// hit `1..=limit` exactly once each. Relies on the three bijective codes
/// increasing in `m` for fixed `n`, and in `n` along `m = 1`.
pub(crate) fn image_prefix_failures(scheme: PairingScheme, limit: u64) -> Result<Vec<Failure>> {
    let mut hits: Vec<Option<LatticePair>> = vec![None; limit as usize + 1];
    let mut failures = Vec::new();
    let within = |c: Option<u64>| c.filter(|&c| c <= limit);
    let mut n = 1;
    while within(small_code(scheme, n, 1)?).is_some() {
        let mut m = 1;
        while let Some(code) = within(small_code(scheme, n, m)?) {
            let pair = LatticePair { n, m };
            match hits[code as usize] {
                Some(prev) => failures.push(Failure {
                    index: code,
                    check: CHECK_IMAGE,
                    detail: format!("{prev} and {pair} share code {code}"),
                }),
                None => hits[code as usize] = Some(pair),
            }
            m += 1;
        }
        n += 1;
    }
    for (code, hit) in hits.iter().enumerate().skip(1) {
        if hit.is_none() {
            failures.push(Failure {
                index: code as u64,
                check: CHECK_IMAGE,
                detail: format!("no pair encodes to {code}"),
            });
        }
    }
    Ok(failures)
}
