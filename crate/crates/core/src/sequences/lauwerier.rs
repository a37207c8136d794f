//! Rationals ordered by denominator, then numerator, with each proper
//! fraction `c/d` immediately followed by its reciprocal `d/c`.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, ToPrimitive};

use super::require_index;
use crate::numerics::{factorize_natural, Natural, PositiveRational};
use crate::{Error, Result};

/// Largest denominator covered by the lazily grown totient table.
pub const MAX_LAUWERIER_DENOMINATOR: u64 = 1 << 22;

/// `sums[d] = phi(2) + ... + phi(d)`, with `sums[0] = sums[1] = 0`.
fn totient_sums() -> &'static RwLock<Vec<u64>> {
    static SUMS: OnceLock<RwLock<Vec<u64>>> = OnceLock::new();
    SUMS.get_or_init(|| RwLock::new(vec![0, 0]))
}

fn build_sums(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for i in 2..=limit {
        if phi[i] == i as u64 {
            for j in (i..=limit).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    let mut sums = vec![0u64; limit + 1];
    for d in 2..=limit {
        sums[d] = sums[d - 1] + phi[d];
    }
    sums
}

fn check_den(d: u64) -> Result<()> {
    if d > MAX_LAUWERIER_DENOMINATOR {
        return Err(Error::resource(format!(
            "denominator {d} exceeds the totient table cap {MAX_LAUWERIER_DENOMINATOR}"
        )));
    }
    Ok(())
}

/// Runs `f` on a table covering at least `0..=d`.
fn with_sums<T>(d: u64, f: impl FnOnce(&[u64]) -> T) -> Result<T> {
    check_den(d)?;
    {
        let sums = totient_sums().read().expect("totient lock poisoned");
        if sums.len() > d as usize {
            return Ok(f(&sums));
        }
    }
    let mut sums = totient_sums().write().expect("totient lock poisoned");
    if sums.len() <= d as usize {
        let limit = (d as usize)
            .max(sums.len() * 2)
            .min(MAX_LAUWERIER_DENOMINATOR as usize);
        *sums = build_sums(limit);
    }
    Ok(f(&sums))
}

/// Number of `x` in `1..=c` coprime to `d`, by inclusion-exclusion over the
/// distinct primes of `d`.
fn coprime_count(c: u64, primes: &[u64]) -> u64 {
    let mut total = 0i64;
    for mask in 0u32..(1 << primes.len()) {
        let mut prod = 1u64;
        for (i, &p) in primes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod = prod.saturating_mul(p);
            }
        }
        let term = (c / prod) as i64;
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total as u64
}

fn distinct_primes(d: u64) -> Result<Vec<u64>> {
    Ok(factorize_natural(&Natural::from(d))?
        .into_iter()
        .map(|(p, _)| p.to_u64().unwrap())
        .collect())
}

/// 1-based position of `r` in the listing.
pub fn lauwerier_rank(r: &PositiveRational) -> Result<Natural> {
    if r.is_one() {
        return Ok(Natural::one());
    }
    let (small, big, reciprocal) = if r.num() < r.den() {
        (r.num(), r.den(), false)
    } else {
        (r.den(), r.num(), true)
    };
    let d = big
        .to_u64()
        .ok_or_else(|| Error::resource(format!("denominator {big} is too large")))?;
    let c = small.to_u64().unwrap();
    let before = with_sums(d, |sums| sums[d as usize - 1])?;
    let index = coprime_count(c, &distinct_primes(d)?);
    let pos = Natural::from(2 * before) + Natural::from(2 * index) + u32::from(reciprocal);
    Ok(pos)
}

/// The `k`-th entry of the listing.
pub fn lauwerier_unrank(k: &Natural) -> Result<PositiveRational> {
    require_index(k)?;
    if k.is_one() {
        return Ok(PositiveRational::one());
    }
    // Entries through denominator d occupy positions 1..=1 + 2*sums[d].
    let k = k
        .to_u64()
        .ok_or_else(|| Error::resource(format!("index {k} is beyond the totient table")))?;
    let mut probe = 2u64;
    loop {
        let last = with_sums(probe, |sums| sums[probe as usize])?;
        if 1 + 2 * last >= k {
            break;
        }
        if probe == MAX_LAUWERIER_DENOMINATOR {
            return Err(Error::resource(format!(
                "index {k} is beyond the totient table"
            )));
        }
        probe = (probe * 2).min(MAX_LAUWERIER_DENOMINATOR);
    }
    let d = with_sums(probe, |sums| {
        sums[..=probe as usize].partition_point(|&s| 1 + 2 * s < k) as u64
    })?;
    let before = with_sums(d, |sums| sums[d as usize - 1])?;
    let offset = k - 1 - 2 * before;
    let index = offset.div_ceil(2);
    let primes = distinct_primes(d)?;
    // Smallest c with exactly `index` coprime residues in 1..=c.
    let (mut lo, mut hi) = (1u64, d);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if coprime_count(mid, &primes) < index {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let (c, d) = (Natural::from(lo), Natural::from(d));
    Ok(if offset % 2 == 1 {
        PositiveRational::from_coprime(c, d)
    } else {
        PositiveRational::from_coprime(d, c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, d: u64) -> PositiveRational {
        PositiveRational::from_u64(p, d).unwrap()
    }

    /// The interleaved list as printed, symbol for symbol.
    const PRINTED: [(u64, u64); 13] = [
        (1, 1),
        (1, 2),
        (2, 1),
        (1, 3),
        (3, 1),
        (2, 3),
        (3, 2),
        (1, 4),
        (4, 1),
        (3, 4),
        (4, 3),
        (1, 5),
        (5, 1),
    ];

    #[test]
    fn unrank_matches_printed_list() {
        for (i, &(p, d)) in PRINTED.iter().enumerate() {
            let got = lauwerier_unrank(&Natural::from(i as u64 + 1)).unwrap();
            assert_eq!(got, q(p, d), "position {}", i + 1);
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(lauwerier_rank(&q(1, 1)).unwrap(), Natural::from(1u32));
        assert_eq!(lauwerier_rank(&q(3, 2)).unwrap(), Natural::from(7u32));
        assert_eq!(lauwerier_rank(&q(3, 4)).unwrap(), Natural::from(10u32));
    }

    #[test]
    fn rank_inverts_unrank() {
        for k in 1..=20_000u64 {
            let r = lauwerier_unrank(&Natural::from(k)).unwrap();
            assert_eq!(lauwerier_rank(&r).unwrap(), Natural::from(k), "{r}");
        }
    }

    #[test]
    fn coprime_count_matches_gcd_scan() {
        for d in 2..200u64 {
            let primes = distinct_primes(d).unwrap();
            for c in 0..=d {
                let naive = (1..=c).filter(|&x| num_integer::gcd(x, d) == 1).count() as u64;
                assert_eq!(coprime_count(c, &primes), naive);
            }
        }
    }

    #[test]
    fn oversized_denominator_is_a_resource_error() {
        let r = q(1, MAX_LAUWERIER_DENOMINATOR + 1);
        assert!(matches!(lauwerier_rank(&r), Err(Error::Resource(_))));
    }
}
