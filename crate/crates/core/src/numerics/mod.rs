//! Exact integer and rational arithmetic shared by every scheme.

mod cfrac;
mod factor;
mod fold;
mod primes;
mod rational;

pub use cfrac::{cf_eval, cf_expand, ContinuedFraction};
pub use factor::{defactorize, factorize, factorize_natural, is_prime, SignedFactorization};
pub use fold::{fold_int, unfold_int, IntFoldCodec};
pub use primes::{nth_prime, prime_index, PrimeTable, DEFAULT_PRIME_CAP};
pub use rational::{reduce, PositiveRational, Sign, SignedRational};

/// Arbitrary-precision non-negative integer.
pub type Natural = num_bigint::BigUint;
/// Arbitrary-precision signed integer.
pub type SignedInt = num_bigint::BigInt;

use crate::{Error, Result, MAX_CODE_BITS};
use num_traits::ToPrimitive;

/// Converts a bit position to `u64`, enforcing [`MAX_CODE_BITS`].
pub(crate) fn bit_position(pos: &Natural) -> Result<u64> {
    match pos.to_u64() {
        Some(p) if p <= MAX_CODE_BITS => Ok(p),
        _ => Err(Error::resource(format!(
            "bit position {pos} exceeds the cap of {MAX_CODE_BITS}"
        ))),
    }
}

/// `base^exp` with the exponent bounded so the result stays allocatable.
pub(crate) fn checked_pow(base: &Natural, exp: &Natural) -> Result<Natural> {
    let e = exp
        .to_u32()
        .filter(|&e| (e as u64).saturating_mul(base.bits()) <= MAX_CODE_BITS)
        .ok_or_else(|| Error::resource(format!("{base}^{exp} is too large")))?;
    Ok(base.pow(e))
}
