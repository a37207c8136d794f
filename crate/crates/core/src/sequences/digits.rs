use num_traits::{One, ToPrimitive};

use super::require_index;
use crate::numerics::{factorize_natural, prime_index, Natural, PositiveRational};
use crate::{Error, Result};

/// Longest preimage string [`grant_priest_preimage`] will build.
const MAX_PREIMAGE_DIGITS: u64 = 1 << 24;

/// `(k+1)/(m+1)` where `k` and `m` count the 4s and 7s in the decimal digits
/// of `x`.
pub fn grant_priest(x: &Natural) -> Result<PositiveRational> {
    require_index(x)?;
    let digits = x.to_str_radix(10);
    let fours = digits.bytes().filter(|&b| b == b'4').count() as u64;
    let sevens = digits.bytes().filter(|&b| b == b'7').count() as u64;
    PositiveRational::from_u64(fours + 1, sevens + 1)
}

/// A witness for surjectivity: `p-1` fours followed by `q-1` sevens, or `1`
/// for `1/1`.
pub fn grant_priest_preimage(r: &PositiveRational) -> Result<Natural> {
    if r.is_one() {
        return Ok(Natural::one());
    }
    let count = |x: &Natural| {
        (x - 1u32)
            .to_u64()
            .filter(|&c| c <= MAX_PREIMAGE_DIGITS)
            .ok_or_else(|| Error::resource(format!("{r} needs too many digits")))
    };
    let (fours, sevens) = (count(r.num())?, count(r.den())?);
    if fours + sevens > MAX_PREIMAGE_DIGITS {
        return Err(Error::resource(format!("{r} needs too many digits")));
    }
    let s = "4".repeat(fours as usize) + &"7".repeat(sevens as usize);
    Ok(s.parse().expect("digit string"))
}

/// `p(m)^n -> n/m` on prime powers (primes indexed increasingly from
/// `p(1) = 2`); every other positive integer maps to `1/1`.
pub fn prime_power_surjection(k: &Natural) -> Result<PositiveRational> {
    require_index(k)?;
    let factors = factorize_natural(k)?;
    let [(p, n)] = factors.as_slice() else {
        return Ok(PositiveRational::one());
    };
    let p = p
        .to_u64()
        .ok_or_else(|| Error::resource(format!("prime {p} is beyond the prime table")))?;
    let m = prime_index(p)?.expect("factorization yields primes");
    PositiveRational::from_u64(*n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, d: u64) -> PositiveRational {
        PositiveRational::from_u64(p, d).unwrap()
    }

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn grant_priest_examples() {
        assert_eq!(grant_priest(&n(1)).unwrap(), q(1, 1));
        assert_eq!(grant_priest(&n(474)).unwrap(), q(3, 2));
        assert_eq!(grant_priest(&n(77)).unwrap(), q(1, 3));
        assert_eq!(grant_priest(&n(4477)).unwrap(), q(1, 1));
    }

    #[test]
    fn preimage_examples() {
        assert_eq!(grant_priest_preimage(&q(1, 1)).unwrap(), n(1));
        assert_eq!(grant_priest_preimage(&q(3, 2)).unwrap(), n(447));
        assert_eq!(grant_priest_preimage(&q(1, 3)).unwrap(), n(77));
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power_surjection(&n(27)).unwrap(), q(3, 2));
        assert_eq!(prime_power_surjection(&n(32)).unwrap(), q(5, 1));
        assert_eq!(prime_power_surjection(&n(6)).unwrap(), q(1, 1));
        assert_eq!(prime_power_surjection(&n(1)).unwrap(), q(1, 1));
    }

    #[test]
    fn prime_powers_cover_small_rationals() {
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                let p = crate::numerics::nth_prime(b).unwrap();
                let k = Natural::from(p).pow(a as u32);
                assert_eq!(prime_power_surjection(&k).unwrap(), q(a, b));
            }
        }
    }
}
