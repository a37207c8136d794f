//! Rationals written as `[-]a/b` and read as base-12 numerals, with `/` as
//! the digit 10 and `-` as the digit 11.

use num_traits::{ToPrimitive, Zero};

use crate::numerics::{Natural, PositiveRational, Sign, SignedRational};
use crate::{Error, Result};

const SLASH: u8 = 10;
const MINUS: u8 = 11;

fn symbols(q: &SignedRational) -> Vec<u8> {
    let (num, den) = q.parts();
    let mut out = Vec::new();
    if q.sign() == Sign::Negative {
        out.push(MINUS);
    }
    out.extend(num.to_str_radix(10).bytes().map(|b| b - b'0'));
    out.push(SLASH);
    out.extend(den.to_str_radix(10).bytes().map(|b| b - b'0'));
    out
}

/// Reads the canonical string of `q` as a base-12 number.
pub fn ginsberg_encode(q: &SignedRational) -> Natural {
    Natural::from_radix_be(&symbols(q), 12).expect("symbols are base-12 digits")
}

fn decimal(digits: &[u8]) -> Option<Natural> {
    if digits.is_empty() || digits.iter().any(|&d| d > 9) {
        return None;
    }
    Natural::from_radix_be(digits, 10)
}

/// Inverse of [`ginsberg_encode`] on its image.
pub fn ginsberg_decode(k: &Natural) -> Result<SignedRational> {
    let missing = || Error::not_in_image("ginsberg", k);
    if k.is_zero() {
        return Err(missing());
    }
    let mut digits = k.to_radix_be(12);
    // A numeral cannot carry the leading 0 of "0/1".
    if digits.first() == Some(&SLASH) {
        digits.insert(0, 0);
    }
    let (negative, body) = match digits.split_first() {
        Some((&MINUS, rest)) => (true, rest),
        _ => (false, &digits[..]),
    };
    let slash = body.iter().position(|&d| d == SLASH).ok_or_else(missing)?;
    let (num_digits, den_digits) = (&body[..slash], &body[slash + 1..]);
    let num = decimal(num_digits).ok_or_else(missing)?;
    let den = decimal(den_digits).ok_or_else(missing)?;
    if den_digits[0] == 0 || (num_digits[0] == 0 && num_digits.len() > 1) {
        return Err(missing());
    }
    let value = if num.is_zero() {
        if negative || den.to_u64() != Some(1) {
            return Err(missing());
        }
        SignedRational::zero()
    } else {
        let r = PositiveRational::try_coprime(num, den).map_err(|_| missing())?;
        if negative {
            SignedRational::negative(r)
        } else {
            SignedRational::positive(r)
        }
    };
    debug_assert_eq!(&ginsberg_encode(&value), k);
    Ok(value)
}
