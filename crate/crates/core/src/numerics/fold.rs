use std::fmt;
use std::str::FromStr;

use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Natural, SignedInt};
use crate::Error;

/// A bijection from the integers onto the naturals fixing zero.
///
/// Applied to every prime exponent, such a codec turns the factorization of a
/// positive rational into the factorization of a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntFoldCodec {
    /// `a -> 2a` for `a >= 0`, `a -> -2a - 1` for `a < 0`.
    SignFold,
    /// Base -2 digits reread in base 2.
    Negabinary,
}

impl IntFoldCodec {
    pub const ALL: [IntFoldCodec; 2] = [IntFoldCodec::SignFold, IntFoldCodec::Negabinary];

    pub fn name(self) -> &'static str {
        match self {
            IntFoldCodec::SignFold => "sign-fold",
            IntFoldCodec::Negabinary => "negabinary",
        }
    }
}

impl fmt::Display for IntFoldCodec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntFoldCodec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sign-fold" | "signfold" => Ok(IntFoldCodec::SignFold),
            "negabinary" => Ok(IntFoldCodec::Negabinary),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

fn negabinary_digits(alpha: &SignedInt) -> Natural {
    let two = SignedInt::from(2);
    let minus_two = SignedInt::from(-2);
    let mut rest = alpha.clone();
    let mut out = Natural::zero();
    let mut pos = 0u64;
    while !rest.is_zero() {
        // remainder in {0, 1}
        let digit = rest.mod_floor(&two);
        if digit.is_one() {
            out.set_bit(pos, true);
        }
        rest = (rest - digit) / &minus_two;
        pos += 1;
    }
    out
}

fn negabinary_value(beta: &Natural) -> SignedInt {
    let mut even = Natural::zero();
    let mut odd = Natural::zero();
    for pos in 0..beta.bits() {
        if beta.bit(pos) {
            let target = if pos % 2 == 0 { &mut even } else { &mut odd };
            target.set_bit(pos, true);
        }
    }
    SignedInt::from(even) - SignedInt::from(odd)
}

/// Maps an integer exponent to a natural one.
pub fn fold_int(codec: IntFoldCodec, alpha: &SignedInt) -> Natural {
    match codec {
        IntFoldCodec::SignFold => {
            let m = alpha.magnitude();
            match alpha.sign() {
                Sign::Minus => (m << 1u32) - 1u32,
                _ => m << 1u32,
            }
        }
        IntFoldCodec::Negabinary => negabinary_digits(alpha),
    }
}

/// Inverse of [`fold_int`].
pub fn unfold_int(codec: IntFoldCodec, beta: &Natural) -> SignedInt {
    match codec {
        IntFoldCodec::SignFold => {
            let half = SignedInt::from((beta + 1u32) >> 1u32);
            if beta.bit(0) {
                -half
            } else {
                half
            }
        }
        IntFoldCodec::Negabinary => negabinary_value(beta),
    }
}
