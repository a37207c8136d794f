//! Bijections between the positive rationals and the positive integers built
//! from prime factorizations, the polynomial view of exponent vectors, and
//! continued-fraction bitmasks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numerics::{
    bit_position, cf_eval, cf_expand, checked_pow, factorize, factorize_natural, fold_int,
    nth_prime, prime_index, unfold_int, ContinuedFraction, IntFoldCodec, Natural, PositiveRational,
    SignedInt,
};
use crate::{Error, Result};

/// Folds every prime exponent of `r` through `codec` and multiplies out.
pub fn factor_fold(r: &PositiveRational, codec: IntFoldCodec) -> Result<Natural> {
    let mut out = Natural::one();
    for (p, alpha) in factorize(r)?.iter() {
        out *= checked_pow(p, &fold_int(codec, alpha))?;
    }
    Ok(out)
}

/// Inverse of [`factor_fold`]; total on the positive integers.
pub fn factor_unfold(k: &Natural, codec: IntFoldCodec) -> Result<PositiveRational> {
    if k.is_zero() {
        return Err(Error::domain("indices start at 1"));
    }
    let mut num = Natural::one();
    let mut den = Natural::one();
    for (p, beta) in factorize_natural(k)? {
        let alpha = unfold_int(codec, &Natural::from(beta));
        let power = checked_pow(&p, alpha.magnitude())?;
        match alpha.sign() {
            Sign::Plus => num *= power,
            Sign::Minus => den *= power,
            Sign::NoSign => {}
        }
    }
    PositiveRational::new(num, den)
}

/// Polynomial with integer coefficients and finite support; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: BTreeMap<u64, SignedInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Sums the given `(degree, coefficient)` terms, dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<SignedInt>,
    {
        let mut coeffs: BTreeMap<u64, SignedInt> = BTreeMap::new();
        for (d, c) in terms {
            *coeffs.entry(d).or_default() += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: u64) -> SignedInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &SignedInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: Self) -> IntegerPolynomial {
        IntegerPolynomial::from_terms(self.terms().chain(rhs.terms()).map(|(d, c)| (d, c.clone())))
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let mag = c.magnitude();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let show_mag = *d == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

fn degree_of_prime(p: &Natural) -> Result<u64> {
    let small = p
        .to_u64()
        .ok_or_else(|| Error::resource(format!("prime {p} is beyond the prime table")))?;
    let idx = prime_index(small)?.ok_or_else(|| Error::invariant(format!("{p} is not prime")))?;
    Ok(idx - 1)
}

fn prime_of_degree(d: u64) -> Result<Natural> {
    let idx = d
        .checked_add(1)
        .ok_or_else(|| Error::resource("degree overflow"))?;
    Ok(Natural::from(nth_prime(idx)?))
}

/// Exponent of the `(d+1)`-th prime becomes the coefficient of `x^d`.
pub fn to_polynomial(r: &PositiveRational) -> Result<IntegerPolynomial> {
    let mut coeffs = BTreeMap::new();
    for (p, alpha) in factorize(r)?.iter() {
        coeffs.insert(degree_of_prime(p)?, alpha.clone());
    }
    Ok(IntegerPolynomial { coeffs })
}

pub fn from_polynomial(poly: &IntegerPolynomial) -> Result<PositiveRational> {
    let mut num = Natural::one();
    let mut den = Natural::one();
    for (d, c) in poly.terms() {
        let power = checked_pow(&prime_of_degree(d)?, c.magnitude())?;
        if c.is_negative() {
            den *= power;
        } else {
            num *= power;
        }
    }
    PositiveRational::new(num, den)
}

/// `r -> Z[x] -> N[x] -> Z+`: coefficientwise fold, then evaluate the
/// natural-coefficient polynomial as a product of prime powers.
pub fn poly_route_fold(r: &PositiveRational, codec: IntFoldCodec) -> Result<Natural> {
    let folded: BTreeMap<u64, Natural> = to_polynomial(r)?
        .terms()
        .map(|(d, c)| (d, fold_int(codec, c)))
        .collect();
    let mut out = Natural::one();
    for (d, beta) in &folded {
        out *= checked_pow(&prime_of_degree(*d)?, beta)?;
    }
    Ok(out)
}

/// Inverse of [`poly_route_fold`].
pub fn poly_route_unfold(k: &Natural, codec: IntFoldCodec) -> Result<PositiveRational> {
    if k.is_zero() {
        return Err(Error::domain("indices start at 1"));
    }
    let mut terms = Vec::new();
    for (p, beta) in factorize_natural(k)? {
        terms.push((
            degree_of_prime(&p)?,
            unfold_int(codec, &Natural::from(beta)),
        ));
    }
    from_polynomial(&IntegerPolynomial::from_terms(terms))
}

/// `sum over k of 2^(a0 + ... + ak)` for the trailing-1 expansion of `r`.
pub fn cf_encode(r: &PositiveRational) -> Result<Natural> {
    let mut out = Natural::zero();
    for b in cf_expand(r).partial_sums() {
        out.set_bit(bit_position(&b)?, true);
    }
    Ok(out)
}

/// Reads the set bits `b0 < ... < bn` of `k` as partial sums of quotients.
pub fn cf_decode(k: &Natural) -> Result<PositiveRational> {
    if k.is_zero() {
        return Err(Error::domain("indices start at 1"));
    }
    let mut quotients = Vec::with_capacity(k.count_ones() as usize);
    let mut prev: Option<u64> = None;
    for pos in (0..k.bits()).filter(|&pos| k.bit(pos)) {
        quotients.push(Natural::from(pos - prev.unwrap_or(0)));
        prev = Some(pos);
    }
    Ok(cf_eval(&ContinuedFraction::new(quotients)?))
}
