use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::Natural;
use crate::{Error, Result};

/// A positive rational number kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositiveRational {
    num: Natural,
    den: Natural,
}

/// Reduces `p/q` to lowest terms.
pub fn reduce(p: &Natural, q: &Natural) -> Result<PositiveRational> {
    PositiveRational::new(p.clone(), q.clone())
}

impl PositiveRational {
    pub fn new(num: Natural, den: Natural) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::domain(format!(
                "{num}/{den} is not a positive rational"
            )));
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Ok(Self { num, den })
        } else {
            Ok(Self {
                num: num / &g,
                den: den / g,
            })
        }
    }

    /// Builds `num/den` from parts already known to be coprime and positive.
    pub(crate) fn from_coprime(num: Natural, den: Natural) -> Self {
        debug_assert!(!num.is_zero() && !den.is_zero());
        debug_assert!(num.gcd(&den).is_one(), "{num}/{den} not reduced");
        Self { num, den }
    }

    /// Like [`PositiveRational::new`], but rejects a pair with a common factor
    /// instead of reducing it.
    pub fn try_coprime(num: Natural, den: Natural) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::domain(format!(
                "{num}/{den} is not a positive rational"
            )));
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::invariant(format!("{num}/{den} is not reduced")));
        }
        Ok(Self { num, den })
    }

    pub fn from_u64(num: u64, den: u64) -> Result<Self> {
        Self::new(Natural::from(num), Natural::from(den))
    }

    pub fn integer(n: Natural) -> Result<Self> {
        Self::new(n, Natural::one())
    }

    pub fn one() -> Self {
        Self {
            num: Natural::one(),
            den: Natural::one(),
        }
    }

    pub fn num(&self) -> &Natural {
        &self.num
    }

    pub fn den(&self) -> &Natural {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Self {
        Self {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// `self - other`, or `None` unless the difference is positive.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        if lhs <= rhs {
            return None;
        }
        Self::new(lhs - rhs, &self.den * &other.den).ok()
    }

    /// `self + n` for a natural `n`; stays reduced without a gcd.
    pub fn add_natural(&self, n: &Natural) -> Self {
        Self {
            num: &self.num + n * &self.den,
            den: self.den.clone(),
        }
    }

    pub fn into_parts(self) -> (Natural, Natural) {
        (self.num, self.den)
    }
}

impl Ord for PositiveRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for PositiveRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &PositiveRational {
    type Output = PositiveRational;

    fn add(self, rhs: Self) -> PositiveRational {
        PositiveRational::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("sum of positive rationals is positive")
    }
}

impl Mul for &PositiveRational {
    type Output = PositiveRational;

    fn mul(self, rhs: Self) -> PositiveRational {
        PositiveRational::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of positive rationals is positive")
    }
}

impl Div for &PositiveRational {
    type Output = PositiveRational;

    fn div(self, rhs: Self) -> PositiveRational {
        PositiveRational::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("quotient of positive rationals is positive")
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn parse_natural(s: &str, whole: &str) -> Result<Natural> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(whole.to_string()));
    }
    s.parse().map_err(|_| Error::Parse(whole.to_string()))
}

/// Parses `p/q` or a bare integer `p`. Non-reduced input is reduced; zero is
/// rejected as a domain error.
impl FromStr for PositiveRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (parse_natural(p, s)?, parse_natural(q, s)?),
            None => (parse_natural(s, s)?, Natural::one()),
        };
        Self::new(p, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element of the full rational field; zero carries no magnitude.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedRational {
    sign: Sign,
    magnitude: Option<PositiveRational>,
}

impl SignedRational {
    pub fn zero() -> Self {
        Self {
            sign: Sign::Zero,
            magnitude: None,
        }
    }

    pub fn positive(r: PositiveRational) -> Self {
        Self {
            sign: Sign::Positive,
            magnitude: Some(r),
        }
    }

    pub fn negative(r: PositiveRational) -> Self {
        Self {
            sign: Sign::Negative,
            magnitude: Some(r),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> Option<&PositiveRational> {
        self.magnitude.as_ref()
    }

    /// Numerator magnitude and denominator; zero is `(0, 1)`.
    pub fn parts(&self) -> (Natural, Natural) {
        match &self.magnitude {
            Some(r) => (r.num().clone(), r.den().clone()),
            None => (Natural::zero(), Natural::one()),
        }
    }
}

impl From<PositiveRational> for SignedRational {
    fn from(r: PositiveRational) -> Self {
        Self::positive(r)
    }
}

impl fmt::Display for SignedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.sign, &self.magnitude) {
            (Sign::Negative, Some(r)) => write!(f, "-{r}"),
            (_, Some(r)) => write!(f, "{r}"),
            (_, None) => f.write_str("0/1"),
        }
    }
}

impl FromStr for SignedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (parse_natural(p, s)?, parse_natural(q, s)?),
            None => (parse_natural(body, s)?, Natural::one()),
        };
        if q.is_zero() {
            return Err(Error::domain(format!("{s} has a zero denominator")));
        }
        if p.is_zero() {
            return Ok(Self::zero());
        }
        let r = PositiveRational::new(p, q)?;
        Ok(if negative {
            Self::negative(r)
        } else {
            Self::positive(r)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, q: u64) -> PositiveRational {
        PositiveRational::from_u64(p, q).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(q(6, 4).to_string(), "3/2");
        assert_eq!(q(7, 7).to_string(), "1/1");
        assert_eq!(q(125, 16).to_string(), "125/16");
    }

    #[test]
    fn reduce_rejects_zero() {
        assert!(matches!(
            PositiveRational::from_u64(0, 3),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            PositiveRational::from_u64(3, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("5".parse::<PositiveRational>().unwrap().to_string(), "5/1");
        assert_eq!("10/4".parse::<PositiveRational>().unwrap(), q(5, 2));
        assert!(matches!(
            "1/-2".parse::<PositiveRational>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            " 1/2".parse::<PositiveRational>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "0/2".parse::<PositiveRational>(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn signed_display() {
        assert_eq!(
            "-2/4".parse::<SignedRational>().unwrap().to_string(),
            "-1/2"
        );
        assert_eq!("0".parse::<SignedRational>().unwrap().to_string(), "0/1");
        assert_eq!(
            "-0/7".parse::<SignedRational>().unwrap(),
            SignedRational::zero()
        );
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(2, 3) * &q(3, 4), q(1, 2));
        assert_eq!(q(3, 4).checked_sub(&q(1, 4)), Some(q(1, 2)));
        assert_eq!(q(1, 4).checked_sub(&q(1, 4)), None);
        assert!(q(2, 3) < q(3, 4));
    }
}
