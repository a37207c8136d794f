use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Natural, PositiveRational};
use crate::{Error, Result};

/// Finite continued fraction `a0 + 1/(a1 + 1/(... + 1/(an + 1/1)))`.
///
/// The closing `1/1` is part of the evaluation rule, not a stored quotient.
/// With `a0 >= 0` and `aj >= 1` for `j >= 1`, every positive rational has
/// exactly one such form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<Natural>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<Natural>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::invariant("a continued fraction needs at least a0"));
        }
        if let Some(j) = quotients.iter().skip(1).position(Zero::is_zero) {
            return Err(Error::invariant(format!(
                "partial quotient a{} must be at least 1",
                j + 1
            )));
        }
        Ok(Self { quotients })
    }

    pub fn from_u64s(quotients: &[u64]) -> Result<Self> {
        Self::new(quotients.iter().map(|&a| Natural::from(a)).collect())
    }

    pub fn quotients(&self) -> &[Natural] {
        &self.quotients
    }

    /// `b_k = a0 + ... + ak`, strictly increasing after `b0`.
    pub fn partial_sums(&self) -> Vec<Natural> {
        let mut acc = Natural::zero();
        self.quotients
            .iter()
            .map(|a| {
                acc += a;
                acc.clone()
            })
            .collect()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.quotients.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Expands `r` into its trailing-1 continued fraction.
///
/// Runs Euclid to get the regular expansion whose last quotient is at least 2
/// (or a lone integer part), then lowers the last quotient by one to absorb the
/// closing `1/1`.
pub fn cf_expand(r: &PositiveRational) -> ContinuedFraction {
    let mut quotients = Vec::new();
    let (mut p, mut q) = (r.num().clone(), r.den().clone());
    while !q.is_zero() {
        let (a, rem) = p.div_rem(&q);
        quotients.push(a);
        p = q;
        q = rem;
    }
    let last = quotients.last_mut().expect("Euclid yields a quotient");
    *last -= 1u32;
    ContinuedFraction { quotients }
}

/// Evaluates a trailing-1 continued fraction exactly.
pub fn cf_eval(cf: &ContinuedFraction) -> PositiveRational {
    // x = p/q stays in lowest terms under x -> a + 1/x.
    let (mut p, mut q) = (Natural::one(), Natural::one());
    for a in cf.quotients.iter().rev() {
        let next = a * &p + &q;
        q = p;
        p = next;
    }
    PositiveRational::from_coprime(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, q: u64) -> PositiveRational {
        PositiveRational::from_u64(p, q).unwrap()
    }

    fn cf(a: &[u64]) -> ContinuedFraction {
        ContinuedFraction::from_u64s(a).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(cf_expand(&q(1, 1)), cf(&[0]));
        assert_eq!(cf_expand(&q(3, 2)), cf(&[1, 1]));
        assert_eq!(cf_expand(&q(2, 3)), cf(&[0, 1, 1]));
        assert_eq!(cf_expand(&q(5, 1)), cf(&[4]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cf_eval(&cf(&[0])), q(1, 1));
        assert_eq!(cf_eval(&cf(&[0, 2])), q(1, 3));
        // 1 + 1/(1 + 1/(1 + 1/1)) = 1 + 1/(3/2)
        assert_eq!(cf_eval(&cf(&[1, 1, 1])), q(5, 3));
        assert_eq!(cf_eval(&cf(&[1, 1])), q(3, 2));
    }

    #[test]
    fn malformed_quotients_rejected() {
        assert!(matches!(
            ContinuedFraction::from_u64s(&[]),
            Err(Error::Invariant(_))
        ));
        assert!(matches!(
            ContinuedFraction::from_u64s(&[1, 0, 2]),
            Err(Error::Invariant(_))
        ));
    }

    #[test]
    fn partial_sums_strictly_increase() {
        let sums = cf(&[0, 1, 1]).partial_sums();
        assert_eq!(
            sums,
            vec![
                Natural::from(0u32),
                Natural::from(1u32),
                Natural::from(2u32)
            ]
        );
    }

    #[test]
    fn round_trip_up_to_200() {
        for p in 1..=200u64 {
            for d in 1..=200u64 {
                if num_integer::gcd(p, d) != 1 {
                    continue;
                }
                let r = q(p, d);
                let e = cf_expand(&r);
                assert_eq!(cf_eval(&e), r);
                let sums = e.partial_sums();
                assert!(sums.windows(2).all(|w| w[0] < w[1]), "{r}: {e}");
            }
        }
    }
}
