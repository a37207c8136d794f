use std::fmt;

use num_traits::{One, Zero};

use super::require_index;
use crate::numerics::{bit_position, Natural, PositiveRational};
use crate::{Error, Result};

/// Nondecreasing denominators `2 <= n1 <= ... <= nk` of
/// `r = 1/n1 + 1/(n1 n2) + ... + 1/(n1 ... nk)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EngelExpansion {
    denoms: Vec<Natural>,
}

impl EngelExpansion {
    pub fn new(denoms: Vec<Natural>) -> Result<Self> {
        if denoms.is_empty() {
            return Err(Error::invariant("an Engel expansion has at least one term"));
        }
        if denoms[0] < Natural::from(2u32) {
            return Err(Error::invariant("the first denominator must be at least 2"));
        }
        if let Some(w) = denoms.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::invariant(format!(
                "denominators decrease from {} to {}",
                w[0], w[1]
            )));
        }
        Ok(Self { denoms })
    }

    pub fn from_u64s(denoms: &[u64]) -> Result<Self> {
        Self::new(denoms.iter().map(|&d| Natural::from(d)).collect())
    }

    pub fn denoms(&self) -> &[Natural] {
        &self.denoms
    }
}

impl fmt::Display for EngelExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.denoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Expansion of `0 < r < 1` by `n = ceil(1/u)`, `u <- u n - 1`.
pub fn engel_expand(r: &PositiveRational) -> Result<EngelExpansion> {
    if r.num() >= r.den() {
        return Err(Error::domain(format!(
            "{r} is not strictly between 0 and 1"
        )));
    }
    let (mut p, mut q) = (r.num().clone(), r.den().clone());
    let mut denoms = Vec::new();
    while !p.is_zero() {
        let n = (&q + &p - 1u32) / &p;
        // p n - q < p, so the numerators strictly decrease.
        let next = &p * &n - &q;
        denoms.push(n);
        if next.is_zero() {
            break;
        }
        let g = num_integer::Integer::gcd(&next, &q);
        p = next / &g;
        q /= g;
    }
    Ok(EngelExpansion { denoms })
}

/// Sums the expansion back up, innermost term first.
pub fn engel_eval(e: &EngelExpansion) -> PositiveRational {
    let (mut p, mut q) = (Natural::zero(), Natural::one());
    for n in e.denoms.iter().rev() {
        // (1 + p/q) / n
        p += &q;
        q *= n;
    }
    PositiveRational::new(p, q).expect("an Engel sum is positive")
}

/// `x -> psi(x / (x + 1))` with `psi = sum of 2^(n_j + j - 3)`.
pub fn cohen_encode(x: &PositiveRational) -> Result<Natural> {
    let r = PositiveRational::from_coprime(x.num().clone(), x.num() + x.den());
    let mut out = Natural::zero();
    for (j, n) in engel_expand(&r)?.denoms.iter().enumerate() {
        // 1-based j: n + j - 3 == n + (j0 + 1) - 3
        let pos = bit_position(&(n + j - 2u32))?;
        out.set_bit(pos, true);
    }
    Ok(out)
}

/// Inverse of [`cohen_encode`]: set bits `c1 < ... < ck` give `n_j = c_j - j + 3`.
pub fn cohen_decode(k: &Natural) -> Result<PositiveRational> {
    require_index(k)?;
    let denoms: Vec<Natural> = (0..k.bits())
        .filter(|&pos| k.bit(pos))
        .enumerate()
        .map(|(j, c)| Natural::from(c + 2 - j as u64))
        .collect();
    let r = engel_eval(&EngelExpansion::new(denoms)?);
    let (p, q) = r.into_parts();
    let rest = &q - &p;
    Ok(PositiveRational::from_coprime(p, rest))
}
