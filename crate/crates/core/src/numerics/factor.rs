use std::collections::BTreeMap;
use std::fmt;

use num_bigint::Sign as BigSign;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::PrimeTable;
use super::{checked_pow, Natural, PositiveRational, SignedInt};
use crate::{Error, Result};

/// Trial divisors tried past the prime table for inputs wider than 64 bits;
/// a cofactor with no divisor below this bound that is not itself prime is
/// reported as a resource error.
const WIDE_TRIAL_LIMIT: u64 = 1 << 24;

/// Finite map from primes to nonzero integer exponents, keyed in increasing
/// order. The empty map is the rational `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedFactorization {
    entries: BTreeMap<Natural, SignedInt>,
}

impl SignedFactorization {
    /// Validates that every key is prime and every exponent nonzero.
    pub fn new(entries: BTreeMap<Natural, SignedInt>) -> Result<Self> {
        for (p, e) in &entries {
            if e.is_zero() {
                return Err(Error::invariant(format!("zero exponent at prime {p}")));
            }
            if !is_prime(p) {
                return Err(Error::invariant(format!("{p} is not prime")));
            }
        }
        Ok(Self { entries })
    }

    pub fn from_pairs<I, P, E>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, E)>,
        P: Into<Natural>,
        E: Into<SignedInt>,
    {
        let mut entries = BTreeMap::new();
        for (p, e) in pairs {
            let p = p.into();
            if entries.insert(p.clone(), e.into()).is_some() {
                return Err(Error::invariant(format!("prime {p} listed twice")));
            }
        }
        Self::new(entries)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Natural, &SignedInt)> {
        self.entries.iter()
    }

    pub fn exponent(&self, p: &Natural) -> Option<&SignedInt> {
        self.entries.get(p)
    }
}

impl fmt::Display for SignedFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}:{e:+}")?;
        }
        f.write_str("}")
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller-Rabin with the first twelve prime bases, deterministic below 2^64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_big(n: &Natural) -> bool {
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = Natural::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = Natural::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&Natural::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: exact for every `n < 2^64`, a strong probable-prime test
/// above that.
pub fn is_prime(n: &Natural) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => is_prime_big(n),
    }
}

fn push_factor(out: &mut Vec<(Natural, u64)>, p: impl Into<Natural>, e: u64) {
    if e > 0 {
        out.push((p.into(), e));
    }
}

fn factor_u64(mut n: u64, table: &PrimeTable, out: &mut Vec<(Natural, u64)>) -> Result<()> {
    let primes = table.primes_up_to(n.sqrt());
    for &p in primes.iter() {
        if p * p > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        push_factor(out, p, e);
    }
    if n == 1 {
        return Ok(());
    }
    // Beyond the table: odd trial divisors, short-circuiting on prime cofactors.
    let mut d = primes.last().copied().unwrap_or(1) + 2;
    if d % 2 == 0 {
        d += 1;
    }
    if !is_prime_u64(n) {
        while d.checked_mul(d).is_some_and(|sq| sq <= n) {
            if n.is_multiple_of(d) {
                let mut e = 0;
                while n.is_multiple_of(d) {
                    n /= d;
                    e += 1;
                }
                push_factor(out, d, e);
                if n == 1 || is_prime_u64(n) {
                    break;
                }
            }
            d += 2;
        }
    }
    if n > 1 {
        push_factor(out, n, 1);
    }
    Ok(())
}

/// Prime factorization of a positive natural, primes increasing.
///
/// Trial division against the shared prime table, continued with odd divisors
/// up to 2^32. Any `n < 2^64` factors completely.
pub fn factorize_natural(n: &Natural) -> Result<Vec<(Natural, u64)>> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor zero"));
    }
    let table = PrimeTable::global();
    let mut out = Vec::new();
    if let Some(small) = n.to_u64() {
        factor_u64(small, table, &mut out)?;
        return Ok(out);
    }

    let mut n = n.clone();
    if is_prime_big(&n) {
        return Ok(vec![(n, 1)]);
    }
    let primes = table.primes_up_to(u64::MAX);
    let wheel_start = primes.last().unwrap() + 2;
    let divisors = primes
        .iter()
        .copied()
        .chain((wheel_start..WIDE_TRIAL_LIMIT.max(wheel_start)).step_by(2));
    for d in divisors {
        if !(&n % d).is_zero() {
            continue;
        }
        let mut e = 0;
        let big_d = Natural::from(d);
        while (&n % d).is_zero() {
            n /= &big_d;
            e += 1;
        }
        push_factor(&mut out, d, e);
        if let Some(small) = n.to_u64() {
            factor_u64(small, table, &mut out)?;
            out.sort();
            return Ok(out);
        }
        if is_prime_big(&n) {
            push_factor(&mut out, n, 1);
            return Ok(out);
        }
    }
    Err(Error::resource(format!(
        "{n} has no factor below {WIDE_TRIAL_LIMIT}"
    )))
}

/// Exponent map of `r`: numerator primes positive, denominator primes negative.
pub fn factorize(r: &PositiveRational) -> Result<SignedFactorization> {
    let mut entries = BTreeMap::new();
    for (p, e) in factorize_natural(r.num())? {
        entries.insert(p, SignedInt::from(e));
    }
    for (p, e) in factorize_natural(r.den())? {
        entries.insert(p, -SignedInt::from(e));
    }
    Ok(SignedFactorization { entries })
}

/// Multiplies a factorization back out.
pub fn defactorize(f: &SignedFactorization) -> Result<PositiveRational> {
    let mut num = Natural::one();
    let mut den = Natural::one();
    for (p, e) in f.iter() {
        let power = checked_pow(p, e.magnitude())?;
        match e.sign() {
            BigSign::Plus => num *= power,
            BigSign::Minus => den *= power,
            BigSign::NoSign => return Err(Error::invariant("zero exponent")),
        }
    }
    PositiveRational::new(num, den)
}
