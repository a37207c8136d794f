//! Maps from ordered pairs of positive integers into the positive integers.
//!
//! Three of the eight schemes are bijections (`odd-pow2`, `cantor`, `box-l`);
//! the rest are injections whose decoders report [`Error::NotInImage`] for
//! codes no pair produces.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use crate::numerics::{factorize_natural, nth_prime, prime_index, Natural};
use crate::{Error, Result, MAX_CODE_BITS};

/// An ordered pair `(n, m)` with both coordinates at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePair {
    pub n: u64,
    pub m: u64,
}

impl LatticePair {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::domain(format!("({n},{m}) has a zero coordinate")));
        }
        Ok(Self { n, m })
    }

    pub fn swapped(self) -> Self {
        Self {
            n: self.m,
            m: self.n,
        }
    }
}

impl fmt::Display for LatticePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}

/// Accepts `(n,m)` or `n,m`.
impl FromStr for LatticePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(s);
        let (n, m) = body.split_once(',').ok_or_else(|| Error::Parse(s.into()))?;
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| Error::Parse(s.into()));
        Self::new(parse(n)?, parse(m)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairingScheme {
    /// `(2n-1) 2^(m-1)`
    OddPow2,
    /// `(2^n - 1) 2^m`: binary `1^n 0^m`
    OnesZeros,
    /// `2^(n+m+1) - 1 - 2^m`: binary `1^n 0 1^m`
    UnarySep,
    /// `2^n + 2^(n+m)`: binary `1 0^(m-1) 1 0^n`
    TwoBits,
    /// `2^n 3^m`
    Godel,
    /// `p(m)^n` with `p` the increasing prime enumeration
    PrimePower,
    /// `(n+m-1)(n+m-2)/2 + n`
    Cantor,
    /// `M^2 - M + m - n + 1` with `M = max(n, m)`
    BoxL,
}

impl PairingScheme {
    pub const ALL: [PairingScheme; 8] = [
        PairingScheme::OddPow2,
        PairingScheme::OnesZeros,
        PairingScheme::UnarySep,
        PairingScheme::TwoBits,
        PairingScheme::Godel,
        PairingScheme::PrimePower,
        PairingScheme::Cantor,
        PairingScheme::BoxL,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PairingScheme::OddPow2 => "odd-pow2",
            PairingScheme::OnesZeros => "ones-zeros",
            PairingScheme::UnarySep => "unary-sep",
            PairingScheme::TwoBits => "two-bits",
            PairingScheme::Godel => "godel",
            PairingScheme::PrimePower => "prime-power",
            PairingScheme::Cantor => "cantor",
            PairingScheme::BoxL => "box-l",
        }
    }

    pub fn is_bijective(self) -> bool {
        matches!(
            self,
            PairingScheme::OddPow2 | PairingScheme::Cantor | PairingScheme::BoxL
        )
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }
}

impl fmt::Display for PairingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn shift_ok(bits: u64) -> Result<u64> {
    if bits > MAX_CODE_BITS {
        return Err(Error::resource(format!(
            "2^{bits} exceeds the cap of 2^{MAX_CODE_BITS}"
        )));
    }
    Ok(bits)
}

fn pow2(bits: u64) -> Result<Natural> {
    let mut out = Natural::zero();
    out.set_bit(shift_ok(bits)?, true);
    Ok(out)
}

fn ones(count: u64) -> Result<Natural> {
    Ok(pow2(count)? - 1u32)
}

fn to_coord(x: Natural) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::resource(format!("coordinate {x} does not fit in 64 bits")))
}

/// Encodes `pair` under `scheme`.
pub fn encode_pair(scheme: PairingScheme, pair: LatticePair) -> Result<Natural> {
    let LatticePair { n, m } = pair;
    let (bn, bm) = (Natural::from(n), Natural::from(m));
    Ok(match scheme {
        PairingScheme::OddPow2 => ((bn << 1u32) - 1u32) << shift_ok(m - 1)?,
        PairingScheme::OnesZeros => ones(n)? << shift_ok(m)?,
        PairingScheme::UnarySep => {
            let total = n.checked_add(m).and_then(|s| s.checked_add(1));
            let total = total.ok_or_else(|| Error::resource("exponent overflow"))?;
            pow2(total)? - 1u32 - pow2(m)?
        }
        PairingScheme::TwoBits => {
            let high = n
                .checked_add(m)
                .ok_or_else(|| Error::resource("exponent overflow"))?;
            pow2(n)? + pow2(high)?
        }
        PairingScheme::Godel => {
            let e2 = u32::try_from(shift_ok(n)?).unwrap();
            let e3 = u32::try_from(shift_ok(m)?).unwrap();
            Natural::from(2u32).pow(e2) * Natural::from(3u32).pow(e3)
        }
        PairingScheme::PrimePower => {
            let p = Natural::from(nth_prime(m)?);
            crate::numerics::checked_pow(&p, &bn)?
        }
        PairingScheme::Cantor => {
            let s = &bn + &bm;
            (((&s - 1u32) * (&s - 2u32)) >> 1u32) + bn
        }
        PairingScheme::BoxL => {
            let big = Natural::from(n.max(m));
            &big * &big - &big + bm + 1u32 - bn
        }
    })
}

/// Inverts [`encode_pair`]. Fails with [`Error::NotInImage`] for codes outside
/// an injective scheme's image.
pub fn decode_pair(scheme: PairingScheme, code: &Natural) -> Result<LatticePair> {
    if code.is_zero() {
        return Err(Error::domain("codes start at 1"));
    }
    let missing = || Error::not_in_image(scheme.id(), code);
    match scheme {
        PairingScheme::OddPow2 => {
            let tz = code.trailing_zeros().unwrap();
            let odd = code >> tz;
            Ok(LatticePair {
                n: to_coord((odd + 1u32) >> 1u32)?,
                m: tz + 1,
            })
        }
        PairingScheme::OnesZeros => {
            let m = code.trailing_zeros().unwrap();
            let run = code >> m;
            if m == 0 || !(&run + 1u32).count_ones() == 1 {
                return Err(missing());
            }
            Ok(LatticePair { n: run.bits(), m })
        }
        PairingScheme::UnarySep => {
            let m = (code + 1u32).trailing_zeros().unwrap();
            let run = code >> (m + 1);
            if m == 0 || run.is_zero() || !(&run + 1u32).count_ones() == 1 {
                return Err(missing());
            }
            Ok(LatticePair { n: run.bits(), m })
        }
        PairingScheme::TwoBits => {
            let n = code.trailing_zeros().unwrap();
            if code.count_ones() != 2 || n == 0 {
                return Err(missing());
            }
            let high = code.bits() - 1;
            Ok(LatticePair { n, m: high - n })
        }
        PairingScheme::Godel => {
            let n = code.trailing_zeros().unwrap();
            let mut rest = code >> n;
            let three = Natural::from(3u32);
            let mut m = 0;
            while (&rest % &three).is_zero() {
                rest /= &three;
                m += 1;
            }
            if n == 0 || m == 0 || !rest.is_one() {
                return Err(missing());
            }
            Ok(LatticePair { n, m })
        }
        PairingScheme::PrimePower => {
            let factors = factorize_natural(code)?;
            let [(p, n)] = factors.as_slice() else {
                return Err(missing());
            };
            let p = p
                .to_u64()
                .ok_or_else(|| Error::resource(format!("prime {p} is beyond the prime table")))?;
            let m = prime_index(p)?.expect("factorization yields primes");
            Ok(LatticePair { n: *n, m })
        }
        PairingScheme::Cantor => {
            // Largest t with t(t+1)/2 < code.
            let tri = |t: &Natural| (t * (t + 1u32)) >> 1u32;
            let mut t = (((code << 3u32) + 1u32).sqrt() - 1u32) >> 1u32;
            if &tri(&t) == code {
                t -= 1u32;
            }
            let n = code - tri(&t);
            let m = &t + 2u32 - &n;
            Ok(LatticePair {
                n: to_coord(n)?,
                m: to_coord(m)?,
            })
        }
        PairingScheme::BoxL => {
            let mut big = code.sqrt();
            if &(&big * &big) < code {
                big += 1u32;
            }
            let below = &big - 1u32;
            let offset = code - &below * &below;
            if offset <= big {
                Ok(LatticePair {
                    n: to_coord(big)?,
                    m: to_coord(offset)?,
                })
            } else {
                let n = &big * &big + 1u32 - code;
                Ok(LatticePair {
                    n: to_coord(n)?,
                    m: to_coord(big)?,
                })
            }
        }
    }
}

/// The interleaved listing `(1,1); (1,2),(2,1),(2,2); (1,3),(3,1),...`: for
/// each `m`, the pairs `(n,m)` with `n <= m` by increasing `n`, each followed by
/// its swap when `n != m`.
#[derive(Debug, Clone)]
pub struct L2Iter {
    n: u64,
    m: u64,
    pending_swap: bool,
}

impl L2Iter {
    pub fn new() -> Self {
        Self {
            n: 1,
            m: 1,
            pending_swap: false,
        }
    }
}

impl Default for L2Iter {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for L2Iter {
    type Item = LatticePair;

    fn next(&mut self) -> Option<LatticePair> {
        let pair = LatticePair {
            n: self.n,
            m: self.m,
        };
        if self.pending_swap {
            self.pending_swap = false;
            self.advance();
            return Some(pair.swapped());
        }
        if self.n == self.m {
            self.advance();
        } else {
            self.pending_swap = true;
        }
        Some(pair)
    }
}

impl L2Iter {
    fn advance(&mut self) {
        if self.n == self.m {
            self.m += 1;
            self.n = 1;
        } else {
            self.n += 1;
        }
    }
}

/// The first `count` pairs of the interleaved listing.
pub fn l2_prefix(count: usize) -> Vec<LatticePair> {
    L2Iter::new().take(count).collect()
}
