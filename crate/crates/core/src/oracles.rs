//! Brute-force counters that check the fast algorithms without sharing code
//! with them.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::numerics::PositiveRational;
use crate::{Error, Result};

/// Default bound for [`hyperbinary_brute`].
pub const HYPERBINARY_BRUTE_CAP: u64 = 10_000;

/// Counts digit vectors `c_i` in `{0,1,2}` with `sum c_i 2^i == n` by direct
/// search over the digits, highest position first.
pub fn hyperbinary_brute(n: u64) -> Result<u64> {
    hyperbinary_brute_capped(n, HYPERBINARY_BRUTE_CAP)
}

pub fn hyperbinary_brute_capped(n: u64, cap: u64) -> Result<u64> {
    if n > cap {
        return Err(Error::resource(format!(
            "{n} exceeds the brute-force cap {cap}"
        )));
    }
    // Positions 0..=top suffice since 2^top > n.
    let top = 64 - n.leading_zeros();

    fn search(pos: i32, remaining: u64) -> u64 {
        if pos < 0 {
            return u64::from(remaining == 0);
        }
        let weight = 1u64 << pos;
        // The most positions 0..pos can still contribute.
        let reachable_below = 2 * (weight - 1);
        (0..=2u64)
            .filter(|c| c * weight <= remaining)
            .filter(|c| remaining - c * weight <= reachable_below)
            .map(|c| search(pos - 1, remaining - c * weight))
            .sum()
    }

    Ok(search(top as i32, n))
}

/// Counts nondecreasing sequences `2 <= n1 <= ... <= nk` with `k <= max_len`
/// and every `ni <= max_den` whose Engel sum equals `r`.
pub fn engel_unique_brute(r: &PositiveRational, max_len: u32, max_den: u64) -> Result<u64> {
    if r.num() >= r.den() {
        return Err(Error::domain(format!(
            "{r} is not strictly between 0 and 1"
        )));
    }
    let too_big = || Error::resource(format!("{r} does not fit the brute-force search"));
    let a = r.num().to_u128().ok_or_else(too_big)?;
    let b = r.den().to_u128().ok_or_else(too_big)?;

    struct Search {
        a: u128,
        b: u128,
        max_len: u32,
        max_den: u64,
        count: u64,
        overflow: bool,
    }

    impl Search {
        /// The partial sum so far is `s / prod`.
        fn walk(&mut self, depth: u32, min_den: u64, prod: u128, s: u128) {
            for n in min_den..=self.max_den {
                let n = n as u128;
                let (Some(prod), Some(s)) = (prod.checked_mul(n), s.checked_mul(n)) else {
                    self.overflow = true;
                    return;
                };
                let s = s + 1;
                let (Some(lhs), Some(rhs)) = (s.checked_mul(self.b), self.a.checked_mul(prod))
                else {
                    self.overflow = true;
                    return;
                };
                match lhs.cmp(&rhs) {
                    Ordering::Equal => self.count += 1,
                    Ordering::Less if depth + 1 < self.max_len => {
                        self.walk(depth + 1, n as u64, prod, s)
                    }
                    // Larger n only shrinks the sum further.
                    Ordering::Less => return,
                    Ordering::Greater => {}
                }
            }
        }
    }

    let mut search = Search {
        a,
        b,
        max_len,
        max_den,
        count: 0,
        overflow: false,
    };
    if max_len > 0 {
        search.walk(0, 2, 1, 0);
    }
    if search.overflow {
        return Err(too_big());
    }
    Ok(search.count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, d: u64) -> PositiveRational {
        PositiveRational::from_u64(p, d).unwrap()
    }

    #[test]
    fn hyperbinary_examples() {
        assert_eq!(hyperbinary_brute(5).unwrap(), 2);
        assert_eq!(hyperbinary_brute(0).unwrap(), 1);
        // 8+4, 8+2+2, 8+2+1+1, 4+4+2+2, 4+4+2+1+1
        assert_eq!(hyperbinary_brute(12).unwrap(), 5);
        assert!(matches!(hyperbinary_brute(10_001), Err(Error::Resource(_))));
    }

    /// Plain enumeration of every digit vector of a fixed length.
    #[test]
    fn hyperbinary_matches_full_enumeration() {
        for n in 0..200u64 {
            let len = 9;
            let mut count = 0;
            for code in 0..3u64.pow(len) {
                let mut rest = code;
                let mut total = 0;
                for i in 0..len {
                    total += (rest % 3) << i;
                    rest /= 3;
                }
                count += u64::from(total == n);
            }
            assert_eq!(hyperbinary_brute(n).unwrap(), count, "{n}");
        }
    }

    #[test]
    fn engel_examples() {
        assert_eq!(engel_unique_brute(&q(2, 3), 4, 30).unwrap(), 1);
        assert_eq!(engel_unique_brute(&q(1, 2), 4, 30).unwrap(), 1);
        assert_eq!(engel_unique_brute(&q(3, 4), 4, 30).unwrap(), 1);
        assert!(matches!(
            engel_unique_brute(&q(1, 1), 4, 30),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn engel_bounds_too_tight_find_nothing() {
        // 3/7 = (3, 4, 7) needs three terms.
        assert_eq!(engel_unique_brute(&q(3, 7), 2, 30).unwrap(), 0);
        assert_eq!(engel_unique_brute(&q(3, 7), 3, 6).unwrap(), 0);
        assert_eq!(engel_unique_brute(&q(3, 7), 3, 7).unwrap(), 1);
    }
}
