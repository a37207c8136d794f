use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive};

use super::require_index;
use crate::numerics::{Natural, PositiveRational};
use crate::{Error, Result, MAX_CODE_BITS};

/// `gamma_1 = 1`, `gamma_2k = 1 + gamma_k`, `gamma_2k+1 = 1 / gamma_2k`.
///
/// Walks the bits of `k` below the leading one: a 0 bit adds one, a 1 bit
/// adds one and inverts.
pub fn ting_gamma(k: &Natural) -> Result<PositiveRational> {
    require_index(k)?;
    let (mut p, mut q) = (Natural::one(), Natural::one());
    for pos in (0..k.bits() - 1).rev() {
        p += &q;
        if k.bit(pos) {
            std::mem::swap(&mut p, &mut q);
        }
    }
    Ok(PositiveRational::from_coprime(p, q))
}

enum Step {
    Double(Natural),
    Increment,
}

/// The unique `k` with `ting_gamma(k) == r`.
///
/// Undoes the recursion from `r` back to 1, batching runs of `r -> r - 1` into
/// a single shift.
pub fn ting_rank(r: &PositiveRational) -> Result<Natural> {
    let (mut p, mut q) = (r.num().clone(), r.den().clone());
    let mut steps = Vec::new();
    let mut shift_total = Natural::from(0u32);
    while !(p.is_one() && q.is_one()) {
        if p > q {
            // r - t lands on 1 for integers, else on the fractional part.
            let t = if q.is_one() { &p - 1u32 } else { &p / &q };
            p -= &t * &q;
            shift_total += &t;
            steps.push(Step::Double(t));
        } else {
            std::mem::swap(&mut p, &mut q);
            steps.push(Step::Increment);
        }
    }
    if shift_total.to_u64().is_none_or(|s| s > MAX_CODE_BITS) {
        return Err(Error::resource(format!(
            "the rank of {r} has more than {MAX_CODE_BITS} bits"
        )));
    }
    let mut k = Natural::one();
    for step in steps.iter().rev() {
        match step {
            Step::Double(t) => k <<= t.to_u64().unwrap(),
            Step::Increment => k += 1u32,
        }
    }
    Ok(k)
}

/// `M_k` together with the sequence `S_k` of successive gaps of its sorted
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TingConstruction {
    pub set_m: BTreeSet<u64>,
    pub seq_s: Vec<u64>,
}

/// `M_1 = {1}`, `M_2k = M_k + 1`, `M_2k+1 = M_2k ∪ {1}`.
pub fn ting_sets(k: &Natural) -> Result<TingConstruction> {
    require_index(k)?;
    // Elements never exceed the bit length of k, so a shifted set is cheap.
    let mut set_m = BTreeSet::from([1u64]);
    for pos in (0..k.bits() - 1).rev() {
        set_m = set_m.into_iter().map(|x| x + 1).collect();
        if k.bit(pos) {
            set_m.insert(1);
        }
    }
    let mut prev = 0;
    let seq_s = set_m
        .iter()
        .map(|&x| {
            let gap = x - prev;
            prev = x;
            gap
        })
        .collect();
    Ok(TingConstruction { set_m, seq_s })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, d: u64) -> PositiveRational {
        PositiveRational::from_u64(p, d).unwrap()
    }

    fn gamma(k: u64) -> PositiveRational {
        ting_gamma(&Natural::from(k)).unwrap()
    }

    fn rank(r: PositiveRational) -> u64 {
        ting_rank(&r).unwrap().to_u64().unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(1), q(1, 1));
        assert_eq!(gamma(6), q(3, 2));
        assert_eq!(gamma(7), q(2, 3));
        assert!(matches!(
            ting_gamma(&Natural::from(0u32)),
            Err(Error::Domain(_))
        ));
    }

    /// Direct transcription of the three-line recursion.
    fn gamma_recursive(k: u64) -> PositiveRational {
        match k {
            1 => q(1, 1),
            _ if k.is_multiple_of(2) => gamma_recursive(k / 2).add_natural(&Natural::from(1u32)),
            _ => gamma_recursive(k - 1).recip(),
        }
    }

    #[test]
    fn gamma_matches_recursion() {
        for k in 1..=4096 {
            assert_eq!(gamma(k), gamma_recursive(k), "k = {k}");
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(q(1, 1)), 1);
        assert_eq!(rank(q(2, 3)), 7);
        assert_eq!(rank(q(3, 1)), 4);
        assert_eq!(rank(q(3, 2)), 6);
    }

    #[test]
    fn rank_grows_exponentially() {
        let r = q(1, 100);
        let k = ting_rank(&r).unwrap();
        assert!(k.bits() > 90);
        assert_eq!(ting_gamma(&k).unwrap(), r);
        let huge = PositiveRational::integer(Natural::from(1u64 << 40)).unwrap();
        assert!(matches!(ting_rank(&huge), Err(Error::Resource(_))));
    }

    #[test]
    fn set_examples() {
        let s = |k: u64| ting_sets(&Natural::from(k)).unwrap();
        assert_eq!(s(1).set_m, BTreeSet::from([1]));
        assert_eq!(s(1).seq_s, vec![1]);
        assert_eq!(s(2).set_m, BTreeSet::from([2]));
        assert_eq!(s(2).seq_s, vec![2]);
        assert_eq!(s(5).set_m, BTreeSet::from([1, 3]));
        assert_eq!(s(5).seq_s, vec![1, 2]);
    }
}
