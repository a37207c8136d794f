use std::sync::{OnceLock, RwLock};

use num_traits::{One, ToPrimitive, Zero};

use super::require_index;
use crate::numerics::{Natural, PositiveRational};
use crate::{Error, Result, MAX_CODE_BITS};

/// Indices below this are served from the shared memo table.
const MEMO_CAP: u64 = 1 << 22;

fn memo() -> &'static RwLock<Vec<u64>> {
    static TABLE: OnceLock<RwLock<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![1, 1]))
}

/// Memoized `b_n` for `n < MEMO_CAP`. The table only ever grows, so every
/// reader sees the same prefix.
fn memo_value(n: u64) -> u64 {
    debug_assert!(n < MEMO_CAP);
    let idx = n as usize;
    if let Some(&v) = memo().read().expect("memo lock poisoned").get(idx) {
        return v;
    }
    let mut table = memo().write().expect("memo lock poisoned");
    let target = (idx + 1).max(table.len() * 2).min(MEMO_CAP as usize);
    for i in table.len()..target {
        let v = if i % 2 == 1 {
            table[(i - 1) / 2]
        } else {
            let k = (i - 2) / 2;
            table[k] + table[k + 1]
        };
        table.push(v);
    }
    table[idx]
}

/// `(b_n, b_{n+1})` by descending `n` with `b_2k+1 = b_k` and
/// `b_2k+2 = b_k + b_k+1`.
pub fn hyperbinary_pair(n: &Natural) -> (Natural, Natural) {
    let mut stack = Vec::new();
    let mut cur = n.clone();
    while cur.to_u64().is_none_or(|c| c >= MEMO_CAP - 1) {
        let odd = cur.bit(0);
        stack.push(odd);
        cur = if odd {
            &cur >> 1u32
        } else {
            (&cur - 2u32) >> 1u32
        };
    }
    let c = cur.to_u64().unwrap();
    let (mut lo, mut hi) = (
        Natural::from(memo_value(c)),
        Natural::from(memo_value(c + 1)),
    );
    for odd in stack.into_iter().rev() {
        let sum = &lo + &hi;
        if odd {
            // n = 2k+1: (b_k, b_k + b_k+1)
            hi = sum;
        } else {
            // n = 2k+2: (b_k + b_k+1, b_k+1)
            lo = sum;
        }
    }
    (lo, hi)
}

/// Number of ways to write `n` as a sum of powers of two, each used at most
/// twice (`b_0 = 1`).
pub fn hyperbinary(n: &Natural) -> Natural {
    match n.to_u64() {
        Some(small) if small < MEMO_CAP => Natural::from(memo_value(small)),
        _ => hyperbinary_pair(n).0,
    }
}

/// `b_{k-1} / b_k`. Consecutive hyperbinary counts are checked to be coprime
/// rather than reduced.
pub fn calkin_wilf(k: &Natural) -> Result<PositiveRational> {
    require_index(k)?;
    let (prev, cur) = match k.to_u64() {
        Some(small) if small < MEMO_CAP => (
            Natural::from(memo_value(small - 1)),
            Natural::from(memo_value(small)),
        ),
        _ => hyperbinary_pair(&(k - 1u32)),
    };
    PositiveRational::try_coprime(prev, cur)
}

/// The unique `k` with `calkin_wilf(k) == r`, found by walking to the root:
/// `p/q` with `p < q` is the left child (`2k`) of `p/(q-p)`, and with `p > q`
/// the right child (`2k+1`) of `(p-q)/q`.
pub fn calkin_wilf_rank(r: &PositiveRational) -> Result<Natural> {
    let (mut p, mut q) = (r.num().clone(), r.den().clone());
    // (is_right_child, run length), collected leaf first.
    let mut runs: Vec<(bool, Natural)> = Vec::new();
    let mut depth = Natural::zero();
    while !(p.is_one() && q.is_one()) {
        let right = p > q;
        let (big, small) = if right { (&mut p, &q) } else { (&mut q, &p) };
        let t = if small.is_one() {
            &*big - 1u32
        } else {
            &*big / small
        };
        *big -= &t * small;
        depth += &t;
        runs.push((right, t));
    }
    if depth.to_u64().is_none_or(|d| d > MAX_CODE_BITS) {
        return Err(Error::resource(format!(
            "the rank of {r} has more than {MAX_CODE_BITS} bits"
        )));
    }
    let mut k = Natural::one();
    for (right, t) in runs.iter().rev() {
        let t = t.to_u64().unwrap();
        k <<= t;
        if *right {
            k |= (Natural::one() << t) - 1u32;
        }
    }
    Ok(k)
}
