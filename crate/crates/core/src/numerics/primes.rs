use std::sync::{Arc, OnceLock, RwLock};

use crate::{Error, Result};

/// Default number of primes the shared table may hold.
pub const DEFAULT_PRIME_CAP: usize = 100_000;

/// Lazily extended table of the primes in increasing order.
///
/// Readers share an immutable snapshot; extension re-sieves under the write
/// lock, so concurrent callers always observe a prefix of the same sequence.
#[derive(Debug)]
pub struct PrimeTable {
    cap: usize,
    state: RwLock<Sieved>,
}

#[derive(Debug, Clone)]
struct Sieved {
    primes: Arc<Vec<u64>>,
    /// Every prime `<= bound` is in `primes` (unless the cap truncated it).
    bound: u64,
}

fn sieve(bound: u64, cap: usize) -> Vec<u64> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        if out.len() == cap {
            break;
        }
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

impl PrimeTable {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap: cap.max(1),
            state: RwLock::new(Sieved {
                primes: Arc::new(vec![2, 3, 5, 7, 11, 13]),
                bound: 16,
            }),
        }
    }

    /// Process-wide table with [`DEFAULT_PRIME_CAP`].
    pub fn global() -> &'static PrimeTable {
        static GLOBAL: OnceLock<PrimeTable> = OnceLock::new();
        GLOBAL.get_or_init(|| PrimeTable::with_cap(DEFAULT_PRIME_CAP))
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn snapshot(&self) -> Sieved {
        self.state
            .read()
            .expect("prime table lock poisoned")
            .clone()
    }

    fn full(&self, s: &Sieved) -> bool {
        s.primes.len() >= self.cap
    }

    /// Grows the table until `done` holds or the cap is reached.
    fn extend_until(&self, done: impl Fn(&Sieved) -> bool) -> Sieved {
        let current = self.snapshot();
        if done(&current) || self.full(&current) {
            return current;
        }
        let mut guard = self.state.write().expect("prime table lock poisoned");
        while !done(&guard) && guard.primes.len() < self.cap {
            let bound = guard.bound.saturating_mul(2);
            let primes = sieve(bound, self.cap);
            *guard = Sieved {
                primes: Arc::new(primes),
                bound,
            };
        }
        guard.clone()
    }

    /// The `i`-th prime, 1-based: `nth(1) == 2`.
    pub fn nth(&self, i: u64) -> Result<u64> {
        if i == 0 {
            return Err(Error::domain("prime indices start at 1"));
        }
        if i > self.cap as u64 {
            return Err(Error::resource(format!(
                "prime #{i} is beyond the table cap of {} primes",
                self.cap
            )));
        }
        let idx = (i - 1) as usize;
        let s = self.extend_until(|s| s.primes.len() > idx);
        Ok(s.primes[idx])
    }

    /// 1-based index of `p` in the prime sequence; `None` if `p` is not prime.
    pub fn index_of(&self, p: u64) -> Result<Option<u64>> {
        let s = self.extend_until(|s| s.bound >= p);
        let last = *s.primes.last().expect("table is never empty");
        if p > last && (self.full(&s) || s.bound < p) {
            return Err(Error::resource(format!(
                "{p} is beyond the largest tabulated prime {last}"
            )));
        }
        Ok(s.primes.binary_search(&p).ok().map(|i| i as u64 + 1))
    }

    /// All tabulated primes `<= bound`, extending the table if allowed.
    pub fn primes_up_to(&self, bound: u64) -> Arc<Vec<u64>> {
        self.extend_until(|s| s.bound >= bound).primes
    }
}

/// The `i`-th prime from the shared table (`nth_prime(1) == 2`).
pub fn nth_prime(i: u64) -> Result<u64> {
    PrimeTable::global().nth(i)
}

/// 1-based position of `p` among the primes, or `None` if `p` is composite.
pub fn prime_index(p: u64) -> Result<Option<u64>> {
    PrimeTable::global().index_of(p)
}
