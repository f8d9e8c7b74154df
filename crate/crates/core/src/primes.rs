//! Primality, factorization and a segmented sieve of Eratosthenes with an
//! optional on-disk cache.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
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

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
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

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    let mut m = n.max(2);
    while !is_prime(m) {
        m += 1;
    }
    m
}

const SPF_LIMIT: usize = 1 << 20;

fn spf_table() -> &'static [u32] {
    static SPF: OnceLock<Vec<u32>> = OnceLock::new();
    SPF.get_or_init(|| {
        let mut spf = vec![0u32; SPF_LIMIT + 1];
        for i in 2..=SPF_LIMIT {
            if spf[i] == 0 {
                let mut j = i;
                while j <= SPF_LIMIT {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        spf
    })
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    if n as usize <= SPF_LIMIT {
        let spf = spf_table();
        while n > 1 {
            let p = spf[n as usize] as u64;
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        return out;
    }
    let mut push = |n: &mut u64, p: u64| {
        if (*n).is_multiple_of(p) {
            let mut e = 0;
            while (*n).is_multiple_of(p) {
                *n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    };
    push(&mut n, 2);
    push(&mut n, 3);
    let mut d = 5u64;
    while d * d <= n {
        push(&mut n, d);
        push(&mut n, d + 2);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Returns `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    match f.as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Exact integer square root of a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

/// All primes `<= n` by a plain sieve; intended for small `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Odd-only bitset of primes up to `limit`.
#[derive(Clone)]
pub struct PrimeSieve {
    limit: u64,
    // bit i set <=> 2i+1 is composite (or 1)
    composite: Vec<u64>,
}

const SEGMENT_BITS: u64 = 1 << 18;
const CACHE_MAGIC: &[u8; 16] = b"MULRANK-SIEVE\0\0\0";
const CACHE_VERSION: u32 = 1;

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let nbits = limit / 2 + 1;
        let words = nbits.div_ceil(64) as usize;
        let mut composite = vec![0u64; words];
        composite[0] |= 1; // the number 1
        let base = primes_up_to((limit as f64).sqrt() as u64 + 1);
        let base: Vec<u64> = base.into_iter().filter(|&p| p > 2).collect();
        let mut next: Vec<u64> = base.iter().map(|&p| p * p / 2).collect();
        let mut lo = 0u64;
        while lo < nbits {
            let hi = (lo + SEGMENT_BITS).min(nbits);
            for (i, &p) in base.iter().enumerate() {
                let mut j = next[i];
                while j < hi {
                    composite[(j / 64) as usize] |= 1 << (j % 64);
                    j += p;
                }
                next[i] = j;
            }
            lo = hi;
        }
        PrimeSieve { limit, composite }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "{n} beyond sieve limit {}", self.limit);
        if n < 2 {
            return false;
        }
        if n.is_multiple_of(2) {
            return n == 2;
        }
        let i = n / 2;
        self.composite[(i / 64) as usize] & (1 << (i % 64)) == 0
    }

    /// Primes in `[lo, hi]`, clamped to the sieve limit.
    pub fn primes_in(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        let hi = hi.min(self.limit);
        let two = (lo <= 2 && hi >= 2).then_some(2u64);
        let start = lo.max(3) | 1;
        two.into_iter().chain(
            (start..=hi)
                .step_by(2)
                .filter(move |&n| self.is_prime(n)),
        )
    }

    fn cache_path(dir: &Path, limit: u64) -> PathBuf {
        dir.join(format!("primes-v{CACHE_VERSION}-{limit}.bin"))
    }

    /// Loads a cached sieve; any mismatch or corruption yields `None`.
    pub fn load(dir: &Path, limit: u64) -> Option<Self> {
        let mut f = fs::File::open(Self::cache_path(dir, limit)).ok()?;
        let mut header = [0u8; 16 + 4 + 8 + 8];
        f.read_exact(&mut header).ok()?;
        if &header[..16] != CACHE_MAGIC {
            return None;
        }
        let version = u32::from_le_bytes(header[16..20].try_into().ok()?);
        let stored_limit = u64::from_le_bytes(header[20..28].try_into().ok()?);
        let words = u64::from_le_bytes(header[28..36].try_into().ok()?) as usize;
        let expected_words = (limit / 2 + 1).div_ceil(64) as usize;
        if version != CACHE_VERSION || stored_limit != limit || words != expected_words {
            return None;
        }
        let mut bytes = Vec::with_capacity(words * 8);
        f.read_to_end(&mut bytes).ok()?;
        if bytes.len() != words * 8 {
            return None;
        }
        let composite = bytes
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Some(PrimeSieve { limit, composite })
    }

    /// Writes the sieve to `dir` via a temporary file and an atomic rename.
    pub fn store(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let w = tmp.as_file_mut();
            w.write_all(CACHE_MAGIC)?;
            w.write_all(&CACHE_VERSION.to_le_bytes())?;
            w.write_all(&self.limit.to_le_bytes())?;
            w.write_all(&(self.composite.len() as u64).to_le_bytes())?;
            let mut buf = Vec::with_capacity(self.composite.len() * 8);
            for word in &self.composite {
                buf.extend_from_slice(&word.to_le_bytes());
            }
            w.write_all(&buf)?;
            w.sync_all()?;
        }
        tmp.persist(Self::cache_path(dir, self.limit))
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(())
    }

    /// Loads from `dir` if a valid cache exists, else sieves and stores.
    pub fn load_or_build(dir: &Path, limit: u64) -> Self {
        if let Some(s) = Self::load(dir, limit) {
            return s;
        }
        let s = Self::new(limit);
        // a failed write only costs a rebuild next time
        let _ = s.store(dir);
        s
    }
}

struct SharedSieve {
    sieve: Option<Arc<PrimeSieve>>,
    cache_dir: Option<PathBuf>,
}

fn shared() -> &'static RwLock<SharedSieve> {
    static SHARED: OnceLock<RwLock<SharedSieve>> = OnceLock::new();
    SHARED.get_or_init(|| {
        RwLock::new(SharedSieve {
            sieve: None,
            cache_dir: None,
        })
    })
}

/// Directory used to persist sieves built through [`shared_sieve`].
pub fn set_cache_dir(dir: Option<PathBuf>) {
    shared().write().unwrap().cache_dir = dir;
}

/// Largest limit [`shared_sieve`] accepts.
pub const MAX_SIEVE_LIMIT: u64 = 1 << 32;

/// Process-wide sieve covering at least `min_limit`. Limits are rounded up to
/// powers of two so that cache files are reused across queries.
pub fn shared_sieve(min_limit: u64) -> Result<Arc<PrimeSieve>> {
    if min_limit > MAX_SIEVE_LIMIT {
        return Err(Error::OutOfRange(format!(
            "sieve limit {min_limit} exceeds {MAX_SIEVE_LIMIT}"
        )));
    }
    if let Some(s) = &shared().read().unwrap().sieve {
        if s.limit() >= min_limit {
            return Ok(s.clone());
        }
    }
    let mut guard = shared().write().unwrap();
    if let Some(s) = &guard.sieve {
        if s.limit() >= min_limit {
            return Ok(s.clone());
        }
    }
    let limit = min_limit.max(1 << 22).next_power_of_two();
    let sieve = match &guard.cache_dir {
        Some(dir) => PrimeSieve::load_or_build(dir, limit),
        None => PrimeSieve::new(limit),
    };
    let sieve = Arc::new(sieve);
    guard.sieve = Some(sieve.clone());
    Ok(sieve)
}
